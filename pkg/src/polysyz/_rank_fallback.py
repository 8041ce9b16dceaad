"""Pure-Python (numpy) mod-p rank, used when the compiled kernel is absent."""

from __future__ import annotations

import numpy as np


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over GF(p) by row reduction; mirrors the compiled kernel."""
    a = np.mod(a, p)
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        col = a[r + 1 :, c]
        mask = col != 0
        if mask.any():
            a[r + 1 :, c:][mask] = (
                a[r + 1 :, c:][mask] - np.outer(col[mask], a[r, c:])
            ) % p
        r += 1
    return r
