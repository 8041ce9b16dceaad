"""Reproducible pseudo-random polytope corpus for the property suites."""

from __future__ import annotations

import random
from typing import List

from .lattice import LatticePolytope, normalize_full_dim


def generate_corpus(
    seed: int, count: int, dim: int, coord_bound: int
) -> List[LatticePolytope]:
    """Deterministic list of `count` distinct normalized dim-polytopes.

    Random vertex sets in [0, coord_bound]^dim, normalized to full dimension
    and deduplicated by their canonical (sorted) vertex tuple.
    """
    if dim > 4 or coord_bound > 6:
        raise ValueError("corpus generation is desk-scale: dim <= 4, bound <= 6")
    rng = random.Random(seed)
    seen = set()
    out: List[LatticePolytope] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 10000 * count:
            raise RuntimeError("corpus generation failed to converge")
        npts = rng.randint(dim + 1, dim + 3)
        pts = [
            tuple(rng.randint(0, coord_bound) for _ in range(dim))
            for _ in range(npts)
        ]
        try:
            P = normalize_full_dim(pts)
        except Exception:
            continue
        if P.dim != dim:
            continue
        key = P.vertices
        if key in seen:
            continue
        seen.add(key)
        out.append(P)
    return out
