"""Graded section rings, Koszul-homology Betti numbers and (N_p) verdicts.

beta_{i,j} = dim Tor_i(R,k)_j is the homology of the strand

    wedge^{i+1} V (x) R_{j-i-1}  ->  wedge^i V (x) R_{j-i}  ->  wedge^{i-1} V (x) R_{j-i+1}

with V spanned by the degree-one basis.  Because the ring is multigraded by
the lattice itself, every strand splits into independent blocks indexed by
the lattice-point multidegree (the sum of the wedge factors and the ring
element); blocks stay small even when the ambient strand has dimension in
the tens of thousands, and each block rank is computed exactly or modulo a
large prime per the rank policy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .ehrhart import ehrhart_polynomial
from .errors import ConsistencyError, WindowExceeded
from .lattice import LatticePoint, LatticePolytope, lattice_points
from .ranks import RankPolicy, rank


@dataclass(frozen=True)
class GradedSectionRing:
    """Section ring of the c-th dilation: bases[d] = lattice points of c*d*P."""

    polytope: LatticePolytope
    c: int
    dmax: int
    bases: Tuple[Tuple[LatticePoint, ...], ...]
    index: Tuple[Dict[LatticePoint, int], ...] = field(repr=False, hash=False, compare=False)

    @property
    def dim_V(self) -> int:
        return len(self.bases[1])

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        return len(self.bases[d])


def build_ring(P: LatticePolytope, c: int, dmax: int) -> GradedSectionRing:
    if c < 1 or dmax < 1:
        raise ValueError("need c >= 1 and dmax >= 1")
    bases = tuple(tuple(lattice_points(P, c * d)) for d in range(dmax + 1))
    h = ehrhart_polynomial(P)
    for d, b in enumerate(bases):
        if len(b) != h(c * d):
            raise ConsistencyError(
                f"|bases[{d}]| = {len(b)} but Ehrhart predicts {h(c * d)}"
            )
    index = tuple({p: k for k, p in enumerate(b)} for b in bases)
    return GradedSectionRing(polytope=P, c=c, dmax=dmax, bases=bases, index=index)


@dataclass(frozen=True)
class BettiTable:
    entries: Dict[Tuple[int, int], int]
    max_i: int
    max_slope: int
    ring: GradedSectionRing

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)


@dataclass(frozen=True)
class NpVerdict:
    p: int
    status: str  # FAILS | VERIFIED_UP_TO | PROVEN
    certificate: Optional[Tuple[int, int, int]] = None
    bound: Optional[int] = None
    criterion: Optional[str] = None

    FAILS = "FAILS"
    VERIFIED_UP_TO = "VERIFIED_UP_TO"
    PROVEN = "PROVEN"


# element of wedge^q V (x) R_d: (S, r) with S a sorted tuple of indices into
# bases[1] and r an index into bases[d]

def _level_blocks(ring: GradedSectionRing, q: int, d: int):
    """Group the basis of wedge^q V (x) R_d by lattice multidegree."""
    blocks: Dict[LatticePoint, List[Tuple[Tuple[int, ...], int]]] = {}
    if q < 0 or d < 0 or q > ring.dim_V or d > ring.dmax:
        return blocks
    gens = ring.bases[1]
    level = ring.bases[d]
    zero = (0,) * ring.polytope.ambient_dim
    for S in itertools.combinations(range(len(gens)), q):
        ssum = zero
        for s in S:
            ssum = tuple(a + b for a, b in zip(ssum, gens[s]))
        for r_idx, pt in enumerate(level):
            u = tuple(a + b for a, b in zip(ssum, pt))
            blocks.setdefault(u, []).append((S, r_idx))
    return blocks


def _differential_columns(ring, elements, d_source, target_pos):
    """Sparse columns of the Koszul differential on the given source elements.

    target_pos maps a target element (S', r'_idx at degree d_source+1) to its
    row index.  Sign convention: d(e_{s1}^...^e_{sq} (x) r) =
    sum_k (-1)^(k+1) e_{s1}^..^{no s_k}^..^e_{sq} (x) x_{s_k} r  with s1<...<sq.
    """
    gens = ring.bases[1]
    src_pts = ring.bases[d_source]
    tgt_index = ring.index[d_source + 1]
    cols = []
    for S, r_idx in elements:
        pt = src_pts[r_idx]
        col: Dict[int, int] = {}
        for k, s in enumerate(S):
            sign = 1 if k % 2 == 0 else -1
            prod = tuple(a + b for a, b in zip(pt, gens[s]))
            tgt = (S[:k] + S[k + 1 :], tgt_index[prod])
            row = target_pos[tgt]
            col[row] = col.get(row, 0) + sign
        cols.append(col)
    return cols


def _dense(cols, nrows: int):
    rows = [[0] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows[i][j] = v
    return rows


def _check_window(ring: GradedSectionRing, i: int, j: int) -> None:
    need = j - i + 1 if i >= 1 else j
    if need > ring.dmax:
        raise WindowExceeded(
            f"beta_({i},{j}) needs ring degree {need} but dmax = {ring.dmax}"
        )


def koszul_betti(
    ring: GradedSectionRing,
    i: int,
    j: int,
    policy: RankPolicy = RankPolicy(),
) -> int:
    """dim Tor_i(R,k)_j, as dim ker(outgoing) - rank(incoming) per block."""
    if i < 0 or j < 0:
        raise ValueError("i, j must be nonnegative")
    if i > ring.dim_V or j < i:
        return 0
    _check_window(ring, i, j)
    mid = _level_blocks(ring, i, j - i)
    src = _level_blocks(ring, i + 1, j - i - 1)
    tgt = _level_blocks(ring, i - 1, j - i + 1) if i >= 1 else {}
    total = 0
    for u, mid_elts in mid.items():
        n_mid = len(mid_elts)
        if i >= 1:
            tgt_pos = {e: k for k, e in enumerate(tgt.get(u, []))}
            out_cols = _differential_columns(ring, mid_elts, j - i, tgt_pos)
            rank_out = rank(_dense(out_cols, len(tgt_pos)), policy)
        else:
            rank_out = 0
        src_elts = src.get(u, [])
        if src_elts:
            mid_pos = {e: k for k, e in enumerate(mid_elts)}
            in_cols = _differential_columns(ring, src_elts, j - i - 1, mid_pos)
            rank_in = rank(_dense(in_cols, n_mid), policy)
        else:
            rank_in = 0
        b = n_mid - rank_out - rank_in
        if b < 0:
            raise ConsistencyError(
                f"negative Betti block at (i={i}, j={j}, u={u}): "
                f"{n_mid} - {rank_out} - {rank_in}"
            )
        total += b
    return total


def compose_is_zero(ring: GradedSectionRing, i: int, j: int) -> bool:
    """Exact check that consecutive Koszul differentials compose to zero."""
    if i < 1 or j < i or i + 1 > ring.dim_V:
        return True
    _check_window(ring, i, j)
    mid = _level_blocks(ring, i, j - i)
    src = _level_blocks(ring, i + 1, j - i - 1)
    tgt = _level_blocks(ring, i - 1, j - i + 1)
    for u, src_elts in src.items():
        mid_elts = mid.get(u, [])
        mid_pos = {e: k for k, e in enumerate(mid_elts)}
        tgt_pos = {e: k for k, e in enumerate(tgt.get(u, []))}
        in_cols = _differential_columns(ring, src_elts, j - i - 1, mid_pos)
        out_cols = _differential_columns(ring, mid_elts, j - i, tgt_pos)
        for col in in_cols:
            acc: Dict[int, int] = {}
            for mid_row, v in col.items():
                for tgt_row, w in out_cols[mid_row].items():
                    acc[tgt_row] = acc.get(tgt_row, 0) + v * w
            if any(acc.values()):
                return False
    return True


def betti_table(
    ring: GradedSectionRing,
    max_i: int,
    max_slope: int,
    policy: RankPolicy = RankPolicy(),
    threads: int = 1,
) -> BettiTable:
    """All beta_{i,j} for 0 <= i <= max_i, i <= j <= i + max_slope."""
    if max_slope + 1 > ring.dmax:
        raise WindowExceeded(
            f"window slope {max_slope} needs dmax >= {max_slope + 1}, "
            f"ring has dmax = {ring.dmax}"
        )
    strands = [
        (i, j)
        for i in range(max_i + 1)
        for j in range(i, i + max_slope + 1)
    ]
    entries: Dict[Tuple[int, int], int] = {}
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(
                lambda ij: (ij, koszul_betti(ring, *ij, policy=policy)), strands
            )
            for ij, b in results:
                if b:
                    entries[ij] = b
    else:
        for ij in strands:
            b = koszul_betti(ring, *ij, policy=policy)
            if b:
                entries[ij] = b
    return BettiTable(entries=entries, max_i=max_i, max_slope=max_slope, ring=ring)


def np_level(
    ring: GradedSectionRing,
    pmax: int,
    max_slope: int,
    policy: RankPolicy = RankPolicy(),
    threads: int = 1,
    table: Optional[BettiTable] = None,
) -> List[NpVerdict]:
    """Verdicts for N_0 .. N_pmax from the Betti window.

    A FAILS certificate is the lexicographically first offending (i, j);
    failures are monotone in p by construction.
    """
    if table is None:
        table = betti_table(ring, pmax, max_slope, policy=policy, threads=threads)
    base_cert = None
    for j in range(1, max_slope + 1):
        b = table.get(0, j)
        if b:
            base_cert = (0, j, b)
            break
    verdicts = []
    cert = base_cert
    for p in range(pmax + 1):
        if cert is None and p >= 1:
            for j in range(p, p + max_slope + 1):
                if j == p + 1:
                    continue
                b = table.get(p, j)
                if b:
                    cert = (p, j, b)
                    break
        if cert is not None:
            verdicts.append(NpVerdict(p=p, status=NpVerdict.FAILS, certificate=cert))
        else:
            verdicts.append(
                NpVerdict(p=p, status=NpVerdict.VERIFIED_UP_TO, bound=max_slope)
            )
    return verdicts


def k_polynomial_checksum(table: BettiTable) -> bool:
    """Hilbert-series integrity check.

    For every degree j fully covered by the window, the alternating column
    sum of the table must equal the degree-j coefficient of
    H_R(t) * (1-t)^dim V, with H_R read off the graded dimensions.
    """
    from math import comb

    ring = table.ring
    v = ring.dim_V
    jmax = min(table.max_i, table.max_slope)
    for j in range(jmax + 1):
        k_coeff = sum(
            (-1) ** (j - d) * comb(v, j - d) * ring.dim(d)
            for d in range(j + 1)
            if j - d <= v
        )
        alt = sum((-1) ** i * table.get(i, j) for i in range(j + 1))
        if alt != k_coeff:
            return False
    return True
