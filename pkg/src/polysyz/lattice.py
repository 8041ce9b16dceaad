"""Lattice polytopes with exact integer arithmetic.

Points are plain tuples of ints.  A polytope is stored by its irredundant
vertex set together with a minimal inequality description; all dilations
share the facet normals (the offset scales with the dilation factor).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .errors import DegenerateInput, DimensionMismatch
from .intlinalg import det, exact_rank, gcd_list, kernel_basis, solve_in_hnf_basis

LatticePoint = Tuple[int, ...]


@dataclass(frozen=True)
class HalfSpace:
    """The closed half-space {x : <normal, x> >= offset}."""

    normal: LatticePoint
    offset: int

    def eval(self, x: LatticePoint) -> int:
        return sum(a * b for a, b in zip(self.normal, x)) - self.offset


@dataclass(frozen=True)
class LatticePolytope:
    vertices: Tuple[LatticePoint, ...]
    facets: Tuple[HalfSpace, ...]
    ambient_dim: int
    dim: int

    @classmethod
    def from_points(cls, points: Iterable[LatticePoint]) -> "LatticePolytope":
        """Build a full-dimensional polytope from a spanning point set.

        Raises DegenerateInput if the points do not span the ambient space;
        run normalize_full_dim first in that case.
        """
        pts = sorted({tuple(int(c) for c in p) for p in points})
        if not pts:
            raise DegenerateInput("empty point set")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise DimensionMismatch("points of mixed dimension")
        if n == 0:
            return cls(vertices=((),), facets=(), ambient_dim=0, dim=0)
        facets = tuple(convex_hull_facets(pts))
        verts = []
        for p in pts:
            tight = [f.normal for f in facets if f.eval(p) == 0]
            if tight and exact_rank(tight) == n:
                verts.append(p)
        return cls(vertices=tuple(sorted(verts)), facets=facets, ambient_dim=n, dim=n)

    def translate(self, t: LatticePoint) -> "LatticePolytope":
        return LatticePolytope.from_points(
            tuple(a + b for a, b in zip(v, t)) for v in self.vertices
        )


def _hyperplane_normal(pts: List[LatticePoint]) -> Optional[LatticePoint]:
    """Integer normal of the hyperplane through `pts` (generalized cross
    product of the difference vectors); None if they are affinely dependent."""
    n = len(pts[0])
    diffs = [tuple(a - b for a, b in zip(p, pts[0])) for p in pts[1:]]
    normal = []
    for i in range(n):
        minor = [[d[k] for k in range(n) if k != i] for d in diffs]
        normal.append((-1) ** i * det(minor))
    if not any(normal):
        return None
    return tuple(normal)


def convex_hull_facets(points: Iterable[LatticePoint]) -> List[HalfSpace]:
    """Minimal H-representation of a full-dimensional hull.

    Exhaustive search over dim-element point subsets with a one-sidedness
    check.  Exact and perfectly adequate at desk scale (<= ~30 points).
    """
    pts = sorted({tuple(p) for p in points})
    if not pts:
        raise DegenerateInput("empty point set")
    n = len(pts[0])
    if n == 0:
        return []
    diffs = [tuple(a - b for a, b in zip(p, pts[0])) for p in pts[1:]]
    if exact_rank(diffs) < n:
        raise DegenerateInput(
            "point set is not full-dimensional; normalize_full_dim first"
        )
    found = {}
    for subset in itertools.combinations(pts, n):
        normal = _hyperplane_normal(list(subset))
        if normal is None:
            continue
        h = sum(a * b for a, b in zip(normal, subset[0]))
        vals = [sum(a * b for a, b in zip(normal, p)) for p in pts]
        if all(v >= h for v in vals):
            pass
        elif all(v <= h for v in vals):
            normal = tuple(-a for a in normal)
            h = -h
        else:
            continue
        g = gcd_list(list(normal) + [h])
        key = (tuple(a // g for a in normal), h // g)
        found[key] = HalfSpace(*key)
    return sorted(found.values(), key=lambda f: (f.normal, f.offset))


def normalize_full_dim(points: Iterable[LatticePoint]) -> LatticePolytope:
    """Re-embed a point set so its affine lattice span fills the ambient lattice.

    The new coordinates are taken with respect to a basis of the *saturated*
    lattice Z^n intersected with the affine span, so lattice point counts of
    every dilation are preserved.  Already full-dimensional input is returned
    unchanged (no translation).
    """
    pts = sorted({tuple(int(c) for c in p) for p in points})
    if not pts:
        raise DegenerateInput("empty point set")
    n = len(pts[0])
    p0 = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]]
    r = exact_rank(diffs) if diffs else 0
    if r == n:
        return LatticePolytope.from_points(pts)
    if r == 0:
        return LatticePolytope(vertices=((),), facets=(), ambient_dim=0, dim=0)
    equations = kernel_basis(diffs, ncols=n)
    basis = kernel_basis(equations, ncols=n)
    new_pts = [solve_in_hnf_basis(basis, d) for d in [(0,) * n] + diffs]
    return LatticePolytope.from_points(new_pts)


def lattice_points(P: LatticePolytope, d: int) -> List[LatticePoint]:
    """All lattice points of the dilation dP, sorted lexicographically."""
    if d < 0:
        raise ValueError("dilation must be nonnegative")
    if P.dim == 0:
        return [()]
    n = P.ambient_dim
    los = [d * min(v[i] for v in P.vertices) for i in range(n)]
    his = [d * max(v[i] for v in P.vertices) for i in range(n)]
    out = []
    facets = P.facets
    for x in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
        if all(
            sum(a * b for a, b in zip(f.normal, x)) >= d * f.offset for f in facets
        ):
            out.append(x)
    return out


def interior_lattice_points(P: LatticePolytope, d: int) -> List[LatticePoint]:
    """Lattice points strictly inside dP."""
    if P.dim == 0:
        return []
    n = P.ambient_dim
    los = [d * min(v[i] for v in P.vertices) for i in range(n)]
    his = [d * max(v[i] for v in P.vertices) for i in range(n)]
    out = []
    facets = P.facets
    for x in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
        if all(
            sum(a * b for a, b in zip(f.normal, x)) > d * f.offset for f in facets
        ):
            out.append(x)
    return out


def contains(P: LatticePolytope, d: int, x: LatticePoint) -> bool:
    """Membership of x in the closed dilation dP."""
    if len(x) != P.ambient_dim:
        raise DimensionMismatch(
            f"point of length {len(x)} in ambient dimension {P.ambient_dim}"
        )
    if P.dim == 0:
        return True
    return all(
        sum(a * b for a, b in zip(f.normal, x)) >= d * f.offset for f in P.facets
    )


def dilate(P: LatticePolytope, k: int) -> LatticePolytope:
    """The polytope kP (vertices scaled by k)."""
    if k < 1:
        raise ValueError("dilation factor must be >= 1")
    if P.dim == 0:
        return P
    return LatticePolytope.from_points(
        tuple(k * c for c in v) for v in P.vertices
    )
