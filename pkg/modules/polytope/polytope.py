from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import ceil, floor, gcd
from typing import FrozenSet, List, Sequence, Tuple

from ..errors import InputValidationError, NotFullDimPolygon, RankMismatch, RankNotTwo, UnsupportedRank
from ..exactmath import IntVector, dot, lp_feasible, rank, saturation_basis, solve
from .hull import HullData, compute_hull, hull_2d, hull_3d

logger = logging.getLogger(__name__)

MAX_RANK = 3


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of finitely many points of Z^rank, stored by its vertices.

    Vertices are the strictly convex hull points in lexicographic order, so
    two polytopes compare equal exactly when they are the same point set.
    """

    rank: int
    vertices: Tuple[IntVector, ...]

    @property
    def dim(self) -> int:
        return _hull_data(self).dim

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    def inequalities(self) -> List[Tuple[IntVector, int]]:
        """Facet inequalities ``<a, x> >= b`` with primitive inner normals."""
        return [(a, b) for a, b, _ in _hull_data(self).facets]

    def equations(self) -> List[Tuple[IntVector, int]]:
        return list(_hull_data(self).equations)

    def contains(self, x: Sequence) -> bool:
        data = _hull_data(self)
        if any(dot(e, x) != c for e, c in data.equations):
            return False
        return all(dot(a, x) >= b for a, b, _ in data.facets)

    def facets(self) -> List["Face"]:
        data = _hull_data(self)
        return [Face(self, on) for _, _, on in data.facets]

    def faces(self) -> List["Face"]:
        return list(_faces(self))

    def __str__(self) -> str:
        return "conv(" + ", ".join("(" + ",".join(str(c) for c in v) + ")" for v in self.vertices) + ")"


@dataclass(frozen=True)
class Face:
    polytope: LatticePolytope
    vertex_indices: Tuple[int, ...]

    @property
    def vertices(self) -> Tuple[IntVector, ...]:
        return tuple(self.polytope.vertices[i] for i in self.vertex_indices)

    @property
    def dim(self) -> int:
        vs = self.vertices
        return rank([tuple(a - b for a, b in zip(v, vs[0])) for v in vs[1:]]) if len(vs) > 1 else 0

    def as_polytope(self) -> LatticePolytope:
        return LatticePolytope(self.polytope.rank, tuple(sorted(self.vertices)))


@lru_cache(maxsize=4096)
def _hull_data(p: LatticePolytope) -> HullData:
    return compute_hull(p.vertices, p.rank)


@lru_cache(maxsize=4096)
def _faces(p: LatticePolytope) -> Tuple[Face, ...]:
    everything: FrozenSet[int] = frozenset(range(len(p.vertices)))
    found = {everything}
    frontier = [frozenset(on) for _, _, on in _hull_data(p).facets]
    while frontier:
        nxt = []
        for s in frontier:
            if s and s not in found:
                found.add(s)
                nxt.append(s)
        frontier = [a & b for a in nxt for b in found if (a & b) and (a & b) not in found]
    return tuple(
        Face(p, tuple(sorted(s)))
        for s in sorted(found, key=lambda s: (len(s), sorted(s)))
    )


def _check_rank(points: Sequence[Sequence[int]], rank_n: int) -> None:
    if rank_n > MAX_RANK:
        raise UnsupportedRank(f"lattice rank {rank_n} is above the supported maximum {MAX_RANK}")
    for pt in points:
        if len(pt) != rank_n:
            raise RankMismatch(f"point {tuple(pt)} does not have {rank_n} coordinates")
        if any(not isinstance(c, int) or isinstance(c, bool) for c in pt):
            raise InputValidationError(f"point {tuple(pt)} has non-integer coordinates")


def hull(
    points: Sequence[Sequence[int]], rank_n: int | None = None, verify: bool = False
) -> LatticePolytope:
    """Build the lattice polytope spanned by ``points``.

    With ``verify`` the result is re-checked by ``verify_hull``: input points
    against the facet inequalities, vertices by a separation LP.
    """
    if not points:
        raise InputValidationError("a polytope needs at least one point")
    if rank_n is None:
        rank_n = len(points[0])
    _check_rank(points, rank_n)
    data = compute_hull([tuple(p) for p in points], rank_n)
    p = LatticePolytope(rank_n, data.vertices)
    if verify and not verify_hull(p, points):
        raise RuntimeError(f"hull verification failed for {p}")
    return p


def point(rank_n: int) -> LatticePolytope:
    return LatticePolytope(rank_n, (tuple(0 for _ in range(rank_n)),))


def verify_hull(p: LatticePolytope, points: Sequence[Sequence[int]]) -> bool:
    """Slow check: every input point is in P and no vertex is redundant.

    Membership is tested against the facet inequalities. A vertex v is kept
    only if some functional w separates it from the other vertices, i.e.
    <w, v - u> <= -1 for every other vertex u is feasible over Q; the system
    has one unknown per coordinate.
    """
    if not all(p.contains(x) for x in points):
        return False
    for v in p.vertices:
        others = [u for u in p.vertices if u != v]
        if not others:
            continue
        cons = [([vc - uc for vc, uc in zip(v, u)], -1) for u in others]
        feasible, _ = lp_feasible(cons, p.rank)
        if not feasible:
            return False
    return True


@lru_cache(maxsize=4096)
def minkowski_sum(p: LatticePolytope, q: LatticePolytope) -> LatticePolytope:
    if p.rank != q.rank:
        raise RankMismatch("Minkowski sum of polytopes of different ranks")
    if p.is_point:
        return translate(q, p.vertices[0])
    if q.is_point:
        return translate(p, q.vertices[0])
    sums = {tuple(a + b for a, b in zip(u, v)) for u in p.vertices for v in q.vertices}
    return LatticePolytope(p.rank, compute_hull(list(sums), p.rank).vertices)


def minkowski_sum_all(polytopes: Sequence[LatticePolytope], rank_n: int) -> LatticePolytope:
    total = point(rank_n)
    for p in polytopes:
        total = minkowski_sum(total, p)
    return total


def dilate(p: LatticePolytope, k: int) -> LatticePolytope:
    if k < 0:
        raise InputValidationError("dilation factor must be nonnegative")
    if k == 0:
        return point(p.rank)
    return LatticePolytope(p.rank, tuple(tuple(k * c for c in v) for v in p.vertices))


def translate(p: LatticePolytope, shift: Sequence[int]) -> LatticePolytope:
    return LatticePolytope(
        p.rank, tuple(sorted(tuple(a + b for a, b in zip(v, shift)) for v in p.vertices))
    )


def normalized(p: LatticePolytope) -> LatticePolytope:
    """Translate so that the lexicographically smallest vertex is the origin."""
    return translate(p, tuple(-c for c in p.vertices[0]))


def minimizing_face(p: LatticePolytope, w: Sequence) -> Face:
    values = [dot(w, v) for v in p.vertices]
    low = min(values)
    return Face(p, tuple(i for i, val in enumerate(values) if val == low))


def _lattice_coordinates(face_vertices: Sequence[IntVector], rank_n: int) -> List[IntVector]:
    base = face_vertices[0]
    diffs = [tuple(a - b for a, b in zip(v, base)) for v in face_vertices]
    basis = saturation_basis(diffs, rank_n)
    columns = [[basis[j][i] for j in range(len(basis))] for i in range(rank_n)]
    coords = []
    for d in diffs:
        sol = solve(columns, d) if basis else []
        coords.append(tuple(int(x) for x in sol))
    return coords


def relative_volume(face: Face) -> Fraction:
    """Volume of a face in the lattice of its own affine span.

    A fundamental cell of that lattice has volume 1 and a point has volume 1.
    """
    vs = face.vertices
    d = face.dim
    if d == 0:
        return Fraction(1)
    coords = _lattice_coordinates(vs, face.polytope.rank)
    if d == 1:
        values = [c[0] for c in coords]
        return Fraction(max(values) - min(values))
    if d == 2:
        ring = [coords[i] for i in hull_2d(coords)]
        twice = sum(
            ring[i][0] * ring[(i + 1) % len(ring)][1] - ring[(i + 1) % len(ring)][0] * ring[i][1]
            for i in range(len(ring))
        )
        return Fraction(abs(twice), 2)
    total = 0
    origin = coords[0]
    for a, b, c in hull_3d(coords):
        pa, pb, pc = coords[a], coords[b], coords[c]
        u = [pb[i] - pa[i] for i in range(3)]
        v = [pc[i] - pa[i] for i in range(3)]
        w = [origin[i] - pa[i] for i in range(3)]
        det = (
            u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0])
        )
        total -= det
    return Fraction(total, 6)


def volume(p: LatticePolytope) -> Fraction:
    """Relative volume of the polytope itself (zero-dimensional gives 1)."""
    return relative_volume(Face(p, tuple(range(len(p.vertices)))))


@lru_cache(maxsize=4096)
def lattice_point_count(p: LatticePolytope) -> int:
    """Number of points of Z^rank in P.

    Scans the bounding box over all but the last coordinate and counts the
    last coordinate as an integer interval cut out by the H-representation.
    """
    data = _hull_data(p)
    n = p.rank
    if n == 0 or p.is_point:
        return 1
    lows = [min(v[i] for v in p.vertices) for i in range(n)]
    highs = [max(v[i] for v in p.vertices) for i in range(n)]
    constraints = [(a, b) for a, b, _ in data.facets]
    for e, c in data.equations:
        constraints.append((e, c))
        constraints.append((tuple(-x for x in e), -c))
    count = 0
    for prefix in product(*(range(lows[i], highs[i] + 1) for i in range(n - 1))):
        lo = Fraction(lows[-1])
        hi = Fraction(highs[-1])
        ok = True
        for a, b in constraints:
            rest = b - sum(a[i] * prefix[i] for i in range(n - 1))
            coef = a[-1]
            if coef == 0:
                if rest > 0:
                    ok = False
                    break
            elif coef > 0:
                lo = max(lo, Fraction(rest, coef))
            else:
                hi = min(hi, Fraction(rest, coef))
        if ok and lo <= hi:
            count += max(0, floor(hi) - ceil(lo) + 1)
    return count


def _require_polygon(p: LatticePolytope) -> None:
    if p.rank != 2:
        raise RankNotTwo(f"expected a rank 2 polytope, got rank {p.rank}")


def _ccw(p: LatticePolytope) -> List[IntVector]:
    return [p.vertices[i] for i in hull_2d(p.vertices)]


def boundary_and_interior_counts(p: LatticePolytope) -> Tuple[int, int]:
    """(boundary, interior) lattice point counts of a lattice polygon."""
    _require_polygon(p)
    if p.dim < 2:
        raise NotFullDimPolygon(f"{p} is not a full-dimensional polygon")
    ring = _ccw(p)
    boundary = sum(
        gcd(abs(ring[(i + 1) % len(ring)][0] - ring[i][0]), abs(ring[(i + 1) % len(ring)][1] - ring[i][1]))
        for i in range(len(ring))
    )
    return boundary, lattice_point_count(p) - boundary


def area(p: LatticePolytope) -> Fraction:
    """Euclidean area of a rank 2 polytope; zero when it is not full-dimensional."""
    _require_polygon(p)
    if p.dim < 2:
        return Fraction(0)
    return volume(p)


def mixed_area(p: LatticePolytope, q: LatticePolytope) -> Fraction:
    """MV(P, Q) = area(P + Q) - area(P) - area(Q)."""
    return area(minkowski_sum(p, q)) - area(p) - area(q)
