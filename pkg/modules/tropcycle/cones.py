"""Rational polyhedral cones and fans in N_R = Q^n.

A cone is stored canonically: the primitive extremal rays of its pointed
part (projected into the orthogonal complement of the lineality space) and
an RREF basis of the lineality space. Equal cones therefore compare and hash
equal, which lets fans and cycles key their weights by cone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..exactmath import IntVector, dot, nullspace, primitive_vector, rank, subspace_key

HRep = Tuple[Tuple[IntVector, ...], Tuple[IntVector, ...]]


def _h_from_v(n: int, gens: Sequence[IntVector], lin: Sequence[IntVector]) -> HRep:
    """Facet normals and equations of cone(gens) + span(lin)."""
    span = [v for v in list(gens) + list(lin) if any(v)]
    d = rank(span)
    eqs = tuple(nullspace(span, n)) if d < n else ()
    if d == 0:
        return (), eqs
    lin_rows = [v for v in lin if any(v)]
    normals = set()
    need = d - 1
    for subset in combinations(gens, max(need - rank(lin_rows), 0)):
        rows = list(subset) + lin_rows + list(eqs)
        if rank(rows) != n - 1:
            continue
        a = nullspace(rows, n)[0]
        signs = {(dot(a, g) > 0) - (dot(a, g) < 0) for g in gens}
        if -1 not in signs and 1 in signs:
            normals.add(a)
        elif 1 not in signs and -1 in signs:
            normals.add(tuple(-x for x in a))
    return tuple(sorted(normals)), eqs


def _v_from_h(
    n: int, ineqs: Sequence[IntVector], eqs: Sequence[IntVector]
) -> Tuple[Tuple[IntVector, ...], Tuple[IntVector, ...]]:
    """Extremal rays and lineality basis of {<a,x> >= 0, <e,x> = 0}."""
    lineality = subspace_key(nullspace(list(ineqs) + list(eqs), n), n)
    fixed = [v for v in list(eqs) + list(lineality) if any(v)]
    base_rank = rank(fixed)
    if base_rank >= n:
        return (), lineality
    need = n - 1 - base_rank
    rays = set()
    for subset in combinations(ineqs, need):
        rows = fixed + list(subset)
        if rank(rows) != n - 1:
            continue
        x = nullspace(rows, n)[0]
        for cand in (x, tuple(-c for c in x)):
            if all(dot(a, cand) >= 0 for a in ineqs):
                rays.add(cand)
                break
    return tuple(sorted(rays)), lineality


@lru_cache(maxsize=4096)
def _canonical(n: int, gens: Tuple[IntVector, ...], lin: Tuple[IntVector, ...]):
    ineqs, eqs = _h_from_v(n, gens, lin)
    return _v_from_h(n, ineqs, eqs)


@dataclass(frozen=True)
class Cone:
    rank: int
    rays: Tuple[IntVector, ...]
    lineality: Tuple[IntVector, ...] = ()

    @classmethod
    def from_generators(
        cls, rank_n: int, rays: Iterable[Sequence[int]], lineality: Iterable[Sequence[int]] = ()
    ) -> "Cone":
        gens = tuple(sorted({primitive_vector(r) for r in rays if any(r)}))
        lin = tuple(primitive_vector(v) for v in lineality if any(v))
        rays_c, lin_c = _canonical(rank_n, gens, lin)
        return cls(rank_n, rays_c, lin_c)

    @classmethod
    def origin(cls, rank_n: int) -> "Cone":
        return cls(rank_n, (), ())

    @classmethod
    def whole_space(cls, rank_n: int) -> "Cone":
        return cls(rank_n, (), subspace_key(nullspace([], rank_n), rank_n))

    @cached_property
    def dim(self) -> int:
        return rank(list(self.rays) + list(self.lineality)) if (self.rays or self.lineality) else 0

    @property
    def codim(self) -> int:
        return self.rank - self.dim

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    def span_generators(self) -> List[IntVector]:
        return list(self.rays) + list(self.lineality)

    def hrep(self) -> HRep:
        return _hrep(self)

    def relint_point(self) -> IntVector:
        return tuple(sum(r[i] for r in self.rays) for i in range(self.rank))

    def contains_point(self, x: Sequence) -> bool:
        ineqs, eqs = self.hrep()
        return all(dot(e, x) == 0 for e in eqs) and all(dot(a, x) >= 0 for a in ineqs)

    def contains(self, other: "Cone") -> bool:
        if not all(self.contains_point(r) for r in other.rays):
            return False
        return all(
            self.contains_point(v) and self.contains_point(tuple(-c for c in v))
            for v in other.lineality
        )

    def intersection(self, other: "Cone") -> "Cone":
        a_ineq, a_eq = self.hrep()
        b_ineq, b_eq = other.hrep()
        ineqs = tuple(sorted(set(a_ineq) | set(b_ineq)))
        eqs = tuple(sorted(set(a_eq) | set(b_eq)))
        rays, lin = _v_from_h(self.rank, ineqs, eqs)
        return Cone(self.rank, rays, lin)

    def faces(self) -> Tuple["Cone", ...]:
        return _cone_faces(self)

    def facets(self) -> List["Cone"]:
        return [f for f in self.faces() if f.dim == self.dim - 1]

    def sort_key(self):
        return (self.dim, self.rays, self.lineality)

    def __str__(self) -> str:
        def fmt(v):
            return "(" + ",".join(str(c) for c in v) + ")"

        parts = ["cone[" + " ".join(fmt(r) for r in self.rays)]
        if self.lineality:
            parts.append(" | lin " + " ".join(fmt(v) for v in self.lineality))
        return "".join(parts) + "]"


@lru_cache(maxsize=4096)
def _hrep(cone: Cone) -> HRep:
    return _h_from_v(cone.rank, cone.rays, cone.lineality)


@lru_cache(maxsize=4096)
def _cone_faces(cone: Cone) -> Tuple[Cone, ...]:
    ineqs, _ = cone.hrep()
    everything = frozenset(cone.rays)
    found = {everything}
    tight_sets = [frozenset(r for r in cone.rays if dot(a, r) == 0) for a in ineqs]
    frontier = tight_sets
    while frontier:
        fresh = [s for s in dict.fromkeys(frontier) if s not in found]
        found.update(fresh)
        frontier = [a & b for a in fresh for b in tight_sets if (a & b) not in found]
    if ineqs:
        found.add(frozenset())
    return tuple(
        sorted((Cone(cone.rank, tuple(sorted(s)), cone.lineality) for s in found), key=Cone.sort_key)
    )


@dataclass(frozen=True)
class Fan:
    """A finite set of cones closed under taking faces.

    ``labels`` carries optional per-cone data (the dual face for a normal
    fan) and does not take part in equality.
    """

    rank: int
    cones: Tuple[Cone, ...]
    labels: Mapping[Cone, object] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        present = set(self.cones)
        for c in self.cones:
            for f in c.facets():
                if f not in present:
                    raise ValueError(f"fan is not closed under faces: {f} missing")

    @classmethod
    def from_cones(cls, rank_n: int, cones: Iterable[Cone], labels: Optional[Mapping] = None) -> "Fan":
        closure = set()
        for c in cones:
            closure.update(c.faces())
        return cls(rank_n, tuple(sorted(closure, key=Cone.sort_key)), dict(labels or {}))

    @classmethod
    def trivial(cls, rank_n: int) -> "Fan":
        """The fan whose only cone is the whole space."""
        return cls(rank_n, (Cone.whole_space(rank_n),))

    def maximal_cones(self) -> List[Cone]:
        return _maximal(self)

    def cones_of_dim(self, d: int) -> List[Cone]:
        return [c for c in self.cones if c.dim == d]

    def containing(self, gamma: Cone) -> List[Cone]:
        """Cones of the fan having ``gamma`` as a face (``gamma`` included)."""
        return _containing_map(self).get(gamma, [])

    def carrier(self, gamma: Cone) -> Optional[Cone]:
        """Smallest cone of the fan containing ``gamma`` as a set."""
        for c in self.cones:
            if c.dim >= gamma.dim and c.contains(gamma):
                return c
        return None

    def refines(self, other: "Fan") -> bool:
        return all(other.carrier(c) is not None for c in self.cones)


@lru_cache(maxsize=4096)
def _maximal(fan: Fan) -> List[Cone]:
    covered = set()
    for c in fan.cones:
        covered.update(f for f in c.faces() if f != c)
    return [c for c in fan.cones if c not in covered]


@lru_cache(maxsize=4096)
def _containing_map(fan: Fan) -> Dict[Cone, List[Cone]]:
    out: Dict[Cone, List[Cone]] = {}
    for c in fan.cones:
        for f in c.faces():
            out.setdefault(f, []).append(c)
    return out


@lru_cache(maxsize=4096)
def common_refinement(a: Fan, b: Fan) -> Fan:
    """Fan of all pairwise intersections of cones of ``a`` and ``b``."""
    if a == b:
        return a
    if a.rank != b.rank:
        raise ValueError("fans of different ranks")
    pieces = {s.intersection(t) for s in a.maximal_cones() for t in b.maximal_cones()}
    return Fan.from_cones(a.rank, pieces)


def orthant_fan(rank_n: int) -> Fan:
    """Complete fan of the 2^n coordinate orthants."""
    maximal = []
    for signs in _sign_vectors(rank_n):
        rays = [tuple(s if i == j else 0 for i in range(rank_n)) for j, s in enumerate(signs)]
        maximal.append(Cone.from_generators(rank_n, rays))
    return Fan.from_cones(rank_n, maximal)


def _sign_vectors(n: int) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = [()]
    for _ in range(n):
        out = [s + (1,) for s in out] + [s + (-1,) for s in out]
    return out

