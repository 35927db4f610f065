from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from ..errors import RankMismatch
from ..polytope import (
    LatticePolytope,
    lattice_point_count,
    minkowski_sum,
    minkowski_sum_all,
    normal_fan,
    normalized,
    point,
)
from ..tropcycle import Fan, TropicalCycle, WeightPoly, exp_cycle_on, make_cycle, zero_cycle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolytopeCombination:
    """Finite rational combination of classes [P] in the polytope algebra.

    Generators are stored translated to put their smallest vertex at the
    origin, since [P] does not depend on translation.
    """

    rank: int
    terms: Tuple[Tuple[LatticePolytope, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, rank_n: int, coeffs: Dict[LatticePolytope, Fraction]) -> "PolytopeCombination":
        acc: Dict[LatticePolytope, Fraction] = {}
        for p, c in coeffs.items():
            if p.rank != rank_n:
                raise RankMismatch("polytope rank differs from the combination rank")
            key = normalized(p)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        return cls(rank_n, tuple(sorted(((p, c) for p, c in acc.items() if c != 0), key=lambda t: t[0].vertices)))

    @classmethod
    def of(cls, p: LatticePolytope, coeff=1) -> "PolytopeCombination":
        return cls.from_dict(p.rank, {p: Fraction(coeff)})

    @classmethod
    def unit(cls, rank_n: int) -> "PolytopeCombination":
        return cls.of(point(rank_n))

    @classmethod
    def zero(cls, rank_n: int) -> "PolytopeCombination":
        return cls(rank_n, ())

    def as_dict(self) -> Dict[LatticePolytope, Fraction]:
        return dict(self.terms)

    def polytopes(self) -> Tuple[LatticePolytope, ...]:
        return tuple(p for p, _ in self.terms)

    @property
    def is_empty(self) -> bool:
        return not self.terms

    def __add__(self, other: "PolytopeCombination") -> "PolytopeCombination":
        acc = self.as_dict()
        for p, c in other.terms:
            acc[p] = acc.get(p, Fraction(0)) + c
        return PolytopeCombination.from_dict(self.rank, acc)

    def __neg__(self) -> "PolytopeCombination":
        return PolytopeCombination(self.rank, tuple((p, -c) for p, c in self.terms))

    def __sub__(self, other: "PolytopeCombination") -> "PolytopeCombination":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PolytopeCombination):
            return multiply(self, other)
        k = Fraction(other)
        return PolytopeCombination.from_dict(self.rank, {p: c * k for p, c in self.terms})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PolytopeCombination":
        return power(self, k)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{p}]" for p, c in self.terms)


@lru_cache(maxsize=4096)
def _product_key(p: LatticePolytope, q: LatticePolytope) -> LatticePolytope:
    return normalized(minkowski_sum(p, q))


def multiply(a: PolytopeCombination, b: PolytopeCombination) -> PolytopeCombination:
    """Bilinear extension of [P][Q] = [P + Q]."""
    if a.rank != b.rank:
        raise RankMismatch("cannot multiply combinations of different ranks")
    acc: Dict[LatticePolytope, Fraction] = {}
    for p, c in a.terms:
        for q, d in b.terms:
            key = _product_key(p, q)
            acc[key] = acc.get(key, Fraction(0)) + c * d
    return PolytopeCombination.from_dict(a.rank, acc)


def power(a: PolytopeCombination, k: int) -> PolytopeCombination:
    out = PolytopeCombination.unit(a.rank)
    for _ in range(k):
        out = multiply(out, a)
    return out


def invert_class(p: LatticePolytope) -> PolytopeCombination:
    """[P]^-1 = sum_{i=0}^{n} (1 - [P])^i, exact because (1 - [P])^{n+1} = 0."""
    n = p.rank
    one = PolytopeCombination.unit(n)
    step = one - PolytopeCombination.of(p)
    total = PolytopeCombination.zero(n)
    term = one
    for _ in range(n + 1):
        total = total + term
        term = multiply(term, step)
    return total


def lat(x: PolytopeCombination) -> Fraction:
    """Lattice point count extended linearly."""
    return sum((c * lattice_point_count(p) for p, c in x.terms), Fraction(0))


def common_fan(x: PolytopeCombination) -> Fan:
    """Normal fan of the Minkowski sum of all generators; it refines each of theirs."""
    return normal_fan(minkowski_sum_all(x.polytopes(), x.rank))


def chern(x: PolytopeCombination, fan: Optional[Fan] = None) -> TropicalCycle:
    """Linear extension of [P] -> exp(T(P)) to the algebra.

    ``fan`` must refine the normal fan of every generator; by default the
    normal fan of their Minkowski sum is used.
    """
    if x.is_empty and fan is None:
        return zero_cycle(x.rank)
    if fan is None:
        fan = common_fan(x)
    weights: Dict = {}
    for p, c in x.terms:
        for gamma, w in exp_cycle_on(fan, p).weights.items():
            weights[gamma] = weights.get(gamma, WeightPoly()) + w * c
    return make_cycle(fan, weights)


def is_zero_in_algebra(x: PolytopeCombination) -> bool:
    return chern(x).is_zero

