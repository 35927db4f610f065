from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from ..errors import InputValidationError, RankMismatch
from ..polyalgebra import PolytopeCombination, invert_class, multiply, power
from ..polytope import LatticePolytope

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelChiGenus:
    """sum_e coeffs[e] * (y-1)^(-e) with polytope-algebra coefficients, e >= 1.

    ``is_torus`` marks the empty intersection, whose value is the constant 1.
    ``max_exponent`` records how far the coefficients were materialized.
    """

    rank: int
    codim: int
    coeffs: Tuple[Tuple[int, PolytopeCombination], ...] = ()
    max_exponent: int = 0
    is_torus: bool = False

    def coefficient(self, e: int) -> PolytopeCombination:
        for k, c in self.coeffs:
            if k == e:
                return c
        if e > self.max_exponent:
            raise KeyError(f"exponent {e} was not materialized (max {self.max_exponent})")
        return PolytopeCombination.zero(self.rank)

    def exponents(self) -> Tuple[int, ...]:
        return tuple(e for e, _ in self.coeffs)

    def low_terms(self) -> Dict[int, PolytopeCombination]:
        return {e: c for e, c in self.coeffs if e <= self.rank}

    def high_terms(self) -> Dict[int, PolytopeCombination]:
        return {e: c for e, c in self.coeffs if e > self.rank}


def _series_product(
    a: Dict[int, PolytopeCombination], b: Dict[int, PolytopeCombination], limit: int, rank_n: int
) -> Dict[int, PolytopeCombination]:
    out: Dict[int, PolytopeCombination] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            if e > limit:
                continue
            term = multiply(c1, c2)
            out[e] = out[e] + term if e in out else term
    return {e: c for e, c in out.items() if not c.is_empty}


def _common_rank(deltas: Sequence[LatticePolytope], rank_n: Optional[int]) -> int:
    ranks = {d.rank for d in deltas}
    if rank_n is not None:
        ranks.add(rank_n)
    if len(ranks) > 1:
        raise RankMismatch(f"polytopes of different ranks {sorted(ranks)}")
    if not ranks:
        raise InputValidationError("the lattice rank is needed for an empty polytope list")
    return ranks.pop()


def hypersurface_terms(delta: LatticePolytope) -> Dict[int, PolytopeCombination]:
    n = delta.rank
    step = invert_class(delta) - PolytopeCombination.unit(n)
    terms = {}
    for i in range(1, n + 1):
        c = -power(step, i)
        if not c.is_empty:
            terms[i] = c
    return terms


def rel_chi_hypersurface(delta: LatticePolytope) -> RelChiGenus:
    """Generic hypersurface: c_i = -([delta]^-1 - 1)^i for i = 1..n."""
    terms = hypersurface_terms(delta)
    return RelChiGenus(delta.rank, 1, tuple(sorted(terms.items())), max_exponent=delta.rank)


def rel_chi_intersection(
    deltas: Sequence[LatticePolytope], rank_n: Optional[int] = None, full: bool = True
) -> RelChiGenus:
    """Product of the hypersurface series of each polytope.

    With ``full`` every exponent up to k*n is kept; otherwise the product is
    truncated at n, which is all that Lat and the Chern map can see.
    """
    n = _common_rank(deltas, rank_n)
    k = len(deltas)
    if k == 0:
        return RelChiGenus(n, 0, (), max_exponent=0, is_torus=True)
    limit = k * n if full else n
    acc = hypersurface_terms(deltas[0])
    for delta in deltas[1:]:
        acc = _series_product(acc, hypersurface_terms(delta), limit, n)
    logger.debug(
        "relative genus of %d polytopes: %d coefficients up to exponent %d", k, len(acc), limit
    )
    return RelChiGenus(n, k, tuple(sorted(acc.items())), max_exponent=limit)
