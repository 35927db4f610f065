from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence

from ..errors import InputValidationError, ZeroCycle
from ..polyalgebra import chern
from ..polytope import LatticePolytope, minkowski_sum_all, normal_fan
from ..tropcycle import (
    DEFAULT_RETRIES,
    Cone,
    TropicalCycle,
    WeightPoly,
    cycle_equal,
    dual_hypersurface,
    evaluate_weights,
    intersect_all,
    make_cycle,
    scale_cycle,
    support_equal,
    top_component,
)
from .genus import _common_rank, rel_chi_intersection

logger = logging.getLogger(__name__)


def _require_codim(deltas: Sequence[LatticePolytope], n: int) -> None:
    if not 1 <= len(deltas) <= n:
        raise InputValidationError(f"need between 1 and {n} polytopes, got {len(deltas)}")


def refined_trop(deltas: Sequence[LatticePolytope], rank_n: Optional[int] = None) -> TropicalCycle:
    """Chern image of the relative genus, with u = (y-1)^-1 kept in the weights.

    All coefficients are evaluated on the normal fan of the sum of the
    polytopes, which refines the normal fan of every generator that occurs.
    """
    n = _common_rank(deltas, rank_n)
    _require_codim(deltas, n)
    genus = rel_chi_intersection(deltas, n, full=False)
    fan = normal_fan(minkowski_sum_all(deltas, n))
    weights: Dict[Cone, WeightPoly] = {}
    for e, coeff in genus.low_terms().items():
        image = chern(coeff, fan)
        for cone, w in image.weights.items():
            weights[cone] = weights.get(cone, WeightPoly()) + WeightPoly.monomial(e) * w
    return make_cycle(fan, weights)


def unrefined_trop(
    deltas: Sequence[LatticePolytope],
    rank_n: Optional[int] = None,
    seed: Optional[int] = None,
    retries: int = DEFAULT_RETRIES,
) -> TropicalCycle:
    """Stable intersection of the dual hypersurfaces."""
    n = _common_rank(deltas, rank_n)
    _require_codim(deltas, n)
    return intersect_all([dual_hypersurface(d) for d in deltas], seed=seed, retries=retries)


@dataclass
class SpecializationResult:
    support_equal: bool
    top_matches: bool

    @property
    def passed(self) -> bool:
        return self.support_equal and self.top_matches

    def __bool__(self) -> bool:
        return self.passed


def specialization_details(
    deltas: Sequence[LatticePolytope],
    rank_n: Optional[int] = None,
    seed: Optional[int] = None,
    retries: int = DEFAULT_RETRIES,
    refined: Optional[TropicalCycle] = None,
    unrefined: Optional[TropicalCycle] = None,
) -> SpecializationResult:
    n = _common_rank(deltas, rank_n)
    if refined is None:
        refined = refined_trop(deltas, n)
    if unrefined is None:
        unrefined = unrefined_trop(deltas, n, seed=seed, retries=retries)
    supports = support_equal(refined, unrefined)
    at_zero = evaluate_weights(refined, 0)
    expected = scale_cycle(unrefined, (-1) ** len(deltas))
    try:
        top = top_component(at_zero)
    except ZeroCycle:
        return SpecializationResult(supports, expected.is_zero)
    return SpecializationResult(supports, cycle_equal(top, expected))


def check_specialization(
    deltas: Sequence[LatticePolytope],
    rank_n: Optional[int] = None,
    seed: Optional[int] = None,
    retries: int = DEFAULT_RETRIES,
) -> bool:
    """Supports agree and the y = 0 top component is (-1)^k times Trop(Z)."""
    return specialization_details(deltas, rank_n, seed=seed, retries=retries).passed
