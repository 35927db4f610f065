from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Set

from ..errors import InputValidationError, YEqualsOne, ZeroCycle
from .cones import Cone, Fan, common_refinement
from .weights import Scalar, WeightPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TropicalCycle:
    """Weights on the cones of a fan; a cone absent from ``weights`` has weight 0."""

    fan: Fan
    weights: Mapping[Cone, WeightPoly] = field(default_factory=dict, hash=False)

    @property
    def rank(self) -> int:
        return self.fan.rank

    @property
    def is_zero(self) -> bool:
        return not any(self.weights.values())

    def weight(self, cone: Cone) -> WeightPoly:
        return self.weights.get(cone, WeightPoly())

    def weighted_cones(self) -> List[Cone]:
        return [c for c in self.fan.cones if self.weights.get(c)]

    def codimensions(self) -> List[int]:
        return sorted({c.codim for c in self.weighted_cones()})


def make_cycle(fan: Fan, weights: Mapping[Cone, WeightPoly]) -> TropicalCycle:
    present = set(fan.cones)
    clean: Dict[Cone, WeightPoly] = {}
    for cone, w in weights.items():
        if not isinstance(w, WeightPoly):
            w = WeightPoly.constant(w)
        if not w:
            continue
        if cone not in present:
            raise InputValidationError(f"{cone} is not a cone of the fan")
        clean[cone] = w
    return TropicalCycle(fan, clean)


def zero_cycle(rank_n: int) -> TropicalCycle:
    return TropicalCycle(Fan.trivial(rank_n), {})


def unit_cycle(rank_n: int) -> TropicalCycle:
    """Whole space with weight 1, the identity for stable intersection."""
    fan = Fan.trivial(rank_n)
    return TropicalCycle(fan, {fan.cones[0]: WeightPoly.constant(1)})


def transport_weights(cycle: TropicalCycle, target: Fan) -> Dict[Cone, WeightPoly]:
    """Weights of ``cycle`` on a refinement ``target`` of its fan.

    A cone of ``target`` inherits the weight of its carrier in the old fan
    when both have the same dimension, and weight 0 otherwise.
    """
    if target == cycle.fan:
        return dict(cycle.weights)
    if not cycle.weights:
        return {}
    out: Dict[Cone, WeightPoly] = {}
    weighted_dims = {c.dim for c in cycle.weights}
    for gamma in target.cones:
        if gamma.dim not in weighted_dims:
            continue
        carrier = cycle.fan.carrier(gamma)
        if carrier is None:
            raise InputValidationError("target fan does not refine the cycle's fan")
        if carrier.dim == gamma.dim and carrier in cycle.weights:
            out[gamma] = cycle.weights[carrier]
    return out


def refine(cycle: TropicalCycle, target: Fan) -> TropicalCycle:
    return TropicalCycle(target, transport_weights(cycle, target))


def add_cycles(a: TropicalCycle, b: TropicalCycle) -> TropicalCycle:
    if a.rank != b.rank:
        raise InputValidationError("cannot add cycles of different ranks")
    fan = common_refinement(a.fan, b.fan)
    wa = transport_weights(a, fan)
    for cone, w in transport_weights(b, fan).items():
        wa[cone] = wa.get(cone, WeightPoly()) + w
    return make_cycle(fan, wa)


def scale_cycle(cycle: TropicalCycle, k) -> TropicalCycle:
    """Multiply every weight by a scalar or a WeightPoly."""
    if not isinstance(k, WeightPoly):
        k = WeightPoly.constant(Fraction(k))
    return make_cycle(cycle.fan, {c: w * k for c, w in cycle.weights.items()})


def negate_cycle(cycle: TropicalCycle) -> TropicalCycle:
    return scale_cycle(cycle, -1)


def subtract_cycles(a: TropicalCycle, b: TropicalCycle) -> TropicalCycle:
    return add_cycles(a, negate_cycle(b))


def graded_component(cycle: TropicalCycle, codim: int) -> TropicalCycle:
    return TropicalCycle(cycle.fan, {c: w for c, w in cycle.weights.items() if c.codim == codim and w})


def top_component(cycle: TropicalCycle) -> TropicalCycle:
    """Lowest-codimension nonzero component."""
    codims = cycle.codimensions()
    if not codims:
        raise ZeroCycle("the zero cycle has no top component")
    return graded_component(cycle, codims[0])


def evaluate_weights(cycle: TropicalCycle, y: Scalar) -> TropicalCycle:
    """Substitute a rational y != 1 into every weight."""
    if Fraction(y) == 1:
        raise YEqualsOne("weights are Laurent polynomials in (y-1) and are not evaluated at y = 1")
    return make_cycle(
        cycle.fan, {c: WeightPoly.constant(w.evaluate(y)) for c, w in cycle.weights.items()}
    )


def support_cones(cycle: TropicalCycle, fan: Optional[Fan] = None) -> Set[Cone]:
    """Cones covering the support: weighted cones and all their faces."""
    weights = transport_weights(cycle, fan) if fan is not None else cycle.weights
    out: Set[Cone] = set()
    for c, w in weights.items():
        if w:
            out.update(c.faces())
    return out


def support_equal(a: TropicalCycle, b: TropicalCycle) -> bool:
    fan = common_refinement(a.fan, b.fan)
    return support_cones(a, fan) == support_cones(b, fan)


def cycle_equal(a: TropicalCycle, b: TropicalCycle) -> bool:
    """Equality of weights after passing to a common refinement."""
    fan = common_refinement(a.fan, b.fan)
    wa = {c: w for c, w in transport_weights(a, fan).items() if w}
    wb = {c: w for c, w in transport_weights(b, fan).items() if w}
    return wa == wb


def degree(cycle: TropicalCycle) -> WeightPoly:
    """Weight carried by the origin, i.e. of the dimension-zero component."""
    return sum((w for c, w in cycle.weights.items() if c.dim == 0), WeightPoly())
