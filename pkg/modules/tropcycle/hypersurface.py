from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Optional

from ..polytope import LatticePolytope, minimizing_face, normal_fan, relative_volume
from .cones import Cone, Fan
from .cycle import (
    TropicalCycle,
    add_cycles,
    make_cycle,
    scale_cycle,
    subtract_cycles,
    unit_cycle,
    zero_cycle,
)
from .stable import DEFAULT_RETRIES, stable_intersection
from .weights import WeightPoly


def dual_hypersurface(p: LatticePolytope) -> TropicalCycle:
    """Codimension-one skeleton of the normal fan weighted by edge lengths.

    A point has no edges, so its hypersurface is the zero cycle.
    """
    fan = normal_fan(p)
    if p.is_point:
        return make_cycle(fan, {})
    weights = {}
    for cone in fan.cones_of_dim(p.rank - 1):
        face = fan.labels[cone]
        weights[cone] = WeightPoly.constant(relative_volume(face))
    return make_cycle(fan, weights)


def exp_cycle(p: LatticePolytope) -> TropicalCycle:
    """exp(T(P)): every normal cone weighted by the volume of its dual face."""
    fan = normal_fan(p)
    return make_cycle(
        fan, {cone: WeightPoly.constant(relative_volume(face)) for cone, face in fan.labels.items()}
    )


def exp_weight(p: LatticePolytope, gamma: Cone) -> Fraction:
    """Weight of exp(T(P)) on a cone of any fan refining the normal fan of P."""
    face = minimizing_face(p, gamma.relint_point())
    if gamma.dim != p.rank - face.dim:
        return Fraction(0)
    return relative_volume(face)


def exp_cycle_on(fan: Fan, p: LatticePolytope) -> TropicalCycle:
    return make_cycle(fan, {g: WeightPoly.constant(exp_weight(p, g)) for g in fan.cones})


def _exp_series(
    t: TropicalCycle, sign: int, seed: Optional[int], retries: int
) -> TropicalCycle:
    total = unit_cycle(t.rank)
    power = unit_cycle(t.rank)
    for k in range(1, t.rank + 1):
        power = stable_intersection(power, t, seed=seed, retries=retries)
        if power.is_zero:
            break
        total = add_cycles(total, scale_cycle(power, Fraction(sign**k, factorial(k))))
    return total


def exp_cycle_iterated(
    p: LatticePolytope, seed: Optional[int] = None, retries: int = DEFAULT_RETRIES
) -> TropicalCycle:
    """1 + T + T^2/2! + ... + T^n/n! computed by repeated stable intersection."""
    return _exp_series(dual_hypersurface(p), 1, seed, retries)


def negate_exp_cycle(
    p: LatticePolytope, seed: Optional[int] = None, retries: int = DEFAULT_RETRIES
) -> TropicalCycle:
    """exp(-T(P)) = sum over k of (-1)^k T(P)^k / k!."""
    return _exp_series(dual_hypersurface(p), -1, seed, retries)


def hypersurface_series(
    p: LatticePolytope, seed: Optional[int] = None, retries: int = DEFAULT_RETRIES
) -> TropicalCycle:
    """-sum_{i>=1} ((exp(-T(P)) - 1) u)^i evaluated in the cycle ring.

    Agrees with the refined tropicalization of a generic hypersurface with
    Newton polytope P.
    """
    n = p.rank
    step = scale_cycle(
        subtract_cycles(negate_exp_cycle(p, seed, retries), unit_cycle(n)),
        WeightPoly.monomial(1),
    )
    total = zero_cycle(n)
    power = unit_cycle(n)
    for _ in range(n):
        power = stable_intersection(power, step, seed=seed, retries=retries)
        if power.is_zero:
            break
        total = subtract_cycles(total, power)
    return total
