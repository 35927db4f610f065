from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence

from ..errors import InputValidationError, MissingMeasureValue, PipelineDisagreement
from ..chigenus import ChiPolynomial, chi_y, refined_trop
from ..chigenus.genus import _common_rank
from ..polytope import LatticePolytope
from ..tropcycle import (
    Cone,
    TropicalCycle,
    WeightPoly,
    common_refinement,
    orthant_fan,
    refine,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ToddMeasure:
    """Values on strongly convex cones: 1 on the origin, 1/2 on rays.

    Higher-dimensional cones are only measured when ``table`` supplies them.
    """

    origin_value: Fraction = Fraction(1)
    ray_value: Fraction = Fraction(1, 2)
    table: Mapping[Cone, Fraction] = field(default_factory=dict, hash=False)

    def value(self, cone: Cone) -> Fraction:
        if cone in self.table:
            return self.table[cone]
        if not cone.is_pointed:
            raise MissingMeasureValue(cone)
        if cone.dim == 0:
            return self.origin_value
        if cone.dim == 1:
            return self.ray_value
        raise MissingMeasureValue(cone)

    @classmethod
    def from_entries(cls, entries: Sequence[Dict[str, Any]], rank_n: int) -> "ToddMeasure":
        """Build a measure from ``[{"rays": [[...], ...], "value": "p/q"}, ...]``."""
        table: Dict[Cone, Fraction] = {}
        for entry in entries:
            rays = entry.get("rays")
            value = entry.get("value")
            if not isinstance(rays, list) or not rays:
                raise InputValidationError(f"todd_table entry without rays: {entry!r}")
            if any(not isinstance(r, list) or len(r) != rank_n for r in rays):
                raise InputValidationError(f"todd_table rays must have {rank_n} coordinates")
            if not isinstance(value, (str, int)) or isinstance(value, bool):
                raise InputValidationError(f"todd_table value must be a 'p/q' string, got {value!r}")
            try:
                frac = Fraction(value)
            except (ValueError, ZeroDivisionError) as e:
                raise InputValidationError(f"bad todd_table value {value!r}") from e
            cone = Cone.from_generators(rank_n, rays)
            if not cone.is_pointed:
                raise InputValidationError(f"todd_table cone {cone} is not strongly convex")
            table[cone] = frac
        return cls(table=table)


@dataclass
class AdditivityViolation:
    cone: Cone
    value: Fraction
    pieces_sum: Fraction


def _is_subdivision(tau: Cone, pieces: List[Cone]) -> bool:
    d = tau.dim
    for i, a in enumerate(pieces):
        for b in pieces[i + 1 :]:
            if a.intersection(b).dim >= d:
                return False
    boundary = tau.facets()
    counts: Dict[Cone, int] = {}
    for piece in pieces:
        for f in piece.facets():
            if any(b.contains(f) for b in boundary):
                continue
            counts[f] = counts.get(f, 0) + 1
    return all(c == 2 for c in counts.values())


def check_additivity(mu: ToddMeasure) -> List[AdditivityViolation]:
    """Table cones tiled face to face by other table cones must carry the sum."""
    violations = []
    cones = list(mu.table)
    for tau in cones:
        pieces = [s for s in cones if s != tau and s.dim == tau.dim and tau.contains(s)]
        if len(pieces) < 2 or not _is_subdivision(tau, pieces):
            continue
        total = sum((mu.table[s] for s in pieces), Fraction(0))
        if total != mu.table[tau]:
            violations.append(AdditivityViolation(tau, mu.table[tau], total))
    return violations


def integrate(cycle: TropicalCycle, mu: Optional[ToddMeasure] = None) -> WeightPoly:
    """sum over weighted cones of weight * mu(cone).

    Cones carrying lineality are first cut by the coordinate orthants so the
    measure only meets strongly convex cones.
    """
    mu = mu or ToddMeasure()
    if any(not c.is_pointed for c in cycle.weighted_cones()):
        cycle = refine(cycle, common_refinement(cycle.fan, orthant_fan(cycle.rank)))
    total = WeightPoly()
    for cone in cycle.weighted_cones():
        total = total + cycle.weight(cone) * mu.value(cone)
    return total


def chi_y_via_todd(
    deltas: Sequence[LatticePolytope],
    mu: Optional[ToddMeasure] = None,
    rank_n: Optional[int] = None,
    cross_check: bool = True,
) -> ChiPolynomial:
    """(y-1)^n times the integral of the refined tropicalization."""
    n = _common_rank(deltas, rank_n)
    integral = integrate(refined_trop(deltas, n), mu)
    poly = ChiPolynomial.from_u_expansion(integral.as_dict(), n)
    if cross_check:
        expected = chi_y(deltas, n)
        if poly != expected:
            raise PipelineDisagreement(
                f"Todd integration gives {poly}, polytope algebra gives {expected}",
                {"todd": str(poly), "factored": str(expected)},
            )
    return poly
