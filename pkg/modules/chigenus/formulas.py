from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from ..errors import InputValidationError, NonIntegralResult, NotFullDimPolygon, RankNotTwo
from ..polyalgebra import is_zero_in_algebra, lat
from ..polytope import (
    LatticePolytope,
    boundary_and_interior_counts,
    minkowski_sum_all,
    volume,
)
from .genus import _common_rank, rel_chi_intersection
from .polynomial import ChiPolynomial

logger = logging.getLogger(__name__)


def chi_y(
    deltas: Sequence[LatticePolytope],
    rank_n: Optional[int] = None,
    check_vanishing: bool = True,
    slow_checks: bool = False,
) -> ChiPolynomial:
    """chi_y(Z) = (y-1)^n Lat(chi_y^T(Z)) for a generic complete intersection.

    ``check_vanishing`` materializes the exponents above n and asserts that
    their lattice point counts vanish; ``slow_checks`` also asserts that their
    Chern images are zero.
    """
    n = _common_rank(deltas, rank_n)
    if not deltas:
        return ChiPolynomial.torus(n)
    genus = rel_chi_intersection(deltas, n, full=check_vanishing)
    if check_vanishing:
        for e, c in genus.high_terms().items():
            if lat(c) != 0:
                raise NonIntegralResult(f"exponent {e} > {n} has nonzero lattice count {lat(c)}")
            if slow_checks and not is_zero_in_algebra(c):
                raise NonIntegralResult(f"exponent {e} > {n} is not zero in the polytope algebra")
        logger.debug("checked %d coefficients above exponent %d", len(genus.high_terms()), n)
    counts = {e: lat(c) for e, c in genus.low_terms().items()}
    poly = ChiPolynomial.from_u_expansion(counts, n)
    if not poly.is_zero and poly.degree > n - len(deltas):
        raise NonIntegralResult(f"degree {poly.degree} exceeds {n - len(deltas)}")
    return poly


def _polygon_counts(delta: LatticePolytope):
    if delta.rank != 2:
        raise RankNotTwo(f"closed forms need a rank 2 polygon, got rank {delta.rank}")
    if delta.dim != 2:
        raise NotFullDimPolygon(f"{delta} is not full-dimensional")
    boundary, interior = boundary_and_interior_counts(delta)
    return boundary, interior, volume(delta)


def chi_y_closed_form_2d(delta: LatticePolytope) -> ChiPolynomial:
    """((B - 2vol)/2)(y-1) - 2vol for a lattice polygon with B boundary points."""
    boundary, _, vol = _polygon_counts(delta)
    slope = Fraction(boundary - 2 * vol, 2)
    return ChiPolynomial.from_rational([-slope - 2 * vol, slope])


def chi_y_genus_form_2d(delta: LatticePolytope) -> ChiPolynomial:
    """(1 - I)(y+1) - B: the curve has genus I and B punctures."""
    boundary, interior, _ = _polygon_counts(delta)
    return ChiPolynomial.from_rational([1 - interior - boundary, 1 - interior])


def euclidean_volume(p: LatticePolytope) -> Fraction:
    return volume(p) if p.dim == p.rank else Fraction(0)


def mixed_volume_count(deltas: Sequence[LatticePolytope]) -> Fraction:
    """Mixed volume of n polytopes in rank n by inclusion-exclusion.

    This is the number of solutions of a generic square system with these
    Newton polytopes.
    """
    n = _common_rank(deltas, None)
    if len(deltas) != n:
        raise InputValidationError(f"mixed volume needs exactly {n} polytopes")
    total = Fraction(0)
    for size in range(1, n + 1):
        for subset in combinations(deltas, size):
            total += (-1) ** (n - size) * euclidean_volume(minkowski_sum_all(subset, n))
    return total
