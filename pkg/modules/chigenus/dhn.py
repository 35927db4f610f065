"""Independent oracle: chi_y coefficients as alternating sums of lattice counts.

Shares nothing with the polytope-algebra pipeline except lattice point
counting and the Minkowski sum/dilation primitives.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations, product
from math import comb
from typing import List, Optional, Sequence, Tuple

from ..polytope import LatticePolytope, dilate, lattice_point_count, minkowski_sum, point
from .genus import _common_rank
from .polynomial import ChiPolynomial

logger = logging.getLogger(__name__)


def _weighted_count(deltas: Sequence[LatticePolytope], betas: Tuple[int, ...], n: int) -> int:
    total = point(n)
    for delta, beta in zip(deltas, betas):
        total = minkowski_sum(total, dilate(delta, 1 + beta))
    return lattice_point_count(total)


def _subset_contribution(
    subset: Tuple[LatticePolytope, ...], n: int, degrees: range
) -> List[int]:
    """sum over beta of (-1)^|beta| binom(n+|I|, p-|beta|) |sum (1+beta_i) Delta_i|, per p."""
    size = len(subset)
    top = max(degrees) if degrees else -1
    values = [0] * (top + 1)
    for betas in product(range(top + 1), repeat=size):
        b = sum(betas)
        if b > top:
            continue
        count = _weighted_count(subset, betas, n)
        for p in degrees:
            if b <= p:
                values[p] += (-1) ** b * comb(n + size, p - b) * count
    return values


def dhn_chi_y(
    deltas: Sequence[LatticePolytope], rank_n: Optional[int] = None, workers: int = 1
) -> ChiPolynomial:
    """Coefficient of y^p for p = 0..n-k from the alternating lattice-count formula.

    Subsets I of the polytopes are independent and may be summed on a
    thread pool; exact integer arithmetic makes the order irrelevant.
    """
    n = _common_rank(deltas, rank_n)
    k = len(deltas)
    if k > n:
        return ChiPolynomial()
    degrees = range(0, n - k + 1)
    subsets = [s for size in range(k + 1) for s in combinations(deltas, size)]

    def task(subset):
        return len(subset), _subset_contribution(subset, n, degrees)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(task, subsets))
    else:
        parts = [task(s) for s in subsets]

    coeffs = [0] * (n - k + 1)
    for size, values in parts:
        for p in degrees:
            coeffs[p] += (-1) ** size * values[p]
    logger.debug("DHN sum over %d subsets", len(subsets))
    return ChiPolynomial.from_rational([(-1) ** (n - p) * c for p, c in enumerate(coeffs)])
