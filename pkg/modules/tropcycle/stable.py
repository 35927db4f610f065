"""Stable intersection of tropical cycles by the fan displacement rule."""

from __future__ import annotations

import hashlib
import logging
import random
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from ..errors import DegenerateDisplacement
from ..exactmath import dot, lattice_index, lp_feasible, rank
from .cones import Cone, common_refinement
from .cycle import TropicalCycle, make_cycle, transport_weights
from .weights import WeightPoly

logger = logging.getLogger(__name__)

DEFAULT_RETRIES = 32


def meets_displaced(sigma: Cone, tau: Cone, v: Sequence[Fraction]) -> bool:
    """Whether sigma and tau + v intersect."""
    n = sigma.rank
    cons: List[Tuple[Sequence, Fraction]] = []
    s_ineq, s_eq = sigma.hrep()
    t_ineq, t_eq = tau.hrep()
    for a in s_ineq:
        cons.append((tuple(-x for x in a), Fraction(0)))
    for e in s_eq:
        cons.append((e, Fraction(0)))
        cons.append((tuple(-x for x in e), Fraction(0)))
    for a in t_ineq:
        cons.append((tuple(-x for x in a), -dot(a, v)))
    for e in t_eq:
        cons.append((e, dot(e, v)))
        cons.append((tuple(-x for x in e), -dot(e, v)))
    if not cons:
        return True
    feasible, _ = lp_feasible(cons, n)
    return feasible


def _fingerprint(*cycles: TropicalCycle) -> int:
    h = hashlib.sha256()
    for cycle in cycles:
        for cone in cycle.weighted_cones():
            h.update(f"{cone}:{cycle.weight(cone)};".encode())
        h.update(b"|")
    return int(h.hexdigest()[:16], 16)


def _all_faces(cones: Iterable[Cone]) -> List[Cone]:
    seen: Set[Cone] = set()
    for c in cones:
        seen.update(c.faces())
    return sorted(seen, key=Cone.sort_key)


def _is_generic(v, faces_a: List[Cone], faces_b: List[Cone], n: int) -> bool:
    for s in faces_a:
        for t in faces_b:
            if rank(s.span_generators() + t.span_generators()) >= n:
                continue
            if meets_displaced(s, t, v):
                return False
    return True


def draw_displacement(
    a: TropicalCycle,
    b: TropicalCycle,
    supp_a: Iterable[Cone],
    supp_b: Iterable[Cone],
    seed: Optional[int] = None,
    retries: int = DEFAULT_RETRIES,
) -> Tuple[Fraction, ...]:
    """Pseudo-random rational vector avoiding every non-transversal face pair.

    The stream is seeded from a hash of both cycles, mixed with ``seed`` when
    one is given, so repeated runs draw the same vector.
    """
    n = a.rank
    base = _fingerprint(a, b)
    rng = random.Random(base if seed is None else base ^ (seed * 0x9E3779B97F4A7C15))
    faces_a = _all_faces(supp_a)
    faces_b = _all_faces(supp_b)
    for attempt in range(retries):
        v = tuple(
            Fraction(rng.randint(-10**6, 10**6), rng.randint(10**3, 10**4)) for _ in range(n)
        )
        if _is_generic(v, faces_a, faces_b, n):
            if attempt:
                logger.debug("generic displacement found after %d retries", attempt)
            return v
    raise DegenerateDisplacement(f"no generic displacement vector after {retries} attempts")


def stable_intersection(
    a: TropicalCycle,
    b: TropicalCycle,
    seed: Optional[int] = None,
    retries: int = DEFAULT_RETRIES,
) -> TropicalCycle:
    """A . B on the common refinement of both fans.

    The weight of gamma sums m * w_A(sigma) * w_B(tau) over pairs
    sigma, tau containing gamma with complementary codimensions such that
    sigma meets tau + v; m is the lattice index [Z^n : N_sigma + N_tau].
    """
    if a.rank != b.rank:
        raise ValueError("stable intersection of cycles of different ranks")
    n = a.rank
    fan = common_refinement(a.fan, b.fan)
    wa = {c: w for c, w in transport_weights(a, fan).items() if w}
    wb = {c: w for c, w in transport_weights(b, fan).items() if w}
    if not wa or not wb:
        return make_cycle(fan, {})
    v = draw_displacement(a, b, wa, wb, seed=seed, retries=retries)

    pair_cache: Dict[Tuple[Cone, Cone], int] = {}

    def multiplicity(sigma: Cone, tau: Cone) -> int:
        key = (sigma, tau)
        if key not in pair_cache:
            if meets_displaced(sigma, tau, v):
                pair_cache[key] = lattice_index(sigma.span_generators(), tau.span_generators(), n)
            else:
                pair_cache[key] = 0
        return pair_cache[key]

    result: Dict[Cone, WeightPoly] = {}
    for gamma in fan.cones:
        above = fan.containing(gamma)
        total = WeightPoly()
        for sigma in above:
            if sigma not in wa:
                continue
            for tau in above:
                if tau not in wb or sigma.codim + tau.codim != gamma.codim:
                    continue
                m = multiplicity(sigma, tau)
                if m:
                    total = total + wa[sigma] * wb[tau] * m
        if total:
            result[gamma] = total
    return make_cycle(fan, result)


def intersect_all(
    cycles: Sequence[TropicalCycle], seed: Optional[int] = None, retries: int = DEFAULT_RETRIES
) -> TropicalCycle:
    out = cycles[0]
    for c in cycles[1:]:
        out = stable_intersection(out, c, seed=seed, retries=retries)
    return out
