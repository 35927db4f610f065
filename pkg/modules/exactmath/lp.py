"""Exact feasibility of <a, x> <= b systems by Fourier-Motzkin elimination."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import primitive_vector

logger = logging.getLogger(__name__)

Constraint = Tuple[Tuple[Fraction, ...], Fraction]


def _normalize(a: Sequence[Fraction], b: Fraction) -> Constraint:
    if not any(a):
        return tuple(Fraction(0) for _ in a), Fraction((b > 0) - (b < 0))
    prim = primitive_vector(a)
    k = next(x for x in a if x != 0) / next(x for x in prim if x != 0)
    return tuple(Fraction(x) for x in prim), b / k


def _dedupe(cons: Sequence[Constraint]) -> Tuple[List[Constraint], bool]:
    """Keep the tightest bound per direction; report a contradiction."""
    best: Dict[Tuple[Fraction, ...], Fraction] = {}
    for a, b in cons:
        if not any(a):
            if b < 0:
                return [], False
            continue
        if a not in best or b < best[a]:
            best[a] = b
    return [(a, b) for a, b in best.items()], True


def _eliminate(cons: Sequence[Constraint], var: int) -> Tuple[List[Constraint], bool]:
    pos = [c for c in cons if c[0][var] > 0]
    neg = [c for c in cons if c[0][var] < 0]
    out = [c for c in cons if c[0][var] == 0]
    for ap, bp in pos:
        for an, bn in neg:
            lam_p, lam_n = -an[var], ap[var]
            a = tuple(lam_p * x + lam_n * y for x, y in zip(ap, an))
            out.append(_normalize(a, lam_p * bp + lam_n * bn))
    return _dedupe(out)


def _pick(lo: Optional[Fraction], hi: Optional[Fraction]) -> Fraction:
    if lo is not None and lo > 0:
        return lo
    if hi is not None and hi < 0:
        return hi
    return Fraction(0)


def lp_feasible(
    inequalities: Sequence[Tuple[Sequence, object]], dim: Optional[int] = None
) -> Tuple[bool, Optional[Tuple[Fraction, ...]]]:
    """Decide whether {x : <a, x> <= b for all (a, b)} is nonempty over Q.

    Returns ``(True, witness)`` with a rational witness point, or
    ``(False, None)``.
    """
    if dim is None:
        dim = len(inequalities[0][0]) if inequalities else 0
    cons, ok = _dedupe(
        [_normalize([Fraction(x) for x in a], Fraction(b)) for a, b in inequalities]
    )
    if not ok:
        return False, None
    stages = [cons]
    for var in reversed(range(dim)):
        cons, ok = _eliminate(cons, var)
        if not ok:
            logger.debug("infeasible after eliminating x%d", var)
            return False, None
        stages.append(cons)

    x: List[Fraction] = []
    for var in range(dim):
        system = stages[dim - 1 - var]
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for a, b in system:
            coef = a[var]
            if coef == 0:
                continue
            rest = b - sum(a[u] * x[u] for u in range(var))
            bound = rest / coef
            if coef > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        x.append(_pick(lo, hi))
    return True, tuple(x)
