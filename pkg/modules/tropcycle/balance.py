from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from ..exactmath import IntVector, nullspace, rank, saturation_basis, solve
from .cones import Cone
from .cycle import TropicalCycle


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _unimodular_preimage(phi: IntVector) -> List[int]:
    """Integer u with <phi, u> = 1 for a primitive phi."""
    g = 0
    u = [0] * len(phi)
    for i, c in enumerate(phi):
        if c == 0:
            continue
        if g == 0:
            g, u = c, [0] * len(phi)
            u[i] = 1
            continue
        g, s, t = _xgcd(g, c)
        u = [s * x for x in u]
        u[i] += t
    if g < 0:
        g, u = -g, [-x for x in u]
    if g != 1:
        raise ValueError(f"{phi} is not primitive")
    return u


def _coordinates(basis: List[IntVector], v) -> List[Fraction]:
    columns = [[b[i] for b in basis] for i in range(len(v))]
    return solve(columns, list(v))


def lattice_normal(sigma: Cone, tau: Cone) -> IntVector:
    """Primitive generator of N_sigma / N_tau pointing into sigma.

    Works in a Z-basis of the saturated lattice of span(sigma): the image of
    N_tau there is the kernel of a primitive functional phi, and any u with
    phi(u) = 1 represents the generator of the quotient.
    """
    b_sigma = saturation_basis(sigma.span_generators(), sigma.rank)
    b_tau = saturation_basis(tau.span_generators(), sigma.rank)
    d = len(b_sigma)
    tau_coords = [_coordinates(b_sigma, t) for t in b_tau]
    phi = nullspace(tau_coords, d)[0]
    u = _unimodular_preimage(phi)
    vec = tuple(sum(u[i] * b_sigma[i][j] for i in range(d)) for j in range(sigma.rank))
    inner = _coordinates(b_sigma, sigma.relint_point())
    if sum(p * c for p, c in zip(phi, inner)) < 0:
        vec = tuple(-x for x in vec)
    return vec


@dataclass
class BalanceReport:
    balanced: bool
    violations: List[Tuple[Cone, int, Tuple[Fraction, ...]]] = field(default_factory=list)


def is_balanced(cycle: TropicalCycle) -> BalanceReport:
    """Check the balancing condition around every codimension-one face.

    Each exponent of the weights is checked separately, and each dimension
    of weighted cones is balanced on its own.
    """
    n = cycle.rank
    sums: Dict[Cone, Dict[int, List[Fraction]]] = {}
    for sigma in cycle.weighted_cones():
        w = cycle.weight(sigma)
        for tau in sigma.facets():
            u = lattice_normal(sigma, tau)
            per_exp = sums.setdefault(tau, {})
            for e, c in w.terms:
                acc = per_exp.setdefault(e, [Fraction(0)] * n)
                for i in range(n):
                    acc[i] += c * u[i]
    report = BalanceReport(balanced=True)
    for tau, per_exp in sums.items():
        gens = tau.span_generators()
        for e, vec in sorted(per_exp.items()):
            if not any(vec):
                continue
            if rank(gens + [tuple(vec)]) > tau.dim:
                report.balanced = False
                report.violations.append((tau, e, tuple(vec)))
    return report
