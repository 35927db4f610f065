from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Mapping, Sequence, Tuple

import sympy

from ..errors import NonIntegralResult

GENERICITY_NOTE = "values valid for generic coefficients"

_Y = sympy.Symbol("y")


@dataclass(frozen=True)
class ChiPolynomial:
    """Integer polynomial in y; ``coefficients[p]`` is the coefficient of y^p."""

    coefficients: Tuple[int, ...] = ()

    @classmethod
    def from_rational(cls, coeffs: Sequence[Fraction]) -> "ChiPolynomial":
        ints: List[int] = []
        for p, c in enumerate(coeffs):
            c = Fraction(c)
            if c.denominator != 1:
                raise NonIntegralResult(f"coefficient of y^{p} is {c}, not an integer")
            ints.append(c.numerator)
        while ints and ints[-1] == 0:
            ints.pop()
        return cls(tuple(ints))

    @classmethod
    def from_u_expansion(cls, coeffs: Mapping[int, Fraction], n: int) -> "ChiPolynomial":
        """Expand (y-1)^n * sum_e c_e (y-1)^(-e) into powers of y."""
        out = [Fraction(0)] * (n + 1)
        for e, c in coeffs.items():
            if c == 0:
                continue
            m = n - e
            if m < 0:
                raise NonIntegralResult(f"term (y-1)^{m} is not polynomial")
            for j in range(m + 1):
                out[j] += c * comb(m, j) * (-1) ** (m - j)
        return cls.from_rational(out)

    @classmethod
    def torus(cls, n: int) -> "ChiPolynomial":
        return cls.from_u_expansion({0: Fraction(1)}, n)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def evaluate(self, y) -> Fraction:
        return sum((Fraction(c) * Fraction(y) ** p for p, c in enumerate(self.coefficients)), Fraction(0))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts: List[Tuple[str, str]] = []
        for p in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[p]
            if c == 0:
                continue
            mag = abs(c)
            if p == 0:
                body = str(mag)
            else:
                mono = "y" if p == 1 else f"y^{p}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def as_sympy(self) -> sympy.Expr:
        return sum((c * _Y**p for p, c in enumerate(self.coefficients)), sympy.Integer(0))

    def factored(self) -> str:
        """Compact factorization over Q, e.g. ``(y-1)^2`` or ``-5``."""
        if len(self.coefficients) <= 1:
            return str(self)
        lead, factors = sympy.factor_list(self.as_sympy())
        pieces = []
        for f, mult in factors:
            body = str(f).replace("**", "^").replace(" ", "")
            if len(factors) > 1 or mult > 1 or lead != 1:
                body = f"({body})"
            pieces.append(body if mult == 1 else f"{body}^{mult}")
        prefix = "" if lead == 1 else ("-" if lead == -1 else f"{lead}*")
        return prefix + "*".join(pieces)

    def to_dict(self) -> Dict[str, object]:
        return {
            "text": str(self),
            "factored": self.factored(),
            "coefficients": list(self.coefficients),
        }
