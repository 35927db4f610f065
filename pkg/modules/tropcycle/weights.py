from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

from ..errors import YEqualsOne

Scalar = Union[int, Fraction]


def rational_to_text(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class WeightPoly:
    """Finite sum of c_e * (y-1)^(-e), kept as sorted ``(e, c_e)`` pairs."""

    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, Scalar]) -> "WeightPoly":
        return cls(tuple(sorted((int(e), Fraction(c)) for e, c in coeffs.items() if c != 0)))

    @classmethod
    def constant(cls, c: Scalar) -> "WeightPoly":
        return cls.from_dict({0: c})

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> "WeightPoly":
        return cls.from_dict({e: c})

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    def coefficient(self, e: int) -> Fraction:
        return self.as_dict().get(e, Fraction(0))

    def exponents(self) -> Tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "WeightPoly") -> "WeightPoly":
        if not isinstance(other, WeightPoly):
            other = WeightPoly.constant(other)
        acc = self.as_dict()
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return WeightPoly.from_dict(acc)

    __radd__ = __add__

    def __neg__(self) -> "WeightPoly":
        return WeightPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "WeightPoly") -> "WeightPoly":
        return self + (-other if isinstance(other, WeightPoly) else WeightPoly.constant(-Fraction(other)))

    def __mul__(self, other) -> "WeightPoly":
        if not isinstance(other, WeightPoly):
            k = Fraction(other)
            return WeightPoly.from_dict({e: c * k for e, c in self.terms})
        acc: Dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, Fraction(0)) + c1 * c2
        return WeightPoly.from_dict(acc)

    __rmul__ = __mul__

    def evaluate(self, y: Scalar) -> Fraction:
        y = Fraction(y)
        if y == 1 and any(e > 0 for e in self.exponents()):
            raise YEqualsOne("weight has a pole at y = 1")
        return sum((c * (y - 1) ** (-e) for e, c in self.terms), Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.terms:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            power = "(y-1)" if e == -1 else f"(y-1)^{-e}"
            if e == 0:
                body = rational_to_text(mag)
            elif mag == 1:
                body = power
            else:
                body = f"{rational_to_text(mag)}*{power}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

