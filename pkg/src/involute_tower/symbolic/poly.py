"""Polynomials in t with exact rational coefficients.

A polynomial is a tuple of Fractions where index i holds the coefficient of
t^i. Trailing zeros are stripped on construction, so equal polynomials have
equal coefficient tuples and the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _normalize(coefficients: Iterable[Scalar]) -> tuple[Fraction, ...]:
    values = [Fraction(c) for c in coefficients]
    n = len(values)
    while n and values[n - 1] == 0:
        n -= 1
    return tuple(values[:n])


@dataclass(frozen=True)
class RationalPoly:
    """Exact polynomial sum_i coefficients[i] * t^i."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _normalize(self.coefficients))

    @classmethod
    def of(cls, *coefficients: Scalar) -> RationalPoly:
        """RationalPoly.of(1, 0, Fraction(-1, 2)) is 1 - t^2/2."""
        return cls(tuple(Fraction(c) for c in coefficients))

    @classmethod
    def monomial(cls, coeff: Scalar, degree: int) -> RationalPoly:
        """coeff * t^degree."""
        return cls((Fraction(0),) * degree + (Fraction(coeff),))

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coefficients if c != 0) == 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def __add__(self, other: RationalPoly) -> RationalPoly:
        size = max(len(self.coefficients), len(other.coefficients))
        return RationalPoly(tuple(self[i] + other[i] for i in range(size)))

    def __neg__(self) -> RationalPoly:
        return RationalPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: RationalPoly) -> RationalPoly:
        return self + (-other)

    def __mul__(self, other: Union[RationalPoly, Scalar]) -> RationalPoly:
        if not isinstance(other, RationalPoly):
            return RationalPoly(tuple(c * other for c in self.coefficients))
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return RationalPoly(tuple(product))

    __rmul__ = __mul__

    def shift(self, power: int) -> RationalPoly:
        """Multiply by t^power."""
        if self.is_zero():
            return self
        return RationalPoly((Fraction(0),) * power + self.coefficients)

    def derivative(self) -> RationalPoly:
        return RationalPoly(
            tuple(i * c for i, c in enumerate(self.coefficients) if i > 0)
        )

    def antiderivative(self) -> RationalPoly:
        """Primitive vanishing at t = 0."""
        return RationalPoly(
            (Fraction(0),)
            + tuple(c / (i + 1) for i, c in enumerate(self.coefficients))
        )

    def evaluate(self, t: float) -> float:
        result = 0.0
        for c in reversed(self.coefficients):
            result = result * t + float(c)
        return result

    def __str__(self) -> str:
        terms = [
            (c, i) for i, c in enumerate(self.coefficients) if c != 0
        ]
        if not terms:
            return "0"
        return join_terms((c, monomial_text(i)) for c, i in terms)


def monomial_text(power: int) -> str:
    if power == 0:
        return ""
    if power == 1:
        return "t"
    return f"t^{power}"


def join_terms(terms: Iterable[tuple[Fraction, str]]) -> str:
    """Render signed coefficient/factor pairs as '1 - 1/2*t^2*sin(phi+t)'."""
    parts: list[str] = []
    for coeff, factor in terms:
        magnitude = abs(coeff)
        if not factor:
            body = str(magnitude)
        elif magnitude == 1:
            body = factor
        else:
            body = f"{magnitude}*{factor}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"
