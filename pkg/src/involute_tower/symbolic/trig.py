"""Trig-polynomial curves and the exact involute operator.

Every curve of the involute tower has coordinates of the form

    p(t) * sin(phi + t) + q(t) * cos(phi + t)

with rational polynomials p and q. This class is closed under
differentiation, and under the involute operator whenever the velocity is a
single monomial t^d times a fixed rotation of the frame, which is exactly the
situation on the tower. The involute can then be computed with exact
arithmetic, since s(t) = |c| t^(d+1) / (d+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from involute_tower.core.errors import ClosedFormError, NotInClosureError
from involute_tower.core.types import Vec2
from involute_tower.series.analytic import cos_coefficients, sin_coefficients
from involute_tower.symbolic.poly import RationalPoly, join_terms, monomial_text

SIN = "sin(phi+t)"
COS = "cos(phi+t)"


@dataclass(frozen=True)
class TrigPolyExpr:
    """p(t) * sin(phi + t) + q(t) * cos(phi + t)."""

    p: RationalPoly = field(default_factory=RationalPoly)
    q: RationalPoly = field(default_factory=RationalPoly)

    def __add__(self, other: TrigPolyExpr) -> TrigPolyExpr:
        return TrigPolyExpr(self.p + other.p, self.q + other.q)

    def __sub__(self, other: TrigPolyExpr) -> TrigPolyExpr:
        return TrigPolyExpr(self.p - other.p, self.q - other.q)

    def __neg__(self) -> TrigPolyExpr:
        return TrigPolyExpr(-self.p, -self.q)

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()

    @property
    def degree(self) -> int:
        return max(self.p.degree, self.q.degree)

    def evaluate(self, phi: float, t: float) -> float:
        return self.p.evaluate(t) * math.sin(phi + t) + self.q.evaluate(t) * math.cos(
            phi + t
        )

    def __str__(self) -> str:
        terms: list[tuple[Fraction, str]] = []
        for i in range(self.degree + 1):
            power = monomial_text(i)
            for coeff, frame in ((self.p[i], SIN), (self.q[i], COS)):
                if coeff != 0:
                    terms.append((coeff, f"{power}*{frame}" if power else frame))
        return join_terms(terms)


def differentiate(e: TrigPolyExpr) -> TrigPolyExpr:
    """d/dt of p sin(phi + t) + q cos(phi + t) = (p' - q) sin + (q' + p) cos."""
    return TrigPolyExpr(e.p.derivative() - e.q, e.q.derivative() + e.p)


@dataclass(frozen=True)
class TrigPolyCurve:
    """Plane curve whose coordinates are both trig polynomials."""

    x: TrigPolyExpr
    y: TrigPolyExpr

    @classmethod
    def unit_arc(cls) -> TrigPolyCurve:
        """x = sin(phi + t), y = cos(phi + t)."""
        one = RationalPoly.of(1)
        return cls(TrigPolyExpr(p=one), TrigPolyExpr(q=one))

    @classmethod
    def unit_circle(cls) -> TrigPolyCurve:
        """(cos t, sin t), written in the frame with phi = pi/2."""
        return cls(TrigPolyExpr(p=RationalPoly.of(1)), TrigPolyExpr(q=RationalPoly.of(-1)))

    @classmethod
    def from_closed_form(cls, k: int) -> TrigPolyCurve:
        """Level k of the tower built from the partial sums C and S.

        Raises:
            ClosedFormError: If k < 1
        """
        if k < 1:
            raise ClosedFormError(
                f"level {k} has no involute closed form",
                ["Use TrigPolyCurve.unit_arc() for level 0"],
            )
        c = RationalPoly(cos_coefficients(k // 2))
        s = RationalPoly(sin_coefficients((k + 1) // 2))
        return cls(TrigPolyExpr(p=c, q=-s), TrigPolyExpr(p=s, q=c))

    @property
    def degree(self) -> int:
        return max(self.x.degree, self.y.degree)

    def derivative(self) -> TrigPolyCurve:
        return TrigPolyCurve(differentiate(self.x), differentiate(self.y))

    def evaluate(self, phi: float, t: float) -> Vec2:
        return Vec2(self.x.evaluate(phi, t), self.y.evaluate(phi, t))

    def __str__(self) -> str:
        return f"x(t) = {self.x}\ny(t) = {self.y}"


def _frame_coefficients(curve: TrigPolyCurve) -> tuple[int, tuple[Fraction, ...]]:
    """Write the velocity as t^d * (a1 sin + a2 cos, a3 sin + a4 cos)."""
    velocity = curve.derivative()
    parts = (velocity.x.p, velocity.x.q, velocity.y.p, velocity.y.q)
    nonzero = [part for part in parts if not part.is_zero()]
    if not nonzero:
        raise NotInClosureError("curve is constant, so it has no speed monomial")
    degree = nonzero[0].degree
    for part in nonzero:
        if not part.is_monomial() or part.degree != degree:
            raise NotInClosureError(
                f"velocity is not a single monomial times the frame: ({velocity.x}, "
                f"{velocity.y})"
            )
    return degree, tuple(part[degree] for part in parts)


def _rational_sqrt(value: Fraction) -> Fraction:
    num, den = value.numerator, value.denominator
    root_num, root_den = math.isqrt(num), math.isqrt(den)
    if root_num * root_num != num or root_den * root_den != den:
        raise NotInClosureError(f"speed coefficient sqrt({value}) is irrational")
    return Fraction(root_num, root_den)


def monomial_speed(curve: TrigPolyCurve) -> tuple[int, Fraction]:
    """Find (d, c) with speed |c| * t^d.

    The velocity must be t^d times a rotation of the frame scaled by |c|.
    The sign of c is the sign of the first nonzero frame coefficient, read in
    the order x-sin, x-cos, y-sin, y-cos.

    Raises:
        NotInClosureError: If the velocity has no such form
    """
    degree, (a1, a2, a3, a4) = _frame_coefficients(curve)
    if a1 * a1 + a3 * a3 != a2 * a2 + a4 * a4 or a1 * a2 + a3 * a4 != 0:
        raise NotInClosureError(
            f"speed of ({curve.x}, {curve.y}) is not a monomial in t"
        )
    magnitude = _rational_sqrt(a1 * a1 + a3 * a3)
    sign = next(1 if a > 0 else -1 for a in (a1, a2, a3, a4) if a != 0)
    return degree, sign * magnitude


def arc_length_monomial(curve: TrigPolyCurve) -> tuple[int, Fraction]:
    """(d + 1, |c| / (d + 1)): the exact arc length s(t) from t = 0."""
    degree, coeff = monomial_speed(curve)
    return degree + 1, abs(coeff) / (degree + 1)


def symbolic_involute(curve: TrigPolyCurve) -> TrigPolyCurve:
    """Exact involute, string attached at t = 0.

    With velocity t^d (a1 sin + a2 cos, a3 sin + a4 cos) and speed |c| t^d,
    s(t) T(t) = t^(d+1) / (d+1) * (a1 sin + a2 cos, a3 sin + a4 cos).

    Raises:
        NotInClosureError: If the curve's speed is not a monomial
    """
    monomial_speed(curve)
    degree, (a1, a2, a3, a4) = _frame_coefficients(curve)
    power = degree + 1
    pull_x = TrigPolyExpr(
        RationalPoly.monomial(a1 / power, power), RationalPoly.monomial(a2 / power, power)
    )
    pull_y = TrigPolyExpr(
        RationalPoly.monomial(a3 / power, power), RationalPoly.monomial(a4 / power, power)
    )
    return TrigPolyCurve(curve.x - pull_x, curve.y - pull_y)

