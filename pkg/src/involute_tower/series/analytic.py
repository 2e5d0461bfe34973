"""Closed forms for the involute tower of a unit arc.

With phi = pi/2 - theta and the partial sums

    C_n(t) = sum_{i=0}^{n}   (-1)^i t^(2i)   / (2i)!
    S_n(t) = sum_{i=0}^{n-1} (-1)^i t^(2i+1) / (2i+1)!

the k-th involute AA_k of the arc x = sin(phi + t), y = cos(phi + t) is

    x_k = C_c(t) sin(phi + t) - S_s(t) cos(phi + t)
    y_k = C_c(t) cos(phi + t) + S_s(t) sin(phi + t)

with c = floor(k/2) and s = ceil(k/2). At t = theta this gives the tower
endpoint A_k = (C_c(theta), S_s(theta)), so the segments A_{k-1}A_k have the
lengths theta^k / k! of the series terms of cos and sin.

Note:
    The general expression usually printed for A_{2n} carries a sign exponent
    (-1)^(n-1) on the last cosine term and a stray (-1)^(i-1) index. Both
    disagree with A_2, A_3 and A_4 computed directly, so this module follows
    C_n and S_n exactly as defined above. Likewise the theta^3/3! segment is
    A_2A_3 (a sine term), not A_3A_4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

from involute_tower.core.errors import ClosedFormError
from involute_tower.core.types import Point2, Vec2
from involute_tower.core.validators import ValidationError

EXACT_FACTORIAL_LIMIT = 20


def factorial(k: int) -> Union[int, float]:
    """k! as an exact int for k <= 20 and as a float beyond."""
    if k < 0:
        raise ValidationError(f"factorial needs k >= 0, got {k}")
    if k <= EXACT_FACTORIAL_LIMIT:
        return math.factorial(k)
    return float(math.factorial(k))


def _require_order(n: int) -> None:
    if n < 0:
        raise ValidationError(f"partial-sum order must be non-negative, got {n}")


def partial_cos(n: int, t: float) -> float:
    """C_n(t): the cosine series through the t^(2n) term."""
    _require_order(n)
    return math.fsum((-1) ** i * t ** (2 * i) / factorial(2 * i) for i in range(n + 1))


def partial_sin(n: int, t: float) -> float:
    """S_n(t): the first n terms of the sine series; S_0 = 0."""
    _require_order(n)
    return math.fsum(
        (-1) ** i * t ** (2 * i + 1) / factorial(2 * i + 1) for i in range(n)
    )


def cos_coefficients(n: int) -> tuple[Fraction, ...]:
    """Exact coefficients of C_n, index i holding the t^i coefficient."""
    _require_order(n)
    coefficients = [Fraction(0)] * (2 * n + 1)
    for i in range(n + 1):
        coefficients[2 * i] = Fraction((-1) ** i, math.factorial(2 * i))
    return tuple(coefficients)


def sin_coefficients(n: int) -> tuple[Fraction, ...]:
    """Exact coefficients of S_n; empty for n = 0."""
    _require_order(n)
    coefficients = [Fraction(0)] * (2 * n)
    for i in range(n):
        coefficients[2 * i + 1] = Fraction((-1) ** i, math.factorial(2 * i + 1))
    return tuple(coefficients)


@dataclass(frozen=True)
class PartialSums:
    """Evaluators for C_n and S_n at a fixed order n."""

    n: int

    def __post_init__(self) -> None:
        _require_order(self.n)

    def cos(self, t: float) -> float:
        return partial_cos(self.n, t)

    def sin(self, t: float) -> float:
        return partial_sin(self.n, t)

    @property
    def cos_coefficients(self) -> tuple[Fraction, ...]:
        return cos_coefficients(self.n)

    @property
    def sin_coefficients(self) -> tuple[Fraction, ...]:
        return sin_coefficients(self.n)


def _indices(k: int) -> tuple[int, int]:
    """Orders (c, s) of the C and S sums appearing in level k."""
    return k // 2, (k + 1) // 2


@dataclass(frozen=True)
class ClosedFormInvolute:
    """Closed form of the tower level AA_k.

    The rotating frame is evaluated through sin(phi + t) = cos(theta - t) and
    cos(phi + t) = sin(theta - t), so at t = theta the point is exactly
    (C_c(theta), S_s(theta)).

    Attributes:
        k: Tower level, at least 1
        phi: pi/2 - theta
        theta: Angle of the base arc
    """

    k: int
    phi: float
    theta: float

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ClosedFormError(
                f"level {self.k} has no involute closed form",
                ["Use the base arc x = sin(phi + t), y = cos(phi + t) for level 0"],
            )

    @classmethod
    def for_theta(cls, k: int, theta: float) -> ClosedFormInvolute:
        return cls(k=k, phi=math.pi / 2 - theta, theta=theta)

    def _frame(self, t: float) -> tuple[float, float]:
        """(sin(phi + t), cos(phi + t))."""
        return math.cos(self.theta - t), math.sin(self.theta - t)

    def x(self, t: float) -> float:
        return self.point(t).x

    def y(self, t: float) -> float:
        return self.point(t).y

    def point(self, t: float) -> Point2:
        c, s = _indices(self.k)
        sin_f, cos_f = self._frame(t)
        cos_sum = partial_cos(c, t)
        sin_sum = partial_sin(s, t)
        return Vec2(cos_sum * sin_f - sin_sum * cos_f, cos_sum * cos_f + sin_sum * sin_f)

    def monomial(self, t: float) -> float:
        """Signed speed (-1)^floor(k/2) t^k / k!."""
        return (-1) ** (self.k // 2) * t**self.k / factorial(self.k)

    def velocity(self, t: float) -> Vec2:
        sin_f, cos_f = self._frame(t)
        m = self.monomial(t)
        if self.k % 2:
            return Vec2(m * sin_f, m * cos_f)
        return Vec2(m * cos_f, -m * sin_f)

    def speed(self, t: float) -> float:
        return t**self.k / factorial(self.k)


def closed_form_involute(k: int, phi: float) -> ClosedFormInvolute:
    """Closed form of AA_k for the arc with phase phi.

    Raises:
        ClosedFormError: If k == 0
    """
    return ClosedFormInvolute(k=k, phi=phi, theta=math.pi / 2 - phi)


def tower_endpoint(k: int, theta: float) -> Point2:
    """A_k = (C_floor(k/2)(theta), S_ceil(k/2)(theta)); A_0 = (1, 0)."""
    if k < 0:
        raise ValidationError(f"tower level must be non-negative, got {k}")
    c, s = _indices(k)
    return Vec2(partial_cos(c, theta), partial_sin(s, theta))


def segment_length(k: int, theta: float) -> float:
    """|A_{k-1} A_k| = theta^k / k!."""
    if k < 1:
        raise ValidationError(f"segments are numbered from 1, got {k}")
    return theta**k / factorial(k)


def remainder_bound(k: int, theta: float) -> float:
    """Upper bound 2 theta^(k+1) / (k+1)! on |A_k - (cos theta, sin theta)|."""
    if k < 0:
        raise ValidationError(f"tower level must be non-negative, got {k}")
    return 2.0 * theta ** (k + 1) / factorial(k + 1)


@dataclass(frozen=True)
class SeriesTerm:
    """One segment of the tower read as a term of the cos or sin series."""

    label: str
    series: Literal["cos", "sin"]
    power: int
    value: float
    length: float


def series_term_table(theta: float, depth: int) -> list[SeriesTerm]:
    """Segments OA_0, A_0A_1, ..., A_{depth-1}A_depth as series terms.

    OA_0 carries the constant term 1 of the cosine series. Odd segments are
    sine terms and even segments cosine terms.
    """
    rows = [SeriesTerm("OA0", "cos", 0, 1.0, 1.0)]
    for k in range(1, depth + 1):
        length = segment_length(k, theta)
        sign = (-1) ** (k // 2)
        rows.append(
            SeriesTerm(
                label=f"A{k - 1}A{k}",
                series="sin" if k % 2 else "cos",
                power=k,
                value=sign * length,
                length=length,
            )
        )
    return rows
