"""Plane parametric curves.

A ParametricCurve bundles a position map, an optional analytic derivative and
an optional analytic second derivative over a closed parameter interval.
Missing derivatives fall back to finite differences. The module also provides
arc length, both as a one-off quadrature and as a reusable ArcLengthTable.
"""

from __future__ import annotations

import bisect
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from involute_tower.core.config import get_config
from involute_tower.core.errors import CurveDomainError, DegenerateCurveError, NumericError
from involute_tower.core.types import ORIGIN, DerivativeFn, Interval, Point2, PositionFn, Vec2
from involute_tower.core.validators import validate_tolerance
from involute_tower.curves.quadrature import adaptive_simpson

logger = logging.getLogger(__name__)

DELTA_SPEED = 1e-12
"""Speeds at or below this are treated as zero when normalizing."""

EPS_LIMIT = 1e-6
"""Parameter offset used to probe the one-sided tangent limit."""

_FD_STEP = 1e-6
_SECOND_FD_STEP = 1e-4


def _step(t: float, base: float) -> float:
    return max(base, base * abs(t))


def _difference(f: Callable[[float], Vec2], t: float, domain: Interval) -> Vec2:
    """Second-order finite-difference derivative, one-sided near the endpoints."""
    h = _step(t, _FD_STEP)
    if t - h < domain.a:
        return (-3.0 * f(t) + 4.0 * f(t + h) - f(t + 2.0 * h)) * (0.5 / h)
    if t + h > domain.b:
        return (3.0 * f(t) - 4.0 * f(t - h) + f(t - 2.0 * h)) * (0.5 / h)
    return (f(t + h) - f(t - h)) * (0.5 / h)


def _second_difference(f: Callable[[float], Vec2], t: float, domain: Interval) -> Vec2:
    h = _step(t, _SECOND_FD_STEP)
    if t - h < domain.a:
        return (f(t) - 2.0 * f(t + h) + f(t + 2.0 * h)) * (1.0 / (h * h))
    if t + h > domain.b:
        return (f(t) - 2.0 * f(t - h) + f(t - 2.0 * h)) * (1.0 / (h * h))
    return (f(t + h) - 2.0 * f(t) + f(t - h)) * (1.0 / (h * h))


class ParametricCurve:
    """A plane curve t -> (x(t), y(t)) on a closed interval [a, b].

    Instances are immutable after construction and every method is a pure
    function of t.

    Attributes:
        domain: Parameter interval
        name: Label used in logs, reports and figures
    """

    def __init__(
        self,
        position: PositionFn,
        domain: Interval,
        derivative: Optional[DerivativeFn] = None,
        second_derivative: Optional[DerivativeFn] = None,
        name: str = "curve",
    ) -> None:
        self._position = position
        self._derivative = derivative
        self._second_derivative = second_derivative
        self.domain = domain
        self.name = name

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r}, [{self.domain.a!r}, {self.domain.b!r}])"

    @property
    def has_derivative(self) -> bool:
        return self._derivative is not None

    def check(self, t: float) -> None:
        """Raise CurveDomainError unless a <= t <= b."""
        if not self.domain.contains(t):
            raise CurveDomainError(t, self.domain.a, self.domain.b)

    def point(self, t: float) -> Point2:
        """Position at t.

        Raises:
            CurveDomainError: If t is outside the domain
            NumericError: If the position is not finite
        """
        self.check(t)
        p = self._position(t)
        if not p.is_finite():
            raise NumericError("non-finite position", t)
        return p

    __call__ = point

    def velocity(self, t: float) -> Vec2:
        """First derivative at t, analytic when available."""
        self.check(t)
        if self._derivative is not None:
            return self._derivative(t)
        return _difference(self._position, t, self.domain)

    def acceleration(self, t: float) -> Vec2:
        self.check(t)
        if self._second_derivative is not None:
            return self._second_derivative(t)
        if self._derivative is not None:
            return _difference(self._derivative, t, self.domain)
        return _second_difference(self._position, t, self.domain)

    def speed(self, t: float) -> float:
        return self.velocity(t).norm()

    def restrict(self, a: float, b: float) -> ParametricCurve:
        """The same curve on the parameter interval [a, b]."""
        return ParametricCurve(
            self._position,
            Interval(a, b),
            self._derivative,
            self._second_derivative,
            name=self.name,
        )

    def _probe(self, t: float) -> float:
        """Parameter just inside the domain next to t."""
        return t + EPS_LIMIT if t + EPS_LIMIT <= self.domain.b else t - EPS_LIMIT

    def unit_tangent(self, t: float) -> Vec2:
        """Unit tangent at t.

        Where the speed is at most DELTA_SPEED the one-sided limit is returned,
        taken from the normalized derivative at t + EPS_LIMIT (t - EPS_LIMIT
        at the right endpoint).

        Raises:
            CurveDomainError: If t is outside the domain
            DegenerateCurveError: If the speed also vanishes at the probe point
        """
        v = self.velocity(t)
        length = v.norm()
        if length > DELTA_SPEED:
            return v * (1.0 / length)
        w = self.velocity(self._probe(t))
        probe_length = w.norm()
        if probe_length <= DELTA_SPEED:
            raise DegenerateCurveError(t)
        return w * (1.0 / probe_length)

    def turning_rate(self, t: float) -> float:
        """Angular speed of the unit tangent, d(angle)/dt.

        Positive when the tangent turns counterclockwise.
        """
        if self.speed(t) <= DELTA_SPEED:
            t = self._probe(t)
        v = self.velocity(t)
        return v.cross(self.acceleration(t)) / v.dot(v)


def speed(curve: ParametricCurve, t: float) -> float:
    """Return sqrt(x'(t)^2 + y'(t)^2)."""
    return curve.speed(t)


def unit_tangent(curve: ParametricCurve, t: float) -> Vec2:
    """Return the unit tangent of curve at t (see ParametricCurve.unit_tangent)."""
    return curve.unit_tangent(t)


def arc_length(curve: ParametricCurve, t: float, tol: Optional[float] = None) -> float:
    """Arc length from the start of the domain to t.

    Args:
        curve: Curve to measure
        t: Upper parameter, inside the domain
        tol: Absolute error target; defaults to the configured quad_tol

    Returns:
        s(t), with s(a) == 0

    Raises:
        CurveDomainError: If t is outside the domain
        NumericError: If the speed is not finite somewhere on [a, t]
    """
    if tol is None:
        tol = get_config()["quad_tol"]
    validate_tolerance(tol)
    curve.check(t)
    return adaptive_simpson(curve.speed, curve.domain.a, t, tol)


# ============================================================================
# Arc-length tables
# ============================================================================


def _hermite(
    h: float, s0: float, s1: float, d0: float, d1: float, u: float
) -> float:
    """Cubic Hermite interpolant on a panel of width h at fraction u in [0, 1]."""
    u2 = u * u
    u3 = u2 * u
    return (
        (2.0 * u3 - 3.0 * u2 + 1.0) * s0
        + (u3 - 2.0 * u2 + u) * h * d0
        + (-2.0 * u3 + 3.0 * u2) * s1
        + (u3 - u2) * h * d1
    )


@dataclass(frozen=True)
class ArcLengthTable:
    """Cumulative arc length s(t) of a curve, queryable at any t.

    Between breakpoints s is interpolated by a cubic Hermite polynomial whose
    end slopes are the speeds there. Panels are split until the interpolant
    matches direct quadrature at the panel midpoint, so the whole table meets
    ``tolerance``.

    Attributes:
        source: The measured curve
        breakpoints: Ascending parameters, first a and last b
        cumulative: s at each breakpoint, first entry exactly 0
        speeds: Speed at each breakpoint
        tolerance: Absolute accuracy target
    """

    source: ParametricCurve
    breakpoints: tuple[float, ...]
    cumulative: tuple[float, ...]
    speeds: tuple[float, ...]
    tolerance: float

    INITIAL_PANELS = 16

    @classmethod
    def build(
        cls, curve: ParametricCurve, tol: Optional[float] = None
    ) -> ArcLengthTable:
        """Tabulate the arc length of curve.

        Raises:
            NumericError: If the speed is not finite somewhere on the domain
        """
        if tol is None:
            tol = get_config()["quad_tol"]
        validate_tolerance(tol)

        a, b = curve.domain.a, curve.domain.b
        per_unit = tol / (b - a)
        min_width = 1e-9 * (b - a)
        edges = [float(e) for e in np.linspace(a, b, cls.INITIAL_PANELS + 1)]

        breakpoints = [a]
        cumulative = [0.0]
        speeds = [curve.speed(a)]

        for left_edge, right_edge in zip(edges[:-1], edges[1:]):
            pending = [(left_edge, right_edge)]
            while pending:
                lo, hi = pending.pop()
                mid = 0.5 * (lo + hi)
                panel_tol = per_unit * (hi - lo)
                first = adaptive_simpson(curve.speed, lo, mid, 0.25 * panel_tol)
                second = adaptive_simpson(curve.speed, mid, hi, 0.25 * panel_tol)
                s_lo = speeds[-1]
                s_hi = curve.speed(hi)
                guess = _hermite(hi - lo, 0.0, first + second, s_lo, s_hi, 0.5)

                if abs(guess - first) <= 0.5 * panel_tol or hi - lo <= min_width:
                    breakpoints.append(hi)
                    cumulative.append(cumulative[-1] + max(0.0, first + second))
                    speeds.append(s_hi)
                else:
                    # Left half is popped first, keeping breakpoints ascending
                    pending.append((mid, hi))
                    pending.append((lo, mid))

        logger.debug(
            "arc-length table for %s: %d breakpoints, total %.17g",
            curve.name,
            len(breakpoints),
            cumulative[-1],
        )
        return cls(
            source=curve,
            breakpoints=tuple(breakpoints),
            cumulative=tuple(cumulative),
            speeds=tuple(speeds),
            tolerance=tol,
        )

    @property
    def total(self) -> float:
        """Length of the whole curve."""
        return self.cumulative[-1]

    def length_at(self, t: float) -> float:
        """Arc length s(t) from the start of the domain.

        Raises:
            CurveDomainError: If t is outside the domain
        """
        self.source.check(t)
        i = bisect.bisect_right(self.breakpoints, t) - 1
        i = min(i, len(self.breakpoints) - 2)
        lo, hi = self.breakpoints[i], self.breakpoints[i + 1]
        if t == lo:
            return self.cumulative[i]
        value = _hermite(
            hi - lo,
            self.cumulative[i],
            self.cumulative[i + 1],
            self.speeds[i],
            self.speeds[i + 1],
            (t - lo) / (hi - lo),
        )
        return min(max(value, self.cumulative[i]), self.cumulative[i + 1])

    def length_between(self, t1: float, t2: float) -> float:
        return self.length_at(t2) - self.length_at(t1)


# ============================================================================
# Curve factories
# ============================================================================


def unit_arc(theta: float) -> ParametricCurve:
    """Unit circular arc from A = (cos theta, sin theta) clockwise to (1, 0).

    The arc is x = sin(phi + t), y = cos(phi + t) on [0, theta] with
    phi = pi/2 - theta. It is evaluated as (cos(theta - t), sin(theta - t)),
    which is the same curve and lands exactly on (1, 0) at t = theta.
    """

    def position(t: float) -> Vec2:
        return Vec2(math.cos(theta - t), math.sin(theta - t))

    def derivative(t: float) -> Vec2:
        return Vec2(math.sin(theta - t), -math.cos(theta - t))

    def second_derivative(t: float) -> Vec2:
        return Vec2(-math.cos(theta - t), -math.sin(theta - t))

    return ParametricCurve(
        position, Interval(0.0, theta), derivative, second_derivative, name="AA0"
    )


def circle(
    radius: float = 1.0,
    center: Point2 = ORIGIN,
    phase: float = 0.0,
    turns: int = 1,
) -> ParametricCurve:
    """Counterclockwise circle traversed ``turns`` times from angle ``phase``."""

    def position(t: float) -> Vec2:
        return center + Vec2.polar(radius, t + phase)

    def derivative(t: float) -> Vec2:
        return Vec2(-radius * math.sin(t + phase), radius * math.cos(t + phase))

    def second_derivative(t: float) -> Vec2:
        return Vec2.polar(-radius, t + phase)

    return ParametricCurve(
        position,
        Interval(0.0, 2.0 * math.pi * turns),
        derivative,
        second_derivative,
        name="circle",
    )


def line(start: Point2, end: Point2) -> ParametricCurve:
    """Straight segment from start (t = 0) to end (t = 1)."""
    direction = end - start

    return ParametricCurve(
        lambda t: start + direction * t,
        Interval(0.0, 1.0),
        lambda t: direction,
        lambda t: ORIGIN,
        name="line",
    )


def parabola(a: float = 0.0, b: float = 1.0) -> ParametricCurve:
    """The parabola x = t, y = t^2 / 2 on [a, b]."""
    return ParametricCurve(
        lambda t: Vec2(t, 0.5 * t * t),
        Interval(a, b),
        lambda t: Vec2(1.0, t),
        lambda t: Vec2(0.0, 1.0),
        name="parabola",
    )
