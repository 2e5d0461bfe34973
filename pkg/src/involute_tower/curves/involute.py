"""The involute operator and the involute tower of a unit arc.

The involute of a base curve B is traced by the free end of a taut string
peeled off B from the start of its domain:

    I(t) = B(t) - s(t) * T(t)

where s is the arc length of B from a to t and T its unit tangent. Involutes
stay closed over their base (no resampling), and each one keeps the
arc-length table of its base, so iterating the operator costs one table per
level.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from involute_tower.core.config import get_config
from involute_tower.core.errors import DegenerateCurveError, DepthLimitError
from involute_tower.core.types import Point2, Vec2
from involute_tower.core.validators import (
    validate_depth,
    validate_samples,
    validate_theta,
    validate_tolerance,
)
from involute_tower.curves.curve import (
    DELTA_SPEED,
    ArcLengthTable,
    ParametricCurve,
    arc_length,
    unit_arc,
)

logger = logging.getLogger(__name__)


class InvoluteCurve(ParametricCurve):
    """Involute of ``base`` with the string attached at the start of its domain.

    Velocity and tangent come from the base's geometry rather than from
    differencing: I'(t) = -s(t) * w(t) * perp(T(t)), where w is the base's
    tangent turning rate. Consequently the involute's tangent is the base
    tangent rotated by a quarter turn, and this holds at t = a too, where the
    speed vanishes.
    """

    def __init__(
        self, base: ParametricCurve, table: ArcLengthTable, name: Optional[str] = None
    ) -> None:
        super().__init__(
            self._locate, base.domain, name=name or f"involute({base.name})"
        )
        self.base = base
        self.table = table

    def _locate(self, t: float) -> Vec2:
        s = self.table.length_at(t)
        if s == 0.0:
            return self.base.point(t)
        return self.base.point(t) - self.base.unit_tangent(t) * s

    def string_length(self, t: float) -> float:
        """Length of string unwound at t, i.e. the base's arc length s(t)."""
        return self.table.length_at(t)

    def velocity(self, t: float) -> Vec2:
        self.check(t)
        s = self.table.length_at(t)
        if s == 0.0:
            return Vec2(0.0, 0.0)
        omega = self.base.turning_rate(t)
        return self.base.unit_tangent(t).perp() * (-s * omega)

    def speed(self, t: float) -> float:
        self.check(t)
        return self.table.length_at(t) * abs(self.base.turning_rate(t))

    def unit_tangent(self, t: float) -> Vec2:
        self.check(t)
        omega = self.base.turning_rate(t)
        if abs(omega) <= DELTA_SPEED:
            # A straight base unwinds onto a single point
            raise DegenerateCurveError(t)
        rotated = self.base.unit_tangent(t).perp()
        return -rotated if omega > 0 else rotated

    def turning_rate(self, t: float) -> float:
        return self.base.turning_rate(t)

    def string_segment(self, t: float) -> tuple[Point2, Point2]:
        """The taut string at t as (peel-off point on the base, free end)."""
        return self.base.point(t), self.point(t)


def involute(base: ParametricCurve, tol: Optional[float] = None) -> InvoluteCurve:
    """Build the involute of base.

    Args:
        base: Curve to unwind; needs a tangent limit wherever its speed vanishes
        tol: Arc-length tolerance; defaults to the configured quad_tol

    Returns:
        The involute, equal to base(a) at t = a

    Raises:
        NumericError: If the base speed is not finite
    """
    if tol is None:
        tol = get_config()["quad_tol"]
    validate_tolerance(tol)
    return InvoluteCurve(base, ArcLengthTable.build(base, tol))


def sample(curve: ParametricCurve, n: int) -> list[tuple[float, Point2]]:
    """Evaluate curve at n uniformly spaced parameters, endpoints included."""
    validate_samples(n)
    grid = np.linspace(curve.domain.a, curve.domain.b, n)
    return [(float(t), curve.point(float(t))) for t in grid]


# ============================================================================
# Involute tower
# ============================================================================


@dataclass(frozen=True)
class InvoluteTower:
    """The curves AA_0, ..., AA_depth over a unit arc of angle theta.

    AA_0 is the unit arc from A = (cos theta, sin theta) to A_0 = (1, 0) and
    AA_{k+1} is the involute of AA_k. All levels share the domain
    [0, theta] and start at A.
    """

    theta: float
    depth: int
    curves: tuple[ParametricCurve, ...]
    endpoints: tuple[Point2, ...]
    segment_lengths: tuple[float, ...]
    tolerance: float

    @property
    def phi(self) -> float:
        return math.pi / 2 - self.theta

    @property
    def start(self) -> Point2:
        """The shared start point A."""
        return self.curves[0].point(0.0)

    def level(self, k: int) -> ParametricCurve:
        return self.curves[k]

    @property
    def tables(self) -> tuple[ArcLengthTable, ...]:
        """Arc-length tables of levels 0 .. depth - 1, cached in their involutes."""
        tables = []
        for curve in self.curves[1:]:
            assert isinstance(curve, InvoluteCurve)
            tables.append(curve.table)
        return tuple(tables)

    def arc_length(self, k: int, t: float) -> float:
        """Arc length of level k from A to parameter t."""
        if k < self.depth:
            return self.tables[k].length_at(t)
        return arc_length(self.curves[k], t, self.tolerance)


def build_tower(theta: float, depth: int, tol: Optional[float] = None) -> InvoluteTower:
    """Build the involute tower of the unit arc subtending theta.

    Args:
        theta: Angle of the base arc, in (0, pi/2]
        depth: Number of involutes to take
        tol: Arc-length tolerance per level; defaults to the configured quad_tol

    Returns:
        Tower with curves, endpoints A_0..A_depth and segment lengths

    Raises:
        ValidationError: If theta or depth is out of range
        DepthLimitError: If depth exceeds the configured maximum
    """
    config = get_config()
    if tol is None:
        tol = config["quad_tol"]
    validate_theta(theta)
    validate_tolerance(tol)
    if depth > config["max_depth"]:
        raise DepthLimitError(depth, config["max_depth"])
    validate_depth(depth, config["max_depth"])

    curves: list[ParametricCurve] = [unit_arc(theta)]
    for k in range(1, depth + 1):
        base = curves[-1]
        curves.append(InvoluteCurve(base, ArcLengthTable.build(base, tol), name=f"AA{k}"))
        logger.debug("built tower level %d for theta=%r", k, theta)

    endpoints = tuple(curve.point(theta) for curve in curves)
    segments = tuple(
        endpoints[k].distance_to(endpoints[k - 1]) for k in range(1, depth + 1)
    )
    return InvoluteTower(
        theta=theta,
        depth=depth,
        curves=tuple(curves),
        endpoints=endpoints,
        segment_lengths=segments,
        tolerance=tol,
    )
