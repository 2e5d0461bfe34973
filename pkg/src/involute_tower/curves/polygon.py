"""Involutes of regular polygons.

Unwinding a string from a regular n-gon traces circular arcs only: while the
string pivots about one vertex its free end moves on a circle centered there,
and each time it leaves a side the radius grows by the side length. The
involute is therefore a chain of arcs of radii a, 2a, 3a, ..., each sweeping
the exterior angle 2*pi/n.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from involute_tower.core.types import ORIGIN, Interval, Point2, Vec2
from involute_tower.core.validators import ValidationError, validate_polygon
from involute_tower.curves.curve import ParametricCurve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegularPolygon:
    """Regular n-gon with side length ``side``, vertices counterclockwise.

    Attributes:
        n: Vertex count
        side: Side length a
        center: Circumcenter
        first_angle: Polar angle of vertex 0 about the center. Defaults to
            pi/2 - 2*pi/n, which for a pentagon puts vertex 0 at 18 degrees
            with one vertex straight up.
    """

    n: int
    side: float
    center: Point2 = ORIGIN
    first_angle: Optional[float] = None

    def __post_init__(self) -> None:
        validate_polygon(self.n, self.side)

    @property
    def circumradius(self) -> float:
        return self.side / (2.0 * math.sin(math.pi / self.n))

    @property
    def exterior_angle(self) -> float:
        return 2.0 * math.pi / self.n

    @property
    def vertices(self) -> tuple[Point2, ...]:
        start = (
            self.first_angle
            if self.first_angle is not None
            else math.pi / 2 - self.exterior_angle
        )
        return tuple(
            self.center + Vec2.polar(self.circumradius, start + i * self.exterior_angle)
            for i in range(self.n)
        )


@dataclass(frozen=True)
class CircularArc:
    """Arc of a circle swept from start_angle to end_angle.

    end_angle < start_angle means the arc is traversed clockwise.
    """

    center: Point2
    radius: float
    start_angle: float
    end_angle: float

    @property
    def sweep(self) -> float:
        return self.end_angle - self.start_angle

    @property
    def length(self) -> float:
        return self.radius * abs(self.sweep)

    def point_at(self, angle: float) -> Point2:
        return self.center + Vec2.polar(self.radius, angle)

    @property
    def start_point(self) -> Point2:
        return self.point_at(self.start_angle)

    @property
    def end_point(self) -> Point2:
        return self.point_at(self.end_angle)

    def tangent_at(self, angle: float) -> Vec2:
        """Unit direction of travel at the given polar angle."""
        radial = Vec2.polar(1.0, angle)
        return radial.perp() if self.sweep >= 0 else -radial.perp()


@dataclass(frozen=True)
class PiecewiseArcCurve:
    """Chain of circular arcs traversed in order."""

    arcs: tuple[CircularArc, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.arcs)

    @property
    def junctions(self) -> tuple[Point2, ...]:
        """Points where arc i ends and arc i + 1 begins."""
        return tuple(arc.end_point for arc in self.arcs[:-1])

    @property
    def start_point(self) -> Point2:
        return self.arcs[0].start_point

    @property
    def end_point(self) -> Point2:
        return self.arcs[-1].end_point

    def tangent_at_start(self, i: int) -> Vec2:
        arc = self.arcs[i]
        return arc.tangent_at(arc.start_angle)

    def tangent_at_end(self, i: int) -> Vec2:
        arc = self.arcs[i]
        return arc.tangent_at(arc.end_angle)

    def sample(self, per_arc: int) -> list[tuple[int, Point2]]:
        """Points along every arc as (arc index, point), per_arc per arc."""
        if per_arc < 2:
            raise ValidationError(f"at least 2 samples per arc are needed, got {per_arc}")
        samples: list[tuple[int, Point2]] = []
        for i, arc in enumerate(self.arcs):
            for angle in np.linspace(arc.start_angle, arc.end_angle, per_arc):
                samples.append((i, arc.point_at(float(angle))))
        return samples

    def arc_as_curve(self, i: int) -> ParametricCurve:
        """Arc i as a ParametricCurve parametrized by the swept angle."""
        arc = self.arcs[i]
        direction = 1.0 if arc.sweep >= 0 else -1.0
        radius, start = arc.radius, arc.start_angle

        def position(u: float) -> Vec2:
            return arc.point_at(start + direction * u)

        def derivative(u: float) -> Vec2:
            return Vec2.polar(radius, start + direction * u).perp() * direction

        return ParametricCurve(
            position, Interval(0.0, abs(arc.sweep)), derivative, name=f"arc{i + 1}"
        )


def polygon_involute(
    poly: RegularPolygon,
    turns: int = 1,
    clockwise: bool = True,
    start_vertex: int = 0,
) -> PiecewiseArcCurve:
    """Involute of a regular polygon with the string's free end at a vertex.

    The string lies along the polygon with its free end at ``start_vertex``.
    Arc k (1-based) is centered at the k-th vertex the string leaves and has
    radius k * side.

    Args:
        poly: The polygon
        turns: Number of full trips around the polygon
        clockwise: Unwind clockwise (centers V_{n-1}, V_{n-2}, ...) or
            counterclockwise (centers V_1, V_2, ...)
        start_vertex: Index of the vertex holding the free end

    Returns:
        Chain of n * turns arcs
    """
    if turns < 1:
        raise ValidationError(f"turns must be at least 1, got {turns}")
    vertices = poly.vertices
    step = -1 if clockwise else 1
    sweep = step * poly.exterior_angle

    def center(k: int) -> Point2:
        return vertices[(start_vertex + step * k) % poly.n]

    arcs: list[CircularArc] = []
    start_angle = (vertices[start_vertex % poly.n] - center(1)).angle()
    for k in range(1, poly.n * turns + 1):
        end_angle = start_angle + sweep
        arcs.append(CircularArc(center(k), k * poly.side, start_angle, end_angle))
        # The next arc leaves along the same ray, so the angle carries over
        start_angle = end_angle

    logger.debug("polygon involute: n=%d, %d arcs", poly.n, len(arcs))
    return PiecewiseArcCurve(tuple(arcs))


def arc_chain_length(curve: PiecewiseArcCurve) -> float:
    """Total length of the chain, sum of radius * |sweep|."""
    return sum(arc.length for arc in curve.arcs)
