"""Core value types for plane curves.

This module defines the small immutable values every other module passes
around:

- Vec2: a plane vector with the handful of operations the curve code needs
- Point2: alias of Vec2 used where a value denotes a location
- Interval: a closed parameter interval [a, b] with a < b
- Function aliases for position and derivative maps
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable


@dataclass(frozen=True)
class Vec2:
    """Plane vector (x, y)."""

    x: float
    y: float

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, scalar: float) -> Vec2:
        return Vec2(self.x * scalar, self.y * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def dot(self, other: Vec2) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Vec2) -> float:
        """z-component of the 3D cross product."""
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def perp(self) -> Vec2:
        """Rotate by +90 degrees."""
        return Vec2(-self.y, self.x)

    def normalized(self) -> Vec2:
        length = self.norm()
        return Vec2(self.x / length, self.y / length)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)

    def angle_to(self, other: Vec2) -> float:
        """Unsigned angle between two nonzero vectors, in [0, pi]."""
        return abs(math.atan2(self.cross(other), self.dot(other)))

    def distance_to(self, other: Vec2) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)

    @classmethod
    def polar(cls, radius: float, angle: float) -> Vec2:
        return cls(radius * math.cos(angle), radius * math.sin(angle))


Point2 = Vec2
"""A Vec2 that denotes a location rather than a displacement."""

ORIGIN = Vec2(0.0, 0.0)


@dataclass(frozen=True)
class Interval:
    """Closed parameter interval [a, b]."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError(f"Interval bounds must be finite, got [{self.a}, {self.b}]")
        if not self.a < self.b:
            raise ValueError(f"Interval requires a < b, got [{self.a}, {self.b}]")

    @property
    def length(self) -> float:
        return self.b - self.a

    def contains(self, t: float) -> bool:
        return self.a <= t <= self.b


PositionFn = Callable[[float], Vec2]
"""Map from parameter t to a point on the curve."""

DerivativeFn = Callable[[float], Vec2]
"""Map from parameter t to a derivative vector."""

ScalarFn = Callable[[float], float]
"""Real-valued function of the curve parameter."""

