"""Validation utilities for user-facing parameters.

These validators guard the CLI and the tower builders:

- Angle validation (tower angle must lie in (0, pi/2])
- Depth validation (bounded by the configured maximum)
- Sample count and polygon validation
- Angle expression parsing ("pi/3", "2*pi/5", "0.75")
"""

from __future__ import annotations

import math
import re
from typing import Optional

from involute_tower.core.errors import InvoluteError

MIN_SAMPLES = 2
"""Smallest sample count that still includes both domain endpoints."""

MIN_POLYGON_SIDES = 3

_ANGLE_PATTERN = re.compile(r"^(?:(?P<num>\d+)\s*\*\s*)?(?:pi|π)(?:\s*/\s*(?P<den>\d+))?$")


class ValidationError(InvoluteError):
    """Raised when a user-supplied parameter is out of range or malformed."""

    error_type = "VALIDATION"


def parse_angle(text: str) -> float:
    """Parse an angle given as a decimal literal or a multiple of pi.

    Accepted forms: ``1.2``, ``pi``, ``pi/INT``, ``INT*pi/INT`` and ``INT*pi``.

    Args:
        text: Angle expression

    Returns:
        Angle in radians

    Raises:
        ValidationError: If the expression is not understood

    Example:
        >>> parse_angle("pi/3") == math.pi / 3
        True
    """
    cleaned = text.strip().lower()
    match = _ANGLE_PATTERN.match(cleaned)
    if match:
        numerator = int(match.group("num") or 1)
        denominator = int(match.group("den") or 1)
        if denominator == 0:
            raise ValidationError(f"angle '{text}' divides by zero")
        return numerator * math.pi / denominator
    try:
        value = float(cleaned)
    except ValueError:
        raise ValidationError(
            f"cannot parse angle '{text}'",
            ["Use a decimal such as 1.0, or pi, pi/3, 2*pi/5"],
        ) from None
    if not math.isfinite(value):
        raise ValidationError(f"angle '{text}' is not finite")
    return value


def validate_theta(theta: float) -> None:
    """Validate the subtended angle of the tower's base arc.

    Raises:
        ValidationError: If theta is not in (0, pi/2]
    """
    # Tolerate the rounding in expressions such as "pi/2"
    if not (0.0 < theta <= math.pi / 2 + 1e-15):
        raise ValidationError(
            f"theta must lie in (0, pi/2], got {theta!r}",
            ["Pass an angle such as 1.0 or pi/3"],
        )


def validate_depth(depth: int, max_depth: Optional[int] = None) -> None:
    """Validate a tower depth against the configured maximum.

    Raises:
        ValidationError: If depth is negative or exceeds the maximum
    """
    if max_depth is None:
        from involute_tower.core.config import get_config

        max_depth = get_config()["max_depth"]

    if depth < 0:
        raise ValidationError(f"depth must be non-negative, got {depth}")
    if depth > max_depth:
        raise ValidationError(
            f"depth {depth} exceeds the maximum of {max_depth}",
            [f"Use a depth of at most {max_depth}"],
        )


def validate_samples(samples: int) -> None:
    """Validate a sample count.

    Raises:
        ValidationError: If fewer than two samples are requested
    """
    if samples < MIN_SAMPLES:
        raise ValidationError(
            f"at least {MIN_SAMPLES} samples are needed, got {samples}"
        )


def validate_polygon(n: int, side: float) -> None:
    """Validate regular polygon parameters.

    Raises:
        ValidationError: If n < 3 or the side is not a positive finite number
    """
    if n < MIN_POLYGON_SIDES:
        raise ValidationError(f"a polygon needs at least 3 vertices, got {n}")
    if not (math.isfinite(side) and side > 0):
        raise ValidationError(f"side length must be positive, got {side!r}")


def validate_tolerance(tol: float) -> None:
    """Validate a tolerance.

    Raises:
        ValidationError: If tol is not a positive finite number
    """
    if not (math.isfinite(tol) and tol > 0):
        raise ValidationError(f"tolerance must be positive, got {tol!r}")
