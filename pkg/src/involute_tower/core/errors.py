"""Error hierarchy for involute-tower.

Every error raised by the library derives from InvoluteError, which carries a
short machine-readable ``error_type``, a human message and a list of
suggestions. The CLI renders these through ``ui.error_formatter``.
"""

from __future__ import annotations

from typing import Optional


class InvoluteError(Exception):
    """Base class for library errors.

    Attributes:
        error_type: Category tag, e.g. "DOMAIN" or "NUMERIC"
        message: Human-readable error message
        suggestions: Possible fixes, may be empty
    """

    error_type = "INVOLUTE"

    def __init__(self, message: str, suggestions: Optional[list[str]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.suggestions = suggestions or []

    def __str__(self) -> str:
        return f"{self.error_type}: {self.message}"


class CurveDomainError(InvoluteError):
    """Parameter lies outside the curve's closed domain."""

    error_type = "DOMAIN"

    def __init__(self, t: float, a: float, b: float) -> None:
        super().__init__(
            f"parameter t={t!r} is outside the domain [{a!r}, {b!r}]",
            [f"Choose t between {a!r} and {b!r}"],
        )
        self.t = t


class DegenerateCurveError(InvoluteError):
    """Speed vanishes on a whole neighborhood, so no tangent exists."""

    error_type = "DEGENERATE"

    def __init__(self, t: float) -> None:
        super().__init__(
            f"curve has no tangent direction near t={t!r} (speed vanishes)",
            ["Check that the curve is not constant on its domain"],
        )
        self.t = t


class NumericError(InvoluteError):
    """A non-finite value appeared inside a numeric routine."""

    error_type = "NUMERIC"

    def __init__(self, message: str, u: float) -> None:
        super().__init__(f"{message} at u={u!r}")
        self.u = u


class DepthLimitError(InvoluteError):
    """Requested tower depth exceeds the configured maximum."""

    error_type = "DEPTH_LIMIT"

    def __init__(self, depth: int, max_depth: int) -> None:
        super().__init__(
            f"tower depth {depth} exceeds the maximum of {max_depth}",
            [
                f"Use a depth of at most {max_depth}",
                "Raise INVOLUTE_TOWER_MAX_DEPTH if you accept the larger numeric error",
            ],
        )
        self.depth = depth
        self.max_depth = max_depth


class NotInClosureError(InvoluteError):
    """A trig-polynomial curve whose derivative is not a monomial times a unit frame."""

    error_type = "NOT_IN_CLOSURE"


class ClosedFormError(InvoluteError):
    """Closed-form involute requested for a level that has none."""

    error_type = "CLOSED_FORM"
