"""Data models for figures and reports.

Pydantic v2 models shared by the CLI, the renderer and the verification suite.
All models derive from StrictModel, so unknown fields are rejected and
``model_dump(mode="json")`` gives the exact structure written to disk.
"""

from __future__ import annotations

import math
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

FigureKind = Literal["arc-string", "circle-involute", "tower", "polygon"]
"""Figures the renderer knows how to draw."""


class StrictModel(BaseModel):
    """Base model with strict validation enabled."""

    model_config = ConfigDict(
        strict=True,
        frozen=True,
        extra="forbid",
    )


# ============================================================================
# Figure Specification
# ============================================================================


class ZoomWindow(StrictModel):
    """Rectangle of the mathematical plane shown by a zoomed figure."""

    x0: float
    y0: float
    x1: float
    y1: float

    @model_validator(mode="after")
    def validate_corners(self) -> ZoomWindow:
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError(
                f"zoom window needs x0 < x1 and y0 < y1, got "
                f"({self.x0}, {self.y0}, {self.x1}, {self.y1})"
            )
        return self


class FigureSpec(StrictModel):
    """Everything needed to draw one figure.

    Only the parameters relevant to ``kind`` are read; the others keep their
    defaults.
    """

    kind: FigureKind = Field(description="Figure kind")
    theta: float = Field(default=1.0, description="Subtended angle of the base arc")
    depth: int = Field(default=4, ge=0, description="Number of involute levels")
    n: int = Field(default=5, ge=3, description="Polygon vertex count")
    side: float = Field(default=1.0, gt=0, description="Polygon side length")
    turns: int = Field(default=1, ge=1, description="Trips around the polygon")
    samples: int = Field(default=200, ge=2, description="Samples per curve")
    at: Optional[float] = Field(
        default=None, description="String parameter for the arc-string figure"
    )
    width: float = Field(default=640.0, gt=0, description="Viewport width")
    height: float = Field(default=640.0, gt=0, description="Viewport height")
    zoom: Optional[ZoomWindow] = Field(default=None, description="Zoomed region")

    @model_validator(mode="after")
    def validate_theta(self) -> FigureSpec:
        """Reject angles outside (0, pi/2] for figures built on the unit arc."""
        if self.kind in ("tower", "arc-string") and not (
            0.0 < self.theta <= math.pi / 2 + 1e-15
        ):
            raise ValueError(f"theta must lie in (0, pi/2], got {self.theta!r}")
        if self.at is not None and not (0.0 <= self.at <= self.theta):
            raise ValueError(f"'at' must lie in [0, theta], got {self.at!r}")
        return self


# ============================================================================
# Verification Reports
# ============================================================================


class CheckRecord(StrictModel):
    """Outcome of comparing one computed value against its expectation."""

    name: str
    expected: float
    actual: float
    tolerance: float
    passed: bool
    detail: Optional[str] = None

    @classmethod
    def compare(
        cls,
        name: str,
        expected: float,
        actual: float,
        tolerance: float,
        detail: Optional[str] = None,
    ) -> CheckRecord:
        """Build a record that passes when |expected - actual| <= tolerance."""
        error = abs(expected - actual)
        return cls(
            name=name,
            expected=float(expected),
            actual=float(actual),
            tolerance=float(tolerance),
            passed=math.isfinite(error) and error <= tolerance,
            detail=detail,
        )

    @classmethod
    def at_most(
        cls,
        name: str,
        bound: float,
        actual: float,
        detail: Optional[str] = None,
    ) -> CheckRecord:
        """Build a record that passes when actual <= bound."""
        return cls(
            name=name,
            expected=float(bound),
            actual=float(actual),
            tolerance=0.0,
            passed=math.isfinite(actual) and actual <= bound,
            detail=detail,
        )


class VerificationReport(StrictModel):
    """All checks run by one verification pass."""

    checks: list[CheckRecord] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[CheckRecord]:
        return [check for check in self.checks if not check.passed]


class InductionStepRecord(StrictModel):
    """One transition AA_k -> AA_{k+1} of the symbolic induction."""

    k: int = Field(ge=1)
    passed: bool
    s_degree: int = Field(description="Degree of the arc-length monomial s(t)")
    s_coeff: str = Field(description="Exact coefficient of s(t), e.g. '1/24'")
    expected: Optional[str] = Field(
        default=None, description="Expected closed form, set when the step fails"
    )
    actual: Optional[str] = Field(
        default=None, description="Computed involute, set when the step fails"
    )


class InductionReport(StrictModel):
    """Step-by-step record of the symbolic induction up to max_k."""

    max_k: int = Field(ge=1)
    base_passed: bool = Field(description="AA_0 -> AA_1 matches the first closed form")
    steps: list[InductionStepRecord] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.base_passed and all(step.passed for step in self.steps)


# ============================================================================
# Output Reports
# ============================================================================


class TowerReport(StrictModel):
    """JSON document written by the ``tower`` command."""

    theta: float
    depth: int
    endpoints: list[tuple[float, float]]
    segment_lengths: list[float]
    remainder_bounds: list[float]
    checks: list[CheckRecord] = Field(default_factory=list)


class SampleRecord(StrictModel):
    """One sampled point; ``level`` is the tower level or arc index."""

    level: int
    t: float
    x: float
    y: float


class CurveReport(StrictModel):
    """JSON document written by the ``involute`` command."""

    curve: str
    domain: tuple[float, float]
    base: list[SampleRecord]
    involute: list[SampleRecord]


class ArcRecord(StrictModel):
    center: tuple[float, float]
    radius: float
    start_angle: float
    end_angle: float


class PolygonReport(StrictModel):
    """JSON document written by the ``polygon`` command."""

    n: int
    side: float
    turns: int
    vertices: list[tuple[float, float]]
    arcs: list[ArcRecord]
    junctions: list[tuple[float, float]]
    chain_length: float
