"""Tests for the pydantic figure and report models."""

from __future__ import annotations

import math

import pytest
from pydantic import ValidationError

from involute_tower.core.models import (
    CheckRecord,
    FigureSpec,
    InductionReport,
    InductionStepRecord,
    TowerReport,
    VerificationReport,
    ZoomWindow,
)

pytestmark = pytest.mark.unit


class TestFigureSpec:
    """Test figure specification validation."""

    def test_defaults(self) -> None:
        spec = FigureSpec(kind="tower")
        assert spec.theta == 1.0
        assert spec.depth == 4
        assert spec.samples == 200
        assert spec.zoom is None

    def test_rejects_unknown_kind(self) -> None:
        with pytest.raises(ValidationError):
            FigureSpec(kind="spiral")  # type: ignore[arg-type]

    def test_rejects_extra_fields(self) -> None:
        with pytest.raises(ValidationError):
            FigureSpec(kind="tower", colour="red")  # type: ignore[call-arg]

    def test_rejects_too_few_samples(self) -> None:
        with pytest.raises(ValidationError):
            FigureSpec(kind="tower", samples=1)

    def test_rejects_theta_outside_quarter_turn_for_tower(self) -> None:
        with pytest.raises(ValidationError, match="theta"):
            FigureSpec(kind="tower", theta=0.0)
        with pytest.raises(ValidationError, match="theta"):
            FigureSpec(kind="arc-string", theta=2.0)

    def test_theta_is_ignored_for_polygon(self) -> None:
        spec = FigureSpec(kind="polygon", theta=3.0)
        assert spec.n == 5

    def test_at_must_lie_on_the_arc(self) -> None:
        FigureSpec(kind="arc-string", theta=1.0, at=0.5)
        with pytest.raises(ValidationError, match="'at'"):
            FigureSpec(kind="arc-string", theta=1.0, at=1.5)

    def test_is_frozen(self) -> None:
        spec = FigureSpec(kind="tower")
        with pytest.raises(ValidationError):
            spec.depth = 5  # type: ignore[misc]


class TestZoomWindow:
    """Test zoom window validation."""

    def test_valid_window(self) -> None:
        window = ZoomWindow(x0=0.0, y0=0.5, x1=0.5, y1=1.0)
        assert window.x1 - window.x0 == 0.5

    def test_rejects_inverted_window(self) -> None:
        with pytest.raises(ValidationError, match="x0 < x1"):
            ZoomWindow(x0=1.0, y0=0.0, x1=0.0, y1=1.0)


class TestCheckRecord:
    """Test the comparison helpers."""

    def test_compare_within_tolerance(self) -> None:
        record = CheckRecord.compare("x", 1.0, 1.0 + 1e-9, 1e-8)
        assert record.passed
        assert record.tolerance == 1e-8

    def test_compare_outside_tolerance(self) -> None:
        record = CheckRecord.compare("x", 1.0, 1.1, 1e-8, detail="off")
        assert not record.passed
        assert record.detail == "off"

    def test_compare_nan_never_passes(self) -> None:
        assert not CheckRecord.compare("x", 0.0, math.nan, 1.0).passed

    def test_at_most(self) -> None:
        assert CheckRecord.at_most("b", 1.0, 0.5).passed
        assert CheckRecord.at_most("b", 1.0, 1.0).passed
        assert not CheckRecord.at_most("b", 1.0, 1.5).passed


class TestReports:
    """Test report models and their computed pass flags."""

    def test_verification_report_passes_only_if_all_checks_pass(self) -> None:
        good = CheckRecord.compare("good", 0.0, 0.0, 0.0)
        bad = CheckRecord.compare("bad", 0.0, 1.0, 0.0)
        assert VerificationReport(checks=[good]).passed
        report = VerificationReport(checks=[good, bad])
        assert not report.passed
        assert report.failures() == [bad]

    def test_empty_report_passes(self) -> None:
        assert VerificationReport().passed

    def test_passed_is_serialized(self) -> None:
        dumped = VerificationReport(checks=[]).model_dump(mode="json")
        assert dumped == {"checks": [], "passed": True}

    def test_induction_report(self) -> None:
        step = InductionStepRecord(k=1, passed=True, s_degree=2, s_coeff="1/2")
        assert InductionReport(max_k=1, base_passed=True, steps=[step]).passed
        assert not InductionReport(max_k=1, base_passed=False, steps=[step]).passed

    def test_induction_step_requires_positive_k(self) -> None:
        with pytest.raises(ValidationError):
            InductionStepRecord(k=0, passed=True, s_degree=1, s_coeff="1")

    def test_tower_report_json_shape(self) -> None:
        report = TowerReport(
            theta=1.0,
            depth=1,
            endpoints=[(1.0, 0.0), (1.0, 1.0)],
            segment_lengths=[1.0],
            remainder_bounds=[2.0, 1.0],
        )
        dumped = report.model_dump(mode="json")
        assert list(dumped) == [
            "theta",
            "depth",
            "endpoints",
            "segment_lengths",
            "remainder_bounds",
            "checks",
        ]
        assert dumped["endpoints"] == [[1.0, 0.0], [1.0, 1.0]]
