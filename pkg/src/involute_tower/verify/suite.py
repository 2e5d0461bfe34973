"""The verification suite run by ``involute-tower verify``.

Exact checks (symbolic induction, partial-sum identities, orthogonality of
the analytic segments) are independent of the tolerance. Numeric checks
compare the quadrature-built tower with the closed forms and use ``tol``.
"""

from __future__ import annotations

import logging
import math
from typing import Optional, Sequence

import numpy as np

from involute_tower.core.config import get_config
from involute_tower.core.errors import DepthLimitError
from involute_tower.core.models import CheckRecord, InductionReport, VerificationReport
from involute_tower.core.types import Vec2
from involute_tower.core.validators import (
    ValidationError,
    validate_theta,
    validate_tolerance,
)
from involute_tower.curves.involute import InvoluteCurve, InvoluteTower, build_tower
from involute_tower.render.export import tower_checks
from involute_tower.series.analytic import (
    ClosedFormInvolute,
    factorial,
    remainder_bound,
    tower_endpoint,
)
from involute_tower.symbolic.induction import partial_sum_identities, verify_induction

logger = logging.getLogger(__name__)

DEFAULT_MAX_DEPTH = 6
DEFAULT_THETAS = (0.3, 1.0, math.pi / 3)

SAMPLES_PER_LEVEL = 100
ORTHOGONALITY_TOL = 1e-12
TANGENCY_TOL = 1e-6
# Below this string length the segment direction is lost in rounding
MIN_STRING = 1e-9


def _exact(name: str, passed: bool, detail: Optional[str] = None) -> CheckRecord:
    return CheckRecord(
        name=name,
        expected=0.0,
        actual=0.0 if passed else 1.0,
        tolerance=0.0,
        passed=passed,
        detail=detail,
    )


def induction_checks(report: InductionReport, max_depth: int) -> list[CheckRecord]:
    """Records for AA_0 -> AA_1 and each step AA_k -> AA_{k+1} up to max_depth."""
    checks = [_exact("induction AA0 -> AA1", report.base_passed)]
    for step in report.steps:
        if step.k + 1 > max_depth:
            break
        detail = None
        if not step.passed:
            detail = f"expected {step.expected}; got {step.actual}"
        name = f"induction AA{step.k} -> AA{step.k + 1}"
        checks.append(_exact(name, step.passed, detail))
    return checks


def _base_tangent(tower: InvoluteTower, k: int, t: float) -> Vec2:
    """Analytic unit tangent of level k at t."""
    if k == 0:
        theta = tower.theta
        return Vec2(math.sin(theta - t), -math.cos(theta - t))
    return ClosedFormInvolute.for_theta(k, tower.theta).velocity(t).normalized()


def level_checks(tower: InvoluteTower, tol: float) -> list[CheckRecord]:
    """Closed-form agreement, taut-string and tangency checks per level."""
    theta = tower.theta
    grid = [float(t) for t in np.linspace(0.0, theta, SAMPLES_PER_LEVEL)]
    checks = []
    for k in range(1, tower.depth + 1):
        curve = tower.level(k)
        assert isinstance(curve, InvoluteCurve)
        closed = ClosedFormInvolute.for_theta(k, theta)
        base = tower.level(k - 1)

        sample_error = 0.0
        string_error = 0.0
        worst_angle = 0.0
        for t in grid:
            point = curve.point(t)
            sample_error = max(sample_error, point.distance_to(closed.point(t)))

            string = base.point(t) - point
            expected_s = t**k / factorial(k)
            string_error = max(string_error, abs(string.norm() - expected_s))

            if expected_s > MIN_STRING:
                angle = string.angle_to(_base_tangent(tower, k - 1, t))
                worst_angle = max(worst_angle, min(angle, math.pi - angle))

        checks.append(
            CheckRecord.compare(
                f"AA{k} samples vs closed form", 0.0, sample_error, tol
            )
        )
        checks.append(
            CheckRecord.compare(
                f"AA{k} string length = t^{k}/{k}!", 0.0, string_error, tol
            )
        )
        checks.append(
            CheckRecord.compare(
                f"AA{k} string tangent to AA{k - 1}", 0.0, worst_angle, TANGENCY_TOL
            )
        )
    return checks


def convergence_checks(theta: float, depth: int) -> list[CheckRecord]:
    """|A_k - A| within the remainder bound, and orthogonal consecutive segments."""
    target = Vec2(math.cos(theta), math.sin(theta))
    endpoints = [tower_endpoint(k, theta) for k in range(depth + 1)]
    checks = [
        CheckRecord.at_most(
            f"|A{k} - A| <= remainder bound",
            remainder_bound(k, theta),
            endpoints[k].distance_to(target),
        )
        for k in range(depth + 1)
    ]
    for k in range(1, depth):
        before = endpoints[k] - endpoints[k - 1]
        after = endpoints[k + 1] - endpoints[k]
        checks.append(
            CheckRecord.compare(
                f"A{k - 1}A{k} perpendicular to A{k}A{k + 1}",
                0.0,
                before.dot(after),
                ORTHOGONALITY_TOL,
            )
        )
    return checks


def run_verification(
    max_depth: int = DEFAULT_MAX_DEPTH,
    thetas: Sequence[float] = DEFAULT_THETAS,
    tol: Optional[float] = None,
) -> VerificationReport:
    """Run every check of the suite.

    Args:
        max_depth: Deepest tower level checked, at least 1
        thetas: Base arc angles, each in (0, pi/2]
        tol: Tolerance for numeric checks; defaults to the configured check_tol

    Returns:
        Report with one record per check; passed only if all pass

    Raises:
        ValidationError: If an argument is out of range or thetas is empty
        DepthLimitError: If max_depth exceeds the configured maximum
    """
    config = get_config()
    if tol is None:
        tol = config["check_tol"]
    validate_tolerance(tol)
    if max_depth < 1:
        raise ValidationError(f"max-depth must be at least 1, got {max_depth}")
    if max_depth > config["max_depth"]:
        raise DepthLimitError(max_depth, config["max_depth"])
    if not thetas:
        raise ValidationError(
            "at least one theta is needed", ["Pass angles such as 0.3,1.0,pi/3"]
        )
    for theta in thetas:
        validate_theta(theta)

    induction = verify_induction(max(1, max_depth - 1))
    checks = induction_checks(induction, max_depth)
    checks.extend(partial_sum_identities(max_depth))

    for theta in thetas:
        tower = build_tower(theta, max_depth)
        suffix = f" (theta={theta:.6g})"
        theta_checks = (
            tower_checks(tower, tol)
            + level_checks(tower, tol)
            + convergence_checks(theta, max_depth)
        )
        for check in theta_checks:
            checks.append(check.model_copy(update={"name": check.name + suffix}))

    report = VerificationReport(checks=checks)
    for failure in report.failures():
        logger.warning(
            "check failed: %s (expected %r, got %r)",
            failure.name,
            failure.expected,
            failure.actual,
        )
    logger.debug("verification: %d checks, passed=%s", len(checks), report.passed)
    return report
