"""Mechanical check that the closed forms of the tower are right.

Level k+1 of the tower is the involute of level k. The check builds each
closed form exactly from the partial sums C_n and S_n, applies the exact
involute operator and compares coefficient by coefficient with the closed
form of level k+1.
"""

from __future__ import annotations

import logging

from involute_tower.core.errors import NotInClosureError
from involute_tower.core.models import CheckRecord, InductionReport, InductionStepRecord
from involute_tower.core.validators import ValidationError
from involute_tower.series.analytic import cos_coefficients, sin_coefficients
from involute_tower.symbolic.poly import RationalPoly, join_terms, monomial_text
from involute_tower.symbolic.trig import (
    TrigPolyCurve,
    arc_length_monomial,
    monomial_speed,
    symbolic_involute,
)

logger = logging.getLogger(__name__)


def verify_induction(max_k: int) -> InductionReport:
    """Check AA_0 -> AA_1 and every step AA_k -> AA_{k+1} for k <= max_k.

    Args:
        max_k: Last level whose involute is checked, at least 1

    Returns:
        Report with one record per step; failed steps carry both curves
    """
    if max_k < 1:
        raise ValidationError(f"max_k must be at least 1, got {max_k}")

    base_passed = symbolic_involute(TrigPolyCurve.unit_arc()) == TrigPolyCurve.from_closed_form(1)
    steps = [_check_step(k) for k in range(1, max_k + 1)]
    report = InductionReport(max_k=max_k, base_passed=base_passed, steps=steps)
    logger.debug("induction up to k=%d: passed=%s", max_k, report.passed)
    return report


def _check_step(k: int) -> InductionStepRecord:
    current = TrigPolyCurve.from_closed_form(k)
    expected = TrigPolyCurve.from_closed_form(k + 1)
    try:
        degree, coeff = arc_length_monomial(current)
        actual = symbolic_involute(current)
    except NotInClosureError as error:
        logger.warning("induction step %d left the trig-polynomial class: %s", k, error)
        return InductionStepRecord(
            k=k,
            passed=False,
            s_degree=-1,
            s_coeff="0",
            expected=str(expected),
            actual=error.message,
        )

    passed = actual == expected
    if not passed:
        logger.warning("induction step %d does not match the closed form", k)
    logger.debug("induction step %d: s(t) = %s*t^%d", k, coeff, degree)
    return InductionStepRecord(
        k=k,
        passed=passed,
        s_degree=degree,
        s_coeff=str(coeff),
        expected=None if passed else str(expected),
        actual=None if passed else str(actual),
    )


def involute_transcript(curve: TrigPolyCurve) -> list[str]:
    """Step-by-step derivation of the involute of curve, one line per fact."""
    velocity = curve.derivative()
    degree, coeff = monomial_speed(curve)
    s_degree, s_coeff = arc_length_monomial(curve)
    result = symbolic_involute(curve)
    return [
        f"> x(t) := {curve.x}",
        f"> y(t) := {curve.y}",
        f"> diff(x(t), t) = {velocity.x}",
        f"> diff(y(t), t) = {velocity.y}",
        f"> speed = {join_terms([(abs(coeff), monomial_text(degree))])}",
        f"> s(t) = {join_terms([(s_coeff, monomial_text(s_degree))])}",
        f"> X(t) = {result.x}",
        f"> Y(t) = {result.y}",
    ]


def partial_sum_identities(n_max: int) -> list[CheckRecord]:
    """Exact checks of C_n' = -S_n and S_n' = C_{n-1} for 1 <= n <= n_max.

    ``actual`` is the number of coefficients that differ, so a passing
    record has actual == expected == 0.
    """
    records = []
    for n in range(1, n_max + 1):
        c_n = RationalPoly(cos_coefficients(n))
        s_n = RationalPoly(sin_coefficients(n))
        c_prev = RationalPoly(cos_coefficients(n - 1))
        for name, left, right in (
            (f"C{n}' = -S{n}", c_n.derivative(), -s_n),
            (f"S{n}' = C{n - 1}", s_n.derivative(), c_prev),
        ):
            difference = left - right
            mismatches = sum(1 for c in difference.coefficients if c != 0)
            records.append(
                CheckRecord(
                    name=name,
                    expected=0.0,
                    actual=float(mismatches),
                    tolerance=0.0,
                    passed=difference.is_zero(),
                )
            )
    return records
