"""Adaptive Simpson quadrature.

Interval halving with the classical |S_fine - S_coarse| / 15 error estimate
and Richardson correction. Integrands in this package are smooth, so the
recursion stays shallow except near flat points such as t = 0 on the tower
curves.
"""

from __future__ import annotations

import logging
import math
import sys

from involute_tower.core.errors import NumericError
from involute_tower.core.types import ScalarFn

logger = logging.getLogger(__name__)

MAX_DEPTH = 40
"""Halving depth at which a sub-interval is accepted regardless of its estimate."""

_ROUNDOFF = 64 * sys.float_info.epsilon


def _evaluate(f: ScalarFn, u: float) -> float:
    value = f(u)
    if not math.isfinite(value):
        raise NumericError("non-finite integrand", u)
    return value


def adaptive_simpson(
    f: ScalarFn, a: float, b: float, tol: float, max_depth: int = MAX_DEPTH
) -> float:
    """Integrate f over [a, b] to absolute accuracy tol.

    Args:
        f: Integrand
        a: Lower limit
        b: Upper limit (may equal a)
        tol: Absolute error target, must be positive
        max_depth: Maximum number of halvings along any branch

    Returns:
        Approximation of the integral

    Raises:
        NumericError: If the integrand returns NaN or infinity
    """
    if a == b:
        return 0.0
    m = 0.5 * (a + b)
    fa, fm, fb = _evaluate(f, a), _evaluate(f, m), _evaluate(f, b)
    whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0
    return _refine(f, a, b, fa, fm, fb, whole, tol, max_depth)


def _refine(
    f: ScalarFn,
    a: float,
    b: float,
    fa: float,
    fm: float,
    fb: float,
    whole: float,
    tol: float,
    depth: int,
) -> float:
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = _evaluate(f, lm)
    frm = _evaluate(f, rm)
    left = (m - a) * (fa + 4.0 * flm + fm) / 6.0
    right = (b - m) * (fm + 4.0 * frm + fb) / 6.0
    delta = left + right - whole

    # Below roundoff the estimate is noise; further halving cannot help.
    if abs(delta) <= 15.0 * tol or abs(delta) <= _ROUNDOFF * (abs(left) + abs(right)):
        return left + right + delta / 15.0
    if depth <= 0:
        logger.warning(
            "adaptive Simpson hit depth cap on [%r, %r] (estimate %.3g > tol %.3g)",
            a,
            b,
            abs(delta) / 15.0,
            tol,
        )
        return left + right + delta / 15.0

    return _refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) + _refine(
        f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1
    )
