"""Verification suite combining the exact and numeric checks."""

from involute_tower.verify.suite import (
    DEFAULT_MAX_DEPTH,
    DEFAULT_THETAS,
    convergence_checks,
    induction_checks,
    level_checks,
    run_verification,
)

__all__ = [
    "DEFAULT_MAX_DEPTH",
    "DEFAULT_THETAS",
    "convergence_checks",
    "induction_checks",
    "level_checks",
    "run_verification",
]
