"""Numeric configuration for involute-tower.

Runtime tolerances and limits are read from environment variables into a
TypedDict. Every setting has a default, so no variable is required.
"""

from __future__ import annotations

import os
from typing import TypedDict


class NumericConfig(TypedDict):
    """Numeric tolerances and limits."""

    quad_tol: float
    """Absolute tolerance for arc-length quadrature.

    Default: 1e-10
    """

    check_tol: float
    """Tolerance used by the verification suite for numeric comparisons.

    Default: 1e-7
    """

    max_depth: int
    """Deepest involute tower that may be built.

    Numeric error grows roughly linearly with depth.
    Default: 12
    """


def get_numeric_config() -> NumericConfig:
    """Get numeric configuration from environment variables.

    Environment Variables:
        INVOLUTE_TOWER_TOL: Quadrature tolerance (default: 1e-10)

        INVOLUTE_TOWER_CHECK_TOL: Verification tolerance (default: 1e-7)

        INVOLUTE_TOWER_MAX_DEPTH: Maximum tower depth (default: 12)

    Returns:
        NumericConfig with settings from environment or defaults

    Example:
        >>> os.environ['INVOLUTE_TOWER_MAX_DEPTH'] = '8'
        >>> get_numeric_config()['max_depth']
        8
    """
    return NumericConfig(
        quad_tol=float(os.getenv("INVOLUTE_TOWER_TOL", "1e-10")),
        check_tol=float(os.getenv("INVOLUTE_TOWER_CHECK_TOL", "1e-7")),
        max_depth=int(os.getenv("INVOLUTE_TOWER_MAX_DEPTH", "12")),
    )


# Global config instance (cached)
_numeric_config: NumericConfig | None = None


def get_config() -> NumericConfig:
    """Get global numeric config (cached).

    The environment is read on first call only.

    Returns:
        Cached NumericConfig instance
    """
    global _numeric_config
    if _numeric_config is None:
        _numeric_config = get_numeric_config()
    return _numeric_config


def reset_config() -> None:
    """Reset cached configuration.

    Mostly useful in tests that change environment variables.
    """
    global _numeric_config
    _numeric_config = None
