"""Tests for the numeric configuration."""

from __future__ import annotations

import pytest

from involute_tower.core.config import get_config, get_numeric_config, reset_config

pytestmark = pytest.mark.unit


class TestNumericConfig:
    """Test environment-driven configuration."""

    def test_defaults(self) -> None:
        config = get_numeric_config()
        assert config["quad_tol"] == 1e-10
        assert config["check_tol"] == 1e-7
        assert config["max_depth"] == 12

    def test_environment_overrides(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("INVOLUTE_TOWER_TOL", "1e-12")
        monkeypatch.setenv("INVOLUTE_TOWER_CHECK_TOL", "1e-6")
        monkeypatch.setenv("INVOLUTE_TOWER_MAX_DEPTH", "8")
        config = get_numeric_config()
        assert config["quad_tol"] == 1e-12
        assert config["check_tol"] == 1e-6
        assert config["max_depth"] == 8

    def test_get_config_is_cached_until_reset(
        self, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        first = get_config()
        monkeypatch.setenv("INVOLUTE_TOWER_MAX_DEPTH", "5")
        assert get_config() is first
        assert get_config()["max_depth"] == 12

        reset_config()
        assert get_config()["max_depth"] == 5
