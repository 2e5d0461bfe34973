"""Test configuration and auto-marking for pytest."""

from __future__ import annotations

from collections.abc import Iterator

import pytest

from involute_tower.core.config import reset_config
from involute_tower.ui.design.registry import theme_registry


def pytest_collection_modifyitems(config, items):
    """Auto-mark tests based on their location."""
    for item in items:
        path = str(item.fspath)

        # Path-based markers
        if "tests/unit" in path:
            item.add_marker(pytest.mark.unit)
        elif "tests/integration" in path:
            item.add_marker(pytest.mark.integration)

        # Component-based markers
        if "/curves/" in path:
            item.add_marker(pytest.mark.curves)
        elif "/series/" in path:
            item.add_marker(pytest.mark.series)
        elif "/symbolic/" in path:
            item.add_marker(pytest.mark.symbolic)
        elif "/render/" in path:
            item.add_marker(pytest.mark.render)
        elif "/design/" in path:
            item.add_marker(pytest.mark.design)
        elif "test_cli" in path:
            item.add_marker(pytest.mark.cli)


@pytest.fixture(autouse=True)
def clean_state(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Fresh numeric config and the light theme for every test."""
    for name in (
        "INVOLUTE_TOWER_TOL",
        "INVOLUTE_TOWER_CHECK_TOL",
        "INVOLUTE_TOWER_MAX_DEPTH",
        "INVOLUTE_TOWER_THEME",
    ):
        monkeypatch.delenv(name, raising=False)
    reset_config()
    theme_registry.set_current("light")
    yield
    reset_config()
    theme_registry.set_current("light")
