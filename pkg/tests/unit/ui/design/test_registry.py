"""Tests for the theme registry."""

from __future__ import annotations

import pytest

from involute_tower.ui.design.registry import ThemeRegistry, theme_registry
from involute_tower.ui.design.themes import LightTheme
from involute_tower.ui.design.tokens import StrokeToken

pytestmark = pytest.mark.unit


@pytest.fixture
def registry() -> ThemeRegistry:
    return ThemeRegistry()


class TestThemeRegistry:
    """Test registration and switching."""

    def test_light_is_current_by_default(self, registry: ThemeRegistry) -> None:
        assert registry.get_current().name == "light"
        assert registry.list_themes() == ["dark", "light"]

    def test_set_current(self, registry: ThemeRegistry) -> None:
        registry.set_current("dark")
        assert registry.get_current().name == "dark"
        assert registry.resolve(StrokeToken.BASE) == "#eceff1"

    def test_set_unknown(self, registry: ThemeRegistry) -> None:
        with pytest.raises(KeyError):
            registry.set_current("sepia")

    def test_duplicate_registration(self, registry: ThemeRegistry) -> None:
        with pytest.raises(ValueError, match="already registered"):
            registry.register(LightTheme())

    def test_get_theme(self, registry: ThemeRegistry) -> None:
        assert registry.get_theme("dark").background == "#212121"
        with pytest.raises(KeyError):
            registry.get_theme("sepia")

    def test_global_registry_starts_light(self) -> None:
        assert theme_registry.get_current().name == "light"
