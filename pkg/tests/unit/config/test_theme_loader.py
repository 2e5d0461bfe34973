"""Tests for YAML theme loading."""

from __future__ import annotations

from pathlib import Path

import pytest

from involute_tower.config import theme_loader
from involute_tower.config.theme_loader import (
    ThemeLoadError,
    apply_theme,
    initialize_themes,
    load_theme_from_yaml,
    load_user_themes,
    register_user_themes,
)
from involute_tower.ui.design.registry import ThemeRegistry
from involute_tower.ui.design.themes import DarkTheme, LightTheme
from involute_tower.ui.design.tokens import PaletteToken, StatusToken, StrokeToken

pytestmark = pytest.mark.unit

THEMES_DIR = Path(__file__).resolve().parents[3] / "config" / "themes"


@pytest.fixture
def registry(monkeypatch: pytest.MonkeyPatch) -> ThemeRegistry:
    """A private registry, so loaded themes do not leak between tests."""
    fresh = ThemeRegistry()
    monkeypatch.setattr(theme_loader, "theme_registry", fresh)
    return fresh


def write(directory: Path, name: str, text: str) -> Path:
    path = directory / name
    path.write_text(text, encoding="utf-8")
    return path


class TestBundledThemes:
    """The shipped YAML files agree with the built-in themes."""

    @pytest.mark.parametrize("theme_class", [LightTheme, DarkTheme])
    def test_matches_builtin(self, registry: ThemeRegistry, theme_class: type) -> None:
        builtin = theme_class()
        loaded = load_theme_from_yaml(THEMES_DIR / f"{builtin.name}.yaml")
        assert loaded.strokes == builtin.strokes
        assert loaded.palette == builtin.palette
        assert loaded.statuses == builtin.statuses
        assert loaded.emphases == builtin.emphases
        assert loaded.background == builtin.background

    def test_blueprint_extends_dark(self, registry: ThemeRegistry) -> None:
        theme = load_theme_from_yaml(THEMES_DIR / "blueprint.yaml")
        assert theme.name == "blueprint"
        assert theme.extends == "dark"
        assert theme.background == "#0d2b52"
        assert theme.resolve(StrokeToken.BASE) == "#ffffff"
        assert theme.resolve(PaletteToken.LEVEL_1) == "#64b5f6"


class TestLoadThemeFromYaml:
    """Test validation of theme files."""

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(FileNotFoundError):
            load_theme_from_yaml(tmp_path / "nope.yaml")

    def test_invalid_yaml(self, tmp_path: Path) -> None:
        path = write(tmp_path, "bad.yaml", "name: [unclosed\n")
        with pytest.raises(ThemeLoadError, match="Invalid YAML"):
            load_theme_from_yaml(path)

    def test_not_a_mapping(self, tmp_path: Path) -> None:
        path = write(tmp_path, "list.yaml", "- a\n- b\n")
        with pytest.raises(ThemeLoadError, match="must contain a dictionary"):
            load_theme_from_yaml(path)

    def test_missing_name(self, tmp_path: Path) -> None:
        path = write(tmp_path, "anon.yaml", "extends: light\n")
        with pytest.raises(ThemeLoadError, match="missing required 'name'"):
            load_theme_from_yaml(path)

    def test_unknown_parent(self, tmp_path: Path, registry: ThemeRegistry) -> None:
        path = write(tmp_path, "orphan.yaml", "name: orphan\nextends: sepia\n")
        with pytest.raises(ThemeLoadError, match="Parent theme 'sepia' not found"):
            load_theme_from_yaml(path)

    def test_unknown_token(self, tmp_path: Path, registry: ThemeRegistry) -> None:
        path = write(
            tmp_path, "odd.yaml", "name: odd\nextends: light\nstrokes:\n  fill: red\n"
        )
        with pytest.raises(ThemeLoadError, match="Unknown strokes token: fill"):
            load_theme_from_yaml(path)

    def test_section_must_be_mapping(
        self, tmp_path: Path, registry: ThemeRegistry
    ) -> None:
        path = write(tmp_path, "flat.yaml", "name: flat\nextends: light\nstrokes: red\n")
        with pytest.raises(ThemeLoadError, match="must be a dictionary"):
            load_theme_from_yaml(path)

    def test_standalone_theme_must_be_complete(self, tmp_path: Path) -> None:
        path = write(tmp_path, "partial.yaml", "name: partial\nstrokes:\n  base: red\n")
        with pytest.raises(ThemeLoadError, match="Missing strokes token"):
            load_theme_from_yaml(path)

    def test_partial_override(self, tmp_path: Path, registry: ThemeRegistry) -> None:
        path = write(
            tmp_path,
            "warm.yaml",
            "name: warm\nextends: light\nstatuses:\n  pass: '#558b2f'\n",
        )
        theme = load_theme_from_yaml(path)
        assert theme.resolve(StatusToken.PASS) == "#558b2f"
        assert theme.resolve(StatusToken.FAIL) == "bold #c62828"
        assert theme.background == "#ffffff"


class TestUserThemes:
    """Test discovery, registration and activation."""

    def test_missing_directory(self, tmp_path: Path) -> None:
        assert load_user_themes(tmp_path / "absent") == []

    def test_bad_files_are_skipped(
        self,
        tmp_path: Path,
        registry: ThemeRegistry,
        caplog: pytest.LogCaptureFixture,
    ) -> None:
        write(tmp_path, "a_good.yaml", "name: good\nextends: dark\n")
        write(tmp_path, "b_bad.yaml", "name: [\n")
        themes = load_user_themes(tmp_path)
        assert [theme.name for theme in themes] == ["good"]
        assert "Failed to load theme" in caplog.text

    def test_register_and_apply(self, tmp_path: Path, registry: ThemeRegistry) -> None:
        write(tmp_path, "mine.yaml", "name: mine\nextends: dark\n")
        register_user_themes(tmp_path)
        apply_theme("mine")
        assert registry.get_current().name == "mine"

    def test_duplicate_user_theme_is_logged(
        self,
        tmp_path: Path,
        registry: ThemeRegistry,
        caplog: pytest.LogCaptureFixture,
    ) -> None:
        write(tmp_path, "light.yaml", "name: light\nextends: dark\n")
        register_user_themes(tmp_path)
        assert "already registered" in caplog.text
        assert registry.get_theme("light").background == "#ffffff"

    def test_apply_unknown(self, registry: ThemeRegistry) -> None:
        with pytest.raises(ThemeLoadError) as exc_info:
            apply_theme("sepia")
        assert "Available themes: dark, light" in exc_info.value.suggestions

    def test_apply_from_environment(
        self, registry: ThemeRegistry, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv("INVOLUTE_TOWER_THEME", "dark")
        apply_theme()
        assert registry.get_current().name == "dark"

    def test_apply_nothing(self, registry: ThemeRegistry) -> None:
        apply_theme()
        assert registry.get_current().name == "light"

    def test_initialize_reads_home(
        self,
        tmp_path: Path,
        registry: ThemeRegistry,
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        monkeypatch.setenv("HOME", str(tmp_path))
        themes_dir = tmp_path / ".involute-tower" / "themes"
        themes_dir.mkdir(parents=True)
        write(themes_dir, "paper.yaml", "name: paper\nextends: light\n")
        initialize_themes("paper")
        assert registry.get_current().name == "paper"
