"""Tests for themes and token resolution."""

from __future__ import annotations

import pytest

from involute_tower.ui.design.themes import DarkTheme, LightTheme, Theme
from involute_tower.ui.design.tokens import (
    EmphasisToken,
    PaletteToken,
    StatusToken,
    StrokeToken,
)

pytestmark = pytest.mark.unit


class TestBuiltinThemes:
    """Every built-in theme maps every token."""

    @pytest.mark.parametrize("theme", [LightTheme(), DarkTheme()])
    def test_complete(self, theme: Theme) -> None:
        for token_type in (StrokeToken, PaletteToken, StatusToken, EmphasisToken):
            for token in token_type:
                assert theme.resolve(token)

    def test_light_prints_black_on_white(self) -> None:
        theme = LightTheme()
        assert theme.background == "#ffffff"
        assert theme.resolve(StrokeToken.BASE) == "#000000"

    def test_unknown_token_type(self) -> None:
        with pytest.raises(ValueError, match="Unknown token type"):
            LightTheme().resolve("base")  # type: ignore[arg-type]


class TestColor:
    """Test extracting SVG colors from style strings."""

    def test_plain_color(self) -> None:
        assert LightTheme().color(StrokeToken.STRING) == "#c62828"

    def test_color_after_modifier(self) -> None:
        assert LightTheme().color(StatusToken.FAIL) == "#c62828"

    def test_modifier_only(self) -> None:
        assert LightTheme().color(EmphasisToken.STRONG) == "currentColor"
        assert LightTheme().color(EmphasisToken.NORMAL) == "currentColor"


class TestMergeWith:
    """Test theme inheritance."""

    def test_other_wins(self) -> None:
        override = Theme(
            name="night",
            strokes={StrokeToken.BASE: "#ffffff"},
            palette={},
            statuses={},
            emphases={},
            background="#000000",
        )
        merged = LightTheme().merge_with(override)
        assert merged.name == "night"
        assert merged.extends == "light"
        assert merged.background == "#000000"
        assert merged.resolve(StrokeToken.BASE) == "#ffffff"
        assert merged.resolve(StrokeToken.STRING) == "#c62828"
