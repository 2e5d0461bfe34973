"""Themes mapping design tokens to colors and styles.

Stroke and palette tokens resolve to hex colors usable in SVG. Status and
emphasis tokens resolve to rich style strings, which may contain a hex color
("bold #c62828").
"""

from __future__ import annotations

from typing import Optional, Union

from .tokens import EmphasisToken, PaletteToken, StatusToken, StrokeToken

Token = Union[StrokeToken, PaletteToken, StatusToken, EmphasisToken]


class Theme:
    """Maps every design token to a color or style string.

    Themes inherit through merge_with: the other theme's values win.
    """

    def __init__(
        self,
        name: str,
        strokes: dict[StrokeToken, str],
        palette: dict[PaletteToken, str],
        statuses: dict[StatusToken, str],
        emphases: dict[EmphasisToken, str],
        extends: Optional[str] = None,
        background: str = "#ffffff",
    ) -> None:
        self.name = name
        self.strokes = strokes
        self.palette = palette
        self.statuses = statuses
        self.emphases = emphases
        self.extends = extends
        self.background = background

    def resolve(self, token: Token) -> str:
        """Resolve any token to its style string.

        Raises:
            KeyError: If the token is not mapped by this theme
            ValueError: If the token type is unknown
        """
        if isinstance(token, StrokeToken):
            return self.strokes[token]
        elif isinstance(token, PaletteToken):
            return self.palette[token]
        elif isinstance(token, StatusToken):
            return self.statuses[token]
        elif isinstance(token, EmphasisToken):
            return self.emphases[token]
        else:
            raise ValueError(f"Unknown token type: {type(token)}")

    def color(self, token: Token) -> str:
        """The color part of a resolved style, for SVG attributes.

        "bold #c62828" gives "#c62828"; a style without a color gives
        "currentColor".
        """
        for part in self.resolve(token).split():
            if part.startswith("#") or part not in _MODIFIERS:
                return part
        return "currentColor"

    def merge_with(self, other: Theme) -> Theme:
        """Return a new theme with other's values taking precedence."""
        return Theme(
            name=other.name,
            strokes={**self.strokes, **other.strokes},
            palette={**self.palette, **other.palette},
            statuses={**self.statuses, **other.statuses},
            emphases={**self.emphases, **other.emphases},
            extends=self.name,
            background=other.background,
        )


_MODIFIERS = frozenset({"bold", "dim", "italic", "underline", "default"})


class LightTheme(Theme):
    """Black curves on white with red strings, like a printed figure."""

    def __init__(self) -> None:
        super().__init__(
            name="light",
            strokes={
                StrokeToken.BASE: "#000000",
                StrokeToken.INVOLUTE: "#1f4e9c",
                StrokeToken.STRING: "#c62828",
                StrokeToken.SEGMENT: "#c62828",
                StrokeToken.OUTLINE: "#000000",
                StrokeToken.LABEL: "#212121",
                StrokeToken.CONSTRUCTION: "#757575",
            },
            palette={
                PaletteToken.LEVEL_1: "#1f4e9c",
                PaletteToken.LEVEL_2: "#2e7d32",
                PaletteToken.LEVEL_3: "#6a1b9a",
                PaletteToken.LEVEL_4: "#ef6c00",
                PaletteToken.LEVEL_5: "#00838f",
                PaletteToken.LEVEL_6: "#ad1457",
            },
            statuses={
                StatusToken.PASS: "#2e7d32",
                StatusToken.FAIL: "bold #c62828",
                StatusToken.WARNING: "#ef6c00",
                StatusToken.INFO: "#1f4e9c",
                StatusToken.MUTED: "#757575",
            },
            emphases={
                EmphasisToken.STRONG: "bold",
                EmphasisToken.NORMAL: "default",
                EmphasisToken.SUBTLE: "dim",
            },
            background="#ffffff",
        )


class DarkTheme(Theme):
    """Light strokes on a dark background."""

    def __init__(self) -> None:
        super().__init__(
            name="dark",
            strokes={
                StrokeToken.BASE: "#eceff1",
                StrokeToken.INVOLUTE: "#64b5f6",
                StrokeToken.STRING: "#ef5350",
                StrokeToken.SEGMENT: "#ef5350",
                StrokeToken.OUTLINE: "#eceff1",
                StrokeToken.LABEL: "#e0e0e0",
                StrokeToken.CONSTRUCTION: "#9e9e9e",
            },
            palette={
                PaletteToken.LEVEL_1: "#64b5f6",
                PaletteToken.LEVEL_2: "#81c784",
                PaletteToken.LEVEL_3: "#ba68c8",
                PaletteToken.LEVEL_4: "#ffb74d",
                PaletteToken.LEVEL_5: "#4dd0e1",
                PaletteToken.LEVEL_6: "#f06292",
            },
            statuses={
                StatusToken.PASS: "#81c784",
                StatusToken.FAIL: "bold #ef5350",
                StatusToken.WARNING: "#ffb74d",
                StatusToken.INFO: "#64b5f6",
                StatusToken.MUTED: "#9e9e9e",
            },
            emphases={
                EmphasisToken.STRONG: "bold",
                EmphasisToken.NORMAL: "default",
                EmphasisToken.SUBTLE: "dim",
            },
            background="#212121",
        )
