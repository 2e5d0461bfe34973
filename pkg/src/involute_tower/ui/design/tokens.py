"""Design tokens for figures and terminal output.

Tokens name the role of a visual element (the base curve, a taut string, a
failed check) rather than its color. Themes map tokens to concrete colors, so
the SVG renderer and the rich console share one palette.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional, Union

from pydantic import BaseModel, Field


class StrokeToken(str, Enum):
    """Roles of stroked elements in a figure."""

    BASE = "base"
    INVOLUTE = "involute"
    STRING = "string"
    SEGMENT = "segment"
    OUTLINE = "outline"
    LABEL = "label"
    CONSTRUCTION = "construction"


class PaletteToken(str, Enum):
    """Cycling colors for tower levels and polygon arcs."""

    LEVEL_1 = "level_1"
    LEVEL_2 = "level_2"
    LEVEL_3 = "level_3"
    LEVEL_4 = "level_4"
    LEVEL_5 = "level_5"
    LEVEL_6 = "level_6"

    @classmethod
    def cycle(cls, index: int) -> PaletteToken:
        """Token for the index-th item, wrapping around the palette."""
        members = list(cls)
        return members[index % len(members)]


class StatusToken(str, Enum):
    """Outcome of a check or message severity."""

    PASS = "pass"
    FAIL = "fail"
    WARNING = "warning"
    INFO = "info"
    MUTED = "muted"


class EmphasisToken(str, Enum):
    """Visual weight levels for text emphasis."""

    STRONG = "strong"
    NORMAL = "normal"
    SUBTLE = "subtle"


class StrokeStyle(BaseModel):
    """Stroke of one figure element: a color token plus line geometry."""

    color: Union[StrokeToken, PaletteToken]
    width: float = Field(default=1.5, gt=0)
    dash: Optional[str] = Field(default=None, description="SVG dash array, e.g. '4 3'")

    def dashed(self, pattern: str = "4 3") -> StrokeStyle:
        return self.model_copy(update={"dash": pattern})
