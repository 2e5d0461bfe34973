"""Component token mappings.

Each dataclass names the tokens one kind of output uses, so renderers never
hard-code colors. Figures and terminal components share the same themes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .tokens import EmphasisToken, PaletteToken, StatusToken, StrokeStyle, StrokeToken


@dataclass
class TowerFigure:
    """Token mappings for the involute tower and arc-string figures."""

    base: StrokeStyle = field(
        default_factory=lambda: StrokeStyle(color=StrokeToken.BASE, width=2.0)
    )
    segment: StrokeStyle = field(
        default_factory=lambda: StrokeStyle(color=StrokeToken.SEGMENT, width=1.5)
    )
    string: StrokeStyle = field(
        default_factory=lambda: StrokeStyle(color=StrokeToken.STRING, width=1.5)
    )
    construction: StrokeStyle = field(
        default_factory=lambda: StrokeStyle(
            color=StrokeToken.CONSTRUCTION, width=0.75, dash="3 3"
        )
    )
    label: StrokeToken = StrokeToken.LABEL

    def level(self, k: int) -> StrokeStyle:
        """Stroke of tower level k >= 1."""
        return StrokeStyle(color=PaletteToken.cycle(k - 1), width=1.5)


@dataclass
class PolygonFigure:
    """Token mappings for polygon involute figures."""

    outline: StrokeStyle = field(
        default_factory=lambda: StrokeStyle(color=StrokeToken.OUTLINE, width=2.0)
    )
    involute: StrokeStyle = field(
        default_factory=lambda: StrokeStyle(color=StrokeToken.INVOLUTE, width=1.75)
    )
    string: StrokeStyle = field(
        default_factory=lambda: StrokeStyle(color=StrokeToken.STRING, width=1.0).dashed()
    )
    label: StrokeToken = StrokeToken.LABEL


@dataclass
class ReportTable:
    """Token mappings for the verification report table."""

    pass_status: StatusToken = StatusToken.PASS
    fail_status: StatusToken = StatusToken.FAIL
    header_emphasis: EmphasisToken = EmphasisToken.STRONG
    number_emphasis: EmphasisToken = EmphasisToken.NORMAL
    detail_status: StatusToken = StatusToken.MUTED

    def status_for(self, passed: bool) -> StatusToken:
        return self.pass_status if passed else self.fail_status


@dataclass
class ErrorDisplay:
    """Token mappings for error messages."""

    title_status: StatusToken = StatusToken.FAIL
    message_emphasis: EmphasisToken = EmphasisToken.NORMAL
    suggestion_status: StatusToken = StatusToken.INFO
    bullet: str = "•"
