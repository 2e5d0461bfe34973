"""Error formatter rendering InvoluteError through the design tokens."""

from __future__ import annotations

from typing import Optional

from rich.console import Console
from rich.text import Text

from involute_tower.core.errors import InvoluteError

from .design.components import ErrorDisplay
from .rich_adapter import rich_adapter


class ErrorFormatter:
    """Formats library errors as styled rich Text.

    Output layout::

        DOMAIN: parameter t=2.0 is outside the domain [0.0, 1.0]
          • Choose t between 0.0 and 1.0
    """

    def __init__(self, console: Optional[Console] = None) -> None:
        self.console = console or rich_adapter.create_console(stderr=True)
        self.error_display = ErrorDisplay()

    def format_error(self, error: InvoluteError) -> Text:
        display = self.error_display
        result = Text()
        title = f"status.{display.title_status.value}"
        result.append(f"{error.error_type}: ", style=title)
        result.append(error.message, style=f"emphasis.{display.message_emphasis.value}")
        for suggestion in error.suggestions:
            result.append(
                f"\n  {display.bullet} {suggestion}",
                style=f"status.{display.suggestion_status.value}",
            )
        return result

    def print_error(self, error: InvoluteError) -> None:
        self.console.print(self.format_error(error))
