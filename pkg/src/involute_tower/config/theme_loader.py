"""Theme loading from YAML files.

Themes live in YAML files with the sections ``strokes``, ``palette``,
``statuses`` and ``emphases``. A theme may name a registered parent with
``extends`` and then only needs the tokens it overrides. User themes are read
from ``~/.involute-tower/themes/*.yaml`` and ``INVOLUTE_TOWER_THEME`` picks
the active one.
"""

from __future__ import annotations

import logging
import os
from enum import Enum
from pathlib import Path
from typing import Any, Optional, TypeVar, Union

import yaml

from involute_tower.core.errors import InvoluteError

from ..ui.design.registry import theme_registry
from ..ui.design.themes import Theme
from ..ui.design.tokens import EmphasisToken, PaletteToken, StatusToken, StrokeToken

logger = logging.getLogger(__name__)

THEME_ENV_VAR = "INVOLUTE_TOWER_THEME"

E = TypeVar("E", bound=Enum)


class ThemeLoadError(InvoluteError):
    """Raised when a theme file cannot be loaded."""

    error_type = "THEME"


def user_themes_dir() -> Path:
    return Path.home() / ".involute-tower" / "themes"


def _read_section(
    data: dict[str, Any], section: str, enum: type[E], partial: bool
) -> dict[E, str]:
    values = data.get(section, {})
    if not isinstance(values, dict):
        raise ThemeLoadError(f"Section '{section}' must be a dictionary")

    mapping: dict[E, str] = {}
    for key, value in values.items():
        try:
            token = enum(key)
        except ValueError:
            raise ThemeLoadError(f"Unknown {section} token: {key}") from None
        mapping[token] = str(value)

    if not partial:
        for token in enum:
            if token not in mapping:
                raise ThemeLoadError(f"Missing {section} token: {token.value}")
    return mapping


def load_theme_from_yaml(path: Union[Path, str]) -> Theme:
    """Load a theme from a YAML file.

    Raises:
        FileNotFoundError: If the file does not exist
        ThemeLoadError: If the file is not a valid theme
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Theme file not found: {path}")

    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ThemeLoadError(f"Invalid YAML in theme file {path}: {e}") from e

    if not isinstance(data, dict):
        raise ThemeLoadError(f"Theme file {path} must contain a dictionary")
    if "name" not in data:
        raise ThemeLoadError(f"Theme file {path} missing required 'name' field")

    extends: Optional[str] = data.get("extends")
    base_theme = None
    if extends:
        try:
            base_theme = theme_registry.get_theme(extends)
        except KeyError:
            raise ThemeLoadError(f"Parent theme '{extends}' not found") from None

    partial = base_theme is not None
    theme = Theme(
        name=str(data["name"]),
        strokes=_read_section(data, "strokes", StrokeToken, partial),
        palette=_read_section(data, "palette", PaletteToken, partial),
        statuses=_read_section(data, "statuses", StatusToken, partial),
        emphases=_read_section(data, "emphases", EmphasisToken, partial),
        extends=extends,
        background=str(
            data.get("background", base_theme.background if base_theme else "#ffffff")
        ),
    )

    if base_theme:
        theme = base_theme.merge_with(theme)
    return theme


def load_user_themes(themes_dir: Optional[Path] = None) -> list[Theme]:
    """Load every *.yaml theme in the user themes directory.

    Files that fail to load are logged and skipped.
    """
    themes_dir = themes_dir or user_themes_dir()
    if not themes_dir.exists():
        return []

    loaded_themes: list[Theme] = []
    for theme_file in sorted(themes_dir.glob("*.yaml")):
        try:
            loaded_themes.append(load_theme_from_yaml(theme_file))
        except (FileNotFoundError, ThemeLoadError) as e:
            logger.warning("Failed to load theme from %s: %s", theme_file, e)
    return loaded_themes


def register_user_themes(themes_dir: Optional[Path] = None) -> None:
    for theme in load_user_themes(themes_dir):
        try:
            theme_registry.register(theme)
        except ValueError as e:
            logger.warning("%s", e)


def apply_theme(name: Optional[str] = None) -> None:
    """Activate a theme by name, falling back to INVOLUTE_TOWER_THEME.

    Raises:
        ThemeLoadError: If the named theme is not registered
    """
    theme_name = name or os.environ.get(THEME_ENV_VAR)
    if not theme_name:
        return
    try:
        theme_registry.set_current(theme_name)
    except KeyError:
        raise ThemeLoadError(
            f"Theme '{theme_name}' is not registered",
            [f"Available themes: {', '.join(theme_registry.list_themes())}"],
        ) from None


def initialize_themes(name: Optional[str] = None) -> None:
    """Register user themes, then activate the requested theme."""
    register_user_themes()
    apply_theme(name)
