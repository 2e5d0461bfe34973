"""Theme configuration loading."""

from involute_tower.config.theme_loader import (
    ThemeLoadError,
    apply_theme,
    initialize_themes,
    load_theme_from_yaml,
    load_user_themes,
)

__all__ = [
    "ThemeLoadError",
    "apply_theme",
    "initialize_themes",
    "load_theme_from_yaml",
    "load_user_themes",
]
