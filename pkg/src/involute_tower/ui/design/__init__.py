"""Design tokens, themes and component token maps."""
