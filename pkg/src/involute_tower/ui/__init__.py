"""Terminal and figure styling: design tokens, themes and rich adapters."""
