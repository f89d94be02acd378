"""Init file for models package."""
