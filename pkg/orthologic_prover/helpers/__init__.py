"""Init file for package."""
