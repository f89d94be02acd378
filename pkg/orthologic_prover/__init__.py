"""Init file for package."""

__version__ = "1.0.0"
