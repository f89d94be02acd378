"""Logging helper functions."""

from __future__ import annotations

import sys
from typing import Any, NoReturn, Optional, TextIO, Type

import structlog

LOGGER = structlog.get_logger()


def configure_logging(stream: Optional[TextIO] = None) -> None:
    """Send log events to stderr so that stdout carries only command output."""
    structlog.configure(logger_factory=structlog.PrintLoggerFactory(file=stream or sys.stderr))


def log_and_raise_error(message: str, error: Type[Exception] = ValueError, **context: Any) -> NoReturn:
    """Log a response and raise an error.

    Args:
         message: plain error text message.
         error: exception class to raise, ValueError unless a domain error is given.
         context: extra key/value pairs attached to the log event.

    Raises:
        Exception: the given error class with the error message.
    """
    LOGGER.info(message, **context)
    raise error(message)


def log(message: str, **context: Any) -> None:
    """Log a response.

    Args:
         message: plain text message.
         context: extra key/value pairs attached to the log event.
    """
    LOGGER.info(message, **context)
