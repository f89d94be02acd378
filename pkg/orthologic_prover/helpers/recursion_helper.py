"""Recursion limit helper for deep proof trees."""

from __future__ import annotations

import sys
from contextlib import contextmanager
from typing import Iterator

DEEP_RECURSION_LIMIT = 50_000


@contextmanager
def deep_recursion(limit: int = DEEP_RECURSION_LIMIT) -> Iterator[None]:
    """Raise the interpreter recursion limit for the duration of the block.

    Proof transformations and backward search recurse once per proof level, and
    benchmark formulas reach a few hundred levels.

    Args:
        limit: minimum recursion limit inside the block.
    """
    previous = sys.getrecursionlimit()
    if previous < limit:
        sys.setrecursionlimit(limit)
    try:
        yield
    finally:
        sys.setrecursionlimit(previous)
