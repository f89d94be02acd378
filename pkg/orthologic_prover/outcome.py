"""Search statistics and outcomes shared by the search engines."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .exceptions import SearchTimeout
from .proofs import Proof, RuleName


class Verdict(str, Enum):
    PROVABLE = "provable"
    UNPROVABLE = "unprovable"


@dataclass
class SearchStats:
    """Counters of one search run."""

    rules_applied: Counter = field(default_factory=Counter)
    sequents_visited: int = 0
    elapsed: float = 0.0
    max_depth: int = 0
    peak_memo: int = 0

    @property
    def total_rules(self) -> int:
        return sum(self.rules_applied.values())

    def count(self, rule: RuleName) -> None:
        self.rules_applied[rule] += 1

    def merge(self, other: "SearchStats") -> None:
        """Add the counters of a sub-search run."""
        self.rules_applied.update(other.rules_applied)
        self.sequents_visited += other.sequents_visited
        self.max_depth = max(self.max_depth, other.max_depth)
        self.peak_memo = max(self.peak_memo, other.peak_memo)


@dataclass(frozen=True)
class SearchOutcome:
    """Verdict of a search, with a checked proof when provable."""

    verdict: Verdict
    stats: SearchStats
    proof: Optional[Proof] = None

    @property
    def provable(self) -> bool:
        return self.verdict is Verdict.PROVABLE


class Deadline:
    """Monotonic deadline polled by the search loops."""

    POLL_EVERY = 256

    def __init__(self, at: Optional[float] = None):
        self.at = at
        self._ticks = 0

    @classmethod
    def after(cls, seconds: Optional[float]) -> "Deadline":
        return cls(None if seconds is None else time.monotonic() + seconds)

    def poll(self) -> None:
        """Raise SearchTimeout once the deadline has passed; cheap between polls."""
        if self.at is None:
            return
        self._ticks += 1
        if self._ticks % self.POLL_EVERY == 0 and time.monotonic() > self.at:
            raise SearchTimeout("search exceeded its deadline")
