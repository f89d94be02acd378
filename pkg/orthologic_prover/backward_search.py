"""Memoised backward proof search in the optimised focused system."""

from __future__ import annotations

import time
from typing import Callable, Dict, List, Optional

import structlog

from .formula import And, Bot, NegVar, Or, Top, Var, is_asynchronous, is_focusable, is_synchronous, size
from .helpers.recursion_helper import deep_recursion
from .olf0_calculus import and_rr, and_rv, ax, reac_f, reac_rr, top_rr, top_rv, vee
from .olf_calculus import cw_rr, cw_rv, d1, d2
from .outcome import Deadline, SearchOutcome, SearchStats, Verdict
from .proofs import Calculus, Proof, RuleName, Sequent, SequentKind, check, fc, format_sequent, psi, rr, rv

LOGGER = structlog.get_logger()

OLF = Calculus.OLF


def branch_bound(s: Sequent) -> int:
    """Bound on the length of every branch of an OLf proof of s.

    Raises:
        ValueError: s is not an OLf sequent.
    """
    return psi(s)


def tight_bound(s: Sequent) -> int:
    """Number of sequents built from sub-formulas of s, another branch bound."""
    if s.kind not in (SequentKind.RR, SequentKind.RV, SequentKind.FC):
        raise ValueError(f"no bound is defined for {s.kind.value} sequents")
    return 3 * (size(s.a) + size(s.b)) ** 2


class BackwardSearch:
    """Depth-first search over OLf rules, read from conclusion to premises.

    Every rule of OLf makes psi strictly smaller on its premises, so the search
    needs no loop check. Results are memoised per sequent for the whole run,
    both successes and failures.

    Args:
        deadline: absolute ``time.monotonic()`` value after which the search raises
            SearchTimeout.
        stats: counters to update, shared when several goals make one run.
    """

    def __init__(self, deadline: Optional[float] = None, stats: Optional[SearchStats] = None):
        self.deadline = Deadline(deadline)
        self.stats = stats if stats is not None else SearchStats()
        self.memo: Dict[Sequent, Optional[Proof]] = {}
        self._limit = 0

    def prove(self, s: Sequent) -> Optional[Proof]:
        """An OLf proof of s, or None when s is not provable."""
        self._limit = min(branch_bound(s), tight_bound(s))
        with deep_recursion():
            return self._prove(s, 1)

    def _prove(self, s: Sequent, depth: int) -> Optional[Proof]:
        if s in self.memo:
            return self.memo[s]
        assert depth <= self._limit, f"branch of length {depth} exceeds its bound {self._limit}"
        self.deadline.poll()
        self.stats.sequents_visited += 1
        self.stats.max_depth = max(self.stats.max_depth, depth)
        if s.kind is SequentKind.RR:
            result = self._prove_rr(s, depth)
        elif s.kind is SequentKind.RV:
            result = self._prove_rv(s, depth)
        elif s.kind is SequentKind.FC:
            result = self._prove_fc(s, depth)
        else:
            raise ValueError(f"{format_sequent(s)} is not an OLf sequent")
        self.memo[s] = result
        self.stats.peak_memo = max(self.stats.peak_memo, len(self.memo))
        return result

    def _apply(self, rule: RuleName, premises: List[Sequent], build: Callable[..., Proof], depth: int) -> Optional[Proof]:
        self.stats.count(rule)
        proofs = []
        for premise in premises:
            q = self._prove(premise, depth + 1)
            if q is None:
                return None
            proofs.append(q)
        return build(*proofs)

    def _first(self, *attempts: Callable[[], Optional[Proof]]) -> Optional[Proof]:
        for attempt in attempts:
            p = attempt()
            if p is not None:
                return p
        return None

    def _prove_rr(self, s: Sequent, depth: int) -> Optional[Proof]:
        a, b = s.a, s.b
        if isinstance(a, And):
            return self._apply(
                RuleName.AND_RR, [rr(a.left, b), rr(a.right, b)], lambda p, q: and_rr(p, q, OLF), depth
            )
        if isinstance(a, Top):
            self.stats.count(RuleName.TOP_RR)
            return top_rr(b, OLF)
        attempts = [lambda: self._apply(RuleName.REAC_RR, [rv(a, b)], lambda p: reac_rr(p, OLF), depth)]
        if isinstance(a, Or):
            attempts.append(lambda: self._apply(RuleName.CW_RR, [fc(a, a)], lambda p: cw_rr(p, b), depth))
        return self._first(*attempts)

    def _prove_rv(self, s: Sequent, depth: int) -> Optional[Proof]:
        a, b = s.a, s.b
        if not is_focusable(a):
            return None
        if isinstance(b, And):
            return self._apply(
                RuleName.AND_RV, [rv(a, b.left), rv(a, b.right)], lambda p, q: and_rv(p, q, OLF), depth
            )
        if isinstance(b, Top):
            self.stats.count(RuleName.TOP_RV)
            return top_rv(a, OLF)
        attempts = []
        if isinstance(b, Or):
            attempts.append(lambda: self._apply(RuleName.CW_RV, [fc(b, b)], lambda p: cw_rv(p, a), depth))
        if is_synchronous(a):
            attempts.append(lambda: self._apply(RuleName.D1, [fc(b, a)], d1, depth))
        if is_synchronous(b):
            attempts.append(lambda: self._apply(RuleName.D2, [fc(a, b)], d2, depth))
        return self._first(*attempts)

    def _prove_fc(self, s: Sequent, depth: int) -> Optional[Proof]:
        a, b = s.a, s.b
        if not is_focusable(a):
            return None
        if is_asynchronous(b):
            return self._apply(RuleName.REAC_F, [rv(a, b)], lambda p: reac_f(p, OLF), depth)
        if isinstance(b, Var):
            if a == NegVar(b.name):
                self.stats.count(RuleName.AX)
                return ax(b, OLF)
            return None
        if isinstance(b, Or):
            return self._first(
                lambda: self._apply(RuleName.OR1, [fc(a, b.left)], lambda p: vee(p, b, 0, OLF), depth),
                lambda: self._apply(RuleName.OR2, [fc(a, b.right)], lambda p: vee(p, b, 1, OLF), depth),
            )
        assert isinstance(b, Bot)
        return None


def prove_bwf(s: Sequent, deadline: Optional[float] = None) -> SearchOutcome:
    """Decide an OLf sequent by backward search.

    Args:
        s: a ⊢ ⇑ A, B, ⊢ A ⇑ B or ⊢ A ⇓ B sequent.
        deadline: absolute ``time.monotonic()`` value, or None for no deadline.

    Returns:
        The outcome; a provable outcome carries a checked proof of s.

    Raises:
        SearchTimeout: the deadline passed.
    """
    started = time.monotonic()
    search = BackwardSearch(deadline)
    proof = search.prove(s)
    search.stats.elapsed = time.monotonic() - started
    if proof is not None:
        check(proof)
    verdict = Verdict.UNPROVABLE if proof is None else Verdict.PROVABLE
    LOGGER.info(
        "Backward search finished",
        sequent=format_sequent(s),
        verdict=verdict.value,
        total_rules=search.stats.total_rules,
        visited=search.stats.sequents_visited,
        elapsed=round(search.stats.elapsed, 6),
    )
    return SearchOutcome(verdict, search.stats, proof)
