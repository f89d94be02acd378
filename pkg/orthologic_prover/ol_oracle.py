"""Naive bounded OL search, used to cross-check the focused provers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Set, Tuple

import structlog

from .formula import And, Formula, Or, Top, negate
from .helpers.recursion_helper import deep_recursion
from .ol_calculus import node
from .proofs import Proof, RuleName, Sequent, SequentKind, check, format_sequent, ol

LOGGER = structlog.get_logger()

DEFAULT_BUDGET = 200_000


class OracleVerdict(str, Enum):
    PROVABLE = "provable"
    UNPROVABLE = "unprovable"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class OracleResult:
    verdict: OracleVerdict
    expansions: int
    proof: Optional[Proof] = None


class _BudgetExhausted(Exception):
    pass


class _OracleSearch:
    """Backward OL search that cuts branches repeating an ancestor sequent.

    A failure is cached only when no cut branch inside it loops back to a
    strict ancestor of the failed sequent.
    """

    def __init__(self, budget: int):
        self.budget = budget
        self.expansions = 0
        self.proved: Dict[Sequent, Proof] = {}
        self.failed: Set[Sequent] = set()
        self.branch: Dict[Sequent, int] = {}

    def prove(self, s: Sequent) -> Tuple[Optional[Proof], float]:
        """A proof of s, or None with the shallowest branch depth the failure depends on."""
        if s in self.proved:
            return self.proved[s], math.inf
        if s in self.failed:
            return None, math.inf
        if s in self.branch:
            return None, self.branch[s]
        self.expansions += 1
        if self.expansions > self.budget:
            raise _BudgetExhausted()
        depth = len(self.branch)
        self.branch[s] = depth
        try:
            proof, loop = self._expand(s)
        finally:
            del self.branch[s]
        if proof is not None:
            self.proved[s] = proof
        elif loop >= depth:
            self.failed.add(s)
        return proof, loop

    def _expand(self, s: Sequent) -> Tuple[Optional[Proof], float]:
        a, b = s.a, s.b
        if a == negate(b):
            return node(RuleName.AX, s), math.inf
        if isinstance(a, Top):
            return node(RuleName.TOP, s), math.inf
        loop = math.inf
        for rule, premises in self._candidates(a, b):
            proofs: List[Proof] = []
            for premise in premises:
                q, premise_loop = self.prove(premise)
                loop = min(loop, premise_loop)
                if q is None:
                    break
                proofs.append(q)
            else:
                return node(rule, s, *proofs), math.inf
        return None, loop

    @staticmethod
    def _candidates(a: Formula, b: Formula) -> List[Tuple[RuleName, List[Sequent]]]:
        candidates = []
        if isinstance(a, And):
            candidates.append((RuleName.AND, [ol(a.left, b), ol(a.right, b)]))
        if isinstance(a, Or):
            candidates.append((RuleName.OR1, [ol(a.left, b)]))
            candidates.append((RuleName.OR2, [ol(a.right, b)]))
        candidates.append((RuleName.EX, [ol(b, a)]))
        if a != b:
            candidates.append((RuleName.CW, [ol(a, a)]))
        return candidates


def prove_ol_oracle(s: Sequent, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Decide an OL sequent ⊢ A, B by exhaustive loop-checked search.

    Args:
        s: an OL sequent.
        budget: maximum number of sequent expansions.

    Returns:
        PROVABLE with a checked proof, UNPROVABLE, or BUDGET_EXCEEDED.
    """
    if s.kind is not SequentKind.OL:
        raise ValueError(f"{format_sequent(s)} is not an OL sequent")
    search = _OracleSearch(budget)
    try:
        with deep_recursion():
            proof, _ = search.prove(s)
    except _BudgetExhausted:
        LOGGER.info("OL oracle ran out of budget", sequent=format_sequent(s), budget=budget)
        return OracleResult(OracleVerdict.BUDGET_EXCEEDED, search.expansions)
    if proof is None:
        return OracleResult(OracleVerdict.UNPROVABLE, search.expansions)
    check(proof)
    return OracleResult(OracleVerdict.PROVABLE, search.expansions, proof)
