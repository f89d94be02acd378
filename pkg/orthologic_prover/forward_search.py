"""Forward saturation for diagonal goals, restricted by the strengthened sub-formula property.

Starting from the axioms, OLf rules are applied top-down to sequents whose
formulas are sub-formulas of the goal ``B∨C``. With the filter on, a sequent
``⊢ D ⇓ E`` or ``⊢ D ⇑ F`` is kept only when

* a synchronous D is the goal itself or occurs right below a ∧,
* an asynchronous E occurs right below a ∨,
* a synchronous F occurs right below a ∧.

Saturation stops as soon as ``⊢ B∨C ⇓ B∨C`` is derived, or at the fixpoint.
"""

from __future__ import annotations

import time
from collections import deque
from typing import Deque, Dict, List, Optional, Tuple

import structlog

from .diagonal import prove_diagonal
from .formula import (
    TOP,
    And,
    Context,
    Formula,
    NegVar,
    Or,
    Var,
    contexted_subformulas,
    format_formula,
    is_asynchronous,
    is_focusable,
    is_synchronous,
    subformula_list,
)
from .helpers.recursion_helper import deep_recursion
from .olf0_calculus import and_rv, ax, reac_f, top_rv, vee
from .olf_calculus import cw_rv, d1, d2
from .outcome import Deadline, SearchOutcome, SearchStats, Verdict
from .proofs import Calculus, Proof, RuleName, Sequent, SequentKind, check, fc, rv

LOGGER = structlog.get_logger()

OLF = Calculus.OLF

Justification = Tuple[RuleName, Tuple[Sequent, ...]]


class ForwardSearch:
    """Saturation towards ⊢ W ⇓ W for one disjunction W.

    Args:
        goal: the disjunction W.
        use_filter: keep only sequents allowed by the strengthened sub-formula
            property; without it only the sub-formula property and the
            left-formula side condition apply.
        deadline: absolute ``time.monotonic()`` value, or None.
        stats: counters to update.
    """

    def __init__(
        self,
        goal: Or,
        use_filter: bool = True,
        deadline: Optional[float] = None,
        stats: Optional[SearchStats] = None,
    ):
        self.goal = goal
        self.use_filter = use_filter
        self.deadline = Deadline(deadline)
        self.stats = stats if stats is not None else SearchStats()
        self.subformulas = subformula_list(goal)
        self._universe = set(self.subformulas)
        self._contexts = contexted_subformulas(goal)
        self._parents: Dict[Formula, List[Tuple[Formula, int]]] = {f: [] for f in self.subformulas}
        for f in self.subformulas:
            if isinstance(f, (And, Or)):
                self._parents[f.left].append((f, 0))
                self._parents[f.right].append((f, 1))
        self.lefts = [f for f in self.subformulas if self._left_ok(f)]
        self.derived: Dict[Sequent, Justification] = {}
        self._agenda: Deque[Sequent] = deque()

    def _below(self, f: Formula, context: Context) -> bool:
        return (f, context) in self._contexts

    def _left_ok(self, f: Formula) -> bool:
        if f not in self._universe or not is_focusable(f):
            return False
        if not self.use_filter or not is_synchronous(f):
            return True
        return f == self.goal or self._below(f, Context.BELOW_AND)

    def admissible(self, s: Sequent) -> bool:
        """Whether s lies in the sequent space explored for this goal."""
        if s.kind not in (SequentKind.FC, SequentKind.RV) or s.b not in self._universe:
            return False
        if not self._left_ok(s.a):
            return False
        if not self.use_filter:
            return True
        if s.kind is SequentKind.FC:
            return is_synchronous(s.b) or self._below(s.b, Context.BELOW_OR)
        return is_asynchronous(s.b) or self._below(s.b, Context.BELOW_AND)

    def _add(self, s: Sequent, rule: RuleName, premises: Tuple[Sequent, ...] = ()) -> None:
        if not self.admissible(s):
            return
        self.stats.count(rule)
        if s in self.derived:
            return
        self.derived[s] = (rule, premises)
        self._agenda.append(s)

    def _seed(self) -> None:
        for f in self.subformulas:
            if isinstance(f, Var):
                self._add(fc(NegVar(f.name), f), RuleName.AX)
        if TOP in self._universe:
            for left in self.lefts:
                self._add(rv(left, TOP), RuleName.TOP_RV)

    def _consume_fc(self, s: Sequent) -> None:
        c, a = s.a, s.b
        for parent, index in self._parents[a]:
            if isinstance(parent, Or):
                self._add(fc(c, parent), RuleName.OR1 if index == 0 else RuleName.OR2, (s,))
        if is_synchronous(a):
            self._add(rv(a, c), RuleName.D1, (s,))
            self._add(rv(c, a), RuleName.D2, (s,))
        if c == a and isinstance(a, Or):
            for left in self.lefts:
                self._add(rv(left, a), RuleName.CW_RV, (s,))

    def _consume_rv(self, s: Sequent) -> None:
        c, a = s.a, s.b
        if is_asynchronous(a):
            self._add(fc(c, a), RuleName.REAC_F, (s,))
        for parent, _ in self._parents[a]:
            if isinstance(parent, And):
                first, second = rv(c, parent.left), rv(c, parent.right)
                if first in self.derived and second in self.derived:
                    self._add(rv(c, parent), RuleName.AND_RV, (first, second))

    def saturate(self) -> Optional[Proof]:
        """Saturate until the goal is derived; its OLf proof, or None at the fixpoint."""
        target = fc(self.goal, self.goal)
        self._seed()
        while self._agenda and target not in self.derived:
            self.deadline.poll()
            s = self._agenda.popleft()
            self.stats.sequents_visited += 1
            if s.kind is SequentKind.FC:
                self._consume_fc(s)
            else:
                self._consume_rv(s)
        self.stats.peak_memo = max(self.stats.peak_memo, len(self.derived))
        if target not in self.derived:
            return None
        with deep_recursion():
            return self._rebuild(target, {})

    def _rebuild(self, s: Sequent, built: Dict[Sequent, Proof]) -> Proof:
        if s in built:
            return built[s]
        rule, premises = self.derived[s]
        subproofs = [self._rebuild(q, built) for q in premises]
        if rule is RuleName.AX:
            assert isinstance(s.b, Var)
            p = ax(s.b, OLF)
        elif rule is RuleName.TOP_RV:
            p = top_rv(s.a, OLF)
        elif rule in (RuleName.OR1, RuleName.OR2):
            assert isinstance(s.b, Or)
            p = vee(subproofs[0], s.b, 0 if rule is RuleName.OR1 else 1, OLF)
        elif rule is RuleName.REAC_F:
            p = reac_f(subproofs[0], OLF)
        elif rule is RuleName.AND_RV:
            p = and_rv(subproofs[0], subproofs[1], OLF)
        elif rule is RuleName.CW_RV:
            p = cw_rv(subproofs[0], s.a)
        elif rule is RuleName.D1:
            p = d1(subproofs[0])
        else:
            p = d2(subproofs[0])
        built[s] = p
        return p


def prove_fwf(goal: Formula, use_filter: bool = True, deadline: Optional[float] = None) -> SearchOutcome:
    """Decide ⊢ ⇑ goal, goal by diagonal reduction and forward saturation.

    Args:
        goal: any formula.
        use_filter: apply the strengthened sub-formula filter.
        deadline: absolute ``time.monotonic()`` value, or None.

    Raises:
        SearchTimeout: the deadline passed.
    """
    started = time.monotonic()
    stats = SearchStats()

    def prove_focus(disjunction: Or) -> Optional[Proof]:
        return ForwardSearch(disjunction, use_filter, deadline, stats).saturate()

    proof = prove_diagonal(goal, prove_focus)
    stats.elapsed = time.monotonic() - started
    if proof is not None:
        check(proof)
    verdict = Verdict.UNPROVABLE if proof is None else Verdict.PROVABLE
    LOGGER.info(
        "Forward search finished",
        formula=format_formula(goal),
        verdict=verdict.value,
        total_rules=stats.total_rules,
        visited=stats.sequents_visited,
        elapsed=round(stats.elapsed, 6),
        use_filter=use_filter,
    )
    return SearchOutcome(verdict, stats, proof)
