"""Reduction of diagonal goals ⊢ ⇑ A, A to focused goals ⊢ B∨C ⇓ B∨C."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from .formula import And, Formula, Or, Top
from .olf0_calculus import and_rr, top_rr
from .olf_calculus import cw_rr
from .proofs import Calculus, Proof


class DecompositionKind(str, Enum):
    UNPROVABLE = "unprovable"
    PROVABLE = "provable"
    SPLIT = "split"
    FOCUS = "focus"


@dataclass(frozen=True)
class DecompositionResult:
    """One step of the diagonal reduction.

    SPLIT carries the two conjuncts, FOCUS the disjunction whose focused
    diagonal is left to prove.
    """

    kind: DecompositionKind
    parts: Tuple[Formula, ...] = ()


def diagonal_decompose(a: Formula) -> DecompositionResult:
    """Decide ⊢ ⇑ a, a by its top connective, or name what remains to prove.

    Literals and ⊥ are never provable against themselves, ⊤ always is, a
    conjunction splits into both conjuncts and a disjunction needs its focused
    diagonal.
    """
    if isinstance(a, Top):
        return DecompositionResult(DecompositionKind.PROVABLE)
    if isinstance(a, And):
        return DecompositionResult(DecompositionKind.SPLIT, (a.left, a.right))
    if isinstance(a, Or):
        return DecompositionResult(DecompositionKind.FOCUS, (a,))
    return DecompositionResult(DecompositionKind.UNPROVABLE)


def focus_goals(a: Formula) -> Optional[List[Or]]:
    """Distinct disjunctions whose focused diagonals decide ⊢ ⇑ a, a.

    Returns:
        The goals from left to right, or None when a literal or ⊥ is reached.
    """
    goals: Dict[Or, None] = {}
    stack = [a]
    while stack:
        result = diagonal_decompose(stack.pop())
        if result.kind is DecompositionKind.UNPROVABLE:
            return None
        if result.kind is DecompositionKind.SPLIT:
            stack.extend(reversed(result.parts))
        elif result.kind is DecompositionKind.FOCUS:
            goal = result.parts[0]
            assert isinstance(goal, Or)
            goals.setdefault(goal, None)
    return list(goals)


def weaken_diagonal(b: Formula, other: Formula, focus_proofs: Mapping[Or, Proof]) -> Proof:
    """OLf proof of ⊢ ⇑ b, other from proofs of the focused diagonals of b.

    Args:
        b: a formula whose focus goals are all proved.
        other: any formula.
        focus_proofs: an OLf proof of ⊢ W ⇓ W for every goal W of ``focus_goals(b)``.
    """
    if isinstance(b, Top):
        return top_rr(other, Calculus.OLF)
    if isinstance(b, And):
        left = weaken_diagonal(b.left, other, focus_proofs)
        right = weaken_diagonal(b.right, other, focus_proofs)
        return and_rr(left, right, Calculus.OLF)
    assert isinstance(b, Or), "literals and ⊥ have no diagonal proof"
    return cw_rr(focus_proofs[b], other)


def prove_diagonal(a: Formula, prove_focus: Callable[[Or], Optional[Proof]]) -> Optional[Proof]:
    """OLf proof of ⊢ ⇑ a, a, proving each focused goal with ``prove_focus``.

    Returns:
        The proof, or None when a literal or ⊥ is reached or a goal fails.
    """
    goals = focus_goals(a)
    if goals is None:
        return None
    proofs: Dict[Or, Proof] = {}
    for goal in goals:
        p = prove_focus(goal)
        if p is None:
            return None
        proofs[goal] = p
    return weaken_diagonal(a, a, proofs)
