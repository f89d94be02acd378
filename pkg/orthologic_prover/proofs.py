"""Sequents, proof trees and the proof checker.

The checker is the trusted kernel: every proof built by a transformation or a
search is expected to pass ``check`` with exactly the sequent it claims.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .exceptions import ProofCheckError
from .formula import (
    And,
    Formula,
    NegVar,
    Or,
    Top,
    Var,
    format_formula,
    is_asynchronous,
    is_focusable,
    is_synchronous,
    negate,
    phi,
)


class Calculus(str, Enum):
    """The three sequent calculi."""

    OL = "OL"
    OLF0 = "OLf0"
    OLF = "OLf"


class SequentKind(str, Enum):
    """Plain OL pairs and the four focused shapes."""

    OL = "ol"  # ⊢ A, B
    RR = "rr"  # ⊢ ⇑ A, B
    RV = "rv"  # ⊢ A ⇑ B
    LL = "ll"  # ⊢ A, B ⇑
    FC = "fc"  # ⊢ A ⇓ B


class RuleName(str, Enum):
    """Rule names of the three rule boxes; some names are shared between calculi."""

    AX = "ax"
    EX = "ex"
    CW = "cw"
    OR1 = "or1"
    OR2 = "or2"
    AND = "and"
    TOP = "top"
    AND_RR = "and_rr"
    TOP_RR = "top_rr"
    REAC_RR = "reac_rr"
    AND_RV = "and_rv"
    TOP_RV = "top_rv"
    REAC_RV = "reac_rv"
    CW_L = "cw_l"
    CW_R = "cw_r"
    D_L = "d_l"
    D_R = "d_r"
    REAC_F = "reac_f"
    CW_RR = "cw_rr"
    CW_RV = "cw_rv"
    D1 = "d1"
    D2 = "d2"


@dataclass(frozen=True)
class Sequent:
    """A sequent with exactly two formula positions."""

    kind: SequentKind
    a: Formula
    b: Formula

    def __str__(self) -> str:
        return format_sequent(self)


def ol(a: Formula, b: Formula) -> Sequent:
    return Sequent(SequentKind.OL, a, b)


def rr(a: Formula, b: Formula) -> Sequent:
    return Sequent(SequentKind.RR, a, b)


def rv(a: Formula, b: Formula) -> Sequent:
    return Sequent(SequentKind.RV, a, b)


def ll(a: Formula, b: Formula) -> Sequent:
    return Sequent(SequentKind.LL, a, b)


def fc(a: Formula, b: Formula) -> Sequent:
    return Sequent(SequentKind.FC, a, b)


def format_sequent(s: Sequent) -> str:
    """Render a sequent with ⊢, ⇑ and ⇓ and ASCII formulas."""
    a, b = format_formula(s.a), format_formula(s.b)
    if s.kind is SequentKind.OL:
        return f"⊢ {a}, {b}"
    if s.kind is SequentKind.RR:
        return f"⊢ ⇑ {a}, {b}"
    if s.kind is SequentKind.RV:
        return f"⊢ {a} ⇑ {b}"
    if s.kind is SequentKind.LL:
        return f"⊢ {a}, {b} ⇑"
    return f"⊢ {a} ⇓ {b}"


@dataclass(frozen=True)
class Proof:
    """A rule-labelled derivation tree storing the full conclusion at every node."""

    calculus: Calculus
    rule: RuleName
    conclusion: Sequent
    premises: Tuple["Proof", ...] = ()

    @cached_property
    def size(self) -> int:
        return 1 + sum(p.size for p in self.premises)


def proof_size(p: Proof) -> int:
    return p.size


def proof_height(p: Proof) -> int:
    """Number of nodes on the longest branch."""
    heights: Dict[int, int] = {}
    for node in _post_order(p):
        heights[id(node)] = 1 + max((heights[id(q)] for q in node.premises), default=0)
    return heights[id(p)]


def _post_order(p: Proof) -> Iterator[Proof]:
    """Distinct node objects, premises before conclusions."""
    seen = set()
    stack: List[Tuple[Proof, bool]] = [(p, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            yield node
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        for q in reversed(node.premises):
            stack.append((q, False))


def iter_nodes(p: Proof) -> Iterator[Tuple[Tuple[int, ...], Proof]]:
    """Every node with its premise-index path, root first."""
    stack: List[Tuple[Tuple[int, ...], Proof]] = [((), p)]
    while stack:
        path, node = stack.pop()
        yield path, node
        for i in reversed(range(len(node.premises))):
            stack.append((path + (i,), node.premises[i]))


def iter_distinct_nodes(p: Proof) -> Iterator[Tuple[Tuple[int, ...], Proof]]:
    """Every distinct node object once, with the path of its first occurrence.

    Searches share sub-proofs between branches, so a proof whose tree is
    exponential in the formula is linear here.
    """
    seen = set()
    stack: List[Tuple[Tuple[int, ...], Proof]] = [((), p)]
    while stack:
        path, node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        yield path, node
        for i in reversed(range(len(node.premises))):
            stack.append((path + (i,), node.premises[i]))


def rule_count(p: Proof) -> Counter:
    """Number of tree nodes per rule name, shared sub-proofs counted at every use."""
    counts: Dict[int, Counter] = {}
    for node in _post_order(p):
        c = Counter({node.rule: 1})
        for q in node.premises:
            c.update(counts[id(q)])
        counts[id(node)] = c
    return counts[id(p)]


def psi(s: Sequent) -> int:
    """Branch-length measure of an OLf sequent.

    Raises:
        ValueError: the sequent kind has no measure (LL and plain OL pairs).
    """
    if s.kind is SequentKind.RR:
        return 2 * phi(s.a) + 2 * phi(s.b)
    if s.kind is SequentKind.RV:
        return phi(s.a) + 2 * phi(s.b)
    if s.kind is SequentKind.FC:
        if is_synchronous(s.b):
            return phi(s.a) + phi(s.b)
        return phi(s.a) + 2 * phi(s.b) + 1
    raise ValueError(f"no measure is defined for {s.kind.value} sequents")


def focus_side_condition_holds(p: Proof) -> bool:
    """Whether every formula left of ⇑ or ⇓ is synchronous or a negated variable."""
    for _, node in iter_distinct_nodes(p):
        s = node.conclusion
        if s.kind in (SequentKind.RV, SequentKind.FC) and not is_focusable(s.a):
            return False
        if s.kind is SequentKind.LL and not (is_focusable(s.a) and is_focusable(s.b)):
            return False
    return True


# Rule schemas. Each checker receives the conclusion and the premise conclusions
# (arity already checked) and returns None or the violated condition.
Schema = Callable[[Sequent, Sequence[Sequent]], Optional[str]]


def _same(actual: Sequent, expected: Sequent) -> Optional[str]:
    if actual != expected:
        return f"expected premise {format_sequent(expected)}, found {format_sequent(actual)}"
    return None


def _focusable(f: Formula) -> Optional[str]:
    if not is_focusable(f):
        return f"side condition (s) or (n) fails on {format_formula(f)}"
    return None


def _synchronous(f: Formula) -> Optional[str]:
    if not is_synchronous(f):
        return f"side condition (s) fails on {format_formula(f)}"
    return None


def _asynchronous(f: Formula) -> Optional[str]:
    if not is_asynchronous(f):
        return f"side condition (a) fails on {format_formula(f)}"
    return None


def _first(*checks: Optional[str]) -> Optional[str]:
    return next((c for c in checks if c is not None), None)


def _ol_ax(c: Sequent, _: Sequence[Sequent]) -> Optional[str]:
    if c.a != negate(c.b):
        return "axiom conclusion must be ⊢ ¬A, A"
    return None


def _ol_ex(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    return _same(ps[0], ol(c.b, c.a))


def _ol_cw(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    return _same(ps[0], ol(c.a, c.a))


def _or_left(kind: SequentKind, index: int) -> Schema:
    # ⊢ A∨B, C from ⊢ A, C (index 0) or ⊢ B, C (index 1)
    def schema(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
        if not isinstance(c.a, Or):
            return "principal formula must be a disjunction"
        return _same(ps[0], Sequent(kind, (c.a.left, c.a.right)[index], c.b))

    return schema


def _or_right(index: int) -> Schema:
    # ⊢ C ⇓ A∨B from ⊢ C ⇓ A (index 0) or ⊢ C ⇓ B (index 1)
    def schema(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
        if not isinstance(c.b, Or):
            return "focused formula must be a disjunction"
        return _same(ps[0], fc(c.a, (c.b.left, c.b.right)[index]))

    return schema


def _and_left(kind: SequentKind) -> Schema:
    # ⊢ A∧B, C from ⊢ A, C and ⊢ B, C
    def schema(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
        if not isinstance(c.a, And):
            return "principal formula must be a conjunction"
        return _first(_same(ps[0], Sequent(kind, c.a.left, c.b)), _same(ps[1], Sequent(kind, c.a.right, c.b)))

    return schema


def _top_left(c: Sequent, _: Sequence[Sequent]) -> Optional[str]:
    if not isinstance(c.a, Top):
        return "principal formula must be ⊤"
    return None


def _and_rv(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    if not isinstance(c.b, And):
        return "principal formula must be a conjunction"
    return _first(_same(ps[0], rv(c.a, c.b.left)), _same(ps[1], rv(c.a, c.b.right)))


def _top_rv(c: Sequent, _: Sequence[Sequent]) -> Optional[str]:
    if not isinstance(c.b, Top):
        return "principal formula must be ⊤"
    return _focusable(c.a)


def _reac_rr(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    return _same(ps[0], rv(c.a, c.b))


def _reac_rv(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    return _same(ps[0], ll(c.a, c.b))


def _cw_l(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    # ⊢ C, A ⇑ from ⊢ C, C ⇑
    return _first(_same(ps[0], ll(c.a, c.a)), _focusable(c.b))


def _cw_r(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    # ⊢ A, C ⇑ from ⊢ C, C ⇑
    return _first(_same(ps[0], ll(c.b, c.b)), _focusable(c.a))


def _d_l(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    # ⊢ A, C ⇑ from ⊢ C ⇓ A
    return _first(_same(ps[0], fc(c.b, c.a)), _synchronous(c.a))


def _d_r(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    # ⊢ C, A ⇑ from ⊢ C ⇓ A
    return _first(_same(ps[0], fc(c.a, c.b)), _synchronous(c.b))


def _focused_ax(c: Sequent, _: Sequence[Sequent]) -> Optional[str]:
    if not (isinstance(c.a, NegVar) and isinstance(c.b, Var) and c.a.name == c.b.name):
        return "axiom conclusion must be ⊢ ¬X ⇓ X"
    return None


def _reac_f(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    return _first(_same(ps[0], rv(c.a, c.b)), _asynchronous(c.b))


def _cw_rr(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    # ⊢ ⇑ B∨C, A from ⊢ B∨C ⇓ B∨C
    if not isinstance(c.a, Or):
        return "contracted formula must be a disjunction"
    return _same(ps[0], fc(c.a, c.a))


def _cw_rv(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    # ⊢ A ⇑ B∨C from ⊢ B∨C ⇓ B∨C
    if not isinstance(c.b, Or):
        return "contracted formula must be a disjunction"
    return _first(_same(ps[0], fc(c.b, c.b)), _focusable(c.a))


def _d1(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    # ⊢ A ⇑ C from ⊢ C ⇓ A
    return _first(_same(ps[0], fc(c.b, c.a)), _synchronous(c.a))


def _d2(c: Sequent, ps: Sequence[Sequent]) -> Optional[str]:
    # ⊢ C ⇑ A from ⊢ C ⇓ A
    return _first(_same(ps[0], fc(c.a, c.b)), _synchronous(c.b))


@dataclass(frozen=True)
class RuleSchema:
    """Conclusion kind, premise count and local check of one rule."""

    kind: SequentKind
    arity: int
    check: Schema


RULES: Dict[Calculus, Dict[RuleName, RuleSchema]] = {
    Calculus.OL: {
        RuleName.AX: RuleSchema(SequentKind.OL, 0, _ol_ax),
        RuleName.EX: RuleSchema(SequentKind.OL, 1, _ol_ex),
        RuleName.CW: RuleSchema(SequentKind.OL, 1, _ol_cw),
        RuleName.OR1: RuleSchema(SequentKind.OL, 1, _or_left(SequentKind.OL, 0)),
        RuleName.OR2: RuleSchema(SequentKind.OL, 1, _or_left(SequentKind.OL, 1)),
        RuleName.AND: RuleSchema(SequentKind.OL, 2, _and_left(SequentKind.OL)),
        RuleName.TOP: RuleSchema(SequentKind.OL, 0, _top_left),
    },
    Calculus.OLF0: {
        RuleName.AND_RR: RuleSchema(SequentKind.RR, 2, _and_left(SequentKind.RR)),
        RuleName.TOP_RR: RuleSchema(SequentKind.RR, 0, _top_left),
        RuleName.REAC_RR: RuleSchema(SequentKind.RR, 1, _reac_rr),
        RuleName.AND_RV: RuleSchema(SequentKind.RV, 2, _and_rv),
        RuleName.TOP_RV: RuleSchema(SequentKind.RV, 0, _top_rv),
        RuleName.REAC_RV: RuleSchema(SequentKind.RV, 1, _reac_rv),
        RuleName.CW_L: RuleSchema(SequentKind.LL, 1, _cw_l),
        RuleName.CW_R: RuleSchema(SequentKind.LL, 1, _cw_r),
        RuleName.D_L: RuleSchema(SequentKind.LL, 1, _d_l),
        RuleName.D_R: RuleSchema(SequentKind.LL, 1, _d_r),
        RuleName.AX: RuleSchema(SequentKind.FC, 0, _focused_ax),
        RuleName.OR1: RuleSchema(SequentKind.FC, 1, _or_right(0)),
        RuleName.OR2: RuleSchema(SequentKind.FC, 1, _or_right(1)),
        RuleName.REAC_F: RuleSchema(SequentKind.FC, 1, _reac_f),
    },
    Calculus.OLF: {
        RuleName.AND_RR: RuleSchema(SequentKind.RR, 2, _and_left(SequentKind.RR)),
        RuleName.TOP_RR: RuleSchema(SequentKind.RR, 0, _top_left),
        RuleName.AND_RV: RuleSchema(SequentKind.RV, 2, _and_rv),
        RuleName.TOP_RV: RuleSchema(SequentKind.RV, 0, _top_rv),
        RuleName.CW_RR: RuleSchema(SequentKind.RR, 1, _cw_rr),
        RuleName.CW_RV: RuleSchema(SequentKind.RV, 1, _cw_rv),
        RuleName.AX: RuleSchema(SequentKind.FC, 0, _focused_ax),
        RuleName.OR1: RuleSchema(SequentKind.FC, 1, _or_right(0)),
        RuleName.OR2: RuleSchema(SequentKind.FC, 1, _or_right(1)),
        RuleName.REAC_RR: RuleSchema(SequentKind.RR, 1, _reac_rr),
        RuleName.REAC_F: RuleSchema(SequentKind.FC, 1, _reac_f),
        RuleName.D1: RuleSchema(SequentKind.RV, 1, _d1),
        RuleName.D2: RuleSchema(SequentKind.RV, 1, _d2),
    },
}


def check_node(node: Proof, path: Sequence[int] = ()) -> None:
    """Check one node against its rule schema, trusting nothing about its premises.

    Raises:
        ProofCheckError: the node does not instantiate its rule.
    """
    rules = RULES[node.calculus]
    if node.rule not in rules:
        raise ProofCheckError(f"rule {node.rule.value} does not belong to {node.calculus.value}", path)
    schema = rules[node.rule]
    if node.conclusion.kind is not schema.kind:
        raise ProofCheckError(
            f"rule {node.rule.value} concludes {schema.kind.value} sequents, not {node.conclusion.kind.value}",
            path,
        )
    if len(node.premises) != schema.arity:
        raise ProofCheckError(
            f"rule {node.rule.value} takes {schema.arity} premise(s), found {len(node.premises)}", path
        )
    for i, premise in enumerate(node.premises):
        if premise.calculus is not node.calculus:
            raise ProofCheckError(
                f"premise {i} belongs to {premise.calculus.value}, not {node.calculus.value}", path
            )
    reason = schema.check(node.conclusion, [q.conclusion for q in node.premises])
    if reason is not None:
        raise ProofCheckError(f"{node.rule.value}: {reason}", path)


def check(p: Proof) -> Sequent:
    """Check every node of a proof; a sub-proof shared between branches is checked once.

    Args:
        p: the proof; all of its nodes must belong to the same calculus.

    Returns:
        The conclusion of the proof.

    Raises:
        ProofCheckError: the first offending node, with its path from the root.
    """
    for path, node in iter_distinct_nodes(p):
        check_node(node, path)
    return p.conclusion
