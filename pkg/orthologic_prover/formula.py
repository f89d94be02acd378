"""Orthologic formulas in negation normal form."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, List, Set, Tuple

from .exceptions import ReservedTokenError

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
RESERVED_TOKENS = frozenset({"T", "F"})


class Polarity(str, Enum):
    """Polarity of the main connective."""

    SYNCHRONOUS = "synchronous"
    ASYNCHRONOUS = "asynchronous"


class Context(str, Enum):
    """Position of a sub-formula occurrence relative to its parent."""

    ROOT = "root"
    BELOW_AND = "below_and"
    BELOW_OR = "below_or"


@dataclass(frozen=True, eq=False)
class Formula:
    """Base class of formulas.

    Formulas are immutable and compared structurally. The hash is computed once at
    construction so that formulas are cheap keys for memo tables.
    """

    def _key(self) -> tuple:
        return ()

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(self) is not type(other) or self._hash != other._hash:  # type: ignore[attr-defined]
            return False
        return self._key() == other._key()  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def __str__(self) -> str:
        return format_formula(self)


def _check_identifier(name: str) -> None:
    if name in RESERVED_TOKENS:
        raise ReservedTokenError(f"'{name}' is reserved for a constant and cannot name a variable")
    if not IDENTIFIER.fullmatch(name):
        raise ReservedTokenError(f"'{name}' is not a valid variable name")


@dataclass(frozen=True, eq=False)
class Var(Formula):
    """A variable X."""

    name: str

    def __post_init__(self):
        _check_identifier(self.name)
        object.__setattr__(self, "_hash", hash(("var", self.name)))

    def _key(self) -> tuple:
        return (self.name,)


@dataclass(frozen=True, eq=False)
class NegVar(Formula):
    """A negated variable ¬X."""

    name: str

    def __post_init__(self):
        _check_identifier(self.name)
        object.__setattr__(self, "_hash", hash(("negvar", self.name)))

    def _key(self) -> tuple:
        return (self.name,)


@dataclass(frozen=True, eq=False)
class And(Formula):
    """A conjunction A ∧ B."""

    left: Formula
    right: Formula

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("and", self.left._hash, self.right._hash)))  # type: ignore

    def _key(self) -> tuple:
        return (self.left, self.right)


@dataclass(frozen=True, eq=False)
class Or(Formula):
    """A disjunction A ∨ B."""

    left: Formula
    right: Formula

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("or", self.left._hash, self.right._hash)))  # type: ignore

    def _key(self) -> tuple:
        return (self.left, self.right)


@dataclass(frozen=True, eq=False)
class Top(Formula):
    """The constant ⊤."""

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash("top"))


@dataclass(frozen=True, eq=False)
class Bot(Formula):
    """The constant ⊥."""

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash("bot"))


TOP = Top()
BOT = Bot()


@lru_cache(maxsize=65536)
def negate(f: Formula) -> Formula:
    """De Morgan dual of a formula; an involution."""
    if isinstance(f, Var):
        return NegVar(f.name)
    if isinstance(f, NegVar):
        return Var(f.name)
    if isinstance(f, And):
        return Or(negate(f.left), negate(f.right))
    if isinstance(f, Or):
        return And(negate(f.left), negate(f.right))
    if isinstance(f, Top):
        return BOT
    return TOP


def polarity(f: Formula) -> Polarity:
    """X, ⊥ and A∨B are synchronous; ¬X, ⊤ and A∧B are asynchronous."""
    if isinstance(f, (Var, Bot, Or)):
        return Polarity.SYNCHRONOUS
    return Polarity.ASYNCHRONOUS


def is_synchronous(f: Formula) -> bool:
    return isinstance(f, (Var, Bot, Or))


def is_asynchronous(f: Formula) -> bool:
    return not isinstance(f, (Var, Bot, Or))


def is_negated_variable(f: Formula) -> bool:
    return isinstance(f, NegVar)


def is_literal(f: Formula) -> bool:
    return isinstance(f, (Var, NegVar))


def is_focusable(f: Formula) -> bool:
    """Side condition (s) or (n): allowed on the left of ⇑ and ⇓."""
    return isinstance(f, (Var, Bot, Or, NegVar))


@lru_cache(maxsize=65536)
def size(f: Formula) -> int:
    """Number of symbols; literals and constants count 1."""
    if isinstance(f, (And, Or)):
        return 1 + size(f.left) + size(f.right)
    return 1


@lru_cache(maxsize=65536)
def phi(f: Formula) -> int:
    """Termination weight of a formula: ∨ doubles both sides, ∧ adds them."""
    if isinstance(f, And):
        return phi(f.left) + phi(f.right)
    if isinstance(f, Or):
        return 2 * phi(f.left) + 2 * phi(f.right)
    return 1


def subformula_list(f: Formula) -> List[Formula]:
    """Distinct sub-formulas of f, children before parents, in first-visit order."""
    seen: Dict[Formula, None] = {}
    stack: List[Tuple[Formula, bool]] = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        if node in seen:
            continue
        if expanded or not isinstance(node, (And, Or)):
            seen[node] = None
            continue
        stack.append((node, True))
        stack.append((node.right, False))
        stack.append((node.left, False))
    return list(seen)


def subformulas(f: Formula) -> FrozenSet[Formula]:
    return frozenset(subformula_list(f))


def variables(f: Formula) -> FrozenSet[str]:
    return frozenset(g.name for g in subformula_list(f) if isinstance(g, (Var, NegVar)))


def contexted_subformulas(f: Formula) -> Set[Tuple[Formula, Context]]:
    """Every sub-formula occurrence paired with the connective right above it.

    Args:
        f: the root formula; it is the only occurrence tagged ``Context.ROOT``.

    Returns:
        The deduplicated set of (sub-formula, context) pairs.
    """
    result: Set[Tuple[Formula, Context]] = {(f, Context.ROOT)}
    stack: List[Formula] = [f]
    visited: Set[Formula] = set()
    while stack:
        node = stack.pop()
        if node in visited or not isinstance(node, (And, Or)):
            continue
        visited.add(node)
        context = Context.BELOW_AND if isinstance(node, And) else Context.BELOW_OR
        for child in (node.left, node.right):
            result.add((child, context))
            stack.append(child)
    return result


_OR_LEVEL, _AND_LEVEL, _ATOM_LEVEL = 0, 1, 2


def _level(f: Formula) -> int:
    if isinstance(f, Or):
        return _OR_LEVEL
    if isinstance(f, And):
        return _AND_LEVEL
    return _ATOM_LEVEL


def format_formula(f: Formula) -> str:
    """Render a formula in the ASCII grammar with minimal parentheses.

    ``&`` binds tighter than ``|`` and both associate to the left, so only
    right-nested operands of the same connective and ``|`` below ``&`` need
    parentheses.
    """
    if isinstance(f, Var):
        return f.name
    if isinstance(f, NegVar):
        return f"~{f.name}"
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Bot):
        return "F"
    assert isinstance(f, (And, Or))
    level = _level(f)
    left = format_formula(f.left)
    right = format_formula(f.right)
    if _level(f.left) < level:
        left = f"({left})"
    if _level(f.right) <= level:
        right = f"({right})"
    operator = "|" if isinstance(f, Or) else "&"
    return f"{left} {operator} {right}"
