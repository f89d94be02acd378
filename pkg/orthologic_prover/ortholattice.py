"""Finite ortholattices: axiom checks, evaluation and countermodel search.

Lattice files list one declaration per line::

    # the two-element Boolean algebra
    element bot
    element top
    leq bot top
    neg bot top

``leq`` pairs are closed under reflexivity and transitivity, so listing the
covering pairs is enough. ``neg p q`` declares both ``neg(p) = q`` and
``neg(q) = p``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

import structlog
from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput

from .exceptions import LatticeError
from .formula import And, Bot, Formula, NegVar, Or, Top, Var, format_formula, variables
from .helpers.logging_helper import log_and_raise_error

LOGGER = structlog.get_logger()

Valuation = Dict[str, str]

LATTICE_GRAMMAR = r"""
    start: _NL* (declaration _NL+)* declaration?

    ?declaration: "element" NAME        -> element
                | "leq" NAME NAME       -> leq
                | "neg" NAME NAME       -> neg

    NAME: /[A-Za-z0-9_]+/
    COMMENT: /#[^\n]*/
    _NL: /(\r?\n)+/

    %import common.WS_INLINE
    %ignore WS_INLINE
    %ignore COMMENT
"""


class FiniteOrtholattice:
    """A finite poset with an orthocomplement, given extensionally.

    Meets, joins and the bounds are computed from ``leq`` once, at construction.
    They are None where the order does not provide them; ``verify_ortholattice``
    reports those gaps.

    Args:
        elements: element names.
        leq: the order, as (lower, upper) pairs.
        neg: the orthocomplement.
        name: display name.
    """

    def __init__(self, elements: Sequence[str], leq: Iterable[Tuple[str, str]], neg: Mapping[str, str], name: str = "lattice"):
        self.name = name
        self.elements: Tuple[str, ...] = tuple(elements)
        self.order: FrozenSet[Tuple[str, str]] = frozenset(leq)
        self.negation: Dict[str, str] = dict(neg)
        self.top = self._bound(upper=True)
        self.bottom = self._bound(upper=False)
        self._meets: Dict[Tuple[str, str], Optional[str]] = {}
        self._joins: Dict[Tuple[str, str], Optional[str]] = {}
        for p, q in itertools.product(self.elements, repeat=2):
            self._meets[(p, q)] = self._extremum([r for r in self.elements if self.leq(r, p) and self.leq(r, q)], True)
            self._joins[(p, q)] = self._extremum([r for r in self.elements if self.leq(p, r) and self.leq(q, r)], False)

    def __repr__(self) -> str:
        return f"FiniteOrtholattice({self.name!r}, {len(self.elements)} elements)"

    def leq(self, p: str, q: str) -> bool:
        return (p, q) in self.order

    def _bound(self, upper: bool) -> Optional[str]:
        for p in self.elements:
            if all(self.leq(q, p) if upper else self.leq(p, q) for q in self.elements):
                return p
        return None

    def _extremum(self, candidates: List[str], greatest: bool) -> Optional[str]:
        for p in candidates:
            if all(self.leq(q, p) if greatest else self.leq(p, q) for q in candidates):
                return p
        return None

    def meet(self, p: str, q: str) -> str:
        r = self._meets.get((p, q))
        if r is None:
            raise LatticeError(f"{p} and {q} have no meet in {self.name}")
        return r

    def join(self, p: str, q: str) -> str:
        r = self._joins.get((p, q))
        if r is None:
            raise LatticeError(f"{p} and {q} have no join in {self.name}")
        return r

    def neg(self, p: str) -> str:
        if p not in self.negation:
            raise LatticeError(f"{p} has no orthocomplement in {self.name}")
        return self.negation[p]

    def has_meet(self, p: str, q: str) -> bool:
        return self._meets.get((p, q)) is not None

    def has_join(self, p: str, q: str) -> bool:
        return self._joins.get((p, q)) is not None


class Axiom(str, Enum):
    REFLEXIVITY = "reflexivity"
    ANTISYMMETRY = "antisymmetry"
    TRANSITIVITY = "transitivity"
    TOP = "top"
    BOTTOM = "bottom"
    MEET = "meet"
    JOIN = "join"
    COMPLEMENT_TOTAL = "complement_total"
    INVOLUTION = "involution"
    ORDER_REVERSING = "order_reversing"
    EXCLUDED_MIDDLE = "excluded_middle"


@dataclass(frozen=True)
class Violation:
    """An axiom and the elements that break it."""

    axiom: Axiom
    witnesses: Tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.axiom.value}: {', '.join(self.witnesses)}" if self.witnesses else self.axiom.value


def verify_ortholattice(lattice: FiniteOrtholattice) -> List[Violation]:
    """Check that the lattice is a bounded lattice with an orthocomplement.

    Returns:
        The violations found, empty when every axiom holds.
    """
    violations: List[Violation] = []
    elements = lattice.elements
    for p in elements:
        if not lattice.leq(p, p):
            violations.append(Violation(Axiom.REFLEXIVITY, (p,)))
    for p, q in itertools.product(elements, repeat=2):
        if p != q and lattice.leq(p, q) and lattice.leq(q, p):
            violations.append(Violation(Axiom.ANTISYMMETRY, (p, q)))
        if not lattice.has_meet(p, q):
            violations.append(Violation(Axiom.MEET, (p, q)))
        if not lattice.has_join(p, q):
            violations.append(Violation(Axiom.JOIN, (p, q)))
    for p, q, r in itertools.product(elements, repeat=3):
        if lattice.leq(p, q) and lattice.leq(q, r) and not lattice.leq(p, r):
            violations.append(Violation(Axiom.TRANSITIVITY, (p, q, r)))
    if lattice.top is None:
        violations.append(Violation(Axiom.TOP))
    if lattice.bottom is None:
        violations.append(Violation(Axiom.BOTTOM))
    complemented = [p for p in elements if lattice.negation.get(p) in elements]
    violations.extend(Violation(Axiom.COMPLEMENT_TOTAL, (p,)) for p in elements if p not in complemented)
    for p in complemented:
        if lattice.negation.get(lattice.neg(p)) != p:
            violations.append(Violation(Axiom.INVOLUTION, (p,)))
        if lattice.top is not None and lattice.has_join(p, lattice.neg(p)):
            if lattice.join(p, lattice.neg(p)) != lattice.top:
                violations.append(Violation(Axiom.EXCLUDED_MIDDLE, (p,)))
    for p, q in itertools.product(complemented, repeat=2):
        if lattice.leq(p, q) and not lattice.leq(lattice.neg(q), lattice.neg(p)):
            violations.append(Violation(Axiom.ORDER_REVERSING, (p, q)))
    return violations


def evaluate(f: Formula, valuation: Mapping[str, str], lattice: FiniteOrtholattice) -> str:
    """Value of a formula, with ∧ as meet, ∨ as join and ¬X as the orthocomplement of X.

    Raises:
        LatticeError: a variable has no value, or a meet or join is missing.
    """
    if isinstance(f, (Var, NegVar)):
        if f.name not in valuation:
            raise LatticeError(f"variable {f.name} has no value")
        value = valuation[f.name]
        return value if isinstance(f, Var) else lattice.neg(value)
    if isinstance(f, Top):
        return _bound(lattice.top, "top", lattice)
    if isinstance(f, Bot):
        return _bound(lattice.bottom, "bottom", lattice)
    left = evaluate(f.left, valuation, lattice)
    right = evaluate(f.right, valuation, lattice)
    if isinstance(f, And):
        return lattice.meet(left, right)
    assert isinstance(f, Or)
    return lattice.join(left, right)


def _bound(value: Optional[str], which: str, lattice: FiniteOrtholattice) -> str:
    if value is None:
        raise LatticeError(f"{lattice.name} has no {which} element")
    return value


def valuations(names: Iterable[str], lattice: FiniteOrtholattice) -> Iterable[Valuation]:
    """Every valuation of the given variables, in a fixed order."""
    ordered = sorted(set(names))
    for values in itertools.product(lattice.elements, repeat=len(ordered)):
        yield dict(zip(ordered, values))


def is_countermodel(a: Formula, b: Formula, valuation: Mapping[str, str], lattice: FiniteOrtholattice) -> bool:
    """Whether the valuation falsifies ⊢ a, b, read as ¬a ≤ b."""
    return not lattice.leq(lattice.neg(evaluate(a, valuation, lattice)), evaluate(b, valuation, lattice))


def refute_sequent(a: Formula, b: Formula, lattice: FiniteOrtholattice) -> Optional[Valuation]:
    """First valuation falsifying ⊢ a, b in the lattice, or None."""
    for valuation in valuations(variables(a) | variables(b), lattice):
        if is_countermodel(a, b, valuation, lattice):
            return valuation
    return None


def refute_validity(f: Formula, lattice: FiniteOrtholattice) -> Optional[Valuation]:
    """First valuation under which f is not the top element, or None."""
    top = _bound(lattice.top, "top", lattice)
    for valuation in valuations(variables(f), lattice):
        if evaluate(f, valuation, lattice) != top:
            LOGGER.debug("Countermodel found", formula=format_formula(f), lattice=lattice.name, valuation=valuation)
            return valuation
    return None


def from_covers(
    elements: Sequence[str], covers: Iterable[Tuple[str, str]], neg: Mapping[str, str], name: str = "lattice"
) -> FiniteOrtholattice:
    """Lattice whose order is the reflexive-transitive closure of ``covers``."""
    order: Set[Tuple[str, str]] = {(p, p) for p in elements}
    order.update(covers)
    for k in elements:
        for i in elements:
            if (i, k) not in order:
                continue
            for j in elements:
                if (k, j) in order:
                    order.add((i, j))
    return FiniteOrtholattice(elements, order, neg, name)


def boolean2() -> FiniteOrtholattice:
    """The two-element Boolean algebra."""
    return from_covers(["bot", "top"], [("bot", "top")], {"bot": "top", "top": "bot"}, "boolean2")


def hexagon() -> FiniteOrtholattice:
    """The six-element ortholattice that is not orthomodular.

    Two chains bot < ny < x < top and bot < nx < y < top, with x and nx, y and
    ny, bot and top orthocomplements of each other.
    """
    covers = [("bot", "ny"), ("ny", "x"), ("x", "top"), ("bot", "nx"), ("nx", "y"), ("y", "top")]
    neg = {"bot": "top", "top": "bot", "x": "nx", "nx": "x", "y": "ny", "ny": "y"}
    return from_covers(["bot", "nx", "ny", "x", "y", "top"], covers, neg, "hexagon")


BUILTIN_LATTICES = {"hexagon": hexagon, "boolean2": boolean2}


class LatticeTransformer(Transformer):
    def element(self, children):
        return ("element", str(children[0]))

    def leq(self, children):
        return ("leq", str(children[0]), str(children[1]))

    def neg(self, children):
        return ("neg", str(children[0]), str(children[1]))

    def start(self, children):
        return children


_LATTICE_PARSER = None


def parse_lattice(text: str, name: str = "lattice") -> FiniteOrtholattice:
    """Build a lattice from its text description.

    Raises:
        LatticeError: the text violates the grammar or names an undeclared element.
    """
    global _LATTICE_PARSER
    if _LATTICE_PARSER is None:
        _LATTICE_PARSER = Lark(LATTICE_GRAMMAR, parser="lalr", transformer=LatticeTransformer())
    try:
        declarations = _LATTICE_PARSER.parse(text)
    except UnexpectedInput as e:
        raise LatticeError(f"syntax error in lattice description at line {e.line}, column {e.column}") from e
    elements: List[str] = []
    covers: List[Tuple[str, str]] = []
    neg: Dict[str, str] = {}
    for declaration in declarations:
        if declaration[0] == "element":
            if declaration[1] not in elements:
                elements.append(declaration[1])
            continue
        for element in declaration[1:]:
            if element not in elements:
                raise LatticeError(f"element {element} is used before it is declared")
        if declaration[0] == "leq":
            covers.append((declaration[1], declaration[2]))
        else:
            neg[declaration[1]] = declaration[2]
            neg[declaration[2]] = declaration[1]
    if not elements:
        raise LatticeError("a lattice needs at least one element")
    return from_covers(elements, covers, neg, name)


def load_lattice(spec: str) -> FiniteOrtholattice:
    """A built-in lattice by name, or a lattice read from a file path.

    Raises:
        LatticeError: the file cannot be read or parsed.
    """
    if spec in BUILTIN_LATTICES:
        return BUILTIN_LATTICES[spec]()
    try:
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        log_and_raise_error(f"Unable to read lattice file {spec}: {e.strerror}", LatticeError, path=spec)
    return parse_lattice(text, name=spec)
