"""Constructions on plain OL proofs.

Covers axiom expansion, inversion of the ∧ rule, the restriction of weakening
to contracted disjunctions, and erasure of focused proofs back to OL.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .exceptions import SchemaMismatchError, UnprovableSequentError
from .formula import And, Bot, Formula, NegVar, Or, Top, Var, format_formula, is_focusable, negate
from .helpers.recursion_helper import deep_recursion
from .proofs import Calculus, Proof, RuleName, Sequent, SequentKind, format_sequent, ol


def node(rule: RuleName, conclusion: Sequent, *premises: Proof) -> Proof:
    return Proof(Calculus.OL, rule, conclusion, tuple(premises))


def ex(p: Proof) -> Proof:
    return node(RuleName.EX, ol(p.conclusion.b, p.conclusion.a), p)


def or_left(p: Proof, disjunction: Or) -> Proof:
    """or1 or or2 on the first position, depending on which disjunct p proves."""
    if p.conclusion.a == disjunction.left:
        return node(RuleName.OR1, ol(disjunction, p.conclusion.b), p)
    if p.conclusion.a == disjunction.right:
        return node(RuleName.OR2, ol(disjunction, p.conclusion.b), p)
    raise SchemaMismatchError(f"{format_formula(p.conclusion.a)} is not a disjunct of {format_formula(disjunction)}")


def ax_expand(a: Formula) -> Proof:
    """Proof of ⊢ ¬A, A using variable axioms only."""
    if isinstance(a, Var):
        return node(RuleName.AX, ol(negate(a), a))
    if isinstance(a, NegVar):
        return ex(ax_expand(negate(a)))
    if isinstance(a, Top):
        return ex(node(RuleName.TOP, ol(a, negate(a))))
    if isinstance(a, Bot):
        return node(RuleName.TOP, ol(negate(a), a))
    if isinstance(a, And):
        # ⊢ ¬A1∨¬A2, A1∧A2 from ⊢ A_i, ¬A1∨¬A2
        na = negate(a)
        assert isinstance(na, Or)
        left = ex(or_left(ax_expand(a.left), na))
        right = ex(or_left(ax_expand(a.right), na))
        return ex(node(RuleName.AND, ol(a, na), left, right))
    assert isinstance(a, Or)
    # ⊢ ¬A1∧¬A2, A1∨A2 from ⊢ ¬A_i, A1∨A2
    left = ex(or_left(ex(ax_expand(a.left)), a))
    right = ex(or_left(ex(ax_expand(a.right)), a))
    return node(RuleName.AND, ol(negate(a), a), left, right)


def _at(s: Sequent, position: int) -> Formula:
    return s.a if position == 0 else s.b


def _replace(s: Sequent, position: int, f: Formula) -> Sequent:
    return ol(f, s.b) if position == 0 else ol(s.a, f)


def reverse_and(p: Proof, position: int = 0) -> Tuple[Proof, Proof]:
    """Invert the ∧ rule: proofs of ⊢ A, C and ⊢ B, C from a proof of ⊢ A∧B, C.

    Args:
        p: OL proof whose conclusion holds a conjunction at ``position``.
        position: 0 for the first formula of the sequent, 1 for the second.

    Raises:
        SchemaMismatchError: the formula at ``position`` is not a conjunction.
    """
    return reverse_conjunct(p, position, 0), reverse_conjunct(p, position, 1)


def reverse_conjunct(p: Proof, position: int, index: int) -> Proof:
    """Invert the ∧ rule on one occurrence, keeping one conjunct.

    Args:
        p: OL proof whose conclusion holds a conjunction A1∧A2 at ``position``.
        position: 0 for the first formula of the sequent, 1 for the second.
        index: 0 to keep A1, 1 to keep A2.

    Returns:
        A proof of the same sequent with that occurrence replaced by the kept conjunct.

    Raises:
        SchemaMismatchError: the formula at ``position`` is not a conjunction.
    """
    conj = _at(p.conclusion, position)
    if not isinstance(conj, And):
        raise SchemaMismatchError(f"{format_sequent(p.conclusion)} has no conjunction at position {position}")
    with deep_recursion():
        return _reverse(p, position, conj, index)


def _reverse(p: Proof, position: int, conj: And, index: int) -> Proof:
    s = p.conclusion
    kept = (conj.left, conj.right)[index]
    target = _replace(s, position, kept)
    rule = p.rule
    if rule is RuleName.AX:
        if position == 1:
            # ⊢ ¬A1∨¬A2, A_i
            return or_left(ax_expand(kept), s.a)  # type: ignore[arg-type]
        return ex(or_left(ax_expand(kept), s.b))  # type: ignore[arg-type]
    if rule is RuleName.EX:
        return node(RuleName.EX, target, _reverse(p.premises[0], 1 - position, conj, index))
    if rule is RuleName.CW:
        if position == 1:
            return node(RuleName.CW, target, p.premises[0])
        once = _reverse(p.premises[0], 0, conj, index)
        twice = _reverse(once, 1, conj, index)
        return node(RuleName.CW, target, twice)
    if rule in (RuleName.OR1, RuleName.OR2):
        return node(rule, target, _reverse(p.premises[0], 1, conj, index))
    if rule is RuleName.AND:
        if position == 0 and s.a == conj:
            return p.premises[index]
        return node(RuleName.AND, target, *(_reverse(q, 1, conj, index) for q in p.premises))
    if rule is RuleName.TOP:
        return node(RuleName.TOP, target)
    raise SchemaMismatchError(f"rule {rule.value} is not an OL rule")


def is_cw_restricted(p: Proof) -> bool:
    """Whether every cw contracts a disjunction and weakens neither ⊤ nor a conjunction."""
    stack = [p]
    while stack:
        q = stack.pop()
        if q.rule is RuleName.CW:
            if not isinstance(q.conclusion.a, Or) or isinstance(q.conclusion.b, (Top, And)):
                return False
        stack.extend(q.premises)
    return True


def restrict_cw(p: Proof) -> Proof:
    """Rewrite an OL proof so that it is cw-restricted, keeping its conclusion.

    Raises:
        UnprovableSequentError: a contraction on a literal or ⊥ was reached.
    """
    with deep_recursion():
        return _restrict(p, {})


def _restrict(p: Proof, cache: Dict[int, Proof]) -> Proof:
    key = id(p)
    if key in cache:
        return cache[key]
    premises = tuple(_restrict(q, cache) for q in p.premises)
    if p.rule is RuleName.CW:
        result = _cw(p.conclusion.a, p.conclusion.b, premises[0])
    elif premises == p.premises:
        result = p
    else:
        result = Proof(p.calculus, p.rule, p.conclusion, premises)
    cache[key] = result
    return result


def _cw(a: Formula, b: Formula, p: Proof) -> Proof:
    # p is a cw-restricted proof of ⊢ A, A; the result proves ⊢ A, B and is cw-restricted
    if isinstance(a, Or):
        return _cw_weaken(a, b, p)
    if isinstance(a, Top):
        return node(RuleName.TOP, ol(a, b))
    if isinstance(a, And):
        halves = []
        for index, part in enumerate((a.left, a.right)):
            diagonal = reverse_conjunct(reverse_conjunct(p, 0, index), 1, index)
            halves.append(_cw(part, b, diagonal))
        return node(RuleName.AND, ol(a, b), *halves)
    raise UnprovableSequentError(f"⊢ {format_formula(a)}, {format_formula(a)} has no proof")


def _cw_weaken(a: Or, b: Formula, p: Proof) -> Proof:
    if is_focusable(b):
        return node(RuleName.CW, ol(a, b), p)
    if isinstance(b, Top):
        return ex(node(RuleName.TOP, ol(b, a)))
    assert isinstance(b, And)
    left = ex(_cw_weaken(a, b.left, p))
    right = ex(_cw_weaken(a, b.right, p))
    return ex(node(RuleName.AND, ol(b, a), left, right))


def weaken_valid(p: Proof, b: Formula) -> Proof:
    """From a proof of ⊢ A, A build a cw-restricted proof of ⊢ A, B."""
    s = p.conclusion
    if s.kind is not SequentKind.OL or s.a != s.b:
        raise SchemaMismatchError(f"{format_sequent(s)} is not a diagonal OL sequent")
    with deep_recursion():
        return _cw(s.a, b, restrict_cw(p))


# Rules whose OL image is the erased premise itself.
_IDENTITY_RULES = frozenset({RuleName.REAC_RR, RuleName.REAC_RV, RuleName.D_R, RuleName.REAC_F, RuleName.D2})


def erase(p: Proof) -> Proof:
    """Map an OLf0 or OLf proof to an OL proof of the same pair of formulas."""
    if p.calculus is Calculus.OL:
        return p
    with deep_recursion():
        return _erase(p, {})


erase_olf0 = erase
erase_olf = erase


def _erase(p: Proof, cache: Dict[int, Proof]) -> Proof:
    key = id(p)
    if key in cache:
        return cache[key]
    premises: Tuple[Proof, ...] = tuple(_erase(q, cache) for q in p.premises)
    s = ol(p.conclusion.a, p.conclusion.b)
    rule = p.rule
    if rule in _IDENTITY_RULES:
        result = premises[0]
    elif rule is RuleName.AND_RR:
        result = node(RuleName.AND, s, *premises)
    elif rule is RuleName.TOP_RR:
        result = node(RuleName.TOP, s)
    elif rule is RuleName.AND_RV:
        result = ex(node(RuleName.AND, ol(s.b, s.a), ex(premises[0]), ex(premises[1])))
    elif rule is RuleName.TOP_RV:
        result = ex(node(RuleName.TOP, ol(s.b, s.a)))
    elif rule is RuleName.CW_L:
        result = node(RuleName.CW, s, premises[0])
    elif rule in (RuleName.CW_R, RuleName.CW_RV):
        result = ex(node(RuleName.CW, ol(s.b, s.a), premises[0]))
    elif rule is RuleName.CW_RR:
        result = node(RuleName.CW, s, premises[0])
    elif rule in (RuleName.D_L, RuleName.D1):
        result = ex(premises[0])
    elif rule is RuleName.AX:
        result = node(RuleName.AX, s)
    elif rule in (RuleName.OR1, RuleName.OR2):
        result = ex(node(rule, ol(s.b, s.a), ex(premises[0])))
    else:
        raise SchemaMismatchError(f"rule {rule.value} cannot be erased")
    cache[key] = result
    return result
