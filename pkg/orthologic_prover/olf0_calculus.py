"""Rule builders and admissible structural rules of the first focused system.

Builders compute the conclusion of a rule application from its premises, so
callers only name the rule. The rules shared with the optimised system take a
``calculus`` argument.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional, Sequence

from .exceptions import SchemaMismatchError, UnprovableSequentError
from .formula import TOP, And, Bot, Formula, NegVar, Or, Top, Var, format_formula, is_focusable, is_synchronous, negate
from .helpers.recursion_helper import deep_recursion
from .proofs import Calculus, Proof, RuleName, Sequent, SequentKind, fc, format_sequent, ll, rr, rv

OLF0 = Calculus.OLF0


def _expect(p: Proof, kind: SequentKind) -> Sequent:
    if p.conclusion.kind is not kind:
        raise SchemaMismatchError(f"expected a {kind.value} sequent, got {format_sequent(p.conclusion)}")
    return p.conclusion


def and_rr(p1: Proof, p2: Proof, calculus: Calculus = OLF0) -> Proof:
    s1, s2 = _expect(p1, SequentKind.RR), _expect(p2, SequentKind.RR)
    return Proof(calculus, RuleName.AND_RR, rr(And(s1.a, s2.a), s1.b), (p1, p2))


def top_rr(c: Formula, calculus: Calculus = OLF0) -> Proof:
    return Proof(calculus, RuleName.TOP_RR, rr(TOP, c))


def reac_rr(p: Proof, calculus: Calculus = OLF0) -> Proof:
    s = _expect(p, SequentKind.RV)
    return Proof(calculus, RuleName.REAC_RR, rr(s.a, s.b), (p,))


def and_rv(p1: Proof, p2: Proof, calculus: Calculus = OLF0) -> Proof:
    s1, s2 = _expect(p1, SequentKind.RV), _expect(p2, SequentKind.RV)
    return Proof(calculus, RuleName.AND_RV, rv(s1.a, And(s1.b, s2.b)), (p1, p2))


def top_rv(a: Formula, calculus: Calculus = OLF0) -> Proof:
    return Proof(calculus, RuleName.TOP_RV, rv(a, TOP))


def reac_rv(p: Proof) -> Proof:
    s = _expect(p, SequentKind.LL)
    return Proof(OLF0, RuleName.REAC_RV, rv(s.a, s.b), (p,))


def cw_l(p: Proof, weakened: Formula) -> Proof:
    """⊢ C, A ⇑ from ⊢ C, C ⇑."""
    s = _expect(p, SequentKind.LL)
    return Proof(OLF0, RuleName.CW_L, ll(s.a, weakened), (p,))


def cw_r(p: Proof, weakened: Formula) -> Proof:
    """⊢ A, C ⇑ from ⊢ C, C ⇑."""
    s = _expect(p, SequentKind.LL)
    return Proof(OLF0, RuleName.CW_R, ll(weakened, s.a), (p,))


def d_l(p: Proof) -> Proof:
    """⊢ A, C ⇑ from ⊢ C ⇓ A."""
    s = _expect(p, SequentKind.FC)
    return Proof(OLF0, RuleName.D_L, ll(s.b, s.a), (p,))


def d_r(p: Proof) -> Proof:
    """⊢ C, A ⇑ from ⊢ C ⇓ A."""
    s = _expect(p, SequentKind.FC)
    return Proof(OLF0, RuleName.D_R, ll(s.a, s.b), (p,))


def ax(x: Var, calculus: Calculus = OLF0) -> Proof:
    return Proof(calculus, RuleName.AX, fc(NegVar(x.name), x))


def vee(p: Proof, disjunction: Or, index: int, calculus: Calculus = OLF0) -> Proof:
    """⊢ C ⇓ A1∨A2 from ⊢ C ⇓ A_index (or1 for index 0, or2 for index 1)."""
    s = _expect(p, SequentKind.FC)
    if s.b != (disjunction.left, disjunction.right)[index]:
        raise SchemaMismatchError(f"{format_formula(s.b)} is not disjunct {index} of {format_formula(disjunction)}")
    rule = RuleName.OR1 if index == 0 else RuleName.OR2
    return Proof(calculus, rule, fc(s.a, disjunction), (p,))


def reac_f(p: Proof, calculus: Calculus = OLF0) -> Proof:
    s = _expect(p, SequentKind.RV)
    return Proof(calculus, RuleName.REAC_F, fc(s.a, s.b), (p,))


def swap_ll(p: Proof) -> Proof:
    """Mirror an LL proof by swapping its last rule; the size is unchanged."""
    s = _expect(p, SequentKind.LL)
    mirror = {
        RuleName.CW_L: RuleName.CW_R,
        RuleName.CW_R: RuleName.CW_L,
        RuleName.D_L: RuleName.D_R,
        RuleName.D_R: RuleName.D_L,
    }
    if p.rule not in mirror:
        raise SchemaMismatchError(f"rule {p.rule.value} does not conclude an LL sequent")
    return Proof(p.calculus, mirror[p.rule], ll(s.b, s.a), p.premises)


def focus_of_diagonal(p: Proof) -> Proof:
    """The proof of ⊢ A ⇓ A contained in a proof of ⊢ A, A ⇑."""
    s = _expect(p, SequentKind.LL)
    if s.a != s.b:
        raise SchemaMismatchError(f"{format_sequent(s)} is not diagonal")
    node = p
    while node.rule in (RuleName.CW_L, RuleName.CW_R):
        node = node.premises[0]
    if node.rule not in (RuleName.D_L, RuleName.D_R):
        raise SchemaMismatchError(f"rule {node.rule.value} does not conclude an LL sequent")
    return node.premises[0]


class AdmissibleRule(str, Enum):
    """Admissible rules on ⊢ ⇑ A, B sequents."""

    TOP_R2 = "TopR2"
    AND_R2 = "AndR2"
    REAC_SWAP = "ReacSwap"
    EXCHANGE_RR = "ExchangeRR"


def top_r2(c: Formula) -> Proof:
    """⊢ ⇑ C, ⊤ by induction on C."""
    if isinstance(c, And):
        return and_rr(top_r2(c.left), top_r2(c.right))
    if isinstance(c, Top):
        return top_rr(TOP)
    return reac_rr(top_rv(c))


def and_r2(p1: Proof, p2: Proof) -> Proof:
    """⊢ ⇑ C, A∧B from ⊢ ⇑ C, A and ⊢ ⇑ C, B."""
    s1, s2 = _expect(p1, SequentKind.RR), _expect(p2, SequentKind.RR)
    if s1.a != s2.a:
        raise SchemaMismatchError(f"{format_sequent(s1)} and {format_sequent(s2)} differ on the left")
    c = s1.a
    if isinstance(c, And):
        return and_rr(and_r2(p1.premises[0], p2.premises[0]), and_r2(p1.premises[1], p2.premises[1]))
    if isinstance(c, Top):
        return top_rr(And(s1.b, s2.b))
    return reac_rr(and_rv(p1.premises[0], p2.premises[0]))


def reac_swap(p: Proof) -> Proof:
    """⊢ ⇑ C, A from ⊢ A ⇑ C, by induction on C."""
    s = _expect(p, SequentKind.RV)
    c = s.b
    if isinstance(c, And):
        return and_rr(reac_swap(p.premises[0]), reac_swap(p.premises[1]))
    if isinstance(c, Top):
        return top_rr(s.a)
    return reac_rr(reac_rv(swap_ll(p.premises[0])))


def exchange_rr(p: Proof) -> Proof:
    """⊢ ⇑ C, A from ⊢ ⇑ A, C, by induction on the proof."""
    s = _expect(p, SequentKind.RR)
    if p.rule is RuleName.AND_RR:
        return and_r2(exchange_rr(p.premises[0]), exchange_rr(p.premises[1]))
    if p.rule is RuleName.TOP_RR:
        return top_r2(s.b)
    if p.rule is RuleName.REAC_RR:
        return reac_swap(p.premises[0])
    raise SchemaMismatchError(f"rule {p.rule.value} does not conclude an RR sequent")


def adm_rr(rule: AdmissibleRule, premises: Sequence[Proof] = (), formula: Optional[Formula] = None) -> Proof:
    """Apply one admissible rule on ⊢ ⇑ A, B sequents.

    Args:
        rule: the admissible rule.
        premises: none for TopR2, two for AndR2, one otherwise.
        formula: the C of ⊢ ⇑ C, ⊤, required by TopR2 only.

    Returns:
        An OLf0 proof of the rule's conclusion.

    Raises:
        SchemaMismatchError: the premises do not match the rule.
    """
    arity = {AdmissibleRule.TOP_R2: 0, AdmissibleRule.AND_R2: 2}.get(rule, 1)
    if len(premises) != arity:
        raise SchemaMismatchError(f"{rule.value} takes {arity} premise(s), got {len(premises)}")
    with deep_recursion():
        if rule is AdmissibleRule.TOP_R2:
            if formula is None:
                raise SchemaMismatchError("TopR2 needs the formula C")
            return top_r2(formula)
        if rule is AdmissibleRule.AND_R2:
            return and_r2(premises[0], premises[1])
        if rule is AdmissibleRule.REAC_SWAP:
            return reac_swap(premises[0])
        return exchange_rr(premises[0])


class Side(str, Enum):
    """Whether the widened formula A becomes A∨B (left) or B∨A (right)."""

    LEFT = "left"
    RIGHT = "right"


class WidenPosition(str, Enum):
    """Where the widened occurrence sits in the premise."""

    RV_RIGHT = "rv_right"  # ⊢ C ⇑ A to ⊢ A∨B ⇑ C, A asynchronous
    RV_LEFT = "rv_left"  # ⊢ A ⇑ C to ⊢ A∨B ⇑ C
    LL = "ll"  # ⊢ A, C ⇑ to ⊢ A∨B, C ⇑
    FC = "fc"  # ⊢ A ⇓ C to ⊢ A∨B ⇓ C


def vee_widen(side: Side, position: WidenPosition, p: Proof, other: Formula) -> Proof:
    """Replace an occurrence of A by a disjunction of A with ``other``.

    Args:
        side: LEFT builds A∨other, RIGHT builds other∨A.
        position: the premise form; RV_RIGHT needs A asynchronous, the others A synchronous.
        p: the premise proof.
        other: the formula joined to A.

    Raises:
        SchemaMismatchError: wrong premise kind or polarity of A.
    """
    kind = {
        WidenPosition.RV_RIGHT: SequentKind.RV,
        WidenPosition.RV_LEFT: SequentKind.RV,
        WidenPosition.LL: SequentKind.LL,
        WidenPosition.FC: SequentKind.FC,
    }[position]
    s = _expect(p, kind)
    a = s.b if position is WidenPosition.RV_RIGHT else s.a
    disjunction = Or(a, other) if side is Side.LEFT else Or(other, a)
    index = 0 if side is Side.LEFT else 1
    if position is WidenPosition.RV_RIGHT:
        if is_synchronous(a):
            raise SchemaMismatchError(f"{format_formula(a)} must be asynchronous")
        return reac_rv(d_l(vee(reac_f(p), disjunction, index)))
    if not is_synchronous(a):
        raise SchemaMismatchError(f"{format_formula(a)} must be synchronous")
    with deep_recursion():
        if position is WidenPosition.RV_LEFT:
            return _widen_rv(p, disjunction, index)
        if position is WidenPosition.LL:
            return _widen_ll(p, disjunction, index)
        return _widen_fc(p, disjunction, index)


def _widen_rv(p: Proof, d: Or, index: int) -> Proof:
    # ⊢ A ⇑ C to ⊢ D ⇑ C
    if p.rule is RuleName.AND_RV:
        return and_rv(_widen_rv(p.premises[0], d, index), _widen_rv(p.premises[1], d, index))
    if p.rule is RuleName.TOP_RV:
        return top_rv(d)
    if p.rule is RuleName.REAC_RV:
        return reac_rv(_widen_ll(p.premises[0], d, index))
    raise SchemaMismatchError(f"rule {p.rule.value} does not conclude an RV sequent")


def _widen_ll(p: Proof, d: Or, index: int) -> Proof:
    # ⊢ A, C ⇑ to ⊢ D, C ⇑
    s = p.conclusion
    if p.rule is RuleName.CW_L:
        widened = _widen_fc(focus_of_diagonal(p.premises[0]), d, index)
        return cw_l(d_r(vee(widened, d, index)), s.b)
    if p.rule is RuleName.CW_R:
        return cw_r(p.premises[0], d)
    if p.rule is RuleName.D_L:
        return d_l(vee(p.premises[0], d, index))
    if p.rule is RuleName.D_R:
        return d_r(_widen_fc(p.premises[0], d, index))
    raise SchemaMismatchError(f"rule {p.rule.value} does not conclude an LL sequent")


def _widen_fc(p: Proof, d: Or, index: int) -> Proof:
    # ⊢ A ⇓ C to ⊢ D ⇓ C
    s = p.conclusion
    if p.rule in (RuleName.OR1, RuleName.OR2):
        assert isinstance(s.b, Or)
        return vee(_widen_fc(p.premises[0], d, index), s.b, 0 if p.rule is RuleName.OR1 else 1)
    if p.rule is RuleName.REAC_F:
        return reac_f(_widen_rv(p.premises[0], d, index))
    raise SchemaMismatchError(f"rule {p.rule.value} cannot focus on a synchronous left formula")


def disjunct_dual(d: Or, index: int) -> Proof:
    """⊢ A1∨A2 ⇑ ¬A_index, from the expansion of the disjunct."""
    a = (d.left, d.right)[index]
    other = (d.left, d.right)[1 - index]
    side = Side.LEFT if index == 0 else Side.RIGHT
    if is_synchronous(a):
        return vee_widen(side, WidenPosition.RV_LEFT, ax_expand_focused(a), other)
    return vee_widen(side, WidenPosition.RV_RIGHT, ax_expand_focused(negate(a)), other)


def ax_expand_focused(a: Formula) -> Proof:
    """Proof of ⊢ A ⇑ ¬A for A synchronous or a negated variable.

    Raises:
        SchemaMismatchError: A is ⊤ or a conjunction.
    """
    if not is_focusable(a):
        raise SchemaMismatchError(f"{format_formula(a)} is neither synchronous nor a negated variable")
    with deep_recursion():
        return _ax_expand_focused(a)


def _ax_expand_focused(a: Formula) -> Proof:
    if isinstance(a, Var):
        return reac_rv(d_l(ax(a)))
    if isinstance(a, NegVar):
        return reac_rv(d_r(ax(Var(a.name))))
    if isinstance(a, Bot):
        return top_rv(a)
    assert isinstance(a, Or)
    return and_rv(disjunct_dual(a, 0), disjunct_dual(a, 1))


def ll_of_diagonal_rr(p: Proof) -> Proof:
    """The ⊢ A, A ⇑ proof above ⊢ ⇑ A, A for A a disjunction.

    Raises:
        UnprovableSequentError: the proof does not have the reaction shape.
    """
    if p.rule is RuleName.REAC_RR and p.premises[0].rule is RuleName.REAC_RV:
        return p.premises[0].premises[0]
    raise UnprovableSequentError(f"{format_sequent(p.conclusion)} is not proved through its LL sequent")
