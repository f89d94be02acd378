"""The optimised focused system: rule builders, translation from OLf0 and cut."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict

import structlog

from .exceptions import SchemaMismatchError, UnprovableSequentError
from .formula import Formula, Or, format_formula, negate
from .helpers.recursion_helper import deep_recursion
from .ol_calculus import erase_olf
from .olf0_calculus import and_rr, and_rv, reac_f, reac_rr, top_rr, top_rv, vee
from .proofs import Calculus, Proof, RuleName, SequentKind, check, format_sequent, rr, rv
from .translation import cut_ol, translate_ol_to_olf0

LOGGER = structlog.get_logger()

OLF = Calculus.OLF


def _focus(p: Proof) -> Proof:
    if p.conclusion.kind is not SequentKind.FC:
        raise SchemaMismatchError(f"expected a focused sequent, got {format_sequent(p.conclusion)}")
    return p


def cw_rr(p: Proof, other: Formula) -> Proof:
    """⊢ ⇑ W, A from ⊢ W ⇓ W with W a disjunction."""
    w = _focus(p).conclusion.a
    return Proof(OLF, RuleName.CW_RR, rr(w, other), (p,))


def cw_rv(p: Proof, left: Formula) -> Proof:
    """⊢ A ⇑ W from ⊢ W ⇓ W with W a disjunction."""
    w = _focus(p).conclusion.a
    return Proof(OLF, RuleName.CW_RV, rv(left, w), (p,))


def d1(p: Proof) -> Proof:
    """⊢ A ⇑ C from ⊢ C ⇓ A."""
    s = _focus(p).conclusion
    return Proof(OLF, RuleName.D1, rv(s.b, s.a), (p,))


def d2(p: Proof) -> Proof:
    """⊢ C ⇑ A from ⊢ C ⇓ A."""
    s = _focus(p).conclusion
    return Proof(OLF, RuleName.D2, rv(s.a, s.b), (p,))


class TranslationTag(str, Enum):
    """Which statement a translated proof establishes for a conclusion (A, B).

    SAME: the same sequent in OLf.
    FOCUS_RIGHT: ⊢ A ⇓ B with B synchronous (LL conclusions only).
    FOCUS_LEFT: ⊢ B ⇓ A with A synchronous (LL conclusions only).
    DIAGONAL_LEFT: ⊢ A ⇓ A with A a disjunction.
    DIAGONAL_RIGHT: ⊢ B ⇓ B with B a disjunction (LL conclusions only).
    """

    SAME = "same"
    FOCUS_RIGHT = "focus_right"
    FOCUS_LEFT = "focus_left"
    DIAGONAL_LEFT = "diagonal_left"
    DIAGONAL_RIGHT = "diagonal_right"


@dataclass(frozen=True)
class TranslationResult:
    """An OLf proof together with the statement it establishes."""

    tag: TranslationTag
    proof: Proof


def _diagonal(p: Proof) -> bool:
    s = p.conclusion
    return s.kind is SequentKind.FC and s.a == s.b and isinstance(s.a, Or)


def translate_olf0_to_olf(p: Proof) -> TranslationResult:
    """Translate an OLf0 proof into OLf, following the shape of its conclusion.

    Args:
        p: a checked OLf0 proof.

    Returns:
        For ⊢ ⇑ A, B always a SAME result. For ⊢ A ⇑ B and ⊢ A ⇓ B either SAME or
        DIAGONAL_LEFT. For ⊢ A, B ⇑ one of the four other tags.

    Raises:
        SchemaMismatchError: p is not an OLf0 proof.
        UnprovableSequentError: p contracts a formula that is not a disjunction.
    """
    if p.calculus is not Calculus.OLF0:
        raise SchemaMismatchError(f"expected an OLf0 proof, got {p.calculus.value}")
    with deep_recursion():
        return _translate(p, {})


def _translate(p: Proof, cache: Dict[int, TranslationResult]) -> TranslationResult:
    key = id(p)
    if key not in cache:
        cache[key] = _translate_node(p, cache)
    return cache[key]


def _same(p: Proof) -> TranslationResult:
    return TranslationResult(TranslationTag.SAME, p)


def _translate_node(p: Proof, cache: Dict[int, TranslationResult]) -> TranslationResult:
    s = p.conclusion
    rule = p.rule
    sub = [_translate(q, cache) for q in p.premises]
    if rule is RuleName.AND_RR:
        return _same(and_rr(sub[0].proof, sub[1].proof, OLF))
    if rule is RuleName.TOP_RR:
        return _same(top_rr(s.b, OLF))
    if rule is RuleName.REAC_RR:
        if sub[0].tag is TranslationTag.SAME:
            return _same(reac_rr(sub[0].proof, OLF))
        return _same(cw_rr(sub[0].proof, s.b))
    if rule is RuleName.AND_RV:
        for result in sub:
            if result.tag is TranslationTag.DIAGONAL_LEFT:
                return result
        return _same(and_rv(sub[0].proof, sub[1].proof, OLF))
    if rule is RuleName.TOP_RV:
        return _same(top_rv(s.a, OLF))
    if rule is RuleName.REAC_RV:
        tag, q = sub[0].tag, sub[0].proof
        if tag is TranslationTag.FOCUS_RIGHT:
            return _same(d2(q))
        if tag is TranslationTag.FOCUS_LEFT:
            return _same(d1(q))
        if tag is TranslationTag.DIAGONAL_LEFT:
            return sub[0]
        return _same(cw_rv(q, s.a))
    if rule in (RuleName.CW_L, RuleName.CW_R):
        contracted = p.premises[0].conclusion.a
        if not isinstance(contracted, Or):
            raise UnprovableSequentError(f"⊢ {format_formula(contracted)}, {format_formula(contracted)} ⇑ has no proof")
        focused = sub[0].proof
        assert _diagonal(focused)
        tag = TranslationTag.DIAGONAL_LEFT if rule is RuleName.CW_L else TranslationTag.DIAGONAL_RIGHT
        return TranslationResult(tag, focused)
    if rule is RuleName.D_L:
        if sub[0].tag is TranslationTag.SAME:
            return TranslationResult(TranslationTag.FOCUS_LEFT, sub[0].proof)
        return TranslationResult(TranslationTag.DIAGONAL_RIGHT, sub[0].proof)
    if rule is RuleName.D_R:
        if sub[0].tag is TranslationTag.SAME:
            return TranslationResult(TranslationTag.FOCUS_RIGHT, sub[0].proof)
        return sub[0]
    if rule is RuleName.AX:
        return _same(Proof(OLF, RuleName.AX, s))
    if rule in (RuleName.OR1, RuleName.OR2):
        if sub[0].tag is not TranslationTag.SAME:
            return sub[0]
        assert isinstance(s.b, Or)
        return _same(vee(sub[0].proof, s.b, 0 if rule is RuleName.OR1 else 1, OLF))
    if rule is RuleName.REAC_F:
        if sub[0].tag is not TranslationTag.SAME:
            return sub[0]
        return _same(reac_f(sub[0].proof, OLF))
    raise SchemaMismatchError(f"rule {rule.value} is not an OLf0 rule")


def translate_ol_to_olf(p: Proof) -> Proof:
    """OLf proof of ⊢ ⇑ A, B from an OL proof of ⊢ A, B."""
    result = translate_olf0_to_olf(translate_ol_to_olf0(p))
    assert result.tag is TranslationTag.SAME
    return result.proof


def cut_olf(p1: Proof, p2: Proof) -> Proof:
    """OLf proof of ⊢ ⇑ A, C from proofs of ⊢ ⇑ A, B and ⊢ ⇑ ¬B, C.

    The cut goes through OL: both proofs are erased, cut there, and the result is
    translated back.

    Raises:
        SchemaMismatchError: the premises are not OLf proofs of ⇑ pairs sharing the cut formula.
    """
    for q in (p1, p2):
        if q.calculus is not OLF or q.conclusion.kind is not SequentKind.RR:
            raise SchemaMismatchError(f"expected an OLf proof of a ⇑ pair, got {format_sequent(q.conclusion)}")
    if p2.conclusion.a != negate(p1.conclusion.b):
        raise SchemaMismatchError(
            f"cut formula mismatch: {format_formula(p2.conclusion.a)} is not the negation of "
            f"{format_formula(p1.conclusion.b)}"
        )
    with deep_recursion():
        result = translate_ol_to_olf(cut_ol(erase_olf(p1), erase_olf(p2)))
    check(result)
    LOGGER.debug("Cut in OLf", size=result.size)
    return result

