"""Translation of OL proofs into the first focused system, and cut in OL."""

from __future__ import annotations

from typing import Dict

import structlog

from .cut_elimination import cut0, cut0_rv
from .exceptions import SchemaMismatchError
from .formula import Or, format_formula, is_focusable, negate
from .helpers.recursion_helper import deep_recursion
from .ol_calculus import erase_olf0, restrict_cw
from .olf0_calculus import (
    and_rr,
    ax_expand_focused,
    cw_l,
    disjunct_dual,
    exchange_rr,
    ll_of_diagonal_rr,
    reac_rr,
    reac_rv,
    reac_swap,
    top_rr,
)
from .proofs import Calculus, Proof, RuleName, SequentKind, check, format_sequent

LOGGER = structlog.get_logger()


def translate_ol_to_olf0(p: Proof) -> Proof:
    """Build an OLf0 proof of ⊢ ⇑ A, B from an OL proof of ⊢ A, B.

    Args:
        p: a checked OL proof.

    Returns:
        An OLf0 proof with the same ordered pair of formulas.

    Raises:
        SchemaMismatchError: p is not an OL proof.
        UnprovableSequentError: p is not a valid proof.
    """
    if p.calculus is not Calculus.OL:
        raise SchemaMismatchError(f"expected an OL proof, got {p.calculus.value}")
    with deep_recursion():
        restricted = restrict_cw(p)
        result = _translate(restricted, {})
    LOGGER.debug("Translated OL proof", size=p.size, translated_size=result.size)
    return result


def _translate(p: Proof, cache: Dict[int, Proof]) -> Proof:
    key = id(p)
    if key in cache:
        return cache[key]
    s = p.conclusion
    rule = p.rule
    if rule is RuleName.AX:
        if is_focusable(s.a):
            result = reac_rr(ax_expand_focused(s.a))
        else:
            result = reac_swap(ax_expand_focused(s.b))
    elif rule is RuleName.EX:
        result = exchange_rr(_translate(p.premises[0], cache))
    elif rule is RuleName.CW:
        # restricted: A is a disjunction, so ⊢ ⇑ A, A comes from ⊢ A, A ⇑
        diagonal = ll_of_diagonal_rr(_translate(p.premises[0], cache))
        result = reac_rr(reac_rv(cw_l(diagonal, s.b)))
    elif rule in (RuleName.OR1, RuleName.OR2):
        disjunction = s.a
        assert isinstance(disjunction, Or)
        # ⊢ ⇑ C, A_i and ⊢ A1∨A2 ⇑ ¬A_i give ⊢ A1∨A2 ⇑ C
        swapped = exchange_rr(_translate(p.premises[0], cache))
        dual = disjunct_dual(disjunction, 0 if rule is RuleName.OR1 else 1)
        result = reac_rr(cut0_rv(swapped, dual))
    elif rule is RuleName.AND:
        result = and_rr(_translate(p.premises[0], cache), _translate(p.premises[1], cache))
    elif rule is RuleName.TOP:
        result = top_rr(s.b)
    else:
        raise SchemaMismatchError(f"rule {rule.value} is not an OL rule")
    cache[key] = result
    return result


def cut_ol(p1: Proof, p2: Proof) -> Proof:
    """OL proof of ⊢ A, C from proofs of ⊢ A, B and ⊢ ¬B, C.

    Both proofs go through the first focused system, where the cut is admissible.

    Raises:
        SchemaMismatchError: the second proof does not start with the negation of B.
    """
    for q in (p1, p2):
        if q.calculus is not Calculus.OL or q.conclusion.kind is not SequentKind.OL:
            raise SchemaMismatchError(f"expected an OL proof, got {format_sequent(q.conclusion)}")
    b = p1.conclusion.b
    if p2.conclusion.a != negate(b):
        raise SchemaMismatchError(
            f"cut formula mismatch: {format_formula(p2.conclusion.a)} is not the negation of {format_formula(b)}"
        )
    with deep_recursion():
        left = translate_ol_to_olf0(p1)
        right = exchange_rr(translate_ol_to_olf0(p2))
        result = erase_olf0(cut0(left, right))
    check(result)
    return result
