"""Admissible cuts of the first focused system, as proof transformations.

Every cut takes two cut-free proofs and returns a cut-free proof; no cut rule
ever appears in a proof tree. The variable cuts and the two cuts on ⊢ ⇑ A, B sequents recurse on the size of
the left premise. The five main cuts recurse on the pair (size of the cut formula, size of the
right premise). Each recursive call asserts that its measure decreases.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Dict, Optional, Tuple, TypeVar

import structlog

from .exceptions import SchemaMismatchError, UnprovableSequentError
from .formula import Formula, Or, Var, format_formula, is_asynchronous, is_synchronous, negate, size
from .helpers.recursion_helper import deep_recursion
from .olf0_calculus import (
    and_rr,
    and_rv,
    cw_l,
    cw_r,
    d_l,
    d_r,
    focus_of_diagonal,
    reac_f,
    reac_rr,
    reac_rv,
    swap_ll,
    top_rr,
    top_rv,
    vee,
)
from .proofs import Calculus, Proof, RuleName, Sequent, SequentKind, format_sequent

LOGGER = structlog.get_logger()

Measure = Tuple[int, int]
M = TypeVar("M", int, Measure)


class CutKind(str, Enum):
    """The ten admissible cuts."""

    VCUT1 = "VCut1"  # ⊢ A, X ⇑   ⊢ C, ¬X ⇑   to ⊢ A, C ⇑
    VCUT2 = "VCut2"  # ⊢ X ⇓ A    ⊢ ¬X ⇓ C    to ⊢ C ⇓ A      (C synchronous)
    VCUT3 = "VCut3"  # ⊢ X ⇑ A    ⊢ ¬X ⇓ C    to ⊢ C ⇑ A      (C synchronous)
    CUT1 = "Cut1"  # ⊢ A ⇑ B    ⊢ C ⇑ ¬B    to ⊢ A, C ⇑    (B asynchronous or variable)
    CUT2 = "Cut2"  # ⊢ A ⇑ B    ⊢ C, ¬B ⇑   to ⊢ A, C ⇑
    CUT3 = "Cut3"  # ⊢ A ⇑ B    ⊢ ¬B ⇓ C    to ⊢ A ⇓ C      (B asynchronous)
    CUT4 = "Cut4"  # ⊢ A ⇑ B    ⊢ C ⇓ ¬B    to ⊢ A, C ⇑    (B asynchronous or variable)
    CUT5 = "Cut5"  # ⊢ A ⇑ B    ⊢ ¬B ⇑ C    to ⊢ A ⇑ C
    CUT0 = "Cut0"  # ⊢ ⇑ A, B   ⊢ ⇑ C, ¬B   to ⊢ ⇑ A, C
    CUT0_RV = "Cut0'"  # ⊢ ⇑ A, B   ⊢ C ⇑ ¬B    to ⊢ C ⇑ A


def _asynchronous_or_variable(b: Formula) -> bool:
    return is_asynchronous(b) or isinstance(b, Var)


def _decreasing(measure: M, parent: Optional[M]) -> M:
    assert parent is None or measure < parent, f"cut measure {measure} does not decrease below {parent}"
    return measure


def _unprovable(s: Sequent) -> UnprovableSequentError:
    return UnprovableSequentError(f"{format_sequent(s)} has no proof")


# Variable cuts, by induction on the left premise.


def vcut2(p1: Proof, p2: Proof, parent: Optional[int] = None) -> Proof:
    """⊢ C ⇓ A from ⊢ X ⇓ A and ⊢ ¬X ⇓ C."""
    measure = _decreasing(p1.size, parent)
    if p1.rule in (RuleName.OR1, RuleName.OR2):
        disjunction = p1.conclusion.b
        assert isinstance(disjunction, Or)
        return vee(vcut2(p1.premises[0], p2, measure), disjunction, 0 if p1.rule is RuleName.OR1 else 1)
    if p1.rule is RuleName.REAC_F:
        return reac_f(vcut3(p1.premises[0], p2, measure))
    raise _unprovable(p1.conclusion)


def vcut3(p1: Proof, p2: Proof, parent: Optional[int] = None) -> Proof:
    """⊢ C ⇑ A from ⊢ X ⇑ A and ⊢ ¬X ⇓ C."""
    measure = _decreasing(p1.size, parent)
    c = p2.conclusion.b
    if p1.rule is RuleName.AND_RV:
        return and_rv(vcut3(p1.premises[0], p2, measure), vcut3(p1.premises[1], p2, measure))
    if p1.rule is RuleName.TOP_RV:
        return top_rv(c)
    if p1.rule is not RuleName.REAC_RV:
        raise _unprovable(p1.conclusion)
    q = p1.premises[0]
    if q.rule is RuleName.CW_R:
        # ⊢ X, A ⇑ weakens X over ⊢ A, A ⇑
        return reac_rv(cw_r(q.premises[0], c))
    if q.rule is RuleName.D_L:
        # ⊢ A ⇓ X is an axiom, so A = ¬X
        if not is_synchronous(c):
            raise _unprovable(p2.conclusion)
        return reac_rv(d_l(p2))
    if q.rule is RuleName.D_R:
        return reac_rv(d_r(vcut2(q.premises[0], p2, measure)))
    raise _unprovable(q.conclusion)


def vcut1(p1: Proof, p2: Proof) -> Proof:
    """⊢ A, C ⇑ from ⊢ A, X ⇑ and ⊢ C, ¬X ⇑."""
    measure = p1.size
    c = p2.conclusion.a
    if p1.rule is RuleName.CW_L:
        return cw_l(p1.premises[0], c)
    if p1.rule is RuleName.D_L:
        # p1 concludes ⊢ A, X ⇑ from ⊢ X ⇓ A
        if p2.rule is RuleName.CW_L:
            return cw_r(p2.premises[0], p1.conclusion.a)
        if p2.rule is RuleName.D_L:
            return d_l(vcut2(p1.premises[0], p2.premises[0], measure))
        raise _unprovable(p2.conclusion)
    if p1.rule is RuleName.D_R:
        # ⊢ A ⇓ X is an axiom, so A = ¬X
        return swap_ll(p2)
    raise _unprovable(p1.conclusion)


# Main cuts, by induction on (cut formula size, right premise size).


def _measure(b: Formula, p2: Proof) -> Measure:
    return size(b), p2.size


def cut1(p1: Proof, p2: Proof, parent: Optional[Measure] = None) -> Proof:
    """⊢ A, C ⇑ from ⊢ A ⇑ B and ⊢ C ⇑ ¬B."""
    measure = _decreasing(_measure(p1.conclusion.b, p2), parent)
    if p2.rule is not RuleName.REAC_RV:
        raise _unprovable(p2.conclusion)
    return cut2(p1, p2.premises[0], measure)


def cut2(p1: Proof, p2: Proof, parent: Optional[Measure] = None) -> Proof:
    """⊢ A, C ⇑ from ⊢ A ⇑ B and ⊢ C, ¬B ⇑."""
    b = p1.conclusion.b
    a = p1.conclusion.a
    c = p2.conclusion.a
    measure = _decreasing(_measure(b, p2), parent)
    if p2.rule is RuleName.CW_L:
        return cw_r(p2.premises[0], a)
    if p2.rule is RuleName.CW_R:
        diagonal = p2.premises[0]
        neg_b = diagonal.conclusion.a
        if not isinstance(neg_b, Or):
            raise _unprovable(diagonal.conclusion)
        focused = cut3(p1, focus_of_diagonal(diagonal), measure)
        return cw_l(_split_conjunction(p1, focused, measure), c)
    if p2.rule is RuleName.D_L:
        if is_asynchronous(b):
            return d_r(cut3(p1, p2.premises[0], measure))
        if isinstance(b, Var) and p1.rule is RuleName.REAC_RV:
            return vcut1(p1.premises[0], p2)
        raise _unprovable(p2.conclusion)
    if p2.rule is RuleName.D_R:
        return cut4(p1, p2.premises[0], measure)
    raise _unprovable(p2.conclusion)


def cut3(p1: Proof, p2: Proof, parent: Optional[Measure] = None) -> Proof:
    """⊢ A ⇓ C from ⊢ A ⇑ B and ⊢ ¬B ⇓ C."""
    measure = _decreasing(_measure(p1.conclusion.b, p2), parent)
    if p2.rule in (RuleName.OR1, RuleName.OR2):
        disjunction = p2.conclusion.b
        assert isinstance(disjunction, Or)
        return vee(cut3(p1, p2.premises[0], measure), disjunction, 0 if p2.rule is RuleName.OR1 else 1)
    if p2.rule is RuleName.REAC_F:
        return reac_f(cut5(p1, p2.premises[0], measure))
    raise _unprovable(p2.conclusion)


def cut4(p1: Proof, p2: Proof, parent: Optional[Measure] = None) -> Proof:
    """⊢ A, C ⇑ from ⊢ A ⇑ B and ⊢ C ⇓ ¬B."""
    measure = _decreasing(_measure(p1.conclusion.b, p2), parent)
    if p2.rule is RuleName.AX:
        # B = ¬X, and ⊢ A ⇑ ¬X can only come from ⊢ A, ¬X ⇑
        if p1.rule is not RuleName.REAC_RV:
            raise _unprovable(p1.conclusion)
        return p1.premises[0]
    if p2.rule in (RuleName.OR1, RuleName.OR2):
        return _split_conjunction(p1, p2, measure)
    if p2.rule is RuleName.REAC_F:
        # ¬B asynchronous and focusable, so B is a variable
        return cut1(p1, p2.premises[0], measure)
    raise _unprovable(p2.conclusion)


def _split_conjunction(p1: Proof, p2: Proof, measure: Measure) -> Proof:
    # p1: ⊢ A ⇑ B1∧B2 by and_rv, p2: ⊢ C ⇓ ¬B1∨¬B2 by or_i; cut on B_i
    if p1.rule is not RuleName.AND_RV:
        raise _unprovable(p1.conclusion)
    index = 0 if p2.rule is RuleName.OR1 else 1
    rho = p1.premises[index]
    focused = p2.premises[0]
    b_i = rho.conclusion.b
    if is_synchronous(b_i):
        # ⊢ C ⇓ ¬B_i with ¬B_i asynchronous ends in a reaction
        if focused.rule is not RuleName.REAC_F:
            raise _unprovable(focused.conclusion)
        return swap_ll(cut1(focused.premises[0], rho, measure))
    return cut4(rho, focused, measure)


def cut5(p1: Proof, p2: Proof, parent: Optional[Measure] = None) -> Proof:
    """⊢ A ⇑ C from ⊢ A ⇑ B and ⊢ ¬B ⇑ C."""
    measure = _decreasing(_measure(p1.conclusion.b, p2), parent)
    if p2.rule is RuleName.AND_RV:
        return and_rv(cut5(p1, p2.premises[0], measure), cut5(p1, p2.premises[1], measure))
    if p2.rule is RuleName.TOP_RV:
        return top_rv(p1.conclusion.a)
    if p2.rule is RuleName.REAC_RV:
        return reac_rv(cut2(p1, swap_ll(p2.premises[0]), measure))
    raise _unprovable(p2.conclusion)


# Cuts on ⊢ ⇑ A, B sequents, by induction on the left premise.


def cut0_rv(p1: Proof, p2: Proof, parent: Optional[int] = None) -> Proof:
    """⊢ C ⇑ A from ⊢ ⇑ A, B and ⊢ C ⇑ ¬B."""
    measure = _decreasing(p1.size, parent)
    if p1.rule is RuleName.AND_RR:
        return and_rv(cut0_rv(p1.premises[0], p2, measure), cut0_rv(p1.premises[1], p2, measure))
    if p1.rule is RuleName.TOP_RR:
        return top_rv(p2.conclusion.a)
    if p1.rule is not RuleName.REAC_RR:
        raise _unprovable(p1.conclusion)
    q = p1.premises[0]
    if _asynchronous_or_variable(q.conclusion.b):
        return reac_rv(swap_ll(cut1(q, p2)))
    return reac_rv(cut1(p2, q))


def cut0(p1: Proof, p2: Proof, parent: Optional[int] = None) -> Proof:
    """⊢ ⇑ A, C from ⊢ ⇑ A, B and ⊢ ⇑ C, ¬B."""
    measure = _decreasing(p1.size, parent)
    if p1.rule is RuleName.AND_RR:
        return and_rr(cut0(p1.premises[0], p2, measure), cut0(p1.premises[1], p2, measure))
    if p1.rule is RuleName.TOP_RR:
        return top_rr(p2.conclusion.a)
    if p1.rule is not RuleName.REAC_RR:
        raise _unprovable(p1.conclusion)
    return reac_rr(cut0_rv(p2, p1.premises[0]))


# Premise schemas: (kind of p1, kind of p2, formula cut in p1, formula cut in p2).
_Position = Callable[[Sequent], Formula]
_A: _Position = lambda s: s.a  # noqa: E731
_B: _Position = lambda s: s.b  # noqa: E731

_SCHEMAS: Dict[CutKind, Tuple[SequentKind, _Position, SequentKind, _Position]] = {
    CutKind.VCUT1: (SequentKind.LL, _B, SequentKind.LL, _B),
    CutKind.VCUT2: (SequentKind.FC, _A, SequentKind.FC, _A),
    CutKind.VCUT3: (SequentKind.RV, _A, SequentKind.FC, _A),
    CutKind.CUT1: (SequentKind.RV, _B, SequentKind.RV, _B),
    CutKind.CUT2: (SequentKind.RV, _B, SequentKind.LL, _B),
    CutKind.CUT3: (SequentKind.RV, _B, SequentKind.FC, _A),
    CutKind.CUT4: (SequentKind.RV, _B, SequentKind.FC, _B),
    CutKind.CUT5: (SequentKind.RV, _B, SequentKind.RV, _A),
    CutKind.CUT0: (SequentKind.RR, _B, SequentKind.RR, _B),
    CutKind.CUT0_RV: (SequentKind.RR, _B, SequentKind.RV, _B),
}

_CUTS: Dict[CutKind, Callable[[Proof, Proof], Proof]] = {
    CutKind.VCUT1: vcut1,
    CutKind.VCUT2: vcut2,
    CutKind.VCUT3: vcut3,
    CutKind.CUT1: cut1,
    CutKind.CUT2: cut2,
    CutKind.CUT3: cut3,
    CutKind.CUT4: cut4,
    CutKind.CUT5: cut5,
    CutKind.CUT0: cut0,
    CutKind.CUT0_RV: cut0_rv,
}


def _check_side_conditions(kind: CutKind, p2: Proof, cut_formula: Formula) -> None:
    if kind in (CutKind.VCUT1, CutKind.VCUT2, CutKind.VCUT3):
        if not isinstance(cut_formula, Var):
            raise SchemaMismatchError(f"{kind.value} cuts on a variable, not {format_formula(cut_formula)}")
        if kind is not CutKind.VCUT1 and not is_synchronous(p2.conclusion.b):
            raise SchemaMismatchError(f"{kind.value} needs a synchronous C")
    if kind in (CutKind.CUT1, CutKind.CUT4) and not _asynchronous_or_variable(cut_formula):
        raise SchemaMismatchError(f"{kind.value} needs B asynchronous or a variable")
    if kind is CutKind.CUT3 and not is_asynchronous(cut_formula):
        raise SchemaMismatchError(f"{kind.value} needs B asynchronous")


def admissible_cut(kind: CutKind, p1: Proof, p2: Proof) -> Proof:
    """Eliminate one cut between two OLf0 proofs.

    Args:
        kind: which of the ten cuts to apply.
        p1: left premise.
        p2: right premise; its cut position must hold the negation of p1's.

    Returns:
        A cut-free OLf0 proof of the cut's conclusion.

    Raises:
        SchemaMismatchError: the premises do not match the cut's schema or side condition.
        UnprovableSequentError: a premise is not a valid proof.
    """
    kind1, position1, kind2, position2 = _SCHEMAS[kind]
    for p, expected in ((p1, kind1), (p2, kind2)):
        if p.calculus is not Calculus.OLF0:
            raise SchemaMismatchError(f"{kind.value} takes OLf0 proofs, got {p.calculus.value}")
        if p.conclusion.kind is not expected:
            raise SchemaMismatchError(
                f"{kind.value} expects a {expected.value} premise, got {format_sequent(p.conclusion)}"
            )
    cut_formula = position1(p1.conclusion)
    if position2(p2.conclusion) != negate(cut_formula):
        raise SchemaMismatchError(
            f"{kind.value}: {format_sequent(p2.conclusion)} does not hold the negation of {format_formula(cut_formula)}"
        )
    _check_side_conditions(kind, p2, cut_formula)
    LOGGER.debug("Eliminating cut", kind=kind.value, cut_formula=format_formula(cut_formula))
    with deep_recursion():
        return _CUTS[kind](p1, p2)
