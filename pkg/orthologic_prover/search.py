"""Entry points of proof search: ⊢ ⇑ A, A by one of three algorithms, or ⊢ ⇑ A, B."""

from __future__ import annotations

import time
from enum import Enum
from typing import Optional

import structlog

from .backward_search import BackwardSearch, branch_bound, prove_bwf, tight_bound
from .diagonal import DecompositionKind, DecompositionResult, diagonal_decompose, prove_diagonal, weaken_diagonal
from .formula import Formula, Or, format_formula
from .forward_search import prove_fwf
from .outcome import SearchOutcome, SearchStats, Verdict
from .proofs import Proof, check, fc, rr

LOGGER = structlog.get_logger()

__all__ = [
    "Algo",
    "DecompositionKind",
    "DecompositionResult",
    "SearchOutcome",
    "SearchStats",
    "Verdict",
    "branch_bound",
    "deadline_after",
    "diagonal_decompose",
    "prove_bwf",
    "prove_formula",
    "prove_fwf",
    "prove_sequent",
    "tight_bound",
    "weaken_diagonal",
]


class Algo(str, Enum):
    BWF = "bwf"
    FWF = "fwf"
    DIAG = "diag"


def deadline_after(seconds: Optional[float]) -> Optional[float]:
    """Absolute monotonic deadline ``seconds`` from now; None stays None."""
    return None if seconds is None else time.monotonic() + seconds


def _prove_diag(a: Formula, deadline: Optional[float]) -> SearchOutcome:
    started = time.monotonic()
    search = BackwardSearch(deadline)

    def prove_focus(disjunction: Or) -> Optional[Proof]:
        return search.prove(fc(disjunction, disjunction))

    proof = prove_diagonal(a, prove_focus)
    search.stats.elapsed = time.monotonic() - started
    if proof is not None:
        check(proof)
    verdict = Verdict.UNPROVABLE if proof is None else Verdict.PROVABLE
    LOGGER.info(
        "Diagonal search finished",
        formula=format_formula(a),
        verdict=verdict.value,
        total_rules=search.stats.total_rules,
        visited=search.stats.sequents_visited,
        elapsed=round(search.stats.elapsed, 6),
    )
    return SearchOutcome(verdict, search.stats, proof)


def prove_formula(
    a: Formula,
    algo: Algo = Algo.BWF,
    deadline: Optional[float] = None,
    use_filter: bool = True,
) -> SearchOutcome:
    """Decide whether a formula holds in orthologic, read as ⊢ ⇑ a, a.

    Args:
        a: the formula.
        algo: BWF searches ⊢ ⇑ a, a backward; DIAG reduces it to focused
            diagonal goals first and searches those backward; FWF reduces it the
            same way and saturates forward.
        deadline: absolute ``time.monotonic()`` value, or None.
        use_filter: forward filter switch, only read by FWF.

    Raises:
        SearchTimeout: the deadline passed.
    """
    algo = Algo(algo)
    if algo is Algo.BWF:
        return prove_bwf(rr(a, a), deadline)
    if algo is Algo.FWF:
        return prove_fwf(a, use_filter, deadline)
    return _prove_diag(a, deadline)


def prove_sequent(a: Formula, b: Formula, deadline: Optional[float] = None) -> SearchOutcome:
    """Decide ⊢ ⇑ a, b by backward search."""
    return prove_bwf(rr(a, b), deadline)
