"""Proof document model."""

import json
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ValidationError
from structlog import get_logger

from ..exceptions import ProofCheckError
from ..formula import format_formula
from ..helpers.recursion_helper import deep_recursion
from ..parser import parse_formula
from ..proofs import Calculus, Proof, RuleName, Sequent, SequentKind

LOGGER = get_logger()


class SequentModel(BaseModel):
    """Sequent data model; formulas are kept in the ASCII grammar."""

    kind: SequentKind
    left: str
    right: str


class ProofModel(BaseModel):
    """Proof document data model.

    Rule names are plain strings; from_document reports an unknown name with
    its node path.
    """

    calculus: Calculus
    rule: str
    conclusion: SequentModel
    premises: List["ProofModel"] = []


ProofModel.update_forward_refs()


def to_document(p: Proof) -> Dict[str, Any]:
    """Convert a proof into a JSON-ready document."""
    with deep_recursion():
        return _to_document(p)


def _to_document(p: Proof) -> Dict[str, Any]:
    return {
        "calculus": p.calculus.value,
        "rule": p.rule.value,
        "conclusion": {
            "kind": p.conclusion.kind.value,
            "left": format_formula(p.conclusion.a),
            "right": format_formula(p.conclusion.b),
        },
        "premises": [_to_document(q) for q in p.premises],
    }


def from_document(doc: Dict[str, Any]) -> Proof:
    """Build a proof from a document; the result is not checked.

    Raises:
        ValidationError: the document does not follow the ProofModel schema.
        FormulaSyntaxError: a formula text violates the grammar.
        ProofCheckError: a node names an unknown rule.
    """
    with deep_recursion():
        try:
            model = ProofModel.parse_obj(doc)
        except ValidationError as e:
            LOGGER.warning("Unable to validate proof document")
            raise e from e
        return _from_model(model)


def _from_model(model: ProofModel, path: Tuple[int, ...] = ()) -> Proof:
    try:
        rule = RuleName(model.rule)
    except ValueError:
        raise ProofCheckError(f"unknown rule {model.rule}", path) from None
    conclusion = Sequent(
        model.conclusion.kind, parse_formula(model.conclusion.left), parse_formula(model.conclusion.right)
    )
    premises = tuple(_from_model(q, path + (i,)) for i, q in enumerate(model.premises))
    return Proof(model.calculus, rule, conclusion, premises)


def dump_proof(p: Proof, path: str) -> None:
    """Write a proof document as JSON."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_document(p), fh, ensure_ascii=False, indent=1)


def load_proof(path: str) -> Proof:
    """Read a proof document written by dump_proof."""
    with open(path, encoding="utf-8") as fh:
        return from_document(json.load(fh))
