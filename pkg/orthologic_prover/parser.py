"""Parser for the ASCII formula grammar."""

from __future__ import annotations

from lark import Lark, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from .exceptions import FormulaSyntaxError, OrthologicError
from .formula import BOT, TOP, And, Formula, Or, Var, negate

# Precedence is enforced by the rule hierarchy: disj -> conj -> unary -> atom.
FORMULA_GRAMMAR = r"""
    ?start: disj

    ?disj: conj
         | disj "|" conj      -> disjunction

    ?conj: unary
         | conj "&" unary     -> conjunction

    ?unary: "~" unary         -> negation
          | atom

    ?atom: NAME               -> name
         | "(" disj ")"

    NAME: /[A-Za-z][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""


class FormulaTransformer(Transformer):
    """Build NNF formulas while parsing; general negation is pushed to the variables."""

    def disjunction(self, children):
        return Or(children[0], children[1])

    def conjunction(self, children):
        return And(children[0], children[1])

    def negation(self, children):
        return negate(children[0])

    def name(self, children):
        token = str(children[0])
        if token == "T":
            return TOP
        if token == "F":
            return BOT
        return Var(token)


class FormulaParser:
    """LALR parser turning formula text into a Formula.

    The transformer runs inline with the LALR parser, so deep formulas are built
    without recursing over a parse tree.
    """

    def __init__(self):
        self.parser = Lark(FORMULA_GRAMMAR, parser="lalr", transformer=FormulaTransformer())

    def parse(self, text: str) -> Formula:
        """Convert formula text into a formula in negation normal form.

        Args:
            text: a formula such as ``"~(X | Y) & T"``.

        Returns:
            The parsed formula.

        Raises:
            FormulaSyntaxError: the text violates the grammar.
            ReservedTokenError: an identifier cannot name a variable.
        """
        try:
            return self.parser.parse(text)
        except VisitError as e:
            if isinstance(e.orig_exc, OrthologicError):
                raise e.orig_exc from e
            raise
        except UnexpectedEOF as e:
            raise FormulaSyntaxError("unexpected end of formula", len(text.encode())) from e
        except UnexpectedInput as e:
            position = getattr(e, "pos_in_stream", None)
            if position is None or position < 0:
                position = len(text)
            offset = len(text[:position].encode())
            raise FormulaSyntaxError(f"syntax error in formula '{text}'", offset) from e


_PARSER = None


def parse_formula(text: str) -> Formula:
    """Parse formula text with a shared parser instance."""
    global _PARSER
    if _PARSER is None:
        _PARSER = FormulaParser()
    return _PARSER.parse(text)
