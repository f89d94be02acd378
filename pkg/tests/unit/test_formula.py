import unittest

from orthologic_prover.bench import gen_random
from orthologic_prover.exceptions import FormulaSyntaxError, ReservedTokenError
from orthologic_prover.formula import (
    BOT,
    TOP,
    And,
    Context,
    NegVar,
    Or,
    Polarity,
    Var,
    contexted_subformulas,
    format_formula,
    is_asynchronous,
    is_focusable,
    is_literal,
    is_negated_variable,
    is_synchronous,
    negate,
    phi,
    polarity,
    size,
    subformula_list,
    subformulas,
    variables,
)
from orthologic_prover.parser import FormulaParser, parse_formula

X, Y, Z = Var("X"), Var("Y"), Var("Z")


class TestFormula(unittest.TestCase):
    def test_structural_equality(self):
        """Test that formulas built twice are equal and hash alike."""
        self.assertEqual(And(X, Or(Y, NegVar("Z"))), And(Var("X"), Or(Var("Y"), NegVar("Z"))))
        self.assertEqual(hash(Or(X, Y)), hash(Or(Var("X"), Var("Y"))))
        self.assertNotEqual(And(X, Y), Or(X, Y))
        self.assertNotEqual(Var("X"), NegVar("X"))

    def test_reserved_names(self):
        """Test that T, F and malformed identifiers cannot name variables."""
        for name in ("T", "F", "1X", "", "X-Y"):
            with self.subTest(name=name):
                with self.assertRaises(ReservedTokenError):
                    Var(name)

    def test_negate_is_de_morgan(self):
        """Test the dual of each connective."""
        self.assertEqual(negate(X), NegVar("X"))
        self.assertEqual(negate(NegVar("X")), X)
        self.assertEqual(negate(TOP), BOT)
        self.assertEqual(negate(BOT), TOP)
        self.assertEqual(negate(And(X, NegVar("Y"))), Or(NegVar("X"), Y))
        self.assertEqual(negate(Or(X, TOP)), And(NegVar("X"), BOT))

    def test_negate_is_an_involution(self):
        """Test that negating twice gives the formula back."""
        f = Or(And(X, Or(NegVar("Y"), TOP)), And(BOT, Z))
        self.assertEqual(negate(negate(f)), f)

    def test_polarity(self):
        """Test the synchronous and asynchronous classes."""
        for f in (X, BOT, Or(X, Y)):
            self.assertEqual(polarity(f), Polarity.SYNCHRONOUS)
            self.assertTrue(is_synchronous(f))
            self.assertTrue(is_focusable(f))
        for f in (NegVar("X"), TOP, And(X, Y)):
            self.assertEqual(polarity(f), Polarity.ASYNCHRONOUS)
            self.assertTrue(is_asynchronous(f))
        self.assertTrue(is_focusable(NegVar("X")))
        self.assertFalse(is_focusable(TOP))
        self.assertFalse(is_focusable(And(X, Y)))

    def test_size_and_phi(self):
        """Test that size counts symbols and phi doubles across disjunctions."""
        self.assertEqual(size(X), 1)
        self.assertEqual(size(And(X, Or(Y, Z))), 5)
        self.assertEqual(phi(And(X, Y)), 2)
        self.assertEqual(phi(Or(X, Y)), 4)
        self.assertEqual(phi(Or(And(X, Y), Z)), 6)
        self.assertEqual(phi(TOP), 1)

    def test_literal_predicates(self):
        """Test the literal and negated-variable predicates."""
        self.assertTrue(is_literal(X) and is_literal(NegVar("X")))
        self.assertFalse(is_literal(TOP) or is_literal(And(X, Y)))
        self.assertTrue(is_negated_variable(NegVar("X")))
        self.assertFalse(is_negated_variable(X))

    def test_subformula_list_children_first(self):
        """Test that sub-formulas are distinct and listed before their parents."""
        shared = And(X, Y)
        f = Or(shared, And(shared, X))
        listed = subformula_list(f)
        self.assertEqual(len(listed), len(set(listed)))
        self.assertEqual(set(listed), {X, Y, shared, And(shared, X), f})
        self.assertEqual(listed[-1], f)
        self.assertLess(listed.index(shared), listed.index(And(shared, X)))
        self.assertEqual(variables(f), frozenset({"X", "Y"}))
        self.assertEqual(subformulas(f), frozenset(listed))

    def test_contexted_subformulas(self):
        """Test the context of each occurrence, keeping one pair per context."""
        f = Or(And(X, Y), X)
        pairs = contexted_subformulas(f)
        self.assertEqual(
            pairs,
            {
                (f, Context.ROOT),
                (And(X, Y), Context.BELOW_OR),
                (X, Context.BELOW_OR),
                (X, Context.BELOW_AND),
                (Y, Context.BELOW_AND),
            },
        )

    def test_format_formula_minimal_parentheses(self):
        """Test that only the needed parentheses are printed."""
        self.assertEqual(format_formula(Or(Or(X, Y), Z)), "X | Y | Z")
        self.assertEqual(format_formula(Or(X, Or(Y, Z))), "X | (Y | Z)")
        self.assertEqual(format_formula(And(Or(X, Y), Z)), "(X | Y) & Z")
        self.assertEqual(format_formula(Or(And(X, Y), NegVar("Z"))), "X & Y | ~Z")
        self.assertEqual(format_formula(And(TOP, BOT)), "T & F")


class TestRandomFormulaProperties(unittest.TestCase):
    SAMPLE = 10_000

    def test_phi_negate_and_polarity(self):
        """Test the phi bound, the involution and the polarity flip on a seeded sample."""
        failures = []
        for seed in range(self.SAMPLE):
            f = gen_random(2 * (seed % 21) + 1, 3, seed)
            dual = negate(f)
            if not phi(f) < 2 ** size(f):
                failures.append(("phi", f))
            if negate(dual) != f or size(dual) != size(f):
                failures.append(("negate", f))
            if polarity(dual) is polarity(f) or is_synchronous(dual) == is_synchronous(f):
                failures.append(("polarity", f))
        self.assertEqual(failures, [])


class TestFormulaParser(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.parser = FormulaParser()

    def test_precedence_and_associativity(self):
        """Test that & binds tighter than | and both associate to the left."""
        self.assertEqual(self.parser.parse("X | Y & Z"), Or(X, And(Y, Z)))
        self.assertEqual(self.parser.parse("X | Y | Z"), Or(Or(X, Y), Z))
        self.assertEqual(self.parser.parse("X & Y & Z"), And(And(X, Y), Z))
        self.assertEqual(self.parser.parse("(X | Y) & Z"), And(Or(X, Y), Z))

    def test_constants(self):
        """Test that T and F parse to the constants."""
        self.assertEqual(self.parser.parse("T & F"), And(TOP, BOT))

    def test_negation_is_pushed_to_variables(self):
        """Test that parsed formulas are in negation normal form."""
        self.assertEqual(self.parser.parse("~(X | ~Y)"), And(NegVar("X"), Y))
        self.assertEqual(self.parser.parse("~~X"), X)
        self.assertEqual(self.parser.parse("~T"), BOT)

    def test_format_then_parse(self):
        """Test that printed formulas parse back to themselves."""
        f = Or(And(Or(X, NegVar("Y")), TOP), Or(Z, And(BOT, X)))
        self.assertEqual(parse_formula(format_formula(f)), f)

    def test_syntax_error_offset(self):
        """Test that a misplaced token is reported at its byte offset."""
        with self.assertRaises(FormulaSyntaxError) as context:
            self.parser.parse("X & & Y")
        self.assertEqual(context.exception.offset, 4)

    def test_unknown_character(self):
        """Test that characters outside the grammar are rejected."""
        with self.assertRaises(FormulaSyntaxError) as context:
            self.parser.parse("X $ Y")
        self.assertEqual(context.exception.offset, 2)

    def test_incomplete_formula(self):
        """Test that a truncated formula is a syntax error."""
        for text in ("X |", "(X & Y", ""):
            with self.subTest(text=text):
                with self.assertRaises(FormulaSyntaxError):
                    self.parser.parse(text)

    def test_underscore_names(self):
        """Test identifiers with digits and underscores."""
        self.assertEqual(self.parser.parse("x_1 & Ab2"), And(Var("x_1"), Var("Ab2")))


if __name__ == "__main__":
    unittest.main()
