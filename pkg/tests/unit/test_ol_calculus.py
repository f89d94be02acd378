import unittest

from orthologic_prover.exceptions import SchemaMismatchError, UnprovableSequentError
from orthologic_prover.formula import BOT, TOP, And, NegVar, Or, Var, negate
from orthologic_prover.ol_calculus import (
    ax_expand,
    erase,
    ex,
    is_cw_restricted,
    node,
    or_left,
    restrict_cw,
    reverse_and,
    reverse_conjunct,
    weaken_valid,
)
from orthologic_prover.proofs import Calculus, RuleName, check, iter_nodes, ol
from tests.unit.sample_proofs import W, X, Y, ol_example, olf0_example, olf_example, unique_olf0_example

Z = Var("Z")
EXCLUDED_MIDDLE = Or(X, NegVar("X"))


def excluded_middle_diagonal():
    """⊢ X∨¬X, X∨¬X."""
    return or_left(ex(or_left(node(RuleName.AX, ol(NegVar("X"), X)), EXCLUDED_MIDDLE)), EXCLUDED_MIDDLE)


class TestAxiomExpansion(unittest.TestCase):
    def test_ax_expand(self):
        """Test that ⊢ ¬A, A is derived from variable axioms for every shape of A."""
        formulas = [X, NegVar("X"), TOP, BOT, And(X, Y), Or(X, NegVar("Y")), W, And(Or(X, TOP), And(BOT, Z))]
        for a in formulas:
            with self.subTest(formula=str(a)):
                p = ax_expand(a)
                self.assertEqual(check(p), ol(negate(a), a))
                for _, q in iter_nodes(p):
                    if q.rule is RuleName.AX:
                        self.assertIsInstance(q.conclusion.b, (Var, NegVar))

    def test_or_left_rejects_foreign_formula(self):
        """Test that or_left needs one of the disjuncts."""
        with self.assertRaises(SchemaMismatchError):
            or_left(ax_expand(X), Or(Y, Z))


class TestReverseAnd(unittest.TestCase):
    def test_reverse_second_position(self):
        """Test inverting the conjunction of ⊢ ¬X∨¬Y, X∧Y."""
        p = ax_expand(And(X, Y))
        for index, kept in enumerate((X, Y)):
            with self.subTest(index=index):
                q = reverse_conjunct(p, 1, index)
                self.assertEqual(check(q), ol(Or(NegVar("X"), NegVar("Y")), kept))

    def test_reverse_first_position(self):
        """Test that both premises come back for a conjunction in first position."""
        p = ex(ax_expand(And(X, Y)))
        left, right = reverse_and(p)
        self.assertEqual(check(left), ol(X, Or(NegVar("X"), NegVar("Y"))))
        self.assertEqual(check(right), ol(Y, Or(NegVar("X"), NegVar("Y"))))

    def test_reverse_through_contraction(self):
        """Test inverting a conjunction weakened in by contraction."""
        p = node(RuleName.CW, ol(EXCLUDED_MIDDLE, And(Y, Z)), excluded_middle_diagonal())
        self.assertEqual(check(reverse_conjunct(p, 1, 1)), ol(EXCLUDED_MIDDLE, Z))
        left, right = reverse_and(p, 1)
        self.assertEqual((left.conclusion, right.conclusion), (ol(EXCLUDED_MIDDLE, Y), ol(EXCLUDED_MIDDLE, Z)))

    def test_not_a_conjunction(self):
        """Test that only conjunctions are inverted."""
        with self.assertRaises(SchemaMismatchError):
            reverse_and(ax_expand(X), 1)


class TestRestrictContraction(unittest.TestCase):
    def test_already_restricted(self):
        """Test that a restricted proof stays unchanged."""
        p = ol_example()
        self.assertTrue(is_cw_restricted(p))
        self.assertIs(restrict_cw(p), p)

    def test_weakening_a_conjunction(self):
        """Test that weakening by ⊤∧Y is split into ∧ and ⊤ rules."""
        p = node(RuleName.CW, ol(EXCLUDED_MIDDLE, And(TOP, Y)), excluded_middle_diagonal())
        check(p)
        self.assertFalse(is_cw_restricted(p))
        q = restrict_cw(p)
        self.assertEqual(check(q), p.conclusion)
        self.assertTrue(is_cw_restricted(q))

    def test_contracting_a_conjunction(self):
        """Test that a contracted conjunction is replaced by an ∧ rule."""
        a = And(TOP, TOP)
        diagonal = node(RuleName.AND, ol(a, a), node(RuleName.TOP, ol(TOP, a)), node(RuleName.TOP, ol(TOP, a)))
        p = node(RuleName.CW, ol(a, X), diagonal)
        check(p)
        q = restrict_cw(p)
        self.assertEqual(check(q), ol(a, X))
        self.assertTrue(is_cw_restricted(q))
        self.assertEqual(q.rule, RuleName.AND)

    def test_contracting_a_variable(self):
        """Test that a contraction on a variable has nothing to restrict to."""
        fake = node(RuleName.CW, ol(X, Y), node(RuleName.AX, ol(X, X)))
        with self.assertRaises(UnprovableSequentError):
            restrict_cw(fake)

    def test_weaken_valid(self):
        """Test weakening a diagonal proof by an arbitrary formula."""
        target = And(Or(Y, Z), TOP)
        q = weaken_valid(excluded_middle_diagonal(), target)
        self.assertEqual(check(q), ol(EXCLUDED_MIDDLE, target))
        self.assertTrue(is_cw_restricted(q))

    def test_weaken_valid_needs_diagonal(self):
        """Test that weaken_valid refuses a non-diagonal sequent."""
        with self.assertRaises(SchemaMismatchError):
            weaken_valid(ax_expand(X), Y)


class TestErase(unittest.TestCase):
    def test_erase_focused_proofs(self):
        """Test that focused proofs erase to OL proofs of the same pair."""
        for p in (olf0_example(), olf_example(), unique_olf0_example()[0]):
            with self.subTest(calculus=p.calculus.value):
                q = erase(p)
                self.assertIs(q.calculus, Calculus.OL)
                self.assertEqual(check(q), ol(p.conclusion.a, p.conclusion.b))

    def test_erase_ol_is_identity(self):
        """Test that OL proofs are returned as they are."""
        p = ol_example()
        self.assertIs(erase(p), p)



if __name__ == "__main__":
    unittest.main()
