import unittest

from orthologic_prover.bench import gen_random
from orthologic_prover.exceptions import SchemaMismatchError, UnprovableSequentError
from orthologic_prover.formula import BOT, TOP, And, Or, Var, is_focusable, negate
from orthologic_prover.ol_oracle import OracleVerdict, prove_ol_oracle
from orthologic_prover.olf0_calculus import (
    AdmissibleRule,
    Side,
    WidenPosition,
    adm_rr,
    and_rr,
    ax,
    ax_expand_focused,
    d_l,
    d_r,
    disjunct_dual,
    focus_of_diagonal,
    ll_of_diagonal_rr,
    reac_f,
    swap_ll,
    top_r2,
    top_rr,
    vee,
    vee_widen,
)
from orthologic_prover.ortholattice import boolean2, refute_sequent
from orthologic_prover.proofs import Calculus, RuleName, check, fc, focus_side_condition_holds, ll, ol, proof_size, rr, rv
from orthologic_prover.search import prove_bwf, prove_sequent
from tests.unit.sample_proofs import NX, NY, W, X, Y, olf0_example, unique_olf0_example

Z = Var("Z")


class TestBuilders(unittest.TestCase):
    def test_vee_rejects_wrong_disjunct(self):
        """Test that or1 and or2 check the focused disjunct."""
        with self.assertRaises(SchemaMismatchError):
            vee(ax(X), Or(Y, X), 0)
        self.assertEqual(check(vee(ax(X), Or(Y, X), 1)), fc(NX, Or(Y, X)))

    def test_builders_check_premise_kind(self):
        """Test that builders refuse premises of the wrong kind."""
        with self.assertRaises(SchemaMismatchError):
            reac_f(ax(X))
        with self.assertRaises(SchemaMismatchError):
            and_rr(ax(X), ax(Y))

    def test_default_calculus(self):
        """Test that shared builders default to OLf0 and accept OLf."""
        self.assertIs(ax(X).calculus, Calculus.OLF0)
        self.assertIs(top_rr(X, Calculus.OLF).calculus, Calculus.OLF)


class TestLeftRightStructure(unittest.TestCase):
    def test_swap_ll(self):
        """Test that mirroring an LL proof keeps its size and validity."""
        p = d_r(ax(X))
        q = swap_ll(p)
        self.assertEqual(check(q), ll(X, NX))
        self.assertEqual(q.rule, RuleName.D_L)
        self.assertEqual(proof_size(q), proof_size(p))

    def test_swap_ll_on_weakening(self):
        """Test mirroring a weakening."""
        weakened = olf0_example().premises[0].premises[0]
        self.assertEqual(check(swap_ll(weakened)), ll(W, BOT))

    def test_focus_of_diagonal(self):
        """Test extracting ⊢ W ⇓ W from ⊢ W, W ⇑."""
        diagonal = olf0_example().premises[0].premises[0].premises[0]
        self.assertEqual(check(focus_of_diagonal(diagonal)), fc(W, W))

    def test_focus_of_non_diagonal(self):
        """Test that only diagonal LL sequents are accepted."""
        with self.assertRaises(SchemaMismatchError):
            focus_of_diagonal(d_r(ax(X)))

    def test_ll_of_diagonal_rr(self):
        """Test that a proof of ⊢ ⇑ A, A through its LL sequent is unwrapped."""
        with self.assertRaises(UnprovableSequentError):
            ll_of_diagonal_rr(top_rr(TOP))


class TestAdmissibleRules(unittest.TestCase):
    def test_top_r2(self):
        """Test ⊢ ⇑ C, ⊤ for several C."""
        for c in (X, TOP, And(X, TOP), Or(X, NY), And(And(NX, BOT), Y)):
            with self.subTest(formula=str(c)):
                p = adm_rr(AdmissibleRule.TOP_R2, formula=c)
                self.assertEqual(check(p), rr(c, TOP))

    def test_and_r2(self):
        """Test combining two right formulas over a common left one."""
        p = adm_rr(AdmissibleRule.AND_R2, [top_r2(And(X, Y)), top_r2(And(X, Y))])
        self.assertEqual(check(p), rr(And(X, Y), And(TOP, TOP)))

    def test_exchange_rr(self):
        """Test exchanging the example proofs."""
        p = adm_rr(AdmissibleRule.EXCHANGE_RR, [olf0_example()])
        self.assertEqual(check(p), rr(W, BOT))
        q, left, right = unique_olf0_example()
        self.assertEqual(check(adm_rr(AdmissibleRule.EXCHANGE_RR, [q])), rr(right, left))

    def test_reac_swap(self):
        """Test turning ⊢ A ⇑ C into ⊢ ⇑ C, A."""
        p = adm_rr(AdmissibleRule.REAC_SWAP, [ax_expand_focused(Or(X, Y))])
        self.assertEqual(check(p), rr(And(NX, NY), Or(X, Y)))

    def test_arity(self):
        """Test that premise counts and the TopR2 formula are checked."""
        with self.assertRaises(SchemaMismatchError):
            adm_rr(AdmissibleRule.AND_R2, [top_r2(X)])
        with self.assertRaises(SchemaMismatchError):
            adm_rr(AdmissibleRule.TOP_R2)

    def test_and_r2_needs_common_left(self):
        """Test that AndR2 refuses different left formulas."""
        with self.assertRaises(SchemaMismatchError):
            adm_rr(AdmissibleRule.AND_R2, [top_r2(X), top_r2(Y)])


class TestWidening(unittest.TestCase):
    def test_rv_left(self):
        """Test widening the left formula of ⊢ X ⇑ ¬X."""
        p = vee_widen(Side.RIGHT, WidenPosition.RV_LEFT, ax_expand_focused(X), Z)
        self.assertEqual(check(p), rv(Or(Z, X), NX))

    def test_rv_right(self):
        """Test moving an asynchronous right formula into a disjunction on the left."""
        p = vee_widen(Side.LEFT, WidenPosition.RV_RIGHT, ax_expand_focused(X), Z)
        self.assertEqual(check(p), rv(Or(NX, Z), X))

    def test_ll_and_fc(self):
        """Test widening LL and focused sequents."""
        self.assertEqual(check(vee_widen(Side.LEFT, WidenPosition.LL, d_l(ax(X)), Z)), ll(Or(X, Z), NX))
        focused = reac_f(ax_expand_focused(X))
        self.assertEqual(check(vee_widen(Side.RIGHT, WidenPosition.FC, focused, Z)), fc(Or(Z, X), NX))

    def test_polarity_is_checked(self):
        """Test that widening refuses the wrong polarity."""
        with self.assertRaises(SchemaMismatchError):
            vee_widen(Side.LEFT, WidenPosition.RV_RIGHT, ax_expand_focused(NX), Z)
        with self.assertRaises(SchemaMismatchError):
            vee_widen(Side.LEFT, WidenPosition.FC, ax(X), Z)

    def test_disjunct_dual(self):
        """Test ⊢ A1∨A2 ⇑ ¬A_i for synchronous and asynchronous disjuncts."""
        d = Or(And(X, Y), NX)
        for index in (0, 1):
            with self.subTest(index=index):
                p = disjunct_dual(d, index)
                self.assertEqual(check(p), rv(d, negate((d.left, d.right)[index])))


class TestAxiomExpansionFocused(unittest.TestCase):
    def test_focusable_formulas(self):
        """Test ⊢ A ⇑ ¬A for synchronous formulas and negated variables."""
        for a in (X, NX, BOT, Or(X, Y), W, Or(And(X, TOP), Or(BOT, NY))):
            with self.subTest(formula=str(a)):
                p = ax_expand_focused(a)
                self.assertEqual(check(p), rv(a, negate(a)))
                self.assertTrue(focus_side_condition_holds(p))

    def test_rejects_asynchronous(self):
        """Test that ⊤ and conjunctions cannot be on the left."""
        for a in (TOP, And(X, Y)):
            with self.assertRaises(SchemaMismatchError):
                ax_expand_focused(a)

    def test_agrees_with_search(self):
        """Test that every small focusable formula has its expansion and that search finds ⊢ A ⇑ ¬A too."""
        tried = 0
        for target in range(1, 12, 2):
            for seed in range(40):
                a = gen_random(target, 3, seed)
                if not is_focusable(a):
                    continue
                tried += 1
                with self.subTest(formula=str(a)):
                    self.assertEqual(check(ax_expand_focused(a)), rv(a, negate(a)))
                    self.assertTrue(prove_bwf(rv(a, negate(a))).provable)
        self.assertGreater(tried, 50)


class TestUnprovableLLSequents(unittest.TestCase):
    # ⊢ A, B ⇑ gives ⊢ ⇑ A, B by reac_rv and reac_rr
    PAIRS = ((X, Y), (NX, NY), (BOT, BOT))

    def test_countermodels(self):
        """Test that ⊢ X, Y and ⊢ ¬X, ¬Y and ⊢ ⊥, ⊥ fail in the Boolean algebra."""
        for a, b in self.PAIRS:
            with self.subTest(a=str(a), b=str(b)):
                self.assertIsNotNone(refute_sequent(a, b, boolean2()))

    def test_no_proof_found(self):
        """Test that the OL search and the focused search both fail on these pairs."""
        for a, b in self.PAIRS:
            with self.subTest(a=str(a), b=str(b)):
                self.assertIs(prove_ol_oracle(ol(a, b)).verdict, OracleVerdict.UNPROVABLE)
                self.assertFalse(prove_sequent(a, b).provable)
                # the only rules concluding ⊢ A, B ⇑ from a focus
                self.assertFalse(prove_bwf(fc(a, b)).provable)
                self.assertFalse(prove_bwf(fc(b, a)).provable)


if __name__ == "__main__":
    unittest.main()
