"""Hand-built proofs shared by the unit tests.

W is ((X∧Y)∨¬X)∨¬Y throughout; ⊢ ⊥, W states that W holds in every ortholattice.
"""

from orthologic_prover.formula import BOT, TOP, And, NegVar, Or, Var
from orthologic_prover.ol_calculus import ex, node, or_left
from orthologic_prover.olf0_calculus import and_rv, ax, cw_r, d_l, d_r, reac_f, reac_rr, reac_rv, top_rv, vee
from orthologic_prover.olf_calculus import cw_rv, d1
from orthologic_prover.proofs import Calculus, Proof, RuleName, ol

X, Y = Var("X"), Var("Y")
NX, NY = NegVar("X"), NegVar("Y")
X_AND_Y = And(X, Y)
INNER = Or(X_AND_Y, NX)
W = Or(INNER, NY)

OLF = Calculus.OLF


def ol_example() -> Proof:
    """⊢ ⊥, W in OL, twelve nodes."""
    left = ex(or_left(or_left(node(RuleName.AX, ol(NX, X)), INNER), W))
    right = ex(or_left(node(RuleName.AX, ol(NY, Y)), W))
    conj = node(RuleName.AND, ol(X_AND_Y, W), left, right)
    diagonal = or_left(or_left(conj, INNER), W)
    return ex(node(RuleName.CW, ol(W, BOT), diagonal))


def unique_olf0_example():
    """⊢ ⇑ (X∨A)∨B, (C∨(D∨¬X))∧⊤ in OLf0, and its end formulas."""
    a, b, c, d = Var("A"), Var("B"), Var("C"), Var("D")
    left = Or(Or(X, a), b)
    inner = Or(d, NX)
    right = Or(c, inner)
    focus = vee(vee(ax(X), Or(X, a), 0), left, 0)
    widened = reac_f(reac_rv(d_l(focus)))
    branch = reac_rv(d_r(vee(vee(widened, inner, 1), right, 1)))
    return reac_rr(and_rv(branch, top_rv(left))), left, And(right, TOP)


def olf0_example() -> Proof:
    """⊢ ⇑ ⊥, W in OLf0, twenty-three nodes."""
    from_x = reac_rv(d_l(vee(vee(reac_f(reac_rv(d_l(ax(X)))), INNER, 1), W, 0)))
    from_y = reac_rv(d_l(vee(reac_f(reac_rv(d_l(ax(Y)))), W, 1)))
    focus = vee(vee(reac_f(and_rv(from_x, from_y)), INNER, 0), W, 0)
    return reac_rr(reac_rv(cw_r(d_r(focus), BOT)))


def olf_example() -> Proof:
    """⊢ ⇑ ⊥, W in OLf, seventeen nodes."""
    from_x = d1(vee(vee(reac_f(d1(ax(X, OLF)), OLF), INNER, 1, OLF), W, 0, OLF))
    from_y = d1(vee(reac_f(d1(ax(Y, OLF)), OLF), W, 1, OLF))
    focus = vee(vee(reac_f(and_rv(from_x, from_y, OLF), OLF), INNER, 0, OLF), W, 0, OLF)
    return reac_rr(cw_rv(focus, BOT), OLF)
