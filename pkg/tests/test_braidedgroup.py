import pytest

from oracles import braided_factorial as dense_factorial, proportional, radical_block
from qdouble.braidedgroup import (BraidedGroup, BraidedGroupError, ConfluenceError, braided_antipode,
                                  braided_coproduct, braided_diff, braided_exp, normal_form, pairing, radical_basis)
from qdouble.cartan import PRESETS
from qdouble.freealg import add_to, words_of_degree
from qdouble.rmatrix import RMatrix, braided_factorial, cartan_to_rmatrix, sl2_rmatrix
from qdouble.scalars import Scalar, q, q_factorial, q_integer


def groups(name):
    R = cartan_to_rmatrix(PRESETS[name])
    return R, BraidedGroup(R, "vector", quotient="radical"), BraidedGroup(R, "covector", quotient="radical")


def test_generator_coproduct_and_antipode():
    R, B, D = groups("A2")
    t = braided_coproduct(B, (0,))
    assert t.terms == {((0,), ()): Scalar(1), ((), (0,)): Scalar(1)}
    assert braided_coproduct(B, ()).terms == {((), ()): Scalar(1)}
    assert braided_antipode(B, B.gen(1)) == -B.gen(1)
    assert braided_antipode(B, B.word(())) == B.word(())


def test_coproduct_of_square():
    R, B, D = groups("A1")
    Q = q()
    t = braided_coproduct(B, (0, 0))
    assert t.terms == {((0, 0), ()): Scalar(1), ((0,), (0,)): 1 + Q ** 2, ((), (0, 0)): Scalar(1)}


def test_anyonic_antipode():
    # S(e^m) = q^{m(m-1)} (-e)^m
    R, B, D = groups("A1")
    Q = q()
    for m in range(1, 6):
        assert braided_antipode(B, B.word((0,) * m)) == B.word((0,) * m).scale(Q ** (m * (m - 1)) * (-1) ** m)


def test_pairing_small():
    R, B, D = groups("A2")
    assert pairing(D, (0,), B, (0,)).is_one()
    assert pairing(D, (1,), B, (0,)).is_zero()
    assert pairing(D, (0,), B, (0, 1)).is_zero()
    R, B, D = groups("A1")
    assert pairing(D, (0, 0), B, (0, 0)) == 1 + q() ** 2


@pytest.mark.parametrize("R", [sl2_rmatrix(), cartan_to_rmatrix(PRESETS["A2"])], ids=["sl2", "A2"])
def test_pairing_equals_braided_factorial(R):
    # recursive pairing, sparse factorial and the dense oracle agree
    B = BraidedGroup(R, "vector")
    D = BraidedGroup(R, "covector")
    n = R.n
    for m in (2, 3):
        F = braided_factorial(m, R)
        G = dense_factorial(R, m)
        idx = lambda w: sum(x * n ** (m - 1 - t) for t, x in enumerate(w))
        from itertools import product
        for e in product(range(n), repeat=m):
            for f in product(range(n), repeat=m):
                p = pairing(D, f, B, e)
                assert p == F.get(idx(e), idx(f)) == G[idx(e)][idx(f)]


def test_radical_a2():
    R, B, D = groups("A2")
    Q = q()
    for d in [(1, 0), (0, 1), (1, 1), (2, 0), (3, 0)]:
        assert radical_basis(B, d) == []
    (k,) = radical_basis(B, (2, 1))
    serre = {(0, 0, 1): Scalar(1), (0, 1, 0): -(Q + Q.inverse()), (1, 0, 0): Scalar(1)}
    assert proportional(k.terms if hasattr(k, "terms") else k, serre)
    (oracle,) = radical_block(R, (2, 1))
    assert proportional(oracle, serre)
    (k2,) = radical_basis(B, (1, 2))
    assert proportional(k2.terms if hasattr(k2, "terms") else k2, radical_block(R, (1, 2))[0])


def test_radical_a1_empty():
    R, B, D = groups("A1")
    for m in range(1, 6):
        assert radical_basis(B, (m,)) == []


def test_normal_form():
    R, B, D = groups("A2")
    Q = q()
    serre = B.word((0, 0, 1)) - B.word((0, 1, 0)).scale(Q + Q.inverse()) + B.word((1, 0, 0))
    assert normal_form(B, serre).is_zero()
    for w in B.basis((2, 1)):
        assert normal_form(B, B.word(w)) == B.word(w)
    assert len(B.basis((2, 1))) == 2


def test_quadratic_plane():
    R = sl2_rmatrix()
    Rp = R.scaled(q().inverse() ** 2)
    B = BraidedGroup(R, "vector", quotient="quadratic", Rprime=Rp)
    assert normal_form(B, B.word((1, 0))) == B.word((0, 1)).scale(q())
    C = BraidedGroup(R, "covector", quotient="quadratic", Rprime=Rp).opposite()
    assert normal_form(C, C.word((1, 0))) == C.word((0, 1)).scale(q())


def test_quadratic_plane_coproduct_respects_relation():
    R = sl2_rmatrix()
    B = BraidedGroup(R, "vector", quotient="quadratic", Rprime=R.scaled(q().inverse() ** 2))
    rel = B.word((1, 0)) - B.word((0, 1)).scale(q())
    # coproduct of the relation vanishes after normal forms
    out = {}
    for w, c in rel.terms.items():
        for k, x in B.free_coproduct(w).items():
            for u, y in B.reduce_word(k[0]).items():
                for v, z in B.reduce_word(k[1]).items():
                    add_to(out, (u, v), c * x * y * z)
    assert out == {}


class _Entries:
    """Just enough of an R-matrix for the quadratic quotient."""

    def __init__(self, n, ents):
        self.n, self.r, self.ents = n, 0, ents

    def entry(self, i, j, k, l):
        return self.ents.get((i, j, k, l), Scalar(0))


def test_non_confluent_rejected():
    # x2x1 = x1x2 + x1x1, x3x2 = x2x3, x3x1 = x1x3 + x2x2: the overlap x3x2x1
    # resolves to different normal forms (checked by hand)
    from qdouble.braidedgroup import _QuadraticQuotient

    one = Scalar(1)

    def entries(rel):
        # pairs without a relation get the trivial one x_i x_j = x_i x_j
        full = {(i, j): [(i, j)] for i in range(3) for j in range(3)}
        full.update(rel)
        return {(j, a, i, b): one for (i, j), rhs in full.items() for a, b in rhs}

    rel = {(1, 0): [(0, 1), (0, 0)], (2, 1): [(1, 2)], (2, 0): [(0, 2), (1, 1)]}
    with pytest.raises(ConfluenceError):
        _QuadraticQuotient(_Entries(3, entries(rel)), "vector")
    # dropping the x2x2 term makes the system confluent
    rel[(2, 0)] = [(0, 2)]
    quot = _QuadraticQuotient(_Entries(3, entries(rel)), "vector")
    assert quot.basis((1, 1, 1)) == [(0, 1, 2)]


def test_radical_needs_degree_conserving_R():
    R = RMatrix(2, {(0, 1, 0, 0): Scalar(1), (0, 0, 0, 0): Scalar(1), (1, 1, 1, 1): Scalar(1),
                    (0, 1, 1, 0): Scalar(1), (1, 0, 0, 1): Scalar(1)})
    with pytest.raises(BraidedGroupError):
        BraidedGroup(R, "vector", quotient="radical")


def test_braided_derivatives():
    R, B, D = groups("A1")
    Q = q()
    for m in range(1, 6):
        d = braided_diff(B, 0, B.word((0,) * m), "opposite")
        assert d == B.word((0,) * (m - 1)).scale(q_integer(m, Q ** -2))
    assert braided_diff(B, 0, B.word(()), "opposite").is_zero()
    R, B, D = groups("A2")
    assert braided_diff(B, 0, B.word((1, 0)), "opposite") == B.word((1,)).scale(Q)


def test_derivative_from_coproduct_oracle():
    # d_i b is the coefficient of e^i (x) (.) in the coproduct
    R, B, D = groups("A2")
    for w in B.basis((2, 1)) + B.basis((1, 1)):
        for i in range(2):
            got = braided_diff(B, i, B.word(w))
            want = {}
            for (a, b), c in B.coproduct_word(w).items():
                if a == (i,):
                    add_to(want, b, c)
            assert got.terms == want


def test_coassociative_and_antipode_on_basis():
    R, B, D = groups("A2")
    for d in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        for w in B.basis(d):
            # (Delta x id) Delta = (id x Delta) Delta
            left = B.coproduct3_word(w)
            right = {}
            for (a, b), c in B.coproduct_word(w).items():
                for (b1, b2), x in B.coproduct_word(b).items():
                    add_to(right, (a, b1, b2), c * x)
            assert left == right
            # m (S x id) Delta = counit
            tot = {}
            for (a, b), c in B.coproduct_word(w).items():
                for u, x in B.antipode_word(a).items():
                    for v, y in B.mult_words(u, b).items():
                        add_to(tot, v, c * x * y)
            assert tot == {}


def _coevaluation(name, N):
    R, B, D = groups(name)
    ex = braided_exp(B, D, N, "exp")
    lhs = {}
    for (e, f), c in ex.terms.items():
        for (f1, f2), x in D.coproduct_word(f).items():
            add_to(lhs, (e, f1, f2), c * x)
    rhs = {}
    for (e1, f1), a in ex.terms.items():
        for (e2, f2), b in ex.terms.items():
            if len(e1) + len(e2) > N:
                continue
            for u, x in B.mult_words(e1, e2).items():
                add_to(rhs, (u, f1, f2), a * b * x)
    return lhs == rhs


@pytest.mark.parametrize("name", ["A1", "A2"])
def test_exp_coevaluation(name):
    assert _coevaluation(name, 4)


def test_barexp_coefficients():
    R, B, D = groups("A1")
    Q = q()
    scale = [(Q - Q.inverse()).inverse()]
    bx = braided_exp(B, D, 5, "barexp", scale)
    for m in range(6):
        want = (-(Q - Q.inverse())) ** m / q_factorial(m, Q ** -2)
        assert bx.coeff((0,) * m, (0,) * m) == want
    assert bx.coeff((), ()).is_one()


def test_opposite_shares_quotient():
    R, B, D = groups("A2")
    C = D.opposite()
    assert C.quot is D.quot and C.opposite() is D
