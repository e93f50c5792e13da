import pytest
from hypothesis import given, settings, strategies as st

from qdouble.freealg import NCPoly, TensorPoly, degree, degree_vectors, words_of_degree
from qdouble.scalars import Scalar, q


def e(i):
    return NCPoly.gen(i, 2)


def test_concatenation_and_unit():
    assert e(0) * e(1) == NCPoly.word((0, 1), 2)
    assert (e(0) + e(1)) * e(0) == NCPoly.word((0, 0), 2) + NCPoly.word((1, 0), 2)
    p = e(0) * e(1) + e(1).scale(q())
    assert NCPoly.one(2) * p == p and p * NCPoly.one(2) == p


def test_homogeneous_component():
    p = NCPoly.word((0, 1), 2) + NCPoly.word((0, 0), 2)
    assert p.homogeneous_component((1, 1)) == NCPoly.word((0, 1), 2)
    assert p.homogeneous_component((0, 3)).is_zero()
    w = NCPoly.word((0, 1, 0), 2)
    assert w.homogeneous_component((2, 1)) == w


def test_words_of_degree_counts():
    assert words_of_degree((2, 1)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert len(words_of_degree((3, 3))) == 20
    assert all(degree(w, 2) == (3, 3) for w in words_of_degree((3, 3)))
    assert degree_vectors(2, 2) == [(2, 0), (1, 1), (0, 2)]


def test_zero_terms_dropped():
    p = e(0) - e(0)
    assert p.is_zero() and p.terms == {}


def test_alphabet_mismatch():
    with pytest.raises(ValueError):
        NCPoly.gen(0, 2) * NCPoly.gen(0, 3)


def test_render():
    p = NCPoly.word((0, 1), 2).scale(q()) - NCPoly.word((1,), 2)
    assert p.render() == "-x2 + q*x1x2"
    assert p.render(names=["a", "b"], sep=" ") == "-b + q*a b"


def test_tensor_poly():
    one = Scalar(1)
    t = TensorPoly({((0,), ()): one, ((), (0,)): one}, 1)
    assert t.coeff((0,), ()) == one
    assert (t - t).is_zero()


polys = st.dictionaries(st.lists(st.integers(0, 1), max_size=3).map(tuple), st.integers(-2, 2), max_size=4)


def _mk(d):
    return NCPoly({w: Scalar(c) * q() ** len(w) for w, c in d.items()}, 2)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    x, y, z = _mk(a), _mk(b), _mk(c)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
