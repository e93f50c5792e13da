import json

import pytest

from qdouble.cartan import PRESETS
from qdouble.linalg import SparseMatrix
from qdouble.rmatrix import (RMatrix, RMatrixError, braid_words, braided_factorial, braided_integer,
                             cartan_to_rmatrix, check_qybe, embedded_pr, perturbed, permutation_matrix, sl2_rmatrix)
from qdouble.scalars import Scalar, parse, q


def test_qybe():
    assert check_qybe(cartan_to_rmatrix(PRESETS["A1"]))
    assert check_qybe(cartan_to_rmatrix(PRESETS["A2"]))
    assert check_qybe(sl2_rmatrix())
    assert check_qybe(permutation_matrix(2))


def test_qybe_fails_under_perturbation():
    R = sl2_rmatrix()
    for ijkl in [(0, 0, 0, 0), (0, 1, 1, 0), (1, 0, 1, 0)]:
        assert not check_qybe(perturbed(R, *ijkl))


def test_sl2_layout():
    R = sl2_rmatrix()
    Q = q()
    # row (ik), column (jl)
    assert R.entries[1][2] == Q * Q - 1
    assert R.entry(0, 1, 1, 0) == Q * Q - 1
    assert R.entry(0, 0, 1, 1) == Q
    assert R.entry(1, 1, 0, 0) == Q
    assert R.entry(1, 0, 0, 1).is_zero()


def test_cartan_rmatrix():
    Q = q()
    R1 = cartan_to_rmatrix(PRESETS["A1"])
    assert R1.entry(0, 0, 0, 0) == Q * Q
    R2 = cartan_to_rmatrix(PRESETS["A2"])
    diag = [R2.entries[t][t] for t in range(4)]
    assert diag == [Q * Q, Q.inverse(), Q.inverse(), Q * Q]
    assert R2.is_diagonal()


def test_inverse_is_inverse():
    R = sl2_rmatrix()
    N = 4
    for a in range(N):
        for b in range(N):
            v = sum((R.entries[a][t] * R.inverse[t][b] for t in range(N)), Scalar(0))
            assert v == Scalar(1 if a == b else 0)


def test_hecke_condition():
    # (PR - q id)(PR + q^{-1} id) = 0 for the normalisation q^{-1} R
    R = sl2_rmatrix().scaled(q().inverse())
    Q = q()
    PR = embedded_pr(R, 2, 0)
    I = SparseMatrix.identity(4)
    assert ((PR - I.scale(Q)) @ (PR + I.scale(Q.inverse()))).nnz() == 0


def test_braided_integers_one_dimensional():
    R = cartan_to_rmatrix(PRESETS["A1"])
    Q = q()
    assert braided_integer(1, R) == SparseMatrix.identity(1)
    assert braided_integer(2, R).get(0, 0) == 1 + Q ** 2
    assert braided_integer(3, R).get(0, 0) == 1 + Q ** 2 + Q ** 4
    assert braided_factorial(2, R).get(0, 0) == 1 + Q ** 2
    assert braided_factorial(3, R).get(0, 0) == (1 + Q ** 2) * (1 + Q ** 2 + Q ** 4)


def test_braided_integer_two_terms():
    R = sl2_rmatrix()
    assert braided_integer(2, R) == SparseMatrix.identity(4) + embedded_pr(R, 2, 0)
    assert braided_factorial(1, R) == SparseMatrix.identity(2)


def test_braid_words():
    R = cartan_to_rmatrix(PRESETS["A1"])
    t = braid_words(R, (0,), (0,))
    assert t.terms == {((0,), (0,)): q() ** 2}
    t = braid_words(R, (), (0, 0))
    assert t.terms == {((0, 0), ()): Scalar(1)}
    # inverse direction undoes forward
    R2 = sl2_rmatrix()
    fwd = braid_words(R2, (0,), (1,))
    back = {}
    for (u, v), c in fwd.terms.items():
        for (a, b), d in braid_words(R2, u, v, "inverse").terms.items():
            back[(a, b)] = back.get((a, b), Scalar(0)) + c * d
    assert {k: v for k, v in back.items() if not v.is_zero()} == {((0,), (1,)): Scalar(1)}


def test_json_round_trip(tmp_path):
    R = sl2_rmatrix()
    data = R.to_json()
    assert [1, 2, 2, 1, "q^{2} - 1"] in data["entries"]
    again = RMatrix.from_json(json.dumps(data))
    assert again == R
    with pytest.raises(RMatrixError):
        RMatrix.from_json({"n": 2, "entries": [[3, 1, 1, 1, "1"]]})


def test_singular_rejected():
    with pytest.raises(RMatrixError):
        RMatrix(1, [[Scalar(0)]])


def test_parse_in_json_entry():
    assert parse("q^2-1") == q() ** 2 - 1
