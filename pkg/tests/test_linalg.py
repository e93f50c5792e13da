import pytest

from qdouble import linalg
from qdouble.linalg import SingularMatrixError, SparseMatrix
from qdouble.scalars import Scalar, q


def M(rows):
    return [[x if isinstance(x, Scalar) else Scalar(x) for x in row] for row in rows]


def test_rref_and_rank():
    Q = q()
    A = M([[1, Q, 0], [Q, Q * Q, 0], [0, 0, 1]])
    red, piv = linalg.rref(A)
    assert piv == [0, 2]
    assert linalg.rank(A) == 2


def test_nullspace():
    Q = q()
    A = M([[1, Q, 0], [Q, Q * Q, 0]])
    ker = linalg.nullspace(A)
    assert len(ker) == 2
    for v in ker:
        for row in A:
            assert sum((a * b for a, b in zip(row, v)), Scalar(0)).is_zero()


def test_inverse():
    Q = q()
    A = M([[Q, 1], [0, Q]])
    Ai = linalg.inverse(A)
    assert linalg.matmul(A, Ai) == linalg.identity(2)
    with pytest.raises(SingularMatrixError):
        linalg.inverse(M([[1, 2], [2, 4]]))


def test_sparse_matches_dense():
    Q = q()
    A = M([[Q, 1, 0], [0, 0, 2], [1, 0, Q]])
    B = M([[1, 0, Q], [0, 1, 0], [Q, 0, 1]])
    SA, SB = SparseMatrix.from_dense(A), SparseMatrix.from_dense(B)
    assert (SA @ SB).to_dense() == linalg.matmul(A, B)
    assert (SA + SB).to_dense() == [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(A, B)]
    assert SA.nnz() == 5
