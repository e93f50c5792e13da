"""R-matrices, the Yang-Baxter check, word braidings and braided integers.

An R-matrix on an n-dimensional space is stored as an n^2 x n^2 matrix
whose entry R^i_j^k_l sits at row (i, k) and column (j, l), rows and
columns ordered (1,1), (1,2), ..., (n,n).  Indices are 0-based here.

Braidings used throughout:

* vectors:   Psi(e^i (x) e^j) = sum R^j_a^i_b e^a (x) e^b
* covectors: Psi(f_i (x) f_j) = sum R^a_i^b_j f_b (x) f_a
"""

import json
from itertools import product

from . import linalg
from .freealg import TensorPoly, add_to
from .linalg import SparseMatrix
from .scalars import Scalar, parse, render


class RMatrixError(ValueError):
    pass


class RMatrix:
    """An invertible n^2 x n^2 exact matrix indexed as R^i_j^k_l."""

    def __init__(self, n, entries, r=0):
        """``entries`` is either a dense n^2 x n^2 list of scalars or a dict
        {(i, j, k, l): scalar}; missing dict entries are zero."""
        self.n = n
        self.r = r
        N = n * n
        zero = Scalar(0, r)
        if isinstance(entries, dict):
            dense = [[zero] * N for _ in range(N)]
            for (i, j, k, l), v in entries.items():
                dense[i * n + k][j * n + l] = v if isinstance(v, Scalar) else Scalar(v, r)
        else:
            dense = [list(row) for row in entries]
            if len(dense) != N or any(len(row) != N for row in dense):
                raise RMatrixError(f"expected a {N}x{N} matrix")
        self.entries = dense
        try:
            self.inverse = linalg.inverse(dense)
        except linalg.SingularMatrixError:
            raise RMatrixError("R-matrix is not invertible") from None
        if linalg.matmul(dense, self.inverse) != linalg.identity(N, r):
            raise RMatrixError("inverse check failed")
        self.qybe_certified = False
        self._tables = {}

    def entry(self, i, j, k, l):
        return self.entries[i * self.n + k][j * self.n + l]

    def inv_entry(self, i, j, k, l):
        return self.inverse[i * self.n + k][j * self.n + l]

    def scaled(self, c):
        c = c if isinstance(c, Scalar) else Scalar(c, self.r)
        return RMatrix(self.n, [[x * c for x in row] for row in self.entries], self.r)

    def transposed21(self):
        """R_21, with (R_21)^i_j^k_l = R^k_l^i_j."""
        n = self.n
        return RMatrix(n, {(i, j, k, l): self.entry(k, l, i, j) for i, j, k, l in product(range(n), repeat=4)}, self.r)

    def is_diagonal(self):
        N = self.n * self.n
        return all(self.entries[a][b].is_zero() for a in range(N) for b in range(N) if a != b)

    def conserves_degree(self):
        """True when R^i_j^k_l != 0 only if {i, k} = {j, l} as multisets."""
        n = self.n
        for i, j, k, l in product(range(n), repeat=4):
            if not self.entry(i, j, k, l).is_zero() and sorted((i, k)) != sorted((j, l)):
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, RMatrix) and self.n == other.n and self.entries == other.entries

    __hash__ = object.__hash__

    # braid tables ---------------------------------------------------------

    def braid_table(self, side="vector", direction="forward"):
        """Elementary braiding as {(x, y): [((a, b), coeff), ...]}.

        Maps the two-letter tensor x (x) y to a sum of a (x) b.
        """
        key = (side, direction)
        if key in self._tables:
            return self._tables[key]
        n = self.n
        fwd = {}
        for i, j in product(range(n), repeat=2):
            out = {}
            for a, b in product(range(n), repeat=2):
                if side == "vector":
                    c = self.entry(j, a, i, b)
                    tgt = (a, b)
                else:
                    c = self.entry(a, i, b, j)
                    tgt = (b, a)
                if not c.is_zero():
                    add_to(out, tgt, c)
            fwd[(i, j)] = out
        if direction == "forward":
            table = fwd
        elif direction == "inverse":
            # invert the n^2 x n^2 operator (column = source pair)
            N = n * n
            zero = Scalar(0, self.r)
            M = [[zero] * N for _ in range(N)]
            for (i, j), out in fwd.items():
                for (a, b), c in out.items():
                    M[a * n + b][i * n + j] = c
            Minv = linalg.inverse(M)
            table = {}
            for i, j in product(range(n), repeat=2):
                table[(i, j)] = {(a, b): Minv[a * n + b][i * n + j]
                                 for a, b in product(range(n), repeat=2)
                                 if not Minv[a * n + b][i * n + j].is_zero()}
        else:
            raise ValueError(f"unknown direction {direction!r}")
        table = {k: list(v.items()) for k, v in table.items()}
        self._tables[key] = table
        return table

    # JSON -----------------------------------------------------------------

    def to_json(self):
        n = self.n
        ents = []
        for i, j, k, l in product(range(n), repeat=4):
            v = self.entry(i, j, k, l)
            if not v.is_zero():
                ents.append([i + 1, j + 1, k + 1, l + 1, render(v)])
        return {"n": n, "entries": ents}

    @classmethod
    def from_json(cls, data, r=0):
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = int(data["n"])
            ents = {}
            for i, j, k, l, v in data["entries"]:
                for x in (i, j, k, l):
                    if not 1 <= x <= n:
                        raise RMatrixError(f"index {x} out of range 1..{n}")
                ents[(i - 1, j - 1, k - 1, l - 1)] = parse(v, r)
        except (KeyError, TypeError) as exc:
            raise RMatrixError(f"malformed R-matrix data: {exc}") from None
        return cls(n, ents, r)


def permutation_matrix(n, r=0):
    """P with P^i_j^k_l = delta^i_l delta^k_j."""
    return RMatrix(n, {(i, j, j, i): Scalar(1, r) for i in range(n) for j in range(n)}, r)


def _embed3(R, pos):
    """R acting on the factors (a, b) of V^{(x)3}, as an n^3 x n^3 dense matrix."""
    n = R.n
    N = n ** 3
    zero = Scalar(0, R.r)
    M = [[zero] * N for _ in range(N)]
    a, b = pos
    for I in product(range(n), repeat=3):
        for J in product(range(n), repeat=3):
            if any(I[t] != J[t] for t in range(3) if t not in pos):
                continue
            v = R.entry(I[a], J[a], I[b], J[b])
            if not v.is_zero():
                M[(I[0] * n + I[1]) * n + I[2]][(J[0] * n + J[1]) * n + J[2]] = v
    return M


def check_qybe(R):
    """R12 R13 R23 == R23 R13 R12 exactly.  Sets ``R.qybe_certified``."""
    r12, r13, r23 = _embed3(R, (0, 1)), _embed3(R, (0, 2)), _embed3(R, (1, 2))
    mm = linalg.matmul
    ok = mm(mm(r12, r13), r23) == mm(mm(r23, r13), r12)
    if ok:
        R.qybe_certified = True
    return ok


def perturbed(R, i, j, k, l, delta=1):
    """Copy of R with one entry shifted by ``delta`` (for fault tests)."""
    ents = [list(row) for row in R.entries]
    ents[i * R.n + k][j * R.n + l] = ents[i * R.n + k][j * R.n + l] + delta
    return RMatrix(R.n, ents, R.r)


# braided integers -------------------------------------------------------------


def _index(I, n):
    x = 0
    for a in I:
        x = x * n + a
    return x


def embedded_pr(R, m, p):
    """(PR)_{p,p+1} acting on V^{(x)m} (positions 0-based).

    (PR)^i_j^k_l = R^k_j^i_l.
    """
    n = R.n
    rows = {}
    for J in product(range(n), repeat=m):
        col = _index(J, n)
        j, l = J[p], J[p + 1]
        for i, k in product(range(n), repeat=2):
            v = R.entry(k, j, i, l)
            if v.is_zero():
                continue
            I = J[:p] + (i, k) + J[p + 2:]
            rows.setdefault(_index(I, n), {})[col] = v
    return SparseMatrix(n ** m, rows, R.r)


def braided_integer(m, R, offset=0, total=None):
    """[m; R] = id + (PR)_12 + (PR)_23 (PR)_12 + ... on V^{(x)m}.

    With ``total`` given, the result acts on positions offset..offset+m-1
    of V^{(x)total}.
    """
    if m < 1:
        raise ValueError("braided_integer needs m >= 1")
    total = m if total is None else total
    dim = R.n ** total
    out = SparseMatrix.identity(dim, R.r)
    term = SparseMatrix.identity(dim, R.r)
    for p in range(offset, offset + m - 1):
        term = embedded_pr(R, total, p) @ term
        out = out + term
    return out


def braided_factorial(m, R):
    """[m; R]! = [m; R]_{1..m} [m-1; R]_{2..m} ... [2; R]_{m-1,m}."""
    if m < 1:
        raise ValueError("braided_factorial needs m >= 1")
    out = SparseMatrix.identity(R.n ** m, R.r)
    for k in range(m, 1, -1):
        out = out @ braided_integer(k, R, offset=m - k, total=m)
    return out


# word braiding ----------------------------------------------------------------


def braid_with_table(table, w1, w2, one):
    """Braid w1 (x) w2 to a sum of u (x) v with |u| = |w2|, |v| = |w1|.

    The letters of w1 are moved right through w2 one adjacent swap at a
    time, last letter first.
    """
    state = {tuple(w1) + tuple(w2): one}
    k, m = len(w1), len(w2)
    for t in range(k - 1, -1, -1):
        for p in range(t, t + m):
            new = {}
            for word, c in state.items():
                for (a, b), x in table[(word[p], word[p + 1])]:
                    add_to(new, word[:p] + (a, b) + word[p + 2:], c * x)
            state = new
    out = {}
    for word, c in state.items():
        out[(word[:m], word[m:])] = c
    return out


def braid_words(R, w1, w2, direction="forward", side="vector"):
    """Psi (or Psi^{-1}) applied to the word tensor w1 (x) w2."""
    table = R.braid_table(side, direction)
    return TensorPoly(braid_with_table(table, w1, w2, Scalar(1, R.r)), R.n, R.r)


# constructors -----------------------------------------------------------------


def cartan_to_rmatrix(datum, r=0):
    """Diagonal R with R^i_i^k_k = q^{i.k}."""
    n = datum.n
    return RMatrix(n, {(i, i, k, k): Scalar.q_pow(datum.dot[i][k], r) for i in range(n) for k in range(n)}, r)


def sl2_rmatrix(r=0):
    """The standard sl_2 R-matrix in the layout
    [[q^2,0,0,0],[0,q,q^2-1,0],[0,0,q,0],[0,0,0,q^2]]."""
    q = Scalar.q_pow(1, r)
    z = Scalar(0, r)
    rows = [
        [q * q, z, z, z],
        [z, q, q * q - 1, z],
        [z, z, q, z],
        [z, z, z, q * q],
    ]
    return RMatrix(2, rows, r)


PRESETS = {"sl2-rmatrix": sl2_rmatrix}
