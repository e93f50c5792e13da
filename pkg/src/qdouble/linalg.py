"""Exact linear algebra over scalars.

Matrices are lists of rows of :class:`Scalar`.  ``SparseMatrix`` keeps
only nonzero entries and is used for operators on tensor powers.
"""

from .scalars import Scalar, ScalarDivisionError


class SingularMatrixError(ScalarDivisionError):
    pass


def rref(rows, r=0):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns).  The input is not modified.
    """
    m = [list(row) for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    lead = 0
    for col in range(ncols):
        piv = None
        for i in range(lead, len(m)):
            if not m[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        m[lead], m[piv] = m[piv], m[lead]
        inv = m[lead][col].inverse()
        m[lead] = [x * inv for x in m[lead]]
        for i in range(len(m)):
            if i != lead and not m[i][col].is_zero():
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(m):
            break
    return m, pivots


def transpose(rows):
    return [list(c) for c in zip(*rows)]


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols=None, r=0):
    """Basis of the right kernel {x : rows x = 0}, one vector per free column.

    Each vector has a 1 in its free column and zeros in the other free
    columns.
    """
    if not rows:
        return [[Scalar(1 if i == j else 0, r) for i in range(ncols)] for j in range(ncols)]
    red, piv = rref(rows)
    n = len(rows[0])
    free = [j for j in range(n) if j not in piv]
    zero = Scalar(0, rows[0][0].r)
    out = []
    for f in free:
        v = [zero] * n
        v[f] = Scalar(1, zero.r)
        for i, p in enumerate(piv):
            v[p] = -red[i][f]
        out.append(v)
    return out


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = None
            for t in range(k):
                x = a[i][t]
                if x.is_zero():
                    continue
                y = b[t][j]
                if y.is_zero():
                    continue
                acc = x * y if acc is None else acc + x * y
            row.append(acc if acc is not None else Scalar(0, a[0][0].r))
        out.append(row)
    return out


def inverse(rows):
    n = len(rows)
    r = rows[0][0].r
    aug = [list(row) + [Scalar(1 if i == j else 0, r) for j in range(n)] for i, row in enumerate(rows)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in red]


def identity(n, r=0):
    return [[Scalar(1 if i == j else 0, r) for j in range(n)] for i in range(n)]


class SparseMatrix:
    """Square sparse matrix: rows[i] = {j: value} with nonzero values."""

    __slots__ = ("dim", "rows", "r")

    def __init__(self, dim, rows=None, r=0):
        self.dim = dim
        self.rows = rows if rows is not None else {}
        self.r = r

    @classmethod
    def identity(cls, dim, r=0):
        one = Scalar(1, r)
        return cls(dim, {i: {i: one} for i in range(dim)}, r)

    @classmethod
    def from_dense(cls, dense, r=0):
        rows = {}
        for i, row in enumerate(dense):
            d = {j: x for j, x in enumerate(row) if not x.is_zero()}
            if d:
                rows[i] = d
        return cls(len(dense), rows, r)

    def to_dense(self):
        z = Scalar(0, self.r)
        out = [[z] * self.dim for _ in range(self.dim)]
        for i, row in self.rows.items():
            for j, x in row.items():
                out[i][j] = x
        return out

    def get(self, i, j):
        return self.rows.get(i, {}).get(j, Scalar(0, self.r))

    def __matmul__(self, other):
        out = {}
        for i, row in self.rows.items():
            acc = {}
            for k, x in row.items():
                orow = other.rows.get(k)
                if not orow:
                    continue
                for j, y in orow.items():
                    v = x * y
                    if j in acc:
                        v = acc[j] + v
                    acc[j] = v
            acc = {j: v for j, v in acc.items() if not v.is_zero()}
            if acc:
                out[i] = acc
        return SparseMatrix(self.dim, out, self.r)

    def __add__(self, other):
        out = {i: dict(row) for i, row in self.rows.items()}
        for i, row in other.rows.items():
            tgt = out.setdefault(i, {})
            for j, y in row.items():
                v = tgt[j] + y if j in tgt else y
                if v.is_zero():
                    tgt.pop(j, None)
                else:
                    tgt[j] = v
            if not tgt:
                del out[i]
        return SparseMatrix(self.dim, out, self.r)

    def __sub__(self, other):
        return self + other.scale(Scalar(-1, self.r))

    def scale(self, c):
        if c.is_zero():
            return SparseMatrix(self.dim, {}, self.r)
        return SparseMatrix(self.dim, {i: {j: x * c for j, x in row.items()} for i, row in self.rows.items()}, self.r)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def nnz(self):
        return sum(len(row) for row in self.rows.values())
