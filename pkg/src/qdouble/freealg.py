"""Words, noncommutative polynomials and tensor polynomials.

Generators are numbered 0..n-1 internally and shown 1-based.  A word is a
tuple of generator indices.  Words are ordered by length, then
lexicographically (``word_key``).
"""

from .scalars import Scalar


def word_key(w):
    return (len(w), w)


def degree(word, n):
    """Degree vector of a word, a tuple of letter counts."""
    d = [0] * n
    for x in word:
        d[x] += 1
    return tuple(d)


def words_of_degree(d):
    """All words of degree vector d in lexicographic order."""
    d = list(d)
    total = sum(d)
    out = []
    prefix = []

    def rec():
        if len(prefix) == total:
            out.append(tuple(prefix))
            return
        for i, k in enumerate(d):
            if k:
                d[i] -= 1
                prefix.append(i)
                rec()
                prefix.pop()
                d[i] += 1

    rec()
    return out


def degree_vectors(n, total):
    """All degree vectors with the given total, in lexicographic order."""
    if n == 1:
        return [(total,)]
    out = []
    for k in range(total, -1, -1):
        for rest in degree_vectors(n - 1, total - k):
            out.append((k,) + rest)
    return out


def add_to(acc, key, val):
    """acc[key] += val, dropping zeros."""
    if key in acc:
        v = acc[key] + val
        if v.is_zero():
            del acc[key]
        else:
            acc[key] = v
    elif not val.is_zero():
        acc[key] = val


def _fmt_word(w, names, latex, sep=""):
    if not w:
        return "1"
    return sep.join(names[i] if names else ("x_{%d}" % (i + 1) if latex else f"x{i + 1}") for i in w)


def _fmt_terms(items, fmt_key, latex):
    if not items:
        return "0"
    parts = []
    for key, c in items:
        k = fmt_key(key)
        cs = c.latex() if latex else str(c)
        if c.is_one():
            body = k
        elif (-c).is_one():
            body = "-" + k
        else:
            if " " in cs or "(" in cs or "frac" in cs:
                cs = f"({cs})"
            body = cs if k == "1" else cs + ("" if latex else "*") + k
        parts.append(body)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class NCPoly:
    """Finite sum of words with scalar coefficients.

    ``terms`` maps words to nonzero scalars.  ``n`` is the alphabet size
    and ``r`` the scalar mode.
    """

    __slots__ = ("terms", "n", "r")

    def __init__(self, terms=None, n=1, r=0):
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}
        self.n = n
        self.r = r

    @classmethod
    def word(cls, w, n, r=0, coeff=None):
        return cls({tuple(w): coeff if coeff is not None else Scalar(1, r)}, n, r)

    @classmethod
    def gen(cls, i, n, r=0):
        return cls.word((i,), n, r)

    @classmethod
    def one(cls, n, r=0):
        return cls.word((), n, r)

    @classmethod
    def zero(cls, n, r=0):
        return cls({}, n, r)

    def copy(self):
        return NCPoly(dict(self.terms), self.n, self.r)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce_scalar(self, c):
        return c if isinstance(c, Scalar) else Scalar(c, self.r)

    def __add__(self, other):
        if not isinstance(other, NCPoly):
            other = NCPoly({(): self._coerce_scalar(other)}, self.n, self.r)
        elif other.n != self.n:
            raise ValueError(f"alphabet sizes differ: {self.n} and {other.n}")
        out = dict(self.terms)
        for w, c in other.terms.items():
            add_to(out, w, c)
        return NCPoly(out, self.n, self.r)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()}, self.n, self.r)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self._coerce_scalar(c)
        if c.is_zero():
            return NCPoly({}, self.n, self.r)
        return NCPoly({w: x * c for w, x in self.terms.items()}, self.n, self.r)

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        if other.n != self.n:
            raise ValueError(f"alphabet sizes differ: {self.n} and {other.n}")
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                add_to(out, w1 + w2, c1 * c2)
        return NCPoly(out, self.n, self.r)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def coeff(self, w):
        return self.terms.get(tuple(w), Scalar(0, self.r))

    def degrees(self):
        return {degree(w, self.n) for w in self.terms}

    def homogeneous_component(self, d):
        d = tuple(d)
        return NCPoly({w: c for w, c in self.terms.items() if degree(w, self.n) == d}, self.n, self.r)

    def max_length(self):
        return max((len(w) for w in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]))

    def render(self, names=None, latex=False, sep=""):
        return _fmt_terms(self.sorted_terms(), lambda w: _fmt_word(w, names, latex, sep), latex)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"NCPoly({self.render()})"


class TensorPoly:
    """Finite sum of word tensors w1 (x) w2 ... with scalar coefficients.

    Keys are tuples of words; all keys have the same number of legs.
    """

    __slots__ = ("terms", "n", "r")

    def __init__(self, terms=None, n=1, r=0):
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}
        self.n = n
        self.r = r

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            add_to(out, k, c)
        return TensorPoly(out, self.n, self.r)

    def __neg__(self):
        return TensorPoly({k: -c for k, c in self.terms.items()}, self.n, self.r)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = c if isinstance(c, Scalar) else Scalar(c, self.r)
        return TensorPoly({k: x * c for k, x in self.terms.items()}, self.n, self.r)

    def __eq__(self, other):
        if isinstance(other, TensorPoly):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def coeff(self, *words):
        return self.terms.get(tuple(tuple(w) for w in words), Scalar(0, self.r))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: tuple(word_key(w) for w in t[0]))

    def render(self, names=None, latex=False, names2=None):
        sep = r" \otimes " if latex else " (x) "

        def fmt(key):
            out = []
            for i, w in enumerate(key):
                nm = names2 if (i > 0 and names2 is not None) else names
                out.append(_fmt_word(w, nm, latex))
            return sep.join(out)

        return _fmt_terms(self.sorted_terms(), fmt, latex)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"TensorPoly({self.render()})"
