"""Exact scalars in Q(s), with q = s**2, or in a cyclotomic field.

Two modes are supported and never mixed:

* generic (``r == 0``): reduced rational functions num/den in s with a
  monic denominator.  Laurent monomials s**-k are carried in den.
* cyclotomic (``r`` odd, ``r >= 3``): q is a primitive r-th root of
  unity, values are residues in Q[q]/Phi_r(q).  Since r is odd we take
  s = q**((r+1)/2) so that s**2 = q still holds.

Polynomials are backed by FLINT's ``fmpq_poly``.
"""

from fractions import Fraction
from functools import lru_cache
import re

from flint import fmpq, fmpq_poly


class ScalarError(Exception):
    """Base class for scalar arithmetic problems."""


class ModeError(ScalarError):
    """Raised when generic and cyclotomic values (or two moduli) are mixed."""


class ScalarDivisionError(ScalarError, ZeroDivisionError):
    """Division by an exact zero."""


class ParseError(ScalarError, ValueError):
    pass


_ONE_POLY = fmpq_poly([1])
_ZERO_POLY = fmpq_poly([])


@lru_cache(maxsize=None)
def cyclotomic_poly(r):
    """Phi_r(q) as an fmpq_poly."""
    if r < 1:
        raise ModeError("cyclotomic order must be positive")
    # Phi_r = (q^r - 1) / prod_{d | r, d < r} Phi_d
    p = fmpq_poly([-1] + [0] * (r - 1) + [1])
    for d in range(1, r):
        if r % d == 0:
            p = p // cyclotomic_poly(d)
    return p


def _check_mode(r):
    if r == 0:
        return
    if r < 3 or r % 2 == 0:
        raise ModeError(f"cyclotomic mode needs an odd order r >= 3, got {r}")


def _to_fmpq(c):
    if isinstance(c, Fraction):
        return fmpq(c.numerator, c.denominator)
    return fmpq(c)


class Scalar:
    """An exact element of Q(s) or of Q(zeta_r)."""

    __slots__ = ("r", "num", "den", "_hash")

    def __init__(self, value=0, r=0):
        _check_mode(r)
        self.r = r
        self.num = fmpq_poly([_to_fmpq(value)]) if value else _ZERO_POLY
        self.den = _ONE_POLY
        self._hash = None

    @classmethod
    def _raw(cls, r, num, den=_ONE_POLY):
        obj = object.__new__(cls)
        obj.r = r
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, r, num, den):
        """Reduce num/den (generic mode) to canonical form."""
        if num.is_zero():
            return cls._raw(r, _ZERO_POLY, _ONE_POLY)
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
            lc = den.leading_coefficient()
            if lc != 1:
                num = num / lc
                den = den / lc
        return cls._raw(r, num, den)

    # constructors ---------------------------------------------------------

    @classmethod
    def s_pow(cls, k, r=0):
        """s**k for any integer k."""
        return _s_pow(k, r)

    @classmethod
    def q_pow(cls, k, r=0):
        """q**k; k may be an integer or a half-integer Fraction."""
        k2 = Fraction(k) * 2
        if k2.denominator != 1:
            raise ValueError("q exponents must be multiples of 1/2")
        return _s_pow(int(k2), r)

    @classmethod
    def from_poly(cls, coeffs, r=0, var="q"):
        """Build from a list of rational coefficients in q (or s)."""
        out = cls(0, r)
        step = 2 if var == "q" else 1
        for k, c in enumerate(coeffs):
            if c:
                out = out + _s_pow(step * k, r) * c
        return out

    # predicates -----------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.r != self.r:
                raise ModeError(f"cannot combine scalars of modes {self.r} and {other.r}")
            return other
        if isinstance(other, (int, Fraction)) or type(other) is fmpq:
            return Scalar(other, self.r)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.r:
            return Scalar._raw(self.r, self.num + o.num)
        if self.den == o.den:
            return Scalar._make(0, self.num + o.num, self.den)
        return Scalar._make(0, self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.r, -self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.r:
            return Scalar._raw(self.r, (self.num * o.num) % cyclotomic_poly(self.r))
        if self.num.is_zero() or o.num.is_zero():
            return Scalar._raw(0, _ZERO_POLY)
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.is_one() and d.is_one():
            return Scalar._raw(0, a * c)
        # cross cancellation keeps the result reduced
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a, d = a // g1, d // g1
        if not g2.is_one():
            c, b = c // g2, b // g2
        return Scalar._raw(0, a * c, b * d)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ScalarDivisionError("division by zero scalar")
        if self.r:
            g, u, _ = self.num.xgcd(cyclotomic_poly(self.r))
            return Scalar._raw(self.r, (u / g.leading_coefficient()) % cyclotomic_poly(self.r))
        lc = self.num.leading_coefficient()
        return Scalar._raw(0, self.den / lc, self.num / lc)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar(1, self.r)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.r == other.r and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.is_one() and self.num == fmpq_poly([_to_fmpq(other)]) if other else self.num.is_zero()
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.r, str(self.num), str(self.den)))
        return self._hash

    # inspection -----------------------------------------------------------

    def laurent(self):
        """Return {s-exponent: Fraction} if this is a Laurent polynomial in s.

        Cyclotomic values are returned in powers of s = q**((r+1)/2)
        reinterpreted as q-exponents doubled, i.e. {2k: c} for c q**k.
        Returns None when the denominator is not a monomial.
        """
        if self.r:
            return {2 * k: Fraction(int(c.p), int(c.q)) for k, c in enumerate(self.num.coeffs()) if c != 0}
        dc = self.den.coeffs()
        if any(c != 0 for c in dc[:-1]):
            return None
        shift = len(dc) - 1
        return {k - shift: Fraction(int(c.p), int(c.q)) for k, c in enumerate(self.num.coeffs()) if c != 0}

    def to_fraction(self):
        """The rational value of a constant scalar, else ValueError."""
        lp = self.laurent()
        if lp is None or any(k != 0 for k in lp):
            raise ValueError(f"{self} is not a rational constant")
        return lp.get(0, Fraction(0))

    def evaluate(self, s_value):
        """Evaluate at a numeric value of s (generic mode only)."""
        if self.r:
            raise ModeError("evaluate is only defined in generic mode")
        n = sum(float(c) * s_value ** k for k, c in enumerate(self.num.coeffs()))
        d = sum(float(c) * s_value ** k for k, c in enumerate(self.den.coeffs()))
        return n / d

    # rendering ------------------------------------------------------------

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Scalar({render(self)!r}{', r=%d' % self.r if self.r else ''})"

    def latex(self):
        return render(self, latex=True)


@lru_cache(maxsize=4096)
def _s_pow(k, r):
    _check_mode(r)
    if r:
        e = (k * (r + 1) // 2) % r
        return Scalar._raw(r, fmpq_poly([0] * e + [1]) % cyclotomic_poly(r))
    if k >= 0:
        return Scalar._raw(0, fmpq_poly([0] * k + [1]))
    return Scalar._raw(0, _ONE_POLY, fmpq_poly([0] * (-k) + [1]))


def zero(r=0):
    return Scalar(0, r)


def one(r=0):
    return Scalar(1, r)


def s(r=0):
    return _s_pow(1, r)


def q(r=0):
    return _s_pow(2, r)


def q_integer(m, t):
    """[m; t] = 1 + t + ... + t**(m-1)."""
    if m < 0:
        raise ValueError("q_integer needs m >= 0")
    out = Scalar(0, t.r)
    p = Scalar(1, t.r)
    for _ in range(m):
        out = out + p
        p = p * t
    return out


def q_factorial(m, t):
    """[m; t]! = [1; t][2; t]...[m; t]."""
    out = Scalar(1, t.r)
    for k in range(1, m + 1):
        out = out * q_integer(k, t)
    return out


def q_binomial(m, k, t):
    if k < 0 or k > m:
        return Scalar(0, t.r)
    return q_factorial(m, t) / (q_factorial(k, t) * q_factorial(m - k, t))


# rendering ------------------------------------------------------------------


def _exp_str(k2):
    """Exponent of q from an s-exponent."""
    if k2 % 2 == 0:
        return str(k2 // 2)
    return f"{k2}/2"


def _coef_str(c, latex):
    if c.denominator == 1:
        return str(abs(c.numerator))
    if latex:
        return r"\tfrac{%d}{%d}" % (abs(c.numerator), c.denominator)
    return f"{abs(c.numerator)}/{c.denominator}"


def _render_laurent(terms, latex):
    if not terms:
        return "0"
    parts = []
    for k in sorted(terms, reverse=True):
        c = terms[k]
        if k == 0:
            body = _coef_str(c, latex)
        else:
            mono = "q" if k == 2 else "q^{%s}" % _exp_str(k)
            if abs(c) == 1:
                body = mono
            else:
                body = _coef_str(c, latex) + ("" if latex else "*") + mono
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _poly_terms(p):
    return {k: Fraction(int(c.p), int(c.q)) for k, c in enumerate(p.coeffs()) if c != 0}


def render(x, latex=False):
    """Canonical text form, e.g. ``q^{2} - 1`` or ``(q^{1/2})/(q + 1)``."""
    lp = x.laurent()
    if lp is not None:
        return _render_laurent(lp, latex)
    # quantum denominators q^k - q^{-k} are common enough to show as such
    for k in (1, 2, 3):
        qk = Scalar.q_pow(k, x.r)
        y = (x * (qk - qk.inverse())).laurent()
        if y is not None:
            num = _render_laurent(y, latex)
            den = _render_laurent((qk - qk.inverse()).laurent(), latex)
            if latex:
                return r"\frac{%s}{%s}" % (num, den)
            return f"{num}/({den})" if " " not in num else f"({num})/({den})"
    num = _render_laurent(_poly_terms(x.num), latex)
    den = _render_laurent(_poly_terms(x.den), latex)
    if latex:
        return r"\frac{%s}{%s}" % (num, den)
    return f"({num})/({den})"


# parsing --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([qs])|(\*\*|[-+*/^(){}]))")


def _tokenize(text):
    pos = 0
    toks = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        if m.group(1):
            toks.append(("int", int(m.group(1))))
        elif m.group(2):
            toks.append(("var", m.group(2)))
        else:
            toks.append(("op", "^" if m.group(3) == "**" else m.group(3)))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return toks


class _Parser:
    def __init__(self, text, r):
        self.toks = _tokenize(text)
        self.i = 0
        self.r = r
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, op=None):
        t = self.peek()
        if t[0] is None or (op is not None and t != ("op", op)):
            raise ParseError(f"expected {op or 'token'} in {self.text!r}")
        self.i += 1
        return t

    def expr(self):
        out = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def term(self):
        out = self.unary()
        while True:
            t = self.peek()
            if t in (("op", "*"), ("op", "/")):
                self.take()
                u = self.unary()
                out = out * u if t[1] == "*" else out / u
            elif t[0] in ("int", "var") or t == ("op", "("):
                out = out * self.unary()
            else:
                return out

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def exponent(self):
        if self.peek() in (("op", "{"), ("op", "(")):
            close = "}" if self.take()[1] == "{" else ")"
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            n = self.take()
            if n[0] != "int":
                raise ParseError(f"bad exponent in {self.text!r}")
            e = Fraction(n[1])
            if self.peek() == ("op", "/"):
                self.take()
                d = self.take()
                if d[0] != "int" or d[1] == 0:
                    raise ParseError(f"bad exponent in {self.text!r}")
                e = e / d[1]
            self.take(close)
            return -e if neg else e
        neg = False
        if self.peek() == ("op", "-"):
            self.take()
            neg = True
        n = self.take()
        if n[0] != "int":
            raise ParseError(f"bad exponent in {self.text!r}")
        return Fraction(-n[1] if neg else n[1])

    def power(self):
        t = self.peek()
        if t[0] == "int":
            self.take()
            base, step = Scalar(t[1], self.r), None
        elif t[0] == "var":
            self.take()
            base, step = None, (2 if t[1] == "q" else 1)
        elif t == ("op", "("):
            self.take()
            base, step = self.expr(), None
            self.take(")")
        else:
            raise ParseError(f"unexpected token in {self.text!r}")
        if self.peek() == ("op", "^"):
            self.take()
            e = self.exponent()
            if step is not None:
                k = e * step
                if k.denominator != 1:
                    raise ParseError(f"exponent {e} not allowed in {self.text!r}")
                return _s_pow(int(k), self.r)
            if e.denominator != 1:
                raise ParseError(f"fractional power of a non-variable in {self.text!r}")
            return base ** int(e)
        if step is not None:
            return _s_pow(step, self.r)
        return base


def parse(text, r=0):
    """Parse the textual grammar produced by :func:`render`.

    Accepts integers, ``q``, ``s``, ``q^{a}``, ``q^{a/2}``, ``+ - * /``,
    parentheses and implicit multiplication.
    """
    if isinstance(text, (int, Fraction)):
        return Scalar(text, r)
    p = _Parser(str(text), r)
    out = p.expr()
    if p.i != len(p.toks):
        raise ParseError(f"trailing input in {text!r}")
    return out
