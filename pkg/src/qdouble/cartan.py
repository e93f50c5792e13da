"""Cartan data, root data and the torus Hopf algebra kY.

A torus element K_mu is stored by its exponent vector.  Exponents are
kept doubled (integers standing for multiples of 1/2) so that K^{1/2}
needs no rationals.

An optional extra coordinate holds the dilaton c of the central
extension; it pairs with the extra group-like g as <c, g> = lambda.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import json

from .scalars import Scalar


class CartanError(ValueError):
    pass


@dataclass(frozen=True)
class CartanDatum:
    """Symmetric integer matrix dot[i][j] = i.j."""

    dot: tuple

    def __post_init__(self):
        object.__setattr__(self, "dot", tuple(tuple(int(x) for x in row) for row in self.dot))

    @property
    def n(self):
        return len(self.dot)

    def a(self, i, j):
        """Cartan matrix entry a_ij = 2 (i.j) / (i.i)."""
        return Fraction(2 * self.dot[i][j], self.dot[i][i])

    def half_norm(self, i):
        """i.i / 2, the exponent of K_i in K-tilde_i."""
        return self.dot[i][i] // 2


@dataclass(frozen=True)
class RootDatum:
    """Lattices Y and X with a pairing, and embeddings I -> Y, I -> X.

    ``pairing[y][x]`` is <y-basis, x-basis>; ``y_of[i]`` and ``x_of[i]``
    are the coordinate vectors of i in Y and of i' in X.
    """

    pairing: tuple
    y_of: tuple
    x_of: tuple

    def __post_init__(self):
        for name in ("pairing", "y_of", "x_of"):
            object.__setattr__(self, name, tuple(tuple(int(x) for x in row) for row in getattr(self, name)))

    @property
    def rank(self):
        return len(self.pairing)

    def char(self, i):
        """Vector c_i with <mu, i'> = mu . c_i."""
        x = self.x_of[i]
        return tuple(sum(self.pairing[a][b] * x[b] for b in range(len(x))) for a in range(self.rank))

    def bracket(self, mu, i):
        """<mu, i'> for mu a vector in Y coordinates."""
        c = self.char(i)
        return sum(m * x for m, x in zip(mu, c))


def simply_connected(datum):
    """Y = X = Z^n with <i, j'> = a_ij."""
    n = datum.n
    pairing = []
    for i in range(n):
        row = []
        for j in range(n):
            a = datum.a(i, j)
            if a.denominator != 1:
                raise CartanError(f"a_{i + 1}{j + 1} = {a} is not an integer")
            row.append(int(a))
        pairing.append(row)
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    return RootDatum(pairing, ident, ident)


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok


def validate(datum, root=None):
    """Check the Cartan datum (and root datum if given).  Returns a report."""
    rep = ValidationReport()
    n = datum.n
    if any(len(row) != n for row in datum.dot):
        rep.violations.append("dot matrix is not square")
        return rep
    for i in range(n):
        ii = datum.dot[i][i]
        if ii <= 0 or ii % 2:
            rep.violations.append(f"{i + 1}.{i + 1} = {ii} must be even and positive")
    for i in range(n):
        for j in range(n):
            if datum.dot[i][j] != datum.dot[j][i]:
                rep.violations.append(f"dot is not symmetric at ({i + 1},{j + 1})")
    if not rep.ok:
        return rep
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            a = datum.a(i, j)
            if a.denominator != 1 or a > 0:
                rep.violations.append(f"a_{i + 1}{j + 1} = {a} must be a non-positive integer")
    if root is not None:
        if len(root.y_of) != n or len(root.x_of) != n:
            rep.violations.append("root datum embeds a different number of simple roots")
            return rep
        for i in range(n):
            for j in range(n):
                got = root.bracket(root.y_of[i], j)
                if Fraction(got) != datum.a(i, j):
                    rep.violations.append(f"<{i + 1},{j + 1}'> = {got} but a_{i + 1}{j + 1} = {datum.a(i, j)}")
    return rep


class Torus:
    """The group algebra kY (optionally with a dilaton coordinate).

    Exponent vectors have length ``rank`` (plus one when ``dilaton`` is
    set) and are doubled integers.  With ``half`` false only even entries
    occur.  ``modulus`` r > 0 imposes K^r = 1.
    """

    def __init__(self, datum, root=None, half=False, modulus=0, dilaton=None):
        self.datum = datum
        self.root = root if root is not None else simply_connected(datum)
        rep = validate(datum, self.root)
        if not rep.ok:
            raise CartanError("; ".join(rep.violations))
        self.half = half
        self.modulus = modulus
        self.dilaton = dilaton  # doubled exponent of lambda as a power of q, or None
        self.rank = self.root.rank
        self.width = self.rank + (1 if dilaton is not None else 0)
        # doubled characters: <mu, i'> = (doubled mu . chars[i]) / 2
        self.chars = [self.root.char(i) + ((0,) if dilaton is not None else ()) for i in range(datum.n)]
        self.ktilde = [tuple(2 * datum.half_norm(i) * y for y in self.root.y_of[i]) + ((0,) if dilaton is not None else ())
                       for i in range(datum.n)]

    def zero(self):
        return (0,) * self.width

    def normalize(self, mu):
        if self.modulus:
            m = 2 * self.modulus
            return tuple(x % m for x in mu)
        return tuple(mu)

    def add(self, mu, nu):
        return self.normalize(tuple(a + b for a, b in zip(mu, nu)))

    def neg(self, mu):
        return self.normalize(tuple(-a for a in mu))

    def scale(self, mu, k):
        return self.normalize(tuple(k * a for a in mu))

    def ktilde_of(self, d):
        """K-tilde_{sum d_i i} = prod K_i^{(i.i/2) d_i} (doubled exponents)."""
        out = [0] * self.width
        for i, k in enumerate(d):
            if k:
                for t, y in enumerate(self.ktilde[i]):
                    out[t] += k * y
        return self.normalize(out)

    def s_exponent(self, mu, d):
        """Exponent of s in <K_mu, g^d> = q^{<mu, sum d_i i'>}."""
        tot = 0
        for i, k in enumerate(d):
            if k:
                tot += k * sum(a * b for a, b in zip(mu[: self.rank], self.chars[i][: self.rank]))
        return tot

    def pairing(self, mu, d, g=0, r=0):
        """<K_mu, g^d> as a scalar, with an optional power g of the dilaton
        group-like.  ``r`` is the scalar mode."""
        e = self.s_exponent(mu, d)
        if g and self.dilaton is not None:
            # <c^k, g^g> = lambda^{k g}, c exponent stored doubled
            k2 = mu[self.rank]
            if k2 % 2:
                raise CartanError("dilaton exponents must be integers")
            e += (k2 // 2) * g * self.dilaton
        return Scalar.s_pow(e, r)

    def generator(self, i, power=1):
        """Doubled exponent vector of K_i^power (power may be 1/2)."""
        p2 = Fraction(power) * 2
        if p2.denominator != 1 or (not self.half and p2 % 2):
            raise CartanError(f"K^{power} needs the half torus")
        out = [0] * self.width
        out[i] = int(p2)
        return self.normalize(out)

    def dilaton_gen(self, power=1):
        if self.dilaton is None:
            raise CartanError("this torus has no dilaton")
        out = [0] * self.width
        out[self.rank] = 2 * power
        return self.normalize(out)

    def render(self, mu, latex=False):
        parts = []
        for t, x in enumerate(mu):
            if not x:
                continue
            if self.modulus and x > self.modulus:
                x -= 2 * self.modulus
            if t == self.rank:
                name = "c"
            else:
                name = "K" if self.rank == 1 else f"K_{{{t + 1}}}"
            exp = f"{x // 2}" if x % 2 == 0 else f"{x}/2"
            parts.append(name if exp == "1" else f"{name}^{{{exp}}}")
        return "".join(parts) if parts else "1"


def weak_R(torus, d, variant="R", dilaton_power=0):
    """R(g^d) (or Rbar) as a doubled torus exponent.

    R(g_i) = K_i^{i.i/2}, Rbar(g_i) = K_i^{-i.i/2}; with the dilaton,
    R(g) = c^{-1} and Rbar(g) = c.
    """
    mu = list(torus.ktilde_of(d))
    if dilaton_power:
        mu[torus.rank] -= 2 * dilaton_power
    mu = torus.normalize(mu)
    if variant == "R":
        return mu
    if variant == "Rbar":
        return torus.neg(mu)
    raise ValueError(f"unknown variant {variant!r}")


# presets and JSON -----------------------------------------------------------

PRESETS = {
    "A1": CartanDatum(((2,),)),
    "A2": CartanDatum(((2, -1), (-1, 2))),
}


def load_datum(spec):
    """Return (datum, root, half_torus) from a preset name, dict or JSON path."""
    if isinstance(spec, str) and spec in PRESETS:
        return PRESETS[spec], None, False
    if isinstance(spec, str):
        with open(spec) as fh:
            spec = json.load(fh)
    try:
        dot = spec["dot"]
        n = int(spec.get("n", len(dot)))
        if len(dot) != n:
            raise CartanError(f"n = {n} but dot has {len(dot)} rows")
        datum = CartanDatum(dot)
        rd = spec.get("root_datum", "simply_connected")
        if rd == "simply_connected":
            root = None
        else:
            root = RootDatum(rd["pairing"], rd["y_of"], rd["x_of"])
        half = bool(spec.get("half_torus", False))
    except (KeyError, TypeError) as exc:
        raise CartanError(f"malformed Cartan datum: {exc}") from None
    return datum, root, half
