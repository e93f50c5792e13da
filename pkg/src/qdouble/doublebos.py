"""The double-bosonisation U(Cbar, H, B) for a torus H.

Elements are sums of normal-ordered triples c K_mu b with c a basis word
of Cbar (letters f_i), mu a doubled torus exponent and b a basis word of
B (letters e^i).  The relations used are

    e^i K_mu = q^{<mu, i'>} K_mu e^i,   K_mu f_i = q^{<mu, i'>} f_i K_mu,

and the cross relation, summed over iterated coproducts,

    b c = Kt_{|b1|} c2 b2 Kt^{-1}_{|c3|} <c1, b1> <Sbar c3, b3>

where Kt_d = K-tilde of the degree d, Delta^2 b = b1 (x) b2 (x) b3 in B and
Delta^2 c = c1 (x) c2 (x) c3 in Cbar (inverse braiding).  The pairing
here is the unit pairing times prod 1/(q_i - q_i^{-1}) over the letters.

Coproducts are

    Delta b = b1 (x) Kt_{|b1|} b2,   Delta c = c1 Kt^{-1}_{|c2|} (x) c2.
"""

from itertools import product

from .braidedgroup import BraidedGroup, _pairing_table, braided_exp
from .cartan import Torus, validate, simply_connected
from .freealg import NCPoly, add_to, degree, degree_vectors, word_key
from .rmatrix import cartan_to_rmatrix
from .scalars import Scalar


class TruncationError(ArithmeticError):
    """A product or coproduct produced a term beyond the degree bound."""


class UModeError(ValueError):
    pass


def _fmt_word(w, letter, up):
    if not w:
        return ""
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        base = f"{letter}^{{{w[i] + 1}}}" if up else f"{letter}_{{{w[i] + 1}}}"
        out.append(base if j - i == 1 else f"({base})^{{{j - i}}}")
        i = j
    return "".join(out)


class UElement:
    """A sum of basis triples (c, mu, b) with scalar coefficients."""

    __slots__ = ("U", "terms")

    def __init__(self, U, terms=None):
        self.U = U
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    def __add__(self, other):
        if not isinstance(other, UElement):
            other = self.U.scalar(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            add_to(out, k, v)
        return UElement(self.U, out)

    __radd__ = __add__

    def __neg__(self):
        return UElement(self.U, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = c if isinstance(c, Scalar) else Scalar(c, self.U.r)
        return UElement(self.U, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UElement):
            return self.U.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        out = self.U.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, UElement):
            return self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def coeff(self, key):
        return self.terms.get(key, Scalar(0, self.U.r))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.U.key_order(t[0]))

    def render(self, latex=False):
        return self.U.render_terms(self.sorted_terms(), latex)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"UElement({self.render()})"


class UTensor:
    """A sum of tensors of basis triples; keys are tuples of triples."""

    __slots__ = ("U", "terms")

    def __init__(self, U, terms=None):
        self.U = U
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @property
    def legs(self):
        for k in self.terms:
            return len(k)
        return 0

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            add_to(out, k, v)
        return UTensor(self.U, out)

    def __neg__(self):
        return UTensor(self.U, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return UTensor(self.U, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UTensor):
            return self.U.multiply_tensor(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, UTensor):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def is_zero(self):
        return not self.terms

    @classmethod
    def of(cls, *elements):
        """Tensor product of UElements."""
        U = elements[0].U
        acc = {(): Scalar(1, U.r)}
        for el in elements:
            nxt = {}
            for k, c in acc.items():
                for t, x in el.terms.items():
                    add_to(nxt, k + (t,), c * x)
            acc = nxt
        return cls(U, acc)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: tuple(self.U.key_order(k) for k in t[0]))

    def render(self, latex=False):
        sep = r" \otimes " if latex else " (x) "
        parts = []
        for key, c in self.sorted_terms():
            leg = sep.join(self.U.render_key(k, latex) for k in key)
            parts.append((c, leg))
        return _join_terms(parts, latex)

    def __str__(self):
        return self.render()


def _join_terms(parts, latex):
    if not parts:
        return "0"
    out = []
    for c, body in parts:
        cs = c.latex() if latex else str(c)
        if c.is_one():
            s = body
        elif (-c).is_one():
            s = "-" + body
        else:
            if " " in cs or "(" in cs or "frac" in cs:
                cs = f"({cs})"
            s = cs if body == "1" else cs + ("" if latex else "*") + body
        out.append(s)
    text = out[0]
    for s in out[1:]:
        text += " - " + s[1:] if s.startswith("-") else " + " + s
    return text


class UAlgebra:
    """U(Cbar, H, B) with B, Cbar radical quotients and H a torus."""

    def __init__(self, datum, root=None, r=0, half_torus=False, max_degree=None, modulus=None):
        if max_degree is None or max_degree < 1:
            raise UModeError("an explicit max_degree >= 1 is required")
        rep = validate(datum, root if root is not None else simply_connected(datum))
        if not rep.ok:
            from .cartan import CartanError
            raise CartanError("; ".join(rep.violations))
        self.datum = datum
        self.n = datum.n
        self.r = r
        self.max_degree = max_degree
        self.R = cartan_to_rmatrix(datum, r)
        self.B = BraidedGroup(self.R, "vector", "forward", "radical")
        self.D = BraidedGroup(self.R, "covector", "forward", "radical")
        self.C = self.D.opposite()  # Cbar: same algebra, inverse braiding
        self.torus = Torus(datum, root, half=half_torus, modulus=(r if modulus is None else modulus))
        q = Scalar.q_pow(1, r)
        self.scale = []
        for i in range(self.n):
            qi = Scalar.q_pow(datum.half_norm(i), r)
            self.scale.append((qi - qi.inverse()).inverse())
        self.zero_mu = self.torus.zero()
        self._pair_tab = _pairing_table(self.R)
        self._cross_cache = {}
        self._prod_cache = {}
        self._anti_cache = {}
        self._one = Scalar(1, r)
        self.q = q

    # construction of elements -------------------------------------------

    def scalar(self, c):
        c = c if isinstance(c, Scalar) else Scalar(c, self.r)
        return UElement(self, {((), self.zero_mu, ()): c})

    def one(self):
        return self.scalar(1)

    def element(self, c=(), mu=None, b=(), coeff=None):
        mu = self.zero_mu if mu is None else self.torus.normalize(mu)
        return UElement(self, {(tuple(c), mu, tuple(b)): coeff if coeff is not None else self._one})

    def e(self, i):
        return self.element(b=(i,))

    def f(self, i):
        return self.element(c=(i,))

    def K(self, i, power=1):
        """K_i^power; power may be a half-integer when the half torus is on."""
        return self.element(mu=self.torus.generator(i, power))

    def Kmu(self, mu):
        return self.element(mu=mu)

    def Kt(self, i, power=1):
        """K-tilde_i^power = K_i^{power i.i/2}."""
        return self.element(mu=self.torus.scale(self.torus.ktilde[i], power))

    def from_b(self, p):
        return UElement(self, {((), self.zero_mu, w): c for w, c in p.terms.items()})

    def from_c(self, p):
        return UElement(self, {(w, self.zero_mu, ()): c for w, c in p.terms.items()})

    # ordering and rendering ---------------------------------------------------

    def key_order(self, key):
        c, mu, b = key
        return (len(c) + len(b), word_key(c), tuple(mu), word_key(b))

    def render_key(self, key, latex=False):
        c, mu, b = key
        parts = [_fmt_word(c, "f", False), "" if not any(mu) else self.torus.render(mu, latex), _fmt_word(b, "e", True)]
        s = "".join(p for p in parts if p)
        if self.n == 1:
            s = s.replace("_{1}", "").replace("^{1}", "")
        return s or "1"

    def render_terms(self, items, latex=False):
        return _join_terms([(c, self.render_key(k, latex)) for k, c in items], latex)

    # pairing --------------------------------------------------------------

    def upair(self, cword, bword):
        """<c, b> with <f_i, e^j> = delta / (q_i - q_i^{-1})."""
        if len(cword) != len(bword):
            return Scalar(0, self.r)
        p = self._pair_tab.pair(cword, bword)
        if p.is_zero():
            return p
        for x in bword:
            p = p * self.scale[x]
        return p

    def _sq(self, mu, d):
        return Scalar.s_pow(self.torus.s_exponent(mu, d), self.r)

    def _check(self, key):
        c, _, b = key
        if len(c) > self.max_degree or len(b) > self.max_degree:
            raise TruncationError(f"term of degree ({len(c)}, {len(b)}) exceeds max_degree {self.max_degree}")

    # products -------------------------------------------------------------

    def cross(self, b, c):
        """b c for basis words b of B and c of Cbar, normal ordered."""
        key = (b, c)
        hit = self._cross_cache.get(key)
        if hit is not None:
            return hit
        T = self.torus
        n = self.n
        out = {}
        if not b or not c:
            out[(c, self.zero_mu, b)] = self._one
        else:
            cb3 = self.B.coproduct3_word(b)
            cc3 = self.C.coproduct3_word(c)
            sbar = {}
            for (b1, b2, b3), x in cb3.items():
                for (c1, c2, c3), y in cc3.items():
                    if len(c1) != len(b1) or len(c3) != len(b3):
                        continue
                    p1 = self.upair(c1, b1)
                    if p1.is_zero():
                        continue
                    if c3 not in sbar:
                        sbar[c3] = self.C.antipode_word(c3)
                    p3 = Scalar(0, self.r)
                    for w, z in sbar[c3].items():
                        p3 = p3 + z * self.upair(w, b3)
                    if p3.is_zero():
                        continue
                    d1 = degree(b1, n)
                    d3 = degree(c3, n)
                    k1 = T.ktilde_of(d1)
                    k3 = T.neg(T.ktilde_of(d3))
                    coeff = x * y * p1 * p3 * self._sq(k1, degree(c2, n)) * self._sq(k3, degree(b2, n))
                    add_to(out, (c2, T.add(k1, k3), b2), coeff)
        self._cross_cache[key] = out
        return out

    def mult_keys(self, k1, k2):
        """Product of two basis triples as a dict."""
        key = (k1, k2)
        hit = self._prod_cache.get(key)
        if hit is not None:
            return hit
        c1, mu, b1 = k1
        c2, nu, b2 = k2
        T = self.torus
        n = self.n
        out = {}
        for (cc, lam, bb), x in self.cross(b1, c2).items():
            # c1 K_mu cc K_lam bb K_nu b2
            s = x * self._sq(mu, degree(cc, n)) * self._sq(nu, degree(bb, n))
            tor = T.add(T.add(mu, lam), nu)
            left = self.C.mult_words(c1, cc)
            right = self.B.mult_words(bb, b2)
            for cw, y in left.items():
                for bw, z in right.items():
                    k = (cw, tor, bw)
                    add_to(out, k, s * y * z)
        for k in out:
            self._check(k)
        self._prod_cache[key] = out
        return out

    def multiply(self, u, v):
        out = {}
        for k1, a in u.terms.items():
            for k2, b in v.terms.items():
                ab = a * b
                for k, c in self.mult_keys(k1, k2).items():
                    add_to(out, k, ab * c)
        return UElement(self, out)

    def multiply_tensor(self, s, t):
        out = {}
        for k1, a in s.terms.items():
            for k2, b in t.terms.items():
                acc = {(): a * b}
                for x, y in zip(k1, k2):
                    prod_xy = self.mult_keys(x, y)
                    nxt = {}
                    for kk, c in acc.items():
                        for z, w in prod_xy.items():
                            add_to(nxt, kk + (z,), c * w)
                    acc = nxt
                for kk, c in acc.items():
                    add_to(out, kk, c)
        return UTensor(self, out)

    # coproduct, counit, antipode -------------------------------------------

    def coproduct_key(self, key):
        c, mu, b = key
        T = self.torus
        n = self.n
        out = {}
        for (c1, c2), x in self.C.coproduct_word(c).items():
            kc = T.neg(T.ktilde_of(degree(c2, n)))
            for (b1, b2), y in self.B.coproduct_word(b).items():
                kb = T.ktilde_of(degree(b1, n))
                left = (c1, T.add(mu, kc), b1)
                right = (c2, T.add(mu, kb), b2)
                add_to(out, (left, right), x * y)
        return out

    def coproduct(self, u):
        out = {}
        for k, a in u.terms.items():
            for kk, c in self.coproduct_key(k).items():
                add_to(out, kk, a * c)
        return UTensor(self, out)

    def counit_key(self, key):
        c, _, b = key
        return self._one if not c and not b else Scalar(0, self.r)

    def counit(self, u):
        out = Scalar(0, self.r)
        for k, a in u.terms.items():
            if not k[0] and not k[2]:
                out = out + a
        return out

    def _antipode_b(self, b):
        """S(b) from sum S(b1) Kt_{|b1|} b2 = eps(b)."""
        key = ("b", b)
        hit = self._anti_cache.get(key)
        if hit is not None:
            return hit
        if not b:
            out = self.one()
        else:
            acc = UElement(self, {})
            for (b1, b2), x in self.B.coproduct_word(b).items():
                if b1 == b and not b2:
                    continue
                if len(b1) == len(b):
                    raise UModeError("unexpected top-degree coproduct term")
                term = self._antipode_b(b1) * self.element(mu=self.torus.ktilde_of(degree(b1, self.n)), b=b2)
                acc = acc + term.scale(x)
            kinv = self.Kmu(self.torus.neg(self.torus.ktilde_of(degree(b, self.n))))
            out = -(acc * kinv)
        self._anti_cache[key] = out
        return out

    def _antipode_c(self, c):
        """S(c) from sum c1 Kt^{-1}_{|c2|} S(c2) = eps(c)."""
        key = ("c", c)
        hit = self._anti_cache.get(key)
        if hit is not None:
            return hit
        if not c:
            out = self.one()
        else:
            acc = UElement(self, {})
            for (c1, c2), x in self.C.coproduct_word(c).items():
                if c2 == c and not c1:
                    continue
                if len(c2) == len(c):
                    raise UModeError("unexpected top-degree coproduct term")
                term = self.element(c=c1, mu=self.torus.neg(self.torus.ktilde_of(degree(c2, self.n)))) * self._antipode_c(c2)
                acc = acc + term.scale(x)
            kt = self.Kmu(self.torus.ktilde_of(degree(c, self.n)))
            out = -(kt * acc)
        self._anti_cache[key] = out
        return out

    def antipode_key(self, key):
        hit = self._anti_cache.get(key)
        if hit is not None:
            return hit
        c, mu, b = key
        out = self._antipode_b(b) * self.Kmu(self.torus.neg(mu)) * self._antipode_c(c)
        self._anti_cache[key] = out
        return out

    def antipode(self, u):
        out = UElement(self, {})
        for k, a in u.terms.items():
            out = out + self.antipode_key(k).scale(a)
        return out

    # bases ------------------------------------------------------------------

    def basis(self, max_total):
        """Triples (c, 0, b) with |c| + |b| <= max_total."""
        out = []
        for m in range(max_total + 1):
            for mc in range(m + 1):
                for dc in degree_vectors(self.n, mc):
                    for c in self.C.basis(dc):
                        for db in degree_vectors(self.n, m - mc):
                            for b in self.B.basis(db):
                                out.append((c, self.zero_mu, b))
        return out

    def torus_elements(self):
        """Sampled torus basis: 1 and K_i^{+-1} (K_i^{+-1/2} on a half torus)."""
        out = [self.zero_mu]
        step = 1 if self.torus.half else 2
        for t in range(self.torus.rank):
            for sgn in (1, -1):
                mu = [0] * self.torus.width
                mu[t] = sgn * step
                out.append(self.torus.normalize(mu))
        return out


def build(datum, root=None, r=0, half_torus=False, max_degree=None):
    """U(Cbar, kY, B) from a Cartan datum; B and Cbar are radical quotients."""
    return UAlgebra(datum, root=root, r=r, half_torus=half_torus, max_degree=max_degree)


# verification -------------------------------------------------------------------

def _key_degree(key):
    return len(key[0]) + len(key[2])


def verify_bialgebra(U, max_degree, keys=None):
    """Exhaustive Hopf-axiom checks over basis triples of total degree
    <= max_degree, together with sampled torus generators.

    Checks associativity on triples, multiplicativity of the coproduct on
    pairs, coassociativity, both counit laws and both antipode laws.
    Failures carry the first offending input as witness.
    """
    from .report import Report

    rep = Report(title=f"bialgebra axioms through degree {max_degree}")
    if keys is None:
        keys = U.basis(max_degree) + [((), mu, ()) for mu in U.torus_elements() if mu != U.zero_mu]
    els = {k: UElement(U, {k: Scalar(1, U.r)}) for k in keys}
    rk = U.render_key

    # associativity
    bad = None
    count = 0
    for x, y, z in product(keys, repeat=3):
        if _key_degree(x) + _key_degree(y) + _key_degree(z) > max_degree:
            continue
        count += 1
        if (els[x] * els[y]) * els[z] != els[x] * (els[y] * els[z]):
            bad = f"({rk(x)}, {rk(y)}, {rk(z)})"
            break
    rep.add("associativity", bad is None, bad, f"{count} triples")

    # Delta(uv) = Delta(u) Delta(v)
    bad = None
    count = 0
    for x, y in product(keys, repeat=2):
        if _key_degree(x) + _key_degree(y) > max_degree:
            continue
        count += 1
        lhs = U.coproduct(els[x] * els[y])
        rhs = U.coproduct(els[x]) * U.coproduct(els[y])
        if lhs != rhs:
            bad = f"Delta({rk(x)} {rk(y)}) != Delta({rk(x)}) Delta({rk(y)})"
            break
    rep.add("coproduct multiplicative", bad is None, bad, f"{count} pairs")

    # coassociativity and counit
    bad_co = bad_eps = bad_s = None
    one_key = ((), U.zero_mu, ())
    for x in keys:
        d = U.coproduct_key(x)
        left, right = {}, {}
        for (a, b), c in d.items():
            for (a1, a2), y in U.coproduct_key(a).items():
                add_to(left, (a1, a2, b), c * y)
            for (b1, b2), y in U.coproduct_key(b).items():
                add_to(right, (a, b1, b2), c * y)
        if left != right and bad_co is None:
            bad_co = rk(x)
        e1, e2 = {}, {}
        for (a, b), c in d.items():
            ea, eb = U.counit_key(a), U.counit_key(b)
            if not ea.is_zero():
                add_to(e1, b, c * ea)
            if not eb.is_zero():
                add_to(e2, a, c * eb)
        if (e1 != {x: Scalar(1, U.r)} or e2 != {x: Scalar(1, U.r)}) and bad_eps is None:
            bad_eps = rk(x)
        # antipode, both sides
        eps = {one_key: Scalar(1, U.r)} if not x[0] and not x[2] else {}
        s1 = UElement(U, {})
        s2 = UElement(U, {})
        for (a, b), c in d.items():
            ea = UElement(U, {a: c})
            eb = UElement(U, {b: Scalar(1, U.r)})
            s1 = s1 + U.antipode(ea) * eb
            s2 = s2 + ea * U.antipode(eb)
        if (s1.terms != eps or s2.terms != eps) and bad_s is None:
            bad_s = rk(x)
    rep.add("coassociativity", bad_co is None, bad_co, f"{len(keys)} elements")
    rep.add("counit", bad_eps is None, bad_eps, f"{len(keys)} elements")
    rep.add("antipode", bad_s is None, bad_s, f"{len(keys)} elements")
    return rep


# root of unity ------------------------------------------------------------------

def root_of_unity_uqsl2(r):
    """u_q(sl_2) at a primitive r-th root of unity (r odd): e^r = f^r = 0,
    K^r = 1, dimension r^3."""
    from .cartan import PRESETS
    return build(PRESETS["A1"], r=r, max_degree=r - 1)


def _check_finite(U):
    if not U.r or U.n != 1 or U.torus.modulus != U.r:
        raise UModeError("quasitriangular structure needs the rank-one root-of-unity mode")


def torus_R(U, inverse=False):
    """R_H = (1/r) sum q^{-2mn} K^m (x) K^n (or its inverse, q^{+2mn})."""
    _check_finite(U)
    r = U.r
    sgn = 1 if inverse else -1
    inv_r = Scalar(r, r).inverse()
    out = {}
    for m in range(r):
        for n in range(r):
            k = ((), U.torus.normalize((2 * m,)), ())
            l = ((), U.torus.normalize((2 * n,)), ())
            add_to(out, (k, l), inv_r * Scalar.q_pow(sgn * 2 * m * n, r))
    return UTensor(U, out)


def _exp_tensor(U, variant):
    t = braided_exp(U.B, U.D, U.r - 1, variant, U.scale)
    out = {}
    for (a, b), c in t.terms.items():
        if variant == "barexp":
            key = ((a, U.zero_mu, ()), ((), U.zero_mu, b))
        else:
            # exp = sum e_a (x) f^a; its flip sum f^a (x) e_a
            key = ((b, U.zero_mu, ()), ((), U.zero_mu, a))
        add_to(out, key, c)
    return UTensor(U, out)


def quasitriangular_element(U):
    """R_U = barexp_B R_H in U (x) U."""
    _check_finite(U)
    return _exp_tensor(U, "barexp") * torus_R(U)


def quasitriangular_inverse(U):
    """The candidate inverse R_H^{-1} (sum f^a (x) e_a)."""
    _check_finite(U)
    return torus_R(U, inverse=True) * _exp_tensor(U, "exp")


def _tensor_coproduct_leg(U, t, leg):
    out = {}
    for key, c in t.terms.items():
        for (a, b), x in U.coproduct_key(key[leg]).items():
            add_to(out, key[:leg] + (a, b) + key[leg + 1:], c * x)
    return UTensor(U, out)


def _embed_legs(U, t, positions, total):
    one_key = ((), U.zero_mu, ())
    out = {}
    for key, c in t.terms.items():
        full = [one_key] * total
        for p, k in zip(positions, key):
            full[p] = k
        add_to(out, tuple(full), c)
    return UTensor(U, out)


def verify_quasitriangular(U, R=None, Rinv=None):
    """Check (Delta (x) id)R = R13 R23, (id (x) Delta)R = R13 R12,
    Delta^op(x) R = R Delta(x) on the generators, and R Rinv = 1 = Rinv R."""
    from .report import Report

    _check_finite(U)
    if R is None:
        R = quasitriangular_element(U)
        if Rinv is None:
            Rinv = quasitriangular_inverse(U)
    rep = Report(title=f"quasitriangular structure at r = {U.r}")
    R13 = _embed_legs(U, R, (0, 2), 3)
    R23 = _embed_legs(U, R, (1, 2), 3)
    R12 = _embed_legs(U, R, (0, 1), 3)
    rep.add("(Delta x id)R = R13 R23", _tensor_coproduct_leg(U, R, 0) == R13 * R23)
    rep.add("(id x Delta)R = R13 R12", _tensor_coproduct_leg(U, R, 1) == R13 * R12)
    bad = []
    for name, x in (("e", U.e(0)), ("f", U.f(0)), ("K", U.K(0))):
        d = U.coproduct(x)
        dop = UTensor(U, {(b, a): c for (a, b), c in d.terms.items()})
        if dop * R != R * d:
            bad.append(name)
    rep.add("Delta^op(x) R = R Delta(x)", not bad, ", ".join(bad) or None)
    if Rinv is not None:
        one = UTensor.of(U.one(), U.one())
        rep.add("R invertible", R * Rinv == one and Rinv * R == one)
    passed = sum(c.passed for c in rep.checks[:3])
    rep.notes.append(f"qua axioms: {'pass' if passed == 3 else 'fail'} ({passed}/3)")
    return rep


# fundamental representation -------------------------------------------------------

def act_torus(U, v, mu):
    out = {}
    for w, c in v.terms.items():
        add_to(out, w, c * U._sq(mu, degree(w, U.n)))
    return NCPoly(out, U.n, U.r)


def act_e(U, v, i):
    """v < e^i = (v x^i - x^i (v < Kt_i)) / (q_i - q_i^{-1})."""
    x = U.B.gen(i)
    vk = act_torus(U, v, U.torus.ktilde[i])
    return (U.B.multiply(v, x) - U.B.multiply(x, vk)).scale(U.scale[i])


def act_f(U, v, i):
    """v < f_i = - d_i v with the opposite-braiding derivative."""
    return -U.B.braided_diff(i, v, "opposite")


def fundamental_rep(U, v, u):
    """Right action v < u of U on B (the fundamental representation)."""
    out = NCPoly({}, U.n, U.r)
    for (c, mu, b), a in u.terms.items():
        w = v
        for i in c:
            w = act_f(U, w, i)
        w = act_torus(U, w, mu)
        for i in b:
            w = act_e(U, w, i)
        for k in w.terms:
            if len(k) > U.max_degree:
                raise TruncationError(f"action left the degree bound {U.max_degree}")
        out = out + w.scale(a)
    return out


def _coef(c):
    return "" if c.is_one() else f"{c} "


def verify_fundamental(U, max_degree, pair_degree=None):
    """Operator checks for the fundamental representation on B, on the
    space of polynomials of degree <= max_degree (U needs max_degree + 1).

    The action is a right action, so u -> (v -> v < u) reverses products.
    K e K^{-1} = q^2 e and K f K^{-1} = q^{-2} f are checked as compositions
    of operators; [e, f] is checked as v < (ef - fe) computed letter by
    letter.  Also checked: v < (ab) = (v < a) < b on generator pairs, and
    the module-algebra law (vw) < u = (v < u1)(w < u2) for monomials of
    total degree <= pair_degree.
    """
    from .report import Report

    if U.max_degree < max_degree + 1:
        raise UModeError(f"U needs max_degree >= {max_degree + 1}")
    pair_degree = max_degree if pair_degree is None else pair_degree
    B = U.B
    n = U.n
    rep = Report(title=f"fundamental representation, degree <= {max_degree}")
    act = lambda v, u: fundamental_rep(U, v, u)
    space = [w for w in B.basis_up_to(max_degree)]
    gens = []
    for i in range(n):
        gens += [(f"e_{i + 1}", U.e(i)), (f"f_{i + 1}", U.f(i)), (f"K_{i + 1}", U.K(i)), (f"K_{i + 1}^{{-1}}", U.K(i, -1))]

    def first_failure(test, top=max_degree):
        for w in space:
            if len(w) > top:
                continue
            if not test(B.word(w)):
                return "".join(f"x{x + 1}" for x in w) or "1"
        return None

    for i in range(n):
        qq = [Scalar.s_pow(U.torus.s_exponent(U.torus.generator(i), degree((j,), n)), U.r) for j in range(n)]
        K, Ki = U.K(i), U.K(i, -1)
        for j in range(n):
            # K e K^{-1} as operators: v -> ((v < K^{-1}) < e) < K
            wit = first_failure(lambda v: act(act(act(v, Ki), U.e(j)), K) == act(v, U.e(j)).scale(qq[j]))
            rep.add(f"K_{i + 1} e_{j + 1} K_{i + 1}^{{-1}} = {_coef(qq[j])}e_{j + 1}", wit is None, wit)
            wit = first_failure(lambda v: act(act(act(v, Ki), U.f(j)), K) == act(v, U.f(j)).scale(qq[j].inverse()))
            rep.add(f"K_{i + 1} f_{j + 1} K_{i + 1}^{{-1}} = {_coef(qq[j].inverse())}f_{j + 1}", wit is None, wit)
    for i in range(n):
        for j in range(n):
            if i == j:
                rhs = lambda v: (act(v, U.K(i)) - act(v, U.K(i, -1))).scale(U.scale[i])
            else:
                rhs = lambda v: NCPoly({}, n, U.r)
            wit = first_failure(lambda v: act(act(v, U.e(i)), U.f(j)) - act(act(v, U.f(j)), U.e(i)) == rhs(v))
            name = f"[e_{i + 1}, f_{j + 1}] = " + (f"(K_{i + 1} - K_{i + 1}^{{-1}})/(q_i - q_i^{{-1}})" if i == j else "0")
            rep.add(name, wit is None, wit)
    bad = None
    for an, a in gens:
        for bn, b in gens:
            ab = a * b
            wit = first_failure(lambda v: act(act(v, a), b) == act(v, ab), max_degree - 1)
            if wit is not None:
                bad = f"{an} {bn} on {wit}"
                break
        if bad:
            break
    rep.add(f"v < (ab) = (v < a) < b, degree <= {max_degree - 1}", bad is None, bad)
    bad = None
    small = [w for w in space if len(w) <= pair_degree]
    for w1 in small:
        for w2 in small:
            if len(w1) + len(w2) > pair_degree or bad:
                continue
            v1, v2 = B.word(w1), B.word(w2)
            prod_ = B.multiply(v1, v2)
            for gn, u in gens:
                lhs = act(prod_, u)
                rhs = NCPoly({}, n, U.r)
                for (k1, k2), c in U.coproduct(u).terms.items():
                    rhs = rhs + B.multiply(act(v1, UElement(U, {k1: c})), act(v2, UElement(U, {k2: U._one})))
                if lhs != rhs:
                    bad = f"{gn} on x^{w1} x^{w2}"
                    break
    rep.add(f"module-algebra law, total degree <= {pair_degree}", bad is None, bad)
    return rep


# R-matrix data with a non-torus H ----------------------------------------------------


class MatrixDouble:
    """The double-bosonisation for R-matrix data, given by generators and
    relations: the quadratic algebras B (e^i) and Cbar (f_i) defined by R',
    and the matrix presentation over m+-, e^i, f_i (and c^{+-1}) with lambda R
    in place of R.  There is no normal-form multiplication here; products
    are handled by pbw straightening presentations."""

    def __init__(self, R, Rprime, lam=None, dilaton=True):
        from .pbw import emit_matrix_relations

        self.R = R
        self.Rprime = Rprime
        self.B = BraidedGroup(R, "vector", "forward", "quadratic", Rprime)
        self.C = BraidedGroup(R, "covector", "forward", "quadratic", Rprime).opposite()
        self.presentation = emit_matrix_relations(R, lam, with_dilaton=dilaton)
        self.lam = self.presentation.lam

    def plane_relations(self, side="vector"):
        """Normal forms of the out-of-order degree-2 words, as {word: NCPoly}."""
        G = self.B if side == "vector" else self.C
        out = {}
        n = G.n
        for i in range(n):
            for j in range(n):
                w = (i, j)
                nf = G.normal_form(G.word(w))
                if nf != G.word(w):
                    out[w] = nf
        return out

    def report(self):
        from .pbw import presentation_report
        from .report import Relation

        rep = presentation_report(self.presentation)
        plane = []
        for side, letter, up in (("vector", "e", True), ("covector", "f", False)):
            for w, nf in sorted(self.plane_relations(side).items()):
                lhs = "".join(f"{letter}^{x + 1}" if up else f"{letter}_{x + 1}" for x in w)
                names = [f"{letter}^{x + 1}" if up else f"{letter}_{x + 1}" for x in range(self.R.n)]
                plane.append(Relation(lhs, nf.render(names=names), f"{lhs} &= {nf.render(names=names, latex=True)}",
                                      f"{side} plane"))
        rep.relations = plane + rep.relations
        return rep


def build_from_rmatrix_torus(R, Rprime, lam=None, dilaton=True):
    """MatrixDouble for an R-matrix, its quadratic normalisation R' and the
    normalisation lambda."""
    return MatrixDouble(R, Rprime, lam, dilaton)
