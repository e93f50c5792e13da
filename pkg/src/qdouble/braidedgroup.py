"""Braided groups on free algebras and their quotients.

A ``BraidedGroup`` is the free algebra on n generators with the braiding
coming from an R-matrix, on the vector side (letters e^i) or covector
side (letters f_i), with forward or inverse braiding.  Optionally it is
divided by

* ``quadratic``: the degree-2 relations built from a second matrix R', or
* ``radical``: the kernel of the duality pairing between vectors and
  covectors, degree by degree.

In quotient modes every element is kept in normal form: a combination of
basis words of its degree.
"""

import threading
from itertools import product

from . import linalg
from .freealg import NCPoly, TensorPoly, add_to, degree, degree_vectors, word_key, words_of_degree
from .rmatrix import braid_with_table
from .scalars import Scalar


class BraidedGroupError(ValueError):
    pass


class ConfluenceError(BraidedGroupError):
    pass


class SingularPairingError(BraidedGroupError):
    pass


# the duality pairing on free algebras ---------------------------------------


class _FreePartials:
    """Left braided partial derivatives of words in the free algebra.

    ``get(w)`` returns {i: {v: c}} meaning Delta(w) has the terms
    c e^i (x) v with first leg of length one.
    """

    def __init__(self, table, n, r):
        self.table = table
        self.n = n
        self.one = Scalar(1, r)
        self.cache = {(): {}}
        self.lock = threading.Lock()

    def get(self, w):
        hit = self.cache.get(w)
        if hit is not None:
            return hit
        head, x = w[:-1], w[-1]
        prev = self.get(head)
        out = {}
        # d_i(head) x
        for i, terms in prev.items():
            dst = out.setdefault(i, {})
            for v, c in terms.items():
                add_to(dst, v + (x,), c)
        # Psi(head (x) x) restricted to first leg of length one
        for (u, v), c in braid_with_table(self.table, head, (x,), self.one).items():
            add_to(out.setdefault(u[0], {}), v, c)
        out = {i: t for i, t in out.items() if t}
        with self.lock:
            self.cache[w] = out
        return out


class _PairingTable:
    """<f_J, e^I> on free algebras with unit pairing on generators.

    Uses <f_j f_J, b> = <f_J, d_j b>, with d_j the left derivative taken
    from the braided coproduct of the vector algebra.
    """

    def __init__(self, R):
        self.R = R
        self.partials = _FreePartials(R.braid_table("vector", "forward"), R.n, R.r)
        self.cache = {}
        self.zero = Scalar(0, R.r)
        self.one = Scalar(1, R.r)

    def pair(self, fword, eword):
        if len(fword) != len(eword):
            return self.zero
        if not fword:
            return self.one
        key = (fword, eword)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        out = self.zero
        for v, c in self.partials.get(eword).get(fword[0], {}).items():
            p = self.pair(fword[1:], v)
            if not p.is_zero():
                out = out + c * p
        self.cache[key] = out
        return out

    def block(self, d):
        """Rows are e-words, columns f-words, both of degree d in lex order."""
        W = words_of_degree(d)
        return W, [[self.pair(f, e) for f in W] for e in W]


_PAIRINGS = {}
_PAIRINGS_LOCK = threading.Lock()


def _pairing_table(R):
    with _PAIRINGS_LOCK:
        tab = _PAIRINGS.get(id(R))
        if tab is None or tab.R is not R:
            tab = _PairingTable(R)
            _PAIRINGS[id(R)] = tab
        return tab


# quotients --------------------------------------------------------------------


class _FreeQuotient:
    kind = "free"

    def __init__(self, n, r):
        self.n = n
        self.r = r

    def basis(self, d):
        return words_of_degree(d)

    def reduce_word(self, w):
        return {w: Scalar(1, self.r)}


class _RadicalQuotient:
    """Quotient by the kernel of the pairing, computed per degree."""

    kind = "radical"

    def __init__(self, R, side):
        self.R = R
        self.n = R.n
        self.r = R.r
        self.side = side
        self.table = _pairing_table(R)
        self.data = {}
        self.lock = threading.Lock()

    def _compute(self, d):
        W, M = self.table.block(d)
        # the words live on columns of A
        A = linalg.transpose(M) if self.side == "vector" else M
        red, piv = linalg.rref(A)
        pivots = [W[p] for p in piv]
        one = Scalar(1, self.r)
        nf = {}
        kernel = []
        for col, w in enumerate(W):
            if col in piv:
                nf[w] = {w: one}
                continue
            red_map = {}
            for t, p in enumerate(piv):
                c = red[t][col]
                if not c.is_zero():
                    red_map[W[p]] = c
            nf[w] = red_map
            k = {w: one}
            for pw, c in red_map.items():
                k[pw] = -c
            kernel.append(NCPoly(k, self.n, self.r))
        return {"words": W, "pivots": pivots, "nf": nf, "kernel": kernel, "matrix": M}

    def degree_data(self, d):
        d = tuple(d)
        hit = self.data.get(d)
        if hit is None:
            hit = self._compute(d)
            with self.lock:
                hit = self.data.setdefault(d, hit)
        return hit

    def basis(self, d):
        return self.degree_data(d)["pivots"]

    def reduce_word(self, w):
        return self.degree_data(degree(w, self.n))["nf"][w]


class _QuadraticQuotient:
    """Quotient by degree-2 relations, by oriented rewriting."""

    kind = "quadratic"

    def __init__(self, Rp, side):
        self.n = Rp.n
        self.r = Rp.r
        n = self.n
        pairs = list(product(range(n), repeat=2))
        # columns ordered largest word first, so the pivot is the leading word
        cols = sorted(pairs, reverse=True)
        idx = {w: t for t, w in enumerate(cols)}
        zero = Scalar(0, self.r)
        rows = []
        for i, j in pairs:
            row = [zero] * len(cols)
            row[idx[(i, j)]] = row[idx[(i, j)]] + 1
            for a, b in pairs:
                if side == "vector":
                    c = Rp.entry(j, a, i, b)
                    w = (a, b)
                else:
                    c = Rp.entry(a, i, b, j)
                    w = (b, a)
                if not c.is_zero():
                    row[idx[w]] = row[idx[w]] - c
            rows.append(row)
        red, piv = linalg.rref(rows)
        self.rules = {}
        for t, p in enumerate(piv):
            lead = cols[p]
            rhs = {}
            for col, w in enumerate(cols):
                if col != p and not red[t][col].is_zero():
                    rhs[w] = -red[t][col]
            self.rules[lead] = rhs
        self.cache = {}
        self._check_confluence()

    def _rewrite_once(self, word, pos):
        lhs = word[pos:pos + 2]
        return {word[:pos] + w + word[pos + 2:]: c for w, c in self.rules[lhs].items()}

    def reduce_word(self, w):
        hit = self.cache.get(w)
        if hit is not None:
            return hit
        for pos in range(len(w) - 1):
            if w[pos:pos + 2] in self.rules:
                out = {}
                for v, c in self._rewrite_once(w, pos).items():
                    for u, x in self.reduce_word(v).items():
                        add_to(out, u, c * x)
                break
        else:
            out = {w: Scalar(1, self.r)}
        self.cache[w] = out
        return out

    def _reduce_dict(self, terms):
        out = {}
        for v, c in terms.items():
            for u, x in self.reduce_word(v).items():
                add_to(out, u, c * x)
        return out

    def _check_confluence(self):
        n = self.n
        for w in product(range(n), repeat=3):
            if w[:2] in self.rules and w[1:] in self.rules:
                a = self._reduce_dict(self._rewrite_once(w, 0))
                b = self._reduce_dict(self._rewrite_once(w, 1))
                if a != b:
                    raise ConfluenceError(f"overlap {tuple(x + 1 for x in w)} does not resolve")

    def basis(self, d):
        return [w for w in words_of_degree(d)
                if not any(w[p:p + 2] in self.rules for p in range(len(w) - 1))]


# the braided group ------------------------------------------------------------


class BraidedGroup:
    """Free braided (co)vector algebra with an optional quotient.

    side: "vector" (letters e^i) or "covector" (letters f_i).
    orientation: "forward" uses Psi, "inverse" uses Psi^{-1} throughout
    (this realises the opposite-coproduct groups).
    quotient: "free", "quadratic" (needs ``Rprime``) or "radical".
    """

    def __init__(self, R, side="vector", orientation="forward", quotient="free", Rprime=None, _quot=None):
        if side not in ("vector", "covector"):
            raise BraidedGroupError(f"unknown side {side!r}")
        if orientation not in ("forward", "inverse"):
            raise BraidedGroupError(f"unknown orientation {orientation!r}")
        self.R = R
        self.n = R.n
        self.r = R.r
        self.side = side
        self.orientation = orientation
        self.quotient = quotient
        self.Rprime = Rprime
        if _quot is not None:
            self.quot = _quot
        elif quotient == "free":
            self.quot = _FreeQuotient(R.n, R.r)
        elif quotient == "radical":
            if not R.conserves_degree():
                raise BraidedGroupError("radical mode needs a degree-conserving R-matrix")
            self.quot = _RadicalQuotient(R, side)
        elif quotient == "quadratic":
            if Rprime is None:
                raise BraidedGroupError("quadratic mode needs R'")
            self.quot = _QuadraticQuotient(Rprime, side)
        else:
            raise BraidedGroupError(f"unknown quotient {quotient!r}")
        self.table = R.braid_table(side, orientation)
        self.one = Scalar(1, R.r)
        self.zero = Scalar(0, R.r)
        self._braid = {}
        self._free_cop = {(): {((), ()): self.one}}
        self._cop = {}
        self._cop3 = {}
        self._anti = {}
        self._partials = _FreePartials(self.table, self.n, self.r)
        self._opposite = None

    def __repr__(self):
        return f"BraidedGroup(n={self.n}, {self.side}, {self.orientation}, {self.quotient})"

    # elements -------------------------------------------------------------

    def gen(self, i):
        return NCPoly.gen(i, self.n, self.r)

    def word(self, w):
        return NCPoly.word(w, self.n, self.r)

    def poly(self, terms):
        return NCPoly(terms, self.n, self.r)

    def degree(self, w):
        return degree(w, self.n)

    def opposite(self):
        """The same algebra with the other braiding orientation."""
        if self._opposite is None:
            other = "inverse" if self.orientation == "forward" else "forward"
            self._opposite = BraidedGroup(self.R, self.side, other, self.quotient, self.Rprime, _quot=self.quot)
            self._opposite._opposite = self
        return self._opposite

    # normal forms ---------------------------------------------------------

    def reduce_word(self, w):
        """Normal form of a word as a dict {basis word: coeff}."""
        return self.quot.reduce_word(tuple(w))

    def normal_form_dict(self, terms):
        out = {}
        for w, c in terms.items():
            for u, x in self.quot.reduce_word(w).items():
                add_to(out, u, c * x)
        return out

    def normal_form(self, p):
        return NCPoly(self.normal_form_dict(p.terms), self.n, self.r)

    def basis(self, d):
        return list(self.quot.basis(tuple(d)))

    def basis_up_to(self, total):
        out = []
        for m in range(total + 1):
            for d in degree_vectors(self.n, m):
                out.extend(self.basis(d))
        return out

    def radical_basis(self, d):
        if self.quot.kind != "radical":
            raise BraidedGroupError("radical_basis needs radical mode")
        return list(self.quot.degree_data(tuple(d))["kernel"])

    def multiply(self, p1, p2):
        return self.normal_form(p1 * p2)

    def mult_words(self, w1, w2):
        """Normal form of w1 w2 as a dict."""
        return self.quot.reduce_word(tuple(w1) + tuple(w2))

    # braiding and coproduct ------------------------------------------------

    def braid(self, w1, w2):
        """Psi(w1 (x) w2) in the free algebra as {(u, v): c}."""
        key = (w1, w2)
        hit = self._braid.get(key)
        if hit is None:
            hit = braid_with_table(self.table, w1, w2, self.one)
            self._braid[key] = hit
        return hit

    def free_coproduct(self, w):
        """Braided coproduct of a word of the free algebra, {(u, v): c}."""
        w = tuple(w)
        hit = self._free_cop.get(w)
        if hit is not None:
            return hit
        prev = self.free_coproduct(w[:-1])
        x = w[-1:]
        out = {}
        for (a, b), c in prev.items():
            # (a (x) b)(x (x) 1) = a Psi(b (x) x)
            for (u, v), y in self.braid(b, x).items():
                add_to(out, (a + u, v), c * y)
            # (a (x) b)(1 (x) x)
            add_to(out, (a, b + x), c)
        self._free_cop[w] = out
        return out

    def coproduct_word(self, w):
        """Coproduct of a (basis) word with both legs in normal form."""
        w = tuple(w)
        hit = self._cop.get(w)
        if hit is not None:
            return hit
        out = {}
        if self.quot.kind == "free":
            out = self.free_coproduct(w)
        else:
            for (a, b), c in self.free_coproduct(w).items():
                ra = self.quot.reduce_word(a)
                if not ra:
                    continue
                rb = self.quot.reduce_word(b)
                for u, x in ra.items():
                    for v, y in rb.items():
                        add_to(out, (u, v), c * x * y)
        self._cop[w] = out
        return out

    def coproduct(self, p):
        if isinstance(p, tuple):
            p = self.word(p)
        out = {}
        for w, c in p.terms.items():
            for k, x in self.coproduct_word(w).items():
                add_to(out, k, c * x)
        return TensorPoly(out, self.n, self.r)

    def coproduct3_word(self, w):
        """(Delta (x) id) Delta of a word, {(a, b, c): coeff}."""
        w = tuple(w)
        hit = self._cop3.get(w)
        if hit is not None:
            return hit
        out = {}
        for (a, b), c in self.coproduct_word(w).items():
            for (a1, a2), x in self.coproduct_word(a).items():
                add_to(out, (a1, a2, b), c * x)
        self._cop3[w] = out
        return out

    def counit(self, p):
        return p.coeff(())

    # antipode --------------------------------------------------------------

    def _free_antipode(self, w):
        hit = self._anti.get(("free", w))
        if hit is not None:
            return hit
        if not w:
            out = {(): self.one}
        else:
            x, rest = w[:1], w[1:]
            out = {}
            for v, c in self._free_antipode(rest).items():
                for (u, y), z in self.braid(x, v).items():
                    add_to(out, u + y, -c * z)
        self._anti[("free", w)] = out
        return out

    def antipode_word(self, w):
        w = tuple(w)
        hit = self._anti.get(w)
        if hit is None:
            hit = self.normal_form_dict(self._free_antipode(w))
            self._anti[w] = hit
        return hit

    def antipode(self, p):
        out = {}
        for w, c in p.terms.items():
            for u, x in self.antipode_word(w).items():
                add_to(out, u, c * x)
        return NCPoly(out, self.n, self.r)

    # differentiation -------------------------------------------------------

    def partials_word(self, w, flavor="standard"):
        """{i: {v: c}} for the left derivatives of a word (free algebra)."""
        src = self if flavor == "standard" else self.opposite()
        return src._partials.get(tuple(w))

    def braided_diff(self, i, v, flavor="standard"):
        """Left braided derivative d_i v, extracted from the (opposite)
        coproduct: the part c e^i (x) u of Delta(v) gives c u."""
        out = {}
        for w, c in v.terms.items():
            for u, x in self.partials_word(w, flavor).get(i, {}).items():
                add_to(out, u, c * x)
        return NCPoly(self.normal_form_dict(out), self.n, self.r)


# module-level operations ------------------------------------------------------


def braided_coproduct(G, w, direction="forward"):
    """Delta of a word; "opposite" gives Psi^{-1} o Delta."""
    if direction in ("forward", "standard"):
        return G.coproduct(tuple(w))
    if direction == "opposite":
        return G.opposite().coproduct(tuple(w))
    raise ValueError(f"unknown direction {direction!r}")


def braided_antipode(G, p):
    return G.antipode(p)


def normal_form(G, p):
    return G.normal_form(p)


def radical_basis(G, d):
    return G.radical_basis(d)


def braided_diff(G, i, v, flavor="standard"):
    return G.braided_diff(i, v, flavor)


def pairing(G_cov, f_word, G_vec, e_word):
    """<f_word, e_word> with <f_j, e^i> = delta."""
    if G_cov.n != G_vec.n or G_cov.R.entries != G_vec.R.entries:
        raise BraidedGroupError("pairing needs groups over the same R-matrix")
    return _pairing_table(G_vec.R).pair(tuple(f_word), tuple(e_word))


def pairing_poly(G_cov, fp, G_vec, ep):
    """Bilinear extension of :func:`pairing` to polynomials."""
    tab = _pairing_table(G_vec.R)
    out = Scalar(0, G_vec.r)
    for f, a in fp.terms.items():
        for e, b in ep.terms.items():
            p = tab.pair(f, e)
            if not p.is_zero():
                out = out + a * b * p
    return out


def word_scale(scale, w, r=0):
    """Product of per-generator scale factors along a word."""
    out = Scalar(1, r)
    if scale is None:
        return out
    for x in w:
        out = out * scale[x]
    return out


def dual_basis_block(B, D, d, scale=None):
    """Basis words E of B and F of D at degree d, and the matrix G^{-1}.

    G[p][a] = scale * <F_p, E_a>; the dual basis to E_a is
    f^a = sum_p Ginv[a][p] F_p.
    """
    E = B.basis(d)
    F = D.basis(d)
    if len(E) != len(F):
        raise SingularPairingError(f"bases of different size at degree {d}")
    if not E:
        return E, F, []
    tab = _pairing_table(B.R)
    G = [[tab.pair(f, e) * word_scale(scale, e, B.r) for e in E] for f in F]
    try:
        Ginv = linalg.inverse(G)
    except linalg.SingularMatrixError:
        raise SingularPairingError(f"pairing block at degree {d} is singular") from None
    return E, F, Ginv


def braided_exp(B, D, max_total_degree, variant="exp", scale=None):
    """Truncated braided exponential.

    exp    = sum_a e_a (x) f^a            keys (B-word, D-word)
    barexp = sum_a f^a (x) S(e_a)         keys (D-word, B-word)

    ``scale`` optionally rescales the generator pairing to
    <f_i, e^j> = scale[i] delta.
    """
    out = {}
    for m in range(max_total_degree + 1):
        for d in degree_vectors(B.n, m):
            E, F, Ginv = dual_basis_block(B, D, d, scale)
            for a, e in enumerate(E):
                dual = {F[p]: Ginv[a][p] for p in range(len(F)) if not Ginv[a][p].is_zero()}
                if variant == "exp":
                    for f, c in dual.items():
                        add_to(out, (e, f), c)
                elif variant == "barexp":
                    se = B.antipode_word(e)
                    for f, c in dual.items():
                        for u, x in se.items():
                            add_to(out, (f, u), c * x)
                else:
                    raise ValueError(f"unknown variant {variant!r}")
    return TensorPoly(out, B.n, B.r)


def tensor_product_leg(G, t1, t2):
    """Multiply two tensors of equal leg count legwise (ordinary tensor
    product algebra, no braiding) with normal forms in ``G``-legs given as
    a list of groups."""
    groups = G
    out = {}
    for k1, a in t1.terms.items():
        for k2, b in t2.terms.items():
            legs = [groups[i].mult_words(k1[i], k2[i]) for i in range(len(k1))]
            acc = {(): a * b}
            for leg in legs:
                nxt = {}
                for key, c in acc.items():
                    for u, x in leg.items():
                        add_to(nxt, key + (u,), c * x)
                acc = nxt
            for key, c in acc.items():
                add_to(out, key, c)
    return TensorPoly(out, t1.n, t1.r)
