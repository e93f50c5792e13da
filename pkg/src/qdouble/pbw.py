"""Straightening presentations and the matrix (R-matrix) form of the
double-bosonisation.

A ``StraighteningPresentation`` is a list of generators in a fixed order
together with rewrite rules for adjacent pairs that are out of order, and
pairs of mutually inverse generators.  Normal words are those with no
reducible adjacent pair.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .freealg import NCPoly, add_to, word_key
from .scalars import Scalar


class PresentationError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class StraighteningPresentation:
    """Ordered generators, pair rewrite rules and inverse pairs.

    ``rules`` maps an out-of-order pair (j, i) of generator indices to an
    NCPoly (or dict word -> scalar) replacing it.  ``inverses`` lists pairs
    (a, b) with ab = ba = 1.
    """

    def __init__(self, names, rules, inverses=(), r=0, budget=10 ** 6, check=True):
        self.names = list(names)
        self.n = len(self.names)
        self.r = r
        self.budget = budget
        self.rules = {}
        for pair, rhs in rules.items():
            terms = rhs.terms if isinstance(rhs, NCPoly) else rhs
            self.rules[tuple(pair)] = {tuple(w): c for w, c in terms.items() if not c.is_zero()}
        one = Scalar(1, r)
        for a, b in inverses:
            self.rules[(a, b)] = {(): one}
            self.rules[(b, a)] = {(): one}
        for lhs, rhs in self.rules.items():
            for w in rhs:
                if len(w) > 2 or (len(w) == 2 and not w < lhs):
                    raise PresentationError(f"rule {self.fmt_word(lhs)} -> {self.fmt_word(w)} does not decrease")
        if check:
            bad = self.check_confluence()
            if bad:
                raise PresentationError("non-confluent overlaps: " + ", ".join(bad))

    def fmt_word(self, w):
        return " ".join(self.names[x] for x in w) or "1"

    def index(self, name):
        return self.names.index(name)

    def gen(self, name):
        return NCPoly.gen(self.index(name), self.n, self.r)

    def word(self, *names):
        return NCPoly.word(tuple(self.index(x) for x in names), self.n, self.r)

    def _first_redex(self, w):
        for p in range(len(w) - 1):
            if (w[p], w[p + 1]) in self.rules:
                return p
        return -1

    def _normal_dict(self, terms):
        work = dict(terms)
        out = {}
        steps = 0
        while work:
            w, c = work.popitem()
            p = self._first_redex(w)
            if p < 0:
                add_to(out, w, c)
                continue
            steps += 1
            if steps > self.budget:
                raise BudgetExceeded(f"rewrite budget of {self.budget} steps exceeded")
            for v, x in self.rules[(w[p], w[p + 1])].items():
                add_to(work, w[:p] + v + w[p + 2:], c * x)
        return out

    def normal_order(self, p):
        return NCPoly(self._normal_dict(p.terms), self.n, self.r)

    def is_normal(self, w):
        return self._first_redex(tuple(w)) < 0

    def check_confluence(self):
        """Resolve every overlap xyz with xy and yz both reducible.

        Returns the list of overlaps whose two reductions disagree.
        """
        bad = []
        one = Scalar(1, self.r)
        for (x, y), rhs1 in self.rules.items():
            for (y2, z), rhs2 in self.rules.items():
                if y2 != y:
                    continue
                a = self._normal_dict({v + (z,): c for v, c in rhs1.items()})
                b = self._normal_dict({(x,) + v: c for v, c in rhs2.items()})
                if a != b:
                    bad.append(self.fmt_word((x, y, z)))
        return bad

    def render(self, p, latex=False):
        return p.render(names=self.names, latex=latex, sep=" ")


# U_q(sl_2) presentations ----------------------------------------------------------


def uqsl2(r=0):
    """U_q(sl_2) on f < K^{-1} < K < e."""
    q = Scalar.q_pow(1, r)
    names = ["f", "K^{-1}", "K", "e"]
    f, Ki, K, e = range(4)
    h = (q - q.inverse()).inverse()
    rules = {
        (Ki, f): {(f, Ki): q ** -2},
        (K, f): {(f, K): q ** 2},
        (e, f): {(f, e): Scalar(1, r), (K,): h, (Ki,): -h},
        (e, Ki): {(Ki, e): q ** -2},
        (e, K): {(K, e): q ** 2},
    }
    return StraighteningPresentation(names, rules, [(Ki, K)], r)


def uqsl2dot(r=0, dilaton=True):
    """U_q(sl_2) with K^{1/2} adjoined, optionally with a central group-like c.

    Order: f < K^{-1/2} < K^{1/2} (< c^{-1} < c) < e.
    """
    q = Scalar.q_pow(1, r)
    s = Scalar.s_pow(1, r)
    one = Scalar(1, r)
    names = ["f", "K^{-1/2}", "K^{1/2}"] + (["c^{-1}", "c"] if dilaton else []) + ["e"]
    f, Kmh, Kh = 0, 1, 2
    e = len(names) - 1
    h = (q - q.inverse()).inverse()
    rules = {
        (Kmh, f): {(f, Kmh): q.inverse()},
        (Kh, f): {(f, Kh): q},
        (e, f): {(f, e): one, (Kh, Kh): h, (Kmh, Kmh): -h},
        (e, Kmh): {(Kmh, e): q.inverse()},
        (e, Kh): {(Kh, e): q},
    }
    inverses = [(Kmh, Kh)]
    if dilaton:
        ci, c = 3, 4
        for g in (ci, c):
            for x in (f, Kmh, Kh):
                rules[(g, x)] = {(x, g): one}
            rules[(e, g)] = {(g, e): one}
        inverses.append((ci, c))
    del s
    return StraighteningPresentation(names, rules, inverses, r)


def uqsl2dot_mpm(P=None, r=0):
    """The matrices m+ and m- over U_q(sl_2) with K^{1/2}, as NCPolys:

    m+ = [[K^{1/2}, -q^{-1/2}(q - q^{-1}) e K^{-1/2}], [0, K^{-1/2}]]
    m- = [[K^{-1/2}, 0], [-q^{1/2}(q - q^{-1}) K^{1/2} f, K^{1/2}]]
    """
    if P is None:
        P = uqsl2dot(r)
    r = P.r
    q = Scalar.q_pow(1, r)
    s = Scalar.s_pow(1, r)
    z = NCPoly.zero(P.n, r)
    w = P.word
    mp = [[w("K^{1/2}"), w("e", "K^{-1/2}").scale(-(q - q.inverse()) / s)],
          [z, w("K^{-1/2}")]]
    mm = [[w("K^{-1/2}"), z],
          [w("K^{1/2}", "f").scale(-(q - q.inverse()) * s), w("K^{1/2}")]]
    return mp, mm


# matrix presentations ---------------------------------------------------------------


@dataclass
class MatrixPresentation:
    """Relations and coproducts of the algebra generated by m+, m-, e^i,
    f_i (and c, c^{-1}) built from an R-matrix.

    ``relations`` is a list of (name, lhs, rhs) NCPolys over ``names``;
    ``coproducts`` is a list of (generator name, [(coeff, left word,
    right word), ...]).
    """

    n: int
    names: list
    relations: list = field(default_factory=list)
    coproducts: list = field(default_factory=list)
    lam: Scalar = None
    dilaton: bool = False

    def idx(self, name):
        return self.names.index(name)

    def render(self, p, latex=False):
        return p.render(names=[_latex_name(x) if latex else x for x in self.names], latex=latex, sep=" ")


def _latex_name(x):
    """m+^1_2 -> m^{+}{}^{1}{}_{2}, e^1 -> e^{1}, f_1 -> f_{1}."""
    if x.startswith("m"):
        sign, rest = x[1], x[3:]
        up, down = rest.split("_")
        return "m^{%s}{}^{%s}{}_{%s}" % (sign, up, down)
    if x.startswith("e^"):
        return "e^{%s}" % x[2:]
    if x.startswith("f_"):
        return "f_{%s}" % x[2:]
    return x


def mp_name(i, j):
    return f"m+^{i + 1}_{j + 1}"


def mm_name(i, j):
    return f"m-^{i + 1}_{j + 1}"


def e_name(i):
    return f"e^{i + 1}"


def f_name(i):
    return f"f_{i + 1}"


def emit_matrix_relations(R, lam=None, with_dilaton=False):
    """The presentation with m+ m- cross relations, the relations of
    m+- with e^i and f_i (lambda R in place of R), [e^i, f_j], the dilaton
    relations, and the coproducts."""
    n = R.n
    r = R.r
    one = Scalar(1, r)
    lam = one if lam is None else lam
    q = Scalar.q_pow(1, r)
    names = [mp_name(i, j) for i in range(n) for j in range(n)]
    names += [mm_name(i, j) for i in range(n) for j in range(n)]
    names += [e_name(i) for i in range(n)] + [f_name(i) for i in range(n)]
    if with_dilaton:
        names += ["c", "c^{-1}"]
    N = len(names)
    pos = {x: t for t, x in enumerate(names)}

    def W(*xs, coeff=None):
        return NCPoly.word(tuple(pos[x] for x in xs), N, r, coeff)

    def zero():
        return NCPoly.zero(N, r)

    E = R.entry
    L = lambda i, j, k, l: lam * E(i, j, k, l)
    rels = []
    rng = range(n)
    # A(R) relations for each copy and the cross relation R m+_1 m-_2 = m-_2 m+_1 R
    for tag, X, Y in (("m+ m+", mp_name, mp_name), ("m- m-", mm_name, mm_name), ("m+ m-", mp_name, mm_name)):
        for i, j, k, l in product(rng, repeat=4):
            lhs, rhs = zero(), zero()
            for a, b in product(rng, repeat=2):
                if not E(i, a, k, b).is_zero():
                    lhs = lhs + W(X(a, j), Y(b, l), coeff=E(i, a, k, b))
                if not E(a, j, b, l).is_zero():
                    rhs = rhs + W(Y(k, b), X(i, a), coeff=E(a, j, b, l))
            if lhs != rhs:
                rels.append((f"R {tag} ({i + 1}{k + 1},{j + 1}{l + 1})", lhs, rhs))
    for i, j, k in product(rng, repeat=3):
        # e^i m+^j_k = lam R^j_a^i_b m+^a_k e^b
        rhs = zero()
        for a, b in product(rng, repeat=2):
            if not E(j, a, i, b).is_zero():
                rhs = rhs + W(mp_name(a, k), e_name(b), coeff=L(j, a, i, b))
        rels.append((f"e^{i + 1} m+^{j + 1}_{k + 1}", W(e_name(i), mp_name(j, k)), rhs))
    for i, j, k in product(rng, repeat=3):
        # m-^i_j e^k = lam R^k_a^i_b e^a m-^b_j
        rhs = zero()
        for a, b in product(rng, repeat=2):
            if not E(k, a, i, b).is_zero():
                rhs = rhs + W(e_name(a), mm_name(b, j), coeff=L(k, a, i, b))
        rels.append((f"m-^{i + 1}_{j + 1} e^{k + 1}", W(mm_name(i, j), e_name(k)), rhs))
    for i, j, k in product(rng, repeat=3):
        # m+^i_j f_k = f_b m+^i_a lam R^a_j^b_k
        rhs = zero()
        for a, b in product(rng, repeat=2):
            if not E(a, j, b, k).is_zero():
                rhs = rhs + W(f_name(b), mp_name(i, a), coeff=L(a, j, b, k))
        rels.append((f"m+^{i + 1}_{j + 1} f_{k + 1}", W(mp_name(i, j), f_name(k)), rhs))
    for i, j, k in product(rng, repeat=3):
        # f_i m-^j_k = m-^j_b f_a lam R^a_i^b_k
        rhs = zero()
        for a, b in product(rng, repeat=2):
            if not E(a, i, b, k).is_zero():
                rhs = rhs + W(mm_name(j, b), f_name(a), coeff=L(a, i, b, k))
        rels.append((f"f_{i + 1} m-^{j + 1}_{k + 1}", W(f_name(i), mm_name(j, k)), rhs))
    h = (q - q.inverse()).inverse()
    for i, j in product(rng, repeat=2):
        lhs = W(e_name(i), f_name(j)) - W(f_name(j), e_name(i))
        if with_dilaton:
            rhs = W(mp_name(i, j), "c^{-1}", coeff=h) - W("c", mm_name(i, j), coeff=h)
        else:
            rhs = W(mp_name(i, j), coeff=h) - W(mm_name(i, j), coeff=h)
        rels.append((f"[e^{i + 1}, f_{j + 1}]", lhs, rhs))
    if with_dilaton:
        for i in rng:
            rels.append((f"c f_{i + 1}", W("c", f_name(i)), W(f_name(i), "c", coeff=lam)))
            rels.append((f"e^{i + 1} c", W(e_name(i), "c"), W("c", e_name(i), coeff=lam)))
        for i, j in product(rng, repeat=2):
            for m in (mp_name(i, j), mm_name(i, j)):
                rels.append((f"[c, {m}]", W("c", m), W(m, "c")))
        rels.append(("c c^{-1}", W("c", "c^{-1}"), W()))
        rels.append(("c^{-1} c", W("c^{-1}", "c"), W()))
    cops = []
    for i, j in product(rng, repeat=2):
        for X in (mp_name, mm_name):
            cops.append((X(i, j), [(one, (X(a, j),), (X(i, a),)) for a in rng]))
    for i in rng:
        terms = [(one, (e_name(a),), (mp_name(i, a),) + (("c^{-1}",) if with_dilaton else ())) for a in rng]
        terms.append((one, (), (e_name(i),)))
        cops.append((e_name(i), terms))
        terms = [(one, (f_name(i),), ())]
        terms += [(one, (("c",) if with_dilaton else ()) + (mm_name(a, i),), (f_name(a),)) for a in rng]
        cops.append((f_name(i), terms))
    if with_dilaton:
        cops.append(("c", [(one, ("c",), ("c",))]))
    return MatrixPresentation(n, names, rels, cops, lam, with_dilaton)


def presentation_report(P):
    """Relations and coproducts of a MatrixPresentation as a Report."""
    from .report import Relation, Report

    rep = Report(title=f"matrix presentation (n = {P.n}, lambda = {P.lam}, dilaton = {P.dilaton})")
    for name, lhs, rhs in P.relations:
        rep.relations.append(Relation(P.render(lhs), P.render(rhs),
                                      f"{P.render(lhs, True)} &= {P.render(rhs, True)}", name))
    for g, terms in P.coproducts:
        body = " + ".join(_cop_term(P, c, a, b, False) for c, a, b in terms)
        tex = " + ".join(_cop_term(P, c, a, b, True) for c, a, b in terms)
        rep.relations.append(Relation(f"Delta({g})", body, r"\Delta(%s) &= %s" % (_latex_name(g), tex), f"Delta {g}"))
    return rep


def _cop_term(P, c, a, b, latex):
    nm = _latex_name if latex else (lambda x: x)
    left = " ".join(nm(x) for x in a) or "1"
    right = " ".join(nm(x) for x in b) or "1"
    sep = r" \otimes " if latex else " (x) "
    coeff = "" if c.is_one() else f"({c.latex() if latex else c}) "
    return f"{coeff}{left}{sep}{right}"


def substitute(p, images, target):
    """Image of an NCPoly under generator -> NCPoly images, normal ordered
    in the target presentation."""
    out = NCPoly.zero(target.n, target.r)
    for w, c in p.terms.items():
        t = NCPoly.one(target.n, target.r).scale(c)
        for x in w:
            t = target.normal_order(t * images[x])
        out = out + t
    return target.normal_order(out)


# the inductive sl_2 -> sl_3 step ---------------------------------------------------


def _u_image(U, p, images):
    """Image of an NCPoly under generator index -> UElement images."""
    out = U.scalar(0)
    for w, c in p.terms.items():
        t = U.scalar(c)
        for x in w:
            t = t * images[x]
        out = out + t
    return out


def example56_map(U):
    """Images in U = U_q(sl_3) (A2, half torus) of the generators of the
    extended U_q(sl_2) and of the plane generators.

    e, f, K are the i = 1 copy; e^2, f_2 the i = 2 copy; c = K^{-1/2} K_2^{-1}.
    e^1 and f_1 are solved from the e^2 m+^1_2 and f_2 m-^2_1 relations.
    """
    r = U.r
    q = Scalar.q_pow(1, r)
    s = Scalar.s_pow(1, r)
    lam = Scalar.s_pow(-3, r)
    X = q - q.inverse()
    Kh, Kmh = U.K(0, Fraction(1, 2)), U.K(0, Fraction(-1, 2))
    e, f = U.e(0), U.f(0)
    m = {
        mp_name(0, 0): Kh, mp_name(0, 1): (e * Kmh).scale(-X / s), mp_name(1, 0): U.scalar(0), mp_name(1, 1): Kmh,
        mm_name(0, 0): Kmh, mm_name(0, 1): U.scalar(0), mm_name(1, 0): (Kh * f).scale(-X * s), mm_name(1, 1): Kh,
    }
    img = dict(m)
    img["e"], img["f"], img["K^{1/2}"], img["K^{-1/2}"] = e, f, Kh, Kmh
    img["c"] = U.Kmu((-1, -2))
    img["c^{-1}"] = U.Kmu((1, 2))
    e2, f2 = U.e(1), U.f(1)
    img[e_name(1)], img[f_name(1)] = e2, f2
    # e^2 m+^1_2 = lam q m+^1_2 e^2 + lam (q^2 - 1) m+^2_2 e^1
    t = e2 * m[mp_name(0, 1)] - (m[mp_name(0, 1)] * e2).scale(lam * q)
    img[e_name(0)] = (Kh * t).scale((lam * (q * q - 1)).inverse())
    # f_2 m-^2_1 = lam q m-^2_1 f_2 + lam (q^2 - 1) m-^2_2 f_1
    t = f2 * m[mm_name(1, 0)] - (m[mm_name(1, 0)] * f2).scale(lam * q)
    img[f_name(0)] = (Kmh * t).scale((lam * (q * q - 1)).inverse())
    return img, lam


def _example56_relations(U, g):
    """The relations displayed for the inductive step, as (name, lhs, rhs)."""
    q = Scalar.q_pow(1, U.r)
    s = Scalar.s_pow(1, U.r)
    h = (q - q.inverse()).inverse()
    lam = Scalar.s_pow(-3, U.r)
    e, f, Kh, Kmh, c, ci = g["e"], g["f"], g["K^{1/2}"], g["K^{-1/2}"], g["c"], g["c^{-1}"]
    e1, e2, f1, f2 = g["e^1"], g["e^2"], g["f_1"], g["f_2"]
    Kinv = Kmh * Kmh
    com = lambda a, b: a * b - b * a
    return [
        ("e^1 K^{1/2} = q^{1/2} K^{1/2} e^1", e1 * Kh, (Kh * e1).scale(s)),
        ("e^1 e = q e e^1", e1 * e, (e * e1).scale(q)),
        ("e^2 K^{-1/2} = q^{1/2} K^{-1/2} e^2", e2 * Kmh, (Kmh * e2).scale(s)),
        ("q e e^2 - e^2 e = q^{-1/2} e^1", (e * e2).scale(q) - e2 * e, e1.scale(s.inverse())),
        ("[f, e^2] = 0", com(f, e2), U.scalar(0)),
        ("[f, e^1] = -q^{-1/2} K^{-1} e^2", com(f, e1), (Kinv * e2).scale(-s.inverse())),
        ("e^1 c = q^{-3/2} c e^1", e1 * c, (c * e1).scale(lam)),
        ("e^2 c = q^{-3/2} c e^2", e2 * c, (c * e2).scale(lam)),
        ("c f_1 = q^{-3/2} f_1 c", c * f1, (f1 * c).scale(lam)),
        ("c f_2 = q^{-3/2} f_2 c", c * f2, (f2 * c).scale(lam)),
        ("[e^1, f_1] = (K^{1/2} c^{-1} - c K^{-1/2})/(q - q^{-1})", com(e1, f1), (Kh * ci - c * Kmh).scale(h)),
        ("[e^2, f_2] = (K^{-1/2} c^{-1} - c K^{1/2})/(q - q^{-1})", com(e2, f2), (Kmh * ci - c * Kh).scale(h)),
        ("[e^1, f_2] = -q^{-1/2} e K^{-1/2} c^{-1}", com(e1, f2), (e * Kmh * ci).scale(-s.inverse())),
        ("[e^2, f_1] = q^{1/2} c K^{1/2} f", com(e2, f1), (c * Kh * f).scale(s)),
    ]


def check_example56(max_degree=4):
    """Verify the inductive construction of U_q(sl_3) (with K^{1/2}) from
    U_q(sl_2) and its quantum plane.

    Three routes: the m+- matrices satisfy the matrix relations inside the
    extended U_q(sl_2) (straightening presentation); every relation and
    coproduct of the matrix presentation with lambda = q^{-3/2} and the
    dilaton holds in U_q(sl_3) built from the A2 Cartan datum; and the
    displayed relation list is checked term by term.
    """
    from .cartan import load_datum
    from .doublebos import UTensor, build
    from .report import Relation, Report

    datum, root, _ = load_datum("A2")
    U = build(datum, root, r=0, half_torus=True, max_degree=max_degree)
    r = U.r
    q = Scalar.q_pow(1, r)
    s = Scalar.s_pow(1, r)
    R = _sl2_R(r)
    rep = Report(title="inductive step: U_q(sl_2) and its quantum plane to U_q(sl_3)")
    rep.notes.append("right-hand sides of the identification are written in the simple-root generators "
                     "e^{i}, f_{i}, K_{i} of U_q(sl_3)")

    # route 1: matrix relations inside the extended U_q(sl_2)
    D = uqsl2dot(r, dilaton=True)
    rep.add("extended U_q(sl_2) presentation confluent", not D.check_confluence())
    mp, mm = uqsl2dot_mpm(D)
    M = emit_matrix_relations(R, Scalar.s_pow(-3, r), with_dilaton=True)
    dimg = {M.idx(mp_name(i, j)): mp[i][j] for i in range(2) for j in range(2)}
    dimg.update({M.idx(mm_name(i, j)): mm[i][j] for i in range(2) for j in range(2)})
    dimg[M.idx("c")], dimg[M.idx("c^{-1}")] = D.gen("c"), D.gen("c^{-1}")
    bad = []
    count = 0
    for name, lhs, rhs in M.relations:
        used = {x for w in list(lhs.terms) + list(rhs.terms) for x in w}
        if not used <= set(dimg):
            continue
        count += 1
        if not substitute(lhs - rhs, dimg, D).is_zero():
            bad.append(name)
    rep.add(f"m+- and dilaton relations in extended U_q(sl_2) ({count})", not bad, ", ".join(bad) or None)

    # route 2: every emitted relation and coproduct holds in U_q(sl_3)
    g, lam = example56_map(U)
    for x in ("e", "f", "K^{1/2}", "c", "e^2", "f_2", "e^1", "f_1"):
        rep.relations.append(Relation(x, g[x].render(), f"{x} &\\mapsto {g[x].render(True)}", "identification"))
    uimg = {M.idx(x): g[x] for x in M.names}
    bad = []
    for name, lhs, rhs in M.relations:
        if not (_u_image(U, lhs, uimg) - _u_image(U, rhs, uimg)).is_zero():
            bad.append(name)
    rep.add(f"emitted relations hold in U_q(sl_3) ({len(M.relations)})", not bad, ", ".join(bad) or None)
    bad = []
    for gen, terms in M.coproducts:
        lhs = U.coproduct(g[gen])
        rhs = UTensor(U, {})
        for c, a, b in terms:
            left = _u_image(U, NCPoly.word(tuple(M.idx(x) for x in a), len(M.names), r), uimg)
            right = _u_image(U, NCPoly.word(tuple(M.idx(x) for x in b), len(M.names), r), uimg)
            rhs = rhs + UTensor.of(left, right).scale(c)
        if lhs != rhs:
            bad.append(gen)
    rep.add(f"emitted coproducts hold in U_q(sl_3) ({len(M.coproducts)})", not bad, ", ".join(bad) or None)

    # plane relations
    rep.add("e^2 e^1 = q e^1 e^2", g["e^2"] * g["e^1"] == (g["e^1"] * g["e^2"]).scale(q))
    rep.add("f_2 f_1 = q f_1 f_2", g["f_2"] * g["f_1"] == (g["f_1"] * g["f_2"]).scale(q))

    # route 3: the displayed relations
    for name, lhs, rhs in _example56_relations(U, g):
        ok = lhs == rhs
        wit = None if ok else f"in U_q(sl_3) generators: lhs = {lhs.render()}; rhs = {rhs.render()}"
        rep.add(name, ok, wit)
        if name.startswith("q e e^2") and not ok:
            e, e1, e2 = g["e"], g["e^1"], g["e^2"]
            alt = e * e2 - (e2 * e).scale(q) == e1.scale(s ** 3)
            rep.notes.append("the displayed q e e^2 - e^2 e = q^{-1/2} e^1 fails; the relations as computed give "
                             "e e^2 - q e^2 e = q^{3/2} e^1" + (" (verified)" if alt else " (NOT verified)"))
            rep.data["e e^2 - q e^2 e = q^{3/2} e^1"] = "verified" if alt else "fail"

    # the four displayed coproducts
    e, f, Kh, Kmh, c, ci = g["e"], g["f"], g["K^{1/2}"], g["K^{-1/2}"], g["c"], g["c^{-1}"]
    e1, e2, f1, f2 = g["e^1"], g["e^2"], g["f_1"], g["f_2"]
    one = U.one()
    X = q - q.inverse()
    T = UTensor.of
    cops = [
        ("Delta e^1 = e^1 (x) K^{1/2} c^{-1} - q^{-1/2}(q - q^{-1}) e^2 (x) e K^{-1/2} c^{-1} + 1 (x) e^1", e1,
         T(e1, Kh * ci) + T(e2, e * Kmh * ci).scale(-X / s) + T(one, e1)),
        ("Delta e^2 = e^2 (x) K^{-1/2} c^{-1} + 1 (x) e^2", e2, T(e2, Kmh * ci) + T(one, e2)),
        ("Delta f_2 = f_2 (x) 1 + c K^{1/2} (x) f_2", f2, T(f2, one) + T(c * Kh, f2)),
    ]
    for name, x, expected in cops:
        got = U.coproduct(x)
        rep.add(name, got == expected, None if got == expected else got.render())
    # Delta f_1: the scalar in front of c K^{1/2} f (x) f_2 is printed as
    # -q^{1/2}(q-q)^{-1}, which is undefined; compute it instead
    got = U.coproduct(f1)
    rest = got - T(f1, one) - T(c * Kmh, f1)
    basis_t = T(c * Kh * f, f2)
    (key, unit), = basis_t.terms.items()
    alpha = rest.terms.get(key, Scalar(0, r)) / unit
    ok = (rest - basis_t.scale(alpha)).is_zero()
    expected_alpha = -s * X
    rep.add("Delta f_1 = f_1 (x) 1 + c K^{-1/2} (x) f_1 + alpha c K^{1/2} f (x) f_2", ok and alpha == expected_alpha,
            f"alpha = {alpha}")
    rep.data["Delta f_1 scalar"] = {"computed": str(alpha), "printed": "-q^{1/2}(q-q)^{-1}",
                                    "reading": "-q^{1/2}(q-q^{-1})"}
    rep.notes.append(f"Delta f_1: printed scalar -q^{{1/2}}(q-q)^{{-1}} is undefined; computed scalar is {alpha}")

    # identification with the A2 presentation: K_2 = K^{-1/2} c^{-1}
    K2 = U.K(1)
    rep.add("K^{-1/2} c^{-1} = K_2", Kmh * ci == K2)
    lhs = g["e^2"] * g["f_2"] - g["f_2"] * g["e^2"]
    rep.add("[e^2, f_2] = (K_2 - K_2^{-1})/(q - q^{-1})", lhs == (K2 - U.K(1, -1)).scale((q - q.inverse()).inverse()))
    rep.notes.append("the sub-Hopf algebra generated by m+- c^{-+1} is not constructed")
    return rep


def _sl2_R(r):
    from .rmatrix import sl2_rmatrix
    return sl2_rmatrix(r)
