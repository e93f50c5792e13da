"""Command-line front end.

Every subcommand builds a Report, writes it as JSON and/or LaTeX, and exits
0 when all checks pass, 1 when a check fails and 2 on bad input.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .braidedgroup import BraidedGroup
from .cartan import CartanError, load_datum, validate
from .doublebos import (build, root_of_unity_uqsl2, verify_bialgebra, verify_fundamental,
                        verify_quasitriangular)
from .pbw import check_example56, emit_matrix_relations, presentation_report
from .report import Relation, Report
from .rmatrix import PRESETS as R_PRESETS, RMatrix, RMatrixError, cartan_to_rmatrix, check_qybe
from .scalars import ParseError, parse, render


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    source: str = None
    degree: int = None
    r: int = 0
    fmt: str = "json"
    output: str = None

    def __post_init__(self):
        if self.degree is not None and self.degree < 1:
            raise ConfigError("truncation degree must be >= 1")
        if self.r and (self.r < 3 or self.r % 2 == 0):
            raise ConfigError("cyclotomic r must be odd and >= 3")


def _datum(spec):
    try:
        return load_datum(spec)
    except FileNotFoundError:
        raise ConfigError(f"no preset or file named {spec!r}") from None
    except (OSError, json.JSONDecodeError, CartanError) as exc:
        raise ConfigError(str(exc)) from None


def _rmatrix(spec, r=0):
    if spec in R_PRESETS:
        return R_PRESETS[spec](r)
    try:
        with open(spec) as fh:
            return RMatrix.from_json(fh.read(), r)
    except FileNotFoundError:
        raise ConfigError(f"no preset or file named {spec!r}") from None
    except (OSError, json.JSONDecodeError, RMatrixError, ParseError) as exc:
        raise ConfigError(str(exc)) from None


def _degree_vector(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ConfigError(f"bad degree vector {text!r}") from None


def _poly_latex(terms, letter):
    parts = []
    for w, c in sorted(terms.items()):
        body = "".join("%s^{%d}" % (letter, x + 1) for x in w)
        parts.append((c, body))
    out = ""
    for c, body in parts:
        if c.is_one():
            t = body
        elif (-c).is_one():
            t = "-" + body
        else:
            t = "(" + c.latex() + ")" + body
        out += t if not out else (" - " + t[1:] if t.startswith("-") else " + " + t)
    return out or "0"


def _poly_text(terms, letter):
    items = sorted(terms.items())
    out = ""
    for w, c in items:
        body = "".join(f"{letter}{x + 1}" for x in w)
        t = body if c.is_one() else ("-" + body if (-c).is_one() else f"({render(c)})*{body}")
        out += t if not out else (" - " + t[1:] if t.startswith("-") else " + " + t)
    return out or "0"


# subcommands ------------------------------------------------------------------


def cmd_cartan_check(cfg):
    datum, root, _ = _datum(cfg.source)
    v = validate(datum, root)
    rep = Report(title=f"Cartan datum {cfg.source}")
    rep.data["dot"] = [list(row) for row in datum.dot]
    rep.data["cartan_matrix"] = [[str(datum.a(i, j)) for j in range(datum.n)] for i in range(datum.n)]
    rep.add("Cartan datum valid", v.ok, "; ".join(v.violations) or None)
    if v.ok:
        rep.add("diagonal R satisfies the braid relation", check_qybe(cartan_to_rmatrix(datum, cfg.r)))
    return rep


def cmd_serre(cfg, d):
    datum, root, _ = _datum(cfg.source)
    if len(d) != datum.n:
        raise ConfigError(f"degree vector needs {datum.n} entries")
    B = BraidedGroup(cartan_to_rmatrix(datum, cfg.r), "vector", "forward", "radical")
    kernel = B.radical_basis(d)
    rep = Report(title=f"radical of the pairing for {cfg.source} at degree {d}")
    rep.data["degree"] = list(d)
    rep.data["dimension"] = len(kernel)
    rep.data["quotient_dimension"] = len(B.basis(d))
    for t, k in enumerate(kernel):
        terms = k.terms if hasattr(k, "terms") else k
        rep.relations.append(Relation(_poly_text(terms, "e"), "0", _poly_latex(terms, "e") + " &= 0", f"kernel {t + 1}"))
    return rep


def _generator_relations(U):
    rep = []
    n = U.n
    names = lambda i: "" if n == 1 else str(i + 1)
    for i in range(n):
        for j in range(n):
            x = U.e(i) * U.f(j) - U.f(j) * U.e(i)
            rep.append(Relation(f"[e{names(i)}, f{names(j)}]", x.render(), "[e_{%d}, f_{%d}] &= %s" % (i + 1, j + 1, x.render(True))))
    for i in range(n):
        for j in range(n):
            x = U.e(i) * U.K(j)
            rep.append(Relation(f"e{names(i)} K{names(j)}", x.render(), "e_{%d} K_{%d} &= %s" % (i + 1, j + 1, x.render(True))))
            x = U.K(j) * U.f(i)
            rep.append(Relation(f"K{names(j)} f{names(i)}", x.render(), "K_{%d} f_{%d} &= %s" % (j + 1, i + 1, x.render(True))))
    for i in range(n):
        for nm, x in (("e", U.e(i)), ("f", U.f(i)), ("K", U.K(i))):
            d = U.coproduct(x)
            rep.append(Relation(f"Delta({nm}{names(i)})", d.render(), r"\Delta(%s_{%d}) &= %s" % (nm, i + 1, d.render(True))))
        for nm, x in (("e", U.e(i)), ("f", U.f(i)), ("K", U.K(i))):
            a = U.antipode(x)
            rep.append(Relation(f"S({nm}{names(i)})", a.render(), r"S(%s_{%d}) &= %s" % (nm, i + 1, a.render(True))))
    return rep


def cmd_build(cfg):
    datum, root, half = _datum(cfg.source)
    U = build(datum, root, r=0, half_torus=half, max_degree=cfg.degree)
    rep = verify_bialgebra(U, cfg.degree)
    rep.title = f"U for {cfg.source}, verified through total degree {cfg.degree}"
    rep.relations = _generator_relations(U)
    return rep


def cmd_root_of_unity(cfg, verify_qt):
    U = root_of_unity_uqsl2(cfg.r)
    if verify_qt:
        rep = verify_quasitriangular(U)
    else:
        rep = Report(title=f"u_q(sl_2) at r = {cfg.r}")
    rep.data["r"] = cfg.r
    rep.data["dimension"] = cfg.r ** 3
    return rep


def cmd_fundamental(cfg, verify, pair_degree):
    datum, root, half = _datum(cfg.source)
    U = build(datum, root, r=0, half_torus=half, max_degree=cfg.degree + 1)
    if not verify:
        rep = Report(title=f"fundamental representation of {cfg.source}")
    else:
        rep = verify_fundamental(U, cfg.degree, pair_degree)
    x = U.B.gen(0)
    for nm, u in (("e1", U.e(0)), ("f1", U.f(0)), ("K1", U.K(0))):
        for w in (x, U.B.multiply(x, x)):
            out = _act(U, w, u)
            rep.relations.append(Relation(f"{w} < {nm}", str(out), "%s \\triangleleft %s &= %s" % (w.render(latex=True), nm, out.render(latex=True))))
    return rep


def _act(U, v, u):
    from .doublebos import fundamental_rep
    return fundamental_rep(U, v, u)


def cmd_rmatrix_relations(cfg, dilaton, lam_text):
    R = _rmatrix(cfg.source)
    try:
        lam = parse(lam_text, 0) if lam_text is not None else None
    except ParseError as exc:
        raise ConfigError(str(exc)) from None
    P = emit_matrix_relations(R, lam, with_dilaton=dilaton)
    rep = presentation_report(P)
    rep.add("R satisfies the braid relation", check_qybe(R))
    rep.data["generators"] = P.names
    rep.data["lambda"] = render(P.lam)
    return rep


def cmd_induct_sl3(cfg):
    return check_example56()


# driver ---------------------------------------------------------------------------


def _parser():
    p = argparse.ArgumentParser(prog="qdouble", description="Exact double-bosonisation computations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "latex", "both"), default="json")
    common.add_argument("--output", help="output path (extension added for --format both); default stdout")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("cartan-check", parents=[common], help="validate a Cartan datum")
    s.add_argument("--datum", default="A2")
    s = sub.add_parser("serre", parents=[common], help="radical of the pairing at a degree")
    s.add_argument("--datum", required=True)
    s.add_argument("--degree", required=True, help="degree vector, e.g. 2,1")
    s.add_argument("--r", type=int, default=0, help="odd root-of-unity order (default generic q)")
    s = sub.add_parser("build", parents=[common], help="build U and verify the Hopf axioms")
    s.add_argument("--datum", required=True)
    s.add_argument("--verify", type=int, required=True, metavar="N", help="total degree bound")
    s = sub.add_parser("root-of-unity", parents=[common], help="u_q(sl_2) at an odd root of unity")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--verify-qt", action="store_true")
    s = sub.add_parser("fundamental", parents=[common], help="fundamental representation checks")
    s.add_argument("--datum", required=True)
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--pair-degree", type=int, default=None, help="module-algebra degree bound (default min(8, max-degree))")
    s.add_argument("--verify", action="store_true")
    s = sub.add_parser("rmatrix-relations", parents=[common], help="matrix presentation from an R-matrix")
    s.add_argument("--file", required=True, help="JSON R-matrix or preset name")
    s.add_argument("--dilaton", action="store_true")
    s.add_argument("--lambda", dest="lam", default=None, help="normalisation, e.g. q^{-3/2}")
    sub.add_parser("induct-sl3", parents=[common], help="the inductive sl_2 to sl_3 step")
    return p


def run(args):
    cmd = args.command
    if cmd == "cartan-check":
        return cmd_cartan_check(RunConfig(cmd, args.datum, fmt=args.format))
    if cmd == "serre":
        return cmd_serre(RunConfig(cmd, args.datum, r=args.r), _degree_vector(args.degree))
    if cmd == "build":
        return cmd_build(RunConfig(cmd, args.datum, degree=args.verify))
    if cmd == "root-of-unity":
        if args.r < 3 or args.r % 2 == 0:
            raise ConfigError("r must be odd and >= 3")
        return cmd_root_of_unity(RunConfig(cmd, r=args.r), args.verify_qt)
    if cmd == "fundamental":
        cfg = RunConfig(cmd, args.datum, degree=args.max_degree)
        pd = args.pair_degree if args.pair_degree is not None else min(8, cfg.degree)
        return cmd_fundamental(cfg, args.verify, pd)
    if cmd == "rmatrix-relations":
        return cmd_rmatrix_relations(RunConfig(cmd, args.file), args.dilaton, args.lam)
    if cmd == "induct-sl3":
        return cmd_induct_sl3(RunConfig(cmd))
    raise ConfigError(f"unknown command {cmd}")


def _write(rep, fmt, output):
    outs = []
    if fmt in ("json", "both"):
        outs.append((".json", rep.to_json()))
    if fmt in ("latex", "both"):
        outs.append((".tex", rep.to_latex()))
    if output is None:
        sys.stdout.write("".join(text for _, text in outs))
        return
    for ext, text in outs:
        path = output
        if fmt == "both":
            root, cur = os.path.splitext(output)
            path = (root if cur in (".json", ".tex") else output) + ext
        with open(path, "w") as fh:
            fh.write(text)


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        rep = run(args)
        _write(rep, args.format, args.output)
    except (ConfigError, OSError) as exc:
        print(f"qdouble: {exc}", file=sys.stderr)
        return 2
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
