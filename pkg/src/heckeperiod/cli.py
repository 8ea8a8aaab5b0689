"""Command line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import _backend, jsonio
from . import congruence as cg
from . import farey as fr
from . import hecke as hk
from . import numeric as nm
from . import verify as vf
from .matrix import ExtRational, Mat2

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_rational(text: str) -> ExtRational:
    text = text.strip()
    try:
        return ExtRational.parse(text)
    except (ValueError, ArithmeticError) as exc:
        raise UsageError("cannot parse rational %r (use p/q, inf or -inf)" % text) from exc


def parse_matrix(text: str) -> Mat2:
    """``[[a,b],[c,d]]`` literal or a word in S, T, T' such as ``S*T^3``."""
    t = text = text.strip()
    try:
        if t.startswith("["):
            return jsonio.mat_from(json.loads(t))
        return cg.parse_word(t)
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError("cannot parse matrix %r: %s" % (text, exc)) from exc


def parse_complex(text: str) -> complex:
    text = text.strip()
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError as exc:
        raise UsageError("cannot parse complex number %r" % text) from exc


def load_table(n: int, path: str | None) -> cg.CosetTable:
    if path is None:
        return cg.cosets(n)
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError("cannot read representatives file %s: %s" % (path, exc)) from exc
    if isinstance(obj, list):
        obj = {"n": n, "reps": obj}
    if int(obj.get("n", n)) != n:
        raise UsageError("representatives file is for level %s, not %d" % (obj.get("n"), n))
    return cg.CosetTable.from_reps(n, [jsonio.mat_from(r) for r in obj["reps"]])


# -- text rendering -------------------------------------------------------


def _text_grid(rep: hk.HeckeRep) -> str:
    lines = ["H_{%d,%d}  (mu = %d)" % (rep.n, rep.m, rep.mu)]
    for j in range(1, rep.mu + 1):
        terms = []
        for k in range(1, rep.mu + 1):
            for c, B in rep.cell(j, k):
                terms.append(("%d*" % c if c != 1 else "") + "psi_%d|%s" % (k, B))
        lines.append("  [%d] %s" % (j, " + ".join(terms) if terms else "0"))
    return "\n".join(lines)


# -- commands ------------------------------------------------------------


def cmd_farey(args):
    seq = fr.farey_sequence(args.n, max_level=args.max_farey)
    if args.format == "text":
        return " ".join(str(q) if q.is_finite else "%d/0" % q.num for q in seq)
    return jsonio.farey(seq)


def cmd_lns(args):
    seq = fr.lns(parse_rational(args.q))
    if args.format == "text":
        return " -> ".join(str(q) if q.is_finite else "%d/0" % q.num for q in seq.chain)
    return jsonio.lns(seq)


def cmd_mq(args):
    s = fr.m_of(parse_rational(args.q))
    return str(s) if args.format == "text" else jsonio.formal_sum(s)


def cmd_cosets(args):
    t = load_table(args.n, args.reps)
    if args.format == "text":
        rows = ["n = %d, mu = %d" % (t.n, t.mu)]
        rows += ["  alpha_%d = %s" % (i, r) for i, r in enumerate(t.reps, start=1)]
        return "\n".join(rows)
    return jsonio.coset_table(t)


def cmd_rho(args):
    t = load_table(args.n, args.reps)
    g = parse_matrix(args.g)
    if g.det != 1:
        raise UsageError("rho needs an SL(2,Z) element, %s has det %d" % (g, g.det))
    p = cg.rho(g, t)
    if args.format == "text":
        return "\n".join(" ".join(str(v) for v in row) for row in p.matrix())
    return {"n": t.n, "g": jsonio.mat(g), "permutation": jsonio.permutation(p)}


def cmd_hecke(args):
    if args.n == 1 and args.reps is None:
        s = hk.h_tilde_level1(args.m)
        return str(s) if args.format == "text" else jsonio.formal_sum(s)
    rep = hk.h_tilde(args.n, args.m, load_table(args.n, args.reps))
    return _text_grid(rep) if args.format == "text" else jsonio.hecke_rep(rep)


def cmd_residual(args):
    """Three-term residual of the witness (or its Hecke image) on a log grid."""
    s = parse_complex(args.s)
    t = load_table(args.n, args.reps)
    w = nm.witness(s)
    psi = [w] * t.mu
    if args.hecke:
        if t.n == 1:
            h = hk.h_tilde_level1(args.hecke)
            psi = [lambda z: nm.apply_sum(w, s, h, z)]
        else:
            rep = hk.h_tilde(t.n, args.hecke, t)
            psi = [(lambda z, j=j: nm.apply_sum([w] * t.mu, s, rep, z)[j]) for j in range(t.mu)]
    report = nm.residual_report(psi, s, t, nm.log_grid(args.z_min, args.z_max, args.points))
    default = "hecke_image_residual" if args.hecke else "witness_residual"
    tol = args.tol if args.tol is not None else vf.DEFAULT_TOLERANCES[default]
    worst = max(r["residual"] for r in report)
    args._exit = EXIT_OK if worst < tol else EXIT_FAIL
    if args.format == "text":
        return "\n".join("%.6g  %.3e" % (r["z"], r["residual"]) for r in report) + "\nmax %.3e (tol %.1e)" % (worst, tol)
    return report


def cmd_verify(args):
    checks = vf.run(args.suite, tol=args.tol)
    ok = all(c.passed for c in checks)
    args._exit = EXIT_OK if ok else EXIT_FAIL
    if args.format == "text":
        lines = ["%s  %-8s %-28s %s" % ("PASS" if c.passed else "FAIL", c.suite, c.name, c.anchor) for c in checks]
        lines.append("%d/%d checks passed (kernels: %s)" % (sum(c.passed for c in checks), len(checks), _backend.BACKEND))
        return "\n".join(lines)
    return {"passed": ok, "backend": _backend.BACKEND, "checks": [c.as_dict() for c in checks]}


# -- parser --------------------------------------------------------------


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be > 0")
    return v


def _add_common(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("json", "text"), default=d("json"), help="output format")
    p.add_argument("--tol", type=_positive_float, default=d(None), help="override numeric tolerances")
    p.add_argument("--reps", default=d(None), metavar="FILE", help="JSON file of coset representatives")
    p.add_argument("--max-farey", type=int, default=d(fr.DEFAULT_MAX_LEVEL), help="largest Farey level allowed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckeperiod",
        description="Hecke operators on period functions for SL(2,Z) and Gamma_0(n).",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _add_common(p, suppress=True)
        p.set_defaults(func=func)
        return p

    add("farey", cmd_farey, "Farey sequence of level n").add_argument("n", type=int)
    add("lns", cmd_lns, "left neighbour sequence of q").add_argument("q")
    add("mq", cmd_mq, "formal sum M(q) for 0 <= q < 1").add_argument("q")
    add("cosets", cmd_cosets, "coset representatives of Gamma_0(n)").add_argument("n", type=int)
    p = add("rho", cmd_rho, "permutation rho(g) at level n")
    p.add_argument("n", type=int)
    p.add_argument("g", help="[[a,b],[c,d]] or a word such as S*T^3")
    p = add("hecke", cmd_hecke, "Hecke representation H_{n,m}")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p = add("residual", cmd_residual, "three-term residual of the witness 1 - z^(-2s)")
    p.add_argument("n", type=int)
    p.add_argument("s", help="spectral parameter, e.g. 0.5+14.13j")
    p.add_argument("--hecke", type=int, default=None, metavar="M", help="apply the m-th Hecke operator first")
    p.add_argument("--z-min", type=float, default=0.05)
    p.add_argument("--z-max", type=float, default=20.0)
    p.add_argument("--points", type=int, default=50)
    p = add("verify", cmd_verify, "run the self-check suites")
    p.add_argument("suite", nargs="?", default="all", choices=("all",) + tuple(vf.SUITES))
    return parser


DOMAIN_ERRORS = (
    UsageError,
    fr.NoNeighbor,
    fr.OutOfDomain,
    fr.ResourceGuard,
    cg.NotPrime,
    cg.InvalidRepresentatives,
    nm.DomainError,
    ValueError,
)


def _shield_negatives(argv: list[str]) -> list[str]:
    # "-1/2", "-inf", "-0.5+2j" are values, not flags; a leading space keeps
    # argparse from treating them as options and every parser strips it
    return [" " + a if a.startswith("-") and not a.startswith("--") and a != "-h" else a for a in argv]


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_shield_negatives(sys.argv[1:] if argv is None else list(argv)))
    args._exit = EXIT_OK
    try:
        result = args.func(args)
    except DOMAIN_ERRORS as exc:
        print("%s: error: %s" % (parser.prog, exc), file=sys.stderr)
        return EXIT_USAGE
    if isinstance(result, str):
        print(result)
    else:
        print(jsonio.dumps(result))
    return args._exit


if __name__ == "__main__":
    sys.exit(main())
