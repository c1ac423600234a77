"""Command-line front end.

Exit codes: 0 success, 1 a mathematical violation was found, 2 bad
arguments or unreadable input.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import asympt, digraph, extremal, spectral, walkgen
from .digraph import Digraph, FamilySpec
from .exactalg import series_coeffs

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

# second seed of the s = 6 pair; the first is saturated_star(6)
S6_ALT_SEED = Digraph.from_matrix([[1, 1, 1], [1, 1, 0], [1, 0, 0]])


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def truncate_decimal(x: Fraction, digits: int) -> str:
    """x with ``digits`` significant digits, truncated toward zero."""
    x = Fraction(x)
    if x == 0:
        return "0." + "0" * (digits - 1)
    sign = "-" if x < 0 else ""
    x = abs(x)
    exp = 0
    while x >= 10:
        x /= 10
        exp += 1
    while x < 1:
        x *= 10
        exp -= 1
    mant = str(int(x * 10 ** (digits - 1)))
    if exp >= 0:
        if exp + 1 >= digits:
            return sign + mant + "0" * (exp + 1 - digits)
        return sign + mant[: exp + 1] + "." + mant[exp + 1 :]
    return sign + "0." + "0" * (-exp - 1) + mant


def certified_decimal(lo: Fraction, hi: Fraction, digits: int) -> Optional[str]:
    """Common truncated decimal of every point of [lo, hi], if there is one."""
    a, b = truncate_decimal(lo, digits), truncate_decimal(hi, digits)
    return a if a == b else None


def parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _read_digraph(path: str) -> Digraph:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return Digraph.from_dgm(text)
    except ValueError as exc:
        raise UsageError(f"bad dgm input: {exc}") from None


def _fraction(text: str) -> Fraction:
    try:
        x = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if x <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return x


def _seed(args) -> Digraph:
    if getattr(args, "seed", None):
        return _read_digraph(args.seed)
    if getattr(args, "s", None):
        return digraph.saturated_star(args.s)
    raise UsageError("give --seed FILE or --s S (saturated star seed)")


def _emit(out, text: str, path: Optional[str]):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def _fmt(x) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(x)


# subcommands ---------------------------------------------------------------

def cmd_gen(args, out) -> int:
    try:
        if args.kind == "gmpq":
            g = digraph.make_gmpq(args.m, args.p, args.q)
        elif args.kind == "ml":
            g = digraph.make_ml(args.m, args.l)
        else:
            g = digraph.saturated_star(args.s)
            if args.m is not None:
                g = digraph.embed_complement(g, args.m)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    _emit(out, g.to_dgm(), args.out)
    return EXIT_OK


def cmd_walks(args, out) -> int:
    g = _read_digraph(args.input)
    _emit(out, f"{walkgen.walk_count(g, args.n)}\n", args.out)
    return EXIT_OK


def cmd_series(args, out) -> int:
    if args.family:
        f = walkgen.family_series_symbolic(_seed(args))
        lines = [f"num: {f.num.format()}", f"den: {f.den.format()}"]
        if args.m is not None:
            coeffs = series_coeffs(f.at_m(args.m), args.order + 1)
            lines.append("coeffs: " + " ".join(_fmt(c) for c in coeffs))
    else:
        g = _read_digraph(args.input)
        f = walkgen.walk_series_rational(g)
        lines = [f"num: {f.num}", f"den: {f.den}"]
        lines.append("chi: " + " ".join(map(str, walkgen.walk_series(g, args.order).chi)))
    _emit(out, "\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_rho(args, out) -> int:
    g = _read_digraph(args.input)
    res = spectral.spectral_radius(g, args.tol)
    if res.exact is not None:
        text = f"{_fmt(res.exact)}\n"
    else:
        # longest truncated decimal shared by both bracket ends
        dec = next((d for n in range(40, 0, -1) if (d := certified_decimal(res.rho_lo, res.rho_hi, n))), None)
        text = f"[{_fmt(res.rho_lo)}, {_fmt(res.rho_hi)}]\n"
        if dec is not None:
            text = f"{dec}\n" + text
    _emit(out, text, args.out)
    return EXIT_OK


def cmd_reciprocity(args, out) -> int:
    g = _read_digraph(args.input)
    defect = walkgen.reciprocity_defect(g, args.order)
    bad = [(i, d) for i, d in enumerate(defect) if d]
    if bad:
        out.write("defect at " + ", ".join(f"t^{i}: {_fmt(d)}" for i, d in bad) + "\n")
        out.write(g.to_dgm())
        return EXIT_VIOLATION
    out.write(f"ok: H_A(t) H_Abar(-t) = 1 through t^{args.order}\n")
    return EXIT_OK


def cmd_expand(args, out) -> int:
    seed = _seed(args)
    lines = []
    if args.kind == "eps":
        P = asympt.pole_problem_from_family(seed)
        exp = asympt.epsilon_expansion(P, args.order)
        lines.append(f"s: {P.s}")
        lines.append(f"c: {P.c}")
        lines.append("a: " + " ".join(map(str, P.a)))
        lines.append("b: " + " ".join(map(str, P.b)))
        lines.append("w: " + " ".join(_fmt(w) for w in exp.w))
        lines.append("inverse_m: " + " ".join(_fmt(d) for d in exp.inverse_m_coeffs()))
    else:
        ms = parse_range(args.m_range) if args.m_range else range(40, 61)
        try:
            fit = asympt.laurent_fit(FamilySpec(seed), args.order, list(ms))
        except asympt.ExpansionOrderError as exc:
            out.write(f"error: {exc}\n")
            return EXIT_VIOLATION
        lines.append("coeffs: " + " ".join(map(str, fit.coeffs)))
        lines.append("residuals: " + " ".join(f"{float(r):.6g}" for r in fit.residuals))
        lines.append(f"max_fraction_error: {float(fit.max_fraction_error):.3g}")
    _emit(out, "\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    try:
        if args.kind == "backelin":
            rep = extremal.backelin_argmax(args.s, args.vbound)
        elif args.kind == "pdi":
            members = extremal.pdi_members(args.m, args.s)
            lines = [f"count: {len(members)}"]
            for lam, g in members:
                lines.append(f"partition {' '.join(map(str, lam))} strongly_connected={digraph.is_strongly_connected(g)}")
            _emit(out, "\n".join(lines) + "\n", args.out)
            return EXIT_OK
        elif args.kind == "exhaustive":
            rep = extremal.exhaustive_rho_max(args.n, args.k, args.tol)
        else:
            rep = extremal.dominance_check(args.m, args.s, args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(out, rep.to_json() + "\n" if args.json else rep.to_text(), args.out)
    if args.kind == "dominance" and rep.details["violations"]:
        return EXIT_VIOLATION
    if args.kind == "exhaustive" and not (
        rep.details["max_equals_partition_shaped_max"] and rep.details["rho_le_sqrt_k"]
    ):
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_certify(args, out) -> int:
    cert = extremal.no_crossing_certificate(
        FamilySpec(digraph.saturated_star(6)), FamilySpec(S6_ALT_SEED), args.m_min, refine=args.refine
    )
    d = cert.to_dict()
    lines = [f"{k}: {d[k]}" for k in ("granted", "mode", "resultant", "m_min", "sign_at_m_min", "reason")]
    lines.append(f"diff_at_m_min: {truncate_decimal(cert.diff_at_m_min, 6)}")
    for lo, hi in d["offending"]:
        lines.append(f"offending_root_in: [{lo}, {hi}]")
    _emit(out, "\n".join(lines) + "\n", args.out)
    return EXIT_OK if cert.granted else EXIT_VIOLATION


def diffe_rows(ms: Sequence[int], digits: int = 15) -> list[tuple[int, str, str, str, int]]:
    """(m, r1, r2, r1 - r2, sign) from certified brackets for the s = 6 pair."""
    dens = [walkgen.family_series_symbolic(s).den for s in (digraph.saturated_star(6), S6_ALT_SEED)]
    rows = []
    for m in ms:
        tol = Fraction(1, 10 ** (digits + 6))
        while True:
            b1, b2 = (spectral.dominant_pole(d.at_m(m), Fraction(1, 10**6)).pole.refine(tol) for d in dens)
            lo_d, hi_d = b1.lo - b2.hi, b1.hi - b2.lo
            cells = [certified_decimal(b.lo, b.hi, digits) for b in (b1, b2)]
            cells.append(certified_decimal(lo_d, hi_d, digits))
            if all(cells) and (lo_d > 0 or hi_d < 0):
                break
            tol /= 10**4
        rows.append((m, cells[0], cells[1], cells[2], 1 if lo_d > 0 else -1))
    return rows


def cmd_table(args, out) -> int:
    ms = parse_range(args.m_range)
    rows = diffe_rows(ms, args.digits)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "r1", "r2", "diff"])
    for m, r1, r2, d, _ in rows:
        w.writerow([m, r1, r2, d])
    _emit(out, buf.getvalue(), args.out)
    return EXIT_OK


# parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="walkrho", description="Walk counts and spectral radii of near-complete digraphs.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def common(sp, tol=False):
        sp.add_argument("--out", help="write output to FILE instead of stdout")
        if tol:
            sp.add_argument("--tol", type=_fraction, default=Fraction(1, 10**12), help="bracket width (rational)")

    g = sub.add_parser("gen", help="print a construction in dgm text")
    g.add_argument("kind", choices=["gmpq", "ml", "star"])
    g.add_argument("-m", "--m", type=int)
    g.add_argument("-p", type=int)
    g.add_argument("-q", type=int)
    g.add_argument("-l", "--ell", dest="l", type=int)
    g.add_argument("--s", type=int, help="star edge count")
    common(g)
    g.set_defaults(func=cmd_gen)

    w = sub.add_parser("walks", help="count walks with N edges")
    w.add_argument("--in", dest="input", default="-")
    w.add_argument("--n", type=int, required=True)
    common(w)
    w.set_defaults(func=cmd_walks)

    s = sub.add_parser("series", help="walk generating function P/Q")
    s.add_argument("--in", dest="input", default="-")
    s.add_argument("--family", action="store_true", help="symbolic family series of a seed")
    s.add_argument("--seed")
    s.add_argument("--s", type=int)
    s.add_argument("-m", "--m", type=int)
    s.add_argument("--order", type=int, default=8)
    common(s)
    s.set_defaults(func=cmd_series)

    r = sub.add_parser("rho", help="certified spectral radius")
    r.add_argument("--in", dest="input", default="-")
    common(r, tol=True)
    r.set_defaults(func=cmd_rho)

    rc = sub.add_parser("reciprocity", help="check H_A(t) H_Abar(-t) = 1")
    rc.add_argument("--in", dest="input", default="-")
    rc.add_argument("--order", type=int, default=25)
    rc.set_defaults(func=cmd_reciprocity)

    e = sub.add_parser("expand", help="dominant pole expansion")
    e.add_argument("kind", choices=["eps", "fit"])
    e.add_argument("--seed")
    e.add_argument("--s", type=int)
    e.add_argument("--order", type=int, default=5)
    e.add_argument("--m-range")
    common(e)
    e.set_defaults(func=cmd_expand)

    se = sub.add_parser("search", help="exhaustive searches")
    se.add_argument("kind", choices=["backelin", "pdi", "exhaustive", "dominance"])
    se.add_argument("--s", type=int)
    se.add_argument("-m", "--m", type=int)
    se.add_argument("--n", type=int)
    se.add_argument("--k", type=int)
    se.add_argument("--vbound", type=int)
    se.add_argument("--order", type=int, default=12)
    se.add_argument("--json", action="store_true")
    common(se, tol=True)
    se.set_defaults(func=cmd_search)

    c = sub.add_parser("certify", help="no-crossing certificate")
    c.add_argument("kind", choices=["s6"])
    c.add_argument("--m-min", type=int, default=4)
    c.add_argument("--refine", action="store_true", help="examine resultant roots instead of refusing")
    common(c)
    c.set_defaults(func=cmd_certify)

    t = sub.add_parser("table", help="CSV tables")
    t.add_argument("kind", choices=["diffe"])
    t.add_argument("--m-range", default="4..10")
    t.add_argument("--digits", type=int, default=15)
    common(t)
    t.set_defaults(func=cmd_table)
    return p


_REQUIRED = {
    ("gen", "gmpq"): ("m", "p", "q"),
    ("gen", "ml"): ("m", "l"),
    ("gen", "star"): ("s",),
    ("search", "backelin"): ("s",),
    ("search", "pdi"): ("m", "s"),
    ("search", "exhaustive"): ("n", "k"),
    ("search", "dominance"): ("m", "s"),
}


def run_command(argv: Sequence[str], out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(list(argv))
        missing = [f for f in _REQUIRED.get((args.command, getattr(args, "kind", None)), ()) if getattr(args, f) is None]
        if missing:
            raise UsageError(f"{args.command} {args.kind} needs " + ", ".join(f"--{f}" for f in missing))
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
