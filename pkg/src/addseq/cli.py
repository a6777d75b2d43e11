"""Command line front end: one subcommand per area, CSV or JSON output.

Exit status is 0 on success, 1 when a computation fails and 2 for bad
arguments (argparse errors and rejected parameter values).
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import breedsim, charpoly, genfunc, goldprops, qmatrix, seqcore, sums, tables

FAMILY_CODES = {
    "G": "general", "K": "k", "C": "coefficient", "X": "exponent", "S": "syllable", "one": "one",
}


class UsageError(ValueError):
    pass


# -- helpers -----------------------------------------------------------------------

def int_range(text: str) -> list[int]:
    """'7' -> [7]; '2..5' -> [2, 3, 4, 5]; '1,4,9' -> [1, 4, 9]."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer, list or range: {text!r}") from None


def int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


class Output:
    """Collects params, header and rows, then renders them deterministically."""

    def __init__(self, params: dict, header: Sequence[str], digits: int):
        self.params = {k: _cell(v, digits) for k, v in params.items()}
        self.header = list(header)
        self.digits = digits
        self.rows: list[list[str]] = []

    def add(self, *cells):
        self.rows.append([_cell(c, self.digits) for c in cells])

    def render(self, fmt: str) -> str:
        if fmt == "json":
            payload = {"params": self.params, "rows": [dict(zip(self.header, r)) for r in self.rows]}
            return json.dumps(payload, indent=2) + "\n"
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header)
        w.writerows(self.rows)
        return buf.getvalue()


def _cell(v: Any, digits: int) -> Any:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return f"{v:.{digits}f}"
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return " ".join(str(_cell(x, digits)) for x in v)
    if v is None:
        return ""
    if hasattr(v, "quantize"):  # Decimal
        return str(charpoly.round5(v, digits))
    return v if isinstance(v, (str, dict)) else str(v)


def _spec_from_args(a) -> seqcore.SequenceSpec:
    family = FAMILY_CODES[a.family]
    if family == "general":
        if not a.seeds:
            raise UsageError("--seeds is required for the general family")
        return seqcore.general(a.seeds)
    if family == "one":
        return seqcore.one_sequence(a.s0, a.a)
    if a.p is None:
        raise UsageError("--p is required")
    return seqcore.make_family(family, a.p, a.k)


def _add_family_args(sp):
    sp.add_argument("--family", choices=list(FAMILY_CODES), default="X")
    sp.add_argument("--p", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--seeds", type=int_list)
    sp.add_argument("--s0", type=int, default=0)
    sp.add_argument("--a", type=int, default=1)


# -- subcommands -------------------------------------------------------------------

def cmd_gen(a) -> Output:
    spec = _spec_from_args(a)
    out = Output({"sequence": spec.label, "n": a.n}, ["n", "t_n"], a.digits)
    for n, t in enumerate(seqcore.terms(spec, a.n + 1)):
        out.add(n, t)
    return out


def cmd_sum(a) -> Output:
    params = {"p": a.p, "parity": a.parity or "all", "corrected": a.corrected}
    out = Output(params, ["n", "naive", "closed", "residual"], a.digits)
    for n in a.n:
        if a.parity:
            rep = sums.odd_even_sum(a.p, a.parity, n, corrected=a.corrected)
        else:
            rep = sums.sum_first_n(a.p, n, a.s0, a.a)
        out.add(n, rep.naive, rep.closed, rep.residual)
    return out


def cmd_sumsq(a) -> Output:
    out = Output({"p": a.p}, ["n", "naive", "closed", "residual"], a.digits)
    for n in a.n:
        rep = sums.sum_squares(a.p, n, a.s0, a.a)
        out.add(n, rep.naive, rep.closed, rep.residual)
    return out


def cmd_prodsum(a) -> Output:
    params = {"p": a.p, "form": a.form, "summation": a.summation}
    if a.p == 3 and a.form == "cyclic":
        params["exact_range"] = sums.cyclic_range_search() or "none"
    out = Output(params, ["n", "naive", "closed", "residual"], a.digits)
    for n in a.n:
        rep = sums.product_sums(a.p, a.form, n, a.summation)
        out.add(n, rep.naive, rep.closed, rep.residual)
    return out


def cmd_ratio(a) -> Output:
    out = Output({"p": f"{a.p[0]}..{a.p[-1]}"}, ["p", "phi_p", "limit_exponent_seq", "below_2"], a.digits)
    for p in a.p:
        phi = charpoly.golden_ratio(p)
        lim = charpoly.limiting_ratio(seqcore.make_family("exponent", p)) if p > 1 else 1.0
        out.add(p, phi, lim, phi < 2)
    return out


def _roots_output(rs: charpoly.RootSet, params: dict, digits: int) -> Output:
    params = dict(params, polynomial=str(rs.poly), residual=f"{rs.residual_bound:.3g}")
    if rs.dominant is not None:
        params["dominant"] = rs.dominant
    out = Output(params, ["re", "im", "modulus"], digits)
    for re, im, mod in rs.rows():
        out.add(re, im, mod)
    return out


def cmd_roots(a) -> Output:
    if sum(x is not None for x in (a.golden_p, a.coeffs, a.lags)) != 1:
        raise UsageError("give exactly one of --golden-p, --coeffs, --lags")
    if a.golden_p is not None:
        poly = charpoly.golden_polynomial(a.golden_p)
    elif a.coeffs is not None:
        poly = charpoly.IntPolynomial(a.coeffs)
    else:
        poly = charpoly.char_poly(charpoly.RecurrenceSpec([(1, m) for m in a.lags]))
    rs = charpoly.all_roots(poly, a.tol)
    if a.golden_p is not None:
        rs.dominant = charpoly.golden_ratio(a.golden_p)
    return _roots_output(rs, {}, a.digits)


def cmd_classic(a) -> Output:
    rs = charpoly.classic_ratio(a.kind, *a.params)
    params = {"kind": a.kind, "params": a.params}
    if "closed_form" in rs.extra:
        params["closed_form"] = rs.extra["closed_form"]
    return _roots_output(rs, params, a.digits)


def cmd_reduce(a) -> Output:
    phi = float(charpoly.golden_ratio(a.p))
    header = ["n"] + [f"c{k}" for k in range(a.p)] + ["rel_error"]
    out = Output({"p": a.p, "phi_p": phi}, header, a.digits)
    for n in a.n:
        red = goldprops.phi_power_reduce(a.p, n)
        err = abs(phi**n - red.evaluate(phi)) / phi**n
        out.add(n, *red.coeffs, f"{err:.2e}")
    return out


def cmd_angle(a) -> Output:
    unit = "rad" if a.radians else "deg"
    out = Output({"unit": unit}, ["p", "phi_p", "angle"], a.digits)
    for p in a.p:
        out.add(p, charpoly.golden_ratio(p), goldprops.golden_angle(p, a.radians))
    return out


def _parse_number(text: str):
    """'10/7' -> Fraction; 'u,v' -> u + v sqrt 5 with rational parts."""
    try:
        if "," in text:
            u, v = text.split(",", 1)
            return goldprops.QuadraticSurd(Fraction(u), Fraction(v))
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse number {text!r}") from None


def cmd_cf(a) -> Output:
    if (a.phi_power is None) == (a.value is None):
        raise UsageError("give exactly one of --phi-power, --value")
    x = goldprops.phi_power_surd(a.phi_power) if a.phi_power is not None else _parse_number(a.value)
    cf = goldprops.cf_expand(x, a.depth)
    params = {"value": str(x), "expansion": str(cf), "complete": cf.complete}
    if a.phi_power is not None:
        params["matches_pattern"] = goldprops.same_expansion(cf, goldprops.phi_power_cf_pattern(a.phi_power)) \
            if a.phi_power > 0 else True
    out = Output(params, ["m", "quotient", "convergent"], a.digits)
    count = a.convergents or (1 + len(cf.tail) + (len(cf.periodic_tail or ()) or 0))
    if not cf.periodic_tail:
        count = min(count, 1 + len(cf.tail))
    for m, q in enumerate(cf.quotients(count), 1):
        out.add(m, q, goldprops.convergent(cf, m))
    return out


def cmd_binet(a) -> Output:
    out = Output({}, ["n", "binet", "f_n", "l_n", "phi_power"], a.digits)
    for n in a.n:
        f, l = seqcore.fib_lucas(n)
        out.add(n, goldprops.binet(n), f, l, str(goldprops.phi_power_surd(n)))
    return out


def cmd_qmat(a) -> Output:
    m = qmatrix.q_tilde(a.coeffs) if a.coeffs else qmatrix.q_matrix(a.p)
    power = qmatrix.mat_pow(m, a.n)
    params = {"order": m.order, "n": a.n, "det": qmatrix.det(power)}
    if a.state:
        params["state"] = qmatrix.advance_state(m, a.state, a.n)
    out = Output(params, ["row"] + [f"c{j}" for j in range(m.order)], a.digits)
    for i, row in enumerate(power.rows):
        out.add(i, *row)
    return out


def cmd_cassini(a) -> Output:
    out = Output({}, ["n", "value", "expected"], a.digits)
    for n in a.n:
        out.add(n, qmatrix.cassini(n), (-1) ** n)
    return out


def cmd_detid(a) -> Output:
    base = qmatrix.det(qmatrix.q_matrix(a.p))
    out = Output({"p": a.p, "det_q": base}, ["n", "det", "expected", "structural"], a.digits)
    for n in a.n:
        d, ok = qmatrix.determinantal_identity(a.p, n)
        out.add(n, d, base**n, "unsupported" if ok is None else ok)
    return out


def cmd_gf(a) -> Output:
    spec = _spec_from_args(a)
    gf = genfunc.gf_from_spec(spec)
    out = Output({"sequence": spec.label, "numerator": str(gf.numerator), "denominator": str(gf.denominator)},
                 ["n", "coefficient"], a.digits)
    for n, c in enumerate(genfunc.series_coeffs(gf, a.count)):
        out.add(n, c)
    return out


def cmd_breed(a) -> Output:
    cfg = breedsim.BreedConfig(a.alpha, a.beta, a.gamma, a.delta, a.strict, a.first_birth_step, a.allow_degenerate)
    params = {"alpha": a.alpha, "beta": a.beta, "gamma": a.gamma or "none", "delta": a.delta or "none",
              "strict": a.strict}
    if a.gamma is None and a.delta is None:
        rec = breedsim.recurrence_extract(cfg)
        params["recurrence"] = str(rec) if rec else "none"
    out = Output(params, ["step", "births", "total", "cumulative", "population", "deaths"], a.digits)
    for r in breedsim.simulate(cfg, a.n):
        out.add(r.step, r.births, r.total, r.cumulative, r.population, r.deaths)
    return out


def cmd_compositions(a) -> Output:
    out = Output({"p": a.p, "brute": a.brute}, ["n", "count", "syllable_term", "classes"], a.digits)
    syl = seqcore.terms(seqcore.make_family("syllable", a.p), max(a.n) + 1)
    for n in a.n:
        classes = "; ".join(f"{'.'.join(map(str, c))}x{m}" for c, m in seqcore.composition_classes(n, a.p))
        out.add(n, seqcore.compositions_count(n, a.p, a.brute), syl[n - 1], classes)
    return out


def cmd_tables(a) -> Output:
    rows = tables.reproduce(a.id)
    passed = sum(r[3] for r in rows)
    out = Output({"table": a.id, "passed": passed, "failed": len(rows) - passed},
                 ["key", "expected", "computed", "pass"], a.digits)
    for key, e, c, ok in rows:
        out.add(key, e, c, "pass" if ok else "fail")
    return out


# -- parser ------------------------------------------------------------------------

COMMANDS: dict[str, Callable] = {}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="addseq", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--digits", type=int, default=5)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        COMMANDS[name] = func
        return sub.add_parser(name, parents=[common], help=help_text)

    sp = add("gen", cmd_gen, "terms t_0..t_n of a sequence")
    _add_family_args(sp)
    sp.add_argument("--n", type=int, required=True)

    sp = add("sum", cmd_sum, "sum of the first n terms, or odd/even sums")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int_range, required=True)
    sp.add_argument("--parity", choices=["odd", "even"])
    sp.add_argument("--corrected", action="store_true", help="use the always-exact p=4,5 parity forms")
    sp.add_argument("--s0", type=int, default=0)
    sp.add_argument("--a", type=int, default=1)

    sp = add("sumsq", cmd_sumsq, "sum of squares with closed form and residual")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int_range, required=True)
    sp.add_argument("--s0", type=int, default=0)
    sp.add_argument("--a", type=int, default=1)

    sp = add("prodsum", cmd_prodsum, "sums of products of neighbouring terms")
    sp.add_argument("--p", type=int, choices=[2, 3], required=True)
    sp.add_argument("--form", choices=list(sums.PRODUCT_FORMS), required=True)
    sp.add_argument("--n", type=int_range, required=True)
    sp.add_argument("--summation", choices=list(sums.CYCLIC_RANGES), default="1..n-1")

    sp = add("ratio", cmd_ratio, "golden ratios Phi_p")
    sp.add_argument("--p", type=int_range, required=True)

    sp = add("roots", cmd_roots, "all complex roots of a polynomial")
    sp.add_argument("--golden-p", type=int)
    sp.add_argument("--coeffs", type=int_list, help="ascending integer coefficients")
    sp.add_argument("--lags", type=int_list, help="unit-coefficient recurrence lags")
    sp.add_argument("--tol", type=float, default=charpoly.DEFAULT_TOL)

    sp = add("classic", cmd_classic, "classic generalised golden ratios")
    sp.add_argument("--kind", choices=list(charpoly.CLASSIC_KINDS), required=True)
    sp.add_argument("--params", type=int_list, required=True)

    sp = add("reduce", cmd_reduce, "Phi_p^n as a polynomial in Phi_p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int_range, required=True)

    sp = add("angle", cmd_angle, "golden angles")
    sp.add_argument("--p", type=int_range, required=True)
    sp.add_argument("--radians", action="store_true")

    sp = add("cf", cmd_cf, "continued fractions and convergents")
    sp.add_argument("--phi-power", type=int)
    sp.add_argument("--value", help="rational a/b or surd 'u,v' meaning u + v*sqrt(5)")
    sp.add_argument("--depth", type=int, default=goldprops.CF_MAX_DEPTH)
    sp.add_argument("--convergents", type=int)

    sp = add("binet", cmd_binet, "Binet's formula and powers of Phi")
    sp.add_argument("--n", type=int_range, required=True)

    sp = add("qmat", cmd_qmat, "powers of the Q-matrix")
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--coeffs", type=int_list, help="first row of a generalised Q-matrix")
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--state", type=int_list)

    sp = add("cassini", cmd_cassini, "Cassini's identity")
    sp.add_argument("--n", type=int_range, required=True)

    sp = add("detid", cmd_detid, "determinants of Q_p^n and entry identifications")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int_range, required=True)

    sp = add("gf", cmd_gf, "generating function and its series")
    _add_family_args(sp)
    sp.add_argument("--count", type=int, default=16)

    sp = add("breed", cmd_breed, "cohort breeding simulation")
    sp.add_argument("--alpha", type=int, required=True)
    sp.add_argument("--beta", type=int, required=True)
    sp.add_argument("--gamma", type=int)
    sp.add_argument("--delta", type=int)
    sp.add_argument("--strict", action="store_true", help="breed only when older than beta")
    sp.add_argument("--first-birth-step", type=int, default=1)
    sp.add_argument("--allow-degenerate", action="store_true")
    sp.add_argument("--n", type=int, required=True)

    sp = add("compositions", cmd_compositions, "compositions into parts 1..p")
    sp.add_argument("--n", type=int_range, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--brute", action="store_true")

    sp = add("tables", cmd_tables, "reproduce a reference table")
    sp.add_argument("--id", choices=list(tables.REPRODUCERS), required=True)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.digits < 0:
        print("addseq: --digits must be non-negative", file=stderr)
        return 2
    try:
        out = COMMANDS[args.command](args)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"addseq {args.command}: {exc}", file=stderr)
        return 2
    except ArithmeticError as exc:
        print(f"addseq {args.command}: computation failed: {exc}", file=stderr)
        return 1
    stdout.write(out.render(args.format))
    return 0


def main() -> None:
    sys.exit(run())
