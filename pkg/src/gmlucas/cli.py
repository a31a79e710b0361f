"""Command line interface.

Subcommands: term (one family member by a chosen route), table (the first
rows of both reference tables), series (generating function expansions),
and verify (the full cross-method check suite).  Exit codes: 0 success,
1 verification failure or route disagreement, 2 usage error.

Output is deterministic: identical invocations produce byte-identical
stdout.  JSON renders every dyadic as {"num": <decimal string>, "exp2": k}
so arbitrarily large integers survive parsers that lack big integers.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys

from .arith import Dyadic, GaussianDyadic, Poly
from . import polyfam as pf
from . import sequences as seq
from . import symfun as sf
from . import verify as ver

FAMILIES = ("m", "gm", "mpoly", "gmpoly")
METHODS = ("recurrence", "binet", "explicit", "symmetric", "genfun", "relation")
SERIES_KINDS = ("gm", "gm-even", "gm-odd", "mpoly", "gmpoly", "kernel")


# ---------------------------------------------------------------- rendering

def _dyadic_json(d: Dyadic) -> dict:
    return {"num": str(d.num), "exp2": d.exp}

def _gaussian_json(g: GaussianDyadic) -> dict:
    return {"re": _dyadic_json(g.re), "im": _dyadic_json(g.im)}

def _value_json(v) -> dict:
    if isinstance(v, Poly):
        return {"coeffs": [_gaussian_json(c) for c in v.coeffs]}
    return _gaussian_json(v)

def _series_json(s: sf.PowerSeries) -> dict:
    return {"order": s.order, "coeffs": [_value_json(c) for c in s.coeffs]}

def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))

def _emit_csv(header, rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)

def _usage_error(message: str) -> int:
    print(f"gmlucas: error: {message}", file=sys.stderr)
    return 2


# --------------------------------------------------------------------- term

def _valid_methods(family: str, n: int) -> tuple[str, ...]:
    if n < 0:
        # Negative indices exist only through the negative extension: the
        # closed form for the number families, the backward recurrence for
        # the polynomial families.
        return ("binet",) if family in ("m", "gm") else ("recurrence",)
    if family == "m":
        return ("recurrence", "binet", "explicit")
    if family == "gm":
        base = ("recurrence", "binet", "symmetric", "genfun")
        return base + (("explicit", "relation") if n >= 1 else ())
    if family == "mpoly":
        return ("recurrence", "explicit", "symmetric", "genfun")
    base = ("recurrence", "symmetric", "genfun")
    return base + (("explicit", "relation") if n >= 1 else ())


def _compute_term(family: str, method: str, n: int):
    if family == "m":
        if n < 0:
            return seq.ml_negative(-n).value
        fn = {"recurrence": seq.ml_recurrence, "binet": seq.ml_binet,
              "explicit": seq.ml_explicit}[method]
        return fn(n).value
    if family == "gm":
        if n < 0:
            return seq.gml_negative(-n).value
        if method == "symmetric":
            return sf.sym_decompose_gml(n)
        if method == "genfun":
            return sf.gf_gml(n)[n]
        fn = {"recurrence": seq.gml_recurrence, "binet": seq.gml_binet,
              "explicit": seq.gml_explicit, "relation": seq.gml_from_ml}[method]
        return fn(n).value
    if family == "mpoly":
        if n < 0:
            return pf.ml_poly_negative(-n).value
        if method == "symmetric":
            return sf.sym_decompose_ml_poly(n)
        if method == "genfun":
            return sf.gf_ml_poly(n)[n]
        fn = {"recurrence": pf.ml_poly, "explicit": pf.ml_poly_explicit}[method]
        return fn(n).value
    if n < 0:
        return pf.gml_poly_negative(-n).value
    if method == "symmetric":
        return sf.sym_decompose_gml_poly(n)
    if method == "genfun":
        return sf.gf_gml_poly(n)[n]
    fn = {"recurrence": pf.gml_poly, "explicit": pf.gml_poly_explicit,
          "relation": pf.gml_poly_from_ml}[method]
    return fn(n).value


def _explain_invalid(family: str, method: str, n: int) -> str:
    if n < 0:
        route = "'binet'" if family in ("m", "gm") else "'recurrence'"
        return (f"negative indices come only from the negative extension; "
                f"use method {route} or 'auto' for family '{family}'")
    if family in ("mpoly", "gmpoly") and method == "binet":
        return ("method 'binet' is only a floating point spot check for the "
                "polynomial families (see gmlucas.polyfam.binet_numeric), "
                "not an exact term route")
    if family in ("gm", "gmpoly") and method in ("explicit", "relation") and n == 0:
        return f"method '{method}' requires n >= 1 for family '{family}'"
    return f"method '{method}' is not a route for family '{family}'"


def cmd_term(family: str, n: int, method: str, fmt: str) -> int:
    valid = _valid_methods(family, n)
    if method == "auto":
        computed = [(label, _compute_term(family, label, n)) for label in valid]
        first_label, first = computed[0]
        for label, value in computed[1:]:
            if value != first:
                print(
                    f"gmlucas: route disagreement for {family} at n={n}: "
                    f"{first_label}={first} vs {label}={value}",
                    file=sys.stderr,
                )
                return 1
        value = first
    elif method not in valid:
        return _usage_error(_explain_invalid(family, method, n))
    else:
        value = _compute_term(family, method, n)
    if fmt == "text":
        print(value)
    elif fmt == "json":
        _emit_json({"family": family, "n": n, "method": method,
                    "value": _value_json(value)})
    else:
        _emit_csv(("family", "n", "method", "value"),
                  [(family, n, method, str(value))])
    return 0


# -------------------------------------------------------------------- table

def cmd_table(which: int, rows: int, fmt: str) -> int:
    if rows < 1:
        return _usage_error("--rows must be at least 1")
    if which == 1:
        data = []
        walker = iter(range(rows))
        a, b = seq.GM0, seq.GM1
        for n in walker:
            data.append((n, a))
            a, b = b, 3 * b - 2 * a
        if fmt == "text":
            print("n  Gm_n")
            for n, value in data:
                print(f"{n}  {value}")
        elif fmt == "json":
            _emit_json({"table": 1, "rows": [
                {"n": n, "gm": _gaussian_json(v)} for n, v in data]})
        else:
            _emit_csv(("n", "gm"), [(n, str(v)) for n, v in data])
        return 0
    ml_iter = pf.iter_ml_poly()
    gml_iter = pf.iter_gml_poly()
    data2 = [(n, next(ml_iter), next(gml_iter)) for n in range(rows)]
    if fmt == "text":
        print("n  m_n(x)  |  Gm_n(x)")
        for n, m_val, gm_val in data2:
            print(f"{n}  {m_val}  |  {gm_val}")
    elif fmt == "json":
        _emit_json({"table": 2, "rows": [
            {"n": n, "m": _value_json(m_val), "gm": _value_json(gm_val)}
            for n, m_val, gm_val in data2]})
    else:
        _emit_csv(("n", "m", "gm"),
                  [(n, str(m_val), str(gm_val)) for n, m_val, gm_val in data2])
    return 0


# ------------------------------------------------------------------- series

_SERIES_FN = {
    "gm": sf.gf_gml,
    "gm-even": sf.gf_gml_even,
    "gm-odd": sf.gf_gml_odd,
    "mpoly": sf.gf_ml_poly,
    "gmpoly": sf.gf_gml_poly,
}


def cmd_series(which: str, order: int, d: Dyadic | None, p: Dyadic | None,
               fmt: str) -> int:
    if order < 0:
        return _usage_error("series order must be non-negative")
    if which == "kernel":
        if d is None or p is None:
            return _usage_error("the kernel series needs both --d and --p")
        series = sf.kernel_series(sf.SymKernel(d, p), order)
    else:
        if d is not None or p is not None:
            return _usage_error("--d/--p apply only to the kernel series")
        series = _SERIES_FN[which](order)
    if fmt == "text":
        print(series)
    elif fmt == "json":
        _emit_json({"series": which, "value": _series_json(series)})
    else:
        _emit_csv(("n", "coefficient"),
                  [(n, str(c)) for n, c in enumerate(series)])
    return 0


# ------------------------------------------------------------------- verify

def cmd_verify(max_n: int, max_poly_n: int, seed: int,
               inject_fault: str | None, fmt: str) -> int:
    try:
        report = ver.run_verify(max_n, max_poly_n, seed, inject_fault)
    except ValueError as err:
        return _usage_error(str(err))
    if fmt == "text":
        for check in report.checks:
            status = "pass" if check.passed else "FAIL"
            line = f"[{status}] {check.name} ({check.range})"
            if check.detail:
                line += f": {check.detail}"
            print(line)
        print(f"overall: {'pass' if report.overall else 'FAIL'}")
    elif fmt == "json":
        _emit_json({
            "checks": [
                {"name": c.name, "range": c.range,
                 "status": "pass" if c.passed else "fail", "detail": c.detail}
                for c in report.checks
            ],
            "overall": report.overall,
        })
    else:
        _emit_csv(("name", "range", "status", "detail"),
                  [(c.name, c.range, "pass" if c.passed else "fail", c.detail)
                   for c in report.checks])
    return 0 if report.overall else 1


# ------------------------------------------------------------------- parser

_DYADIC_TEXT = re.compile(r"^([+-]?\d+)(/2(\^(\d+))?)?$")


def _parse_dyadic(text: str) -> Dyadic:
    match = _DYADIC_TEXT.match(text)
    if not match:
        raise argparse.ArgumentTypeError(
            f"expected INT, INT/2 or INT/2^K, got {text!r}")
    num = int(match.group(1))
    exp = int(match.group(4)) if match.group(4) else (1 if match.group(2) else 0)
    return Dyadic(num, exp)


def _build_parser() -> argparse.ArgumentParser:
    fmt_parent = argparse.ArgumentParser(add_help=False)
    fmt_parent.add_argument(
        "--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS,
        help="output format (default: text)")
    parser = argparse.ArgumentParser(
        prog="gmlucas", parents=[fmt_parent],
        description="Exact Mersenne Lucas and Gaussian Mersenne Lucas families.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_term = sub.add_parser(
        "term", parents=[fmt_parent],
        help="one term of a family, by one route or by all of them")
    p_term.add_argument("family", choices=FAMILIES)
    p_term.add_argument("n", type=int, help="index; negative uses the negative extension")
    p_term.add_argument("--method", choices=METHODS + ("auto",), default="auto",
                        help="computation route (default: auto, cross-checks all)")

    p_table = sub.add_parser(
        "table", parents=[fmt_parent],
        help="reference table 1 (numbers) or 2 (polynomials)")
    p_table.add_argument("which", type=int, choices=(1, 2))
    p_table.add_argument("--rows", type=int, default=6,
                         help="number of rows (default: 6)")

    p_series = sub.add_parser(
        "series", parents=[fmt_parent], help="generating function coefficients")
    p_series.add_argument("which", choices=SERIES_KINDS)
    p_series.add_argument("order", type=int, help="truncation order")
    p_series.add_argument("--d", type=_parse_dyadic, default=None,
                          help="kernel weight d (kernel series only)")
    p_series.add_argument("--p", type=_parse_dyadic, default=None,
                          help="kernel weight p (kernel series only)")

    p_verify = sub.add_parser(
        "verify", parents=[fmt_parent], help="run the cross-method check suite")
    p_verify.add_argument("--max-n", type=int, default=500,
                          help="top index for number checks (default: 500)")
    p_verify.add_argument("--max-poly-n", type=int, default=40,
                          help="top index for polynomial checks (default: 40)")
    p_verify.add_argument("--seed", type=int, default=0,
                          help="seed for the random-alphabet convolution check")
    p_verify.add_argument("--inject-fault", choices=ver.FAULTS, default=None,
                          help="perturb one recurrence seed to confirm the "
                               "checks catch a corrupted build")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    fmt = getattr(args, "format", "text")
    if args.command == "term":
        return cmd_term(args.family, args.n, args.method, fmt)
    if args.command == "table":
        return cmd_table(args.which, args.rows, fmt)
    if args.command == "series":
        return cmd_series(args.which, args.order, args.d, args.p, fmt)
    return cmd_verify(args.max_n, args.max_poly_n, args.seed,
                      args.inject_fault, fmt)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
