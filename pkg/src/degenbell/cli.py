"""Command-line interface.

    degenbell table stirling --n-max 4 --r 1 [--lambda 1/2]
    degenbell poly bell --p 3 --r 2 [--lambda 0] [--x 1]
    degenbell check [ID ...] [--all] [--order N] [--p-max P] ...
    degenbell dobinski --p 5 --r 2 --x 1 --lambda 1/2

Exit codes: 0 success, 1 failed check or tolerance, 2 usage error.
"""

import argparse
import csv
import json
import math
import os
import sys

from .degen import DegenParams, bell_r, dobinski_float, fubini_r, stirling_table
from .errors import DegenError
from .identities import CHECK_IDS, SuiteConfig, all_passed, run_suite
from .rings import format_rational, parse_rational, to_json
from .series import DEFAULT_ORDER

FORMATS = ("json", "csv", "pretty")


class UsageError(Exception):
    pass


def default_order():
    raw = os.environ.get("DEGEN_DEFAULT_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"DEGEN_DEFAULT_ORDER must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError("DEGEN_DEFAULT_ORDER must be >= 0")
    return value


def _rational(text):
    try:
        return parse_rational(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid rational {text!r} (use num or num/den)") from None


def _nonneg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value > 0 or math.isinf(value):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _pretty(c):
    if hasattr(c, "pretty"):
        return c.pretty()
    return format_rational(c)


def _emit_json(obj, out):
    out.write(json.dumps(obj, ensure_ascii=False) + "\n")


def cmd_table(args, out):
    rows = stirling_table(args.n_max, args.r)
    if args.lam is not None:
        rows = [[s.evaluate(args.lam) for s in row] for row in rows]
    if args.format == "json":
        _emit_json([[to_json(s) for s in row] for row in rows], out)
    elif args.format == "csv":
        quoting = csv.QUOTE_MINIMAL if args.lam is not None else csv.QUOTE_ALL
        writer = csv.writer(out, quoting=quoting, lineterminator="\n")
        for row in rows:
            writer.writerow([_pretty(s) for s in row])
    else:
        for n, row in enumerate(rows):
            out.write(f"n={n}: " + " | ".join(_pretty(s) for s in row) + "\n")
    return 0


def cmd_poly(args, out):
    params = DegenParams(r=args.r, n=args.p, lam=args.lam)
    build = bell_r if args.kind == "bell" else fubini_r
    value = build(params.n, params.r)
    if args.x is not None and args.lam is not None:
        value = value.evaluate(args.x, args.lam)
    elif args.x is not None:
        value = value.at_x(args.x)
    elif args.lam is not None:
        value = value.at_lambda(args.lam)
    if args.format == "json":
        _emit_json(to_json(value), out)
    elif args.format == "csv":
        coeffs = value.coeffs if hasattr(value, "coeffs") else [value]
        csv.writer(out, quoting=csv.QUOTE_ALL, lineterminator="\n").writerow(
            [_pretty(c) for c in coeffs]
        )
    else:
        out.write(_pretty(value) + "\n")
    return 0


def _params_text(params):
    return " ".join(f"{k}={v}" for k, v in params.items())


def cmd_check(args, out):
    ids = list(args.ids)
    if args.all or not ids:
        ids = list(CHECK_IDS)
    unknown = [i for i in ids if i not in CHECK_IDS]
    if unknown:
        raise UsageError(
            f"unknown check id(s): {', '.join(unknown)}; valid ids: {', '.join(CHECK_IDS)}"
        )
    order = args.order if args.order is not None else default_order()
    config = SuiteConfig(
        order=order,
        p_max=args.p_max,
        r_max=args.r_max,
        n_max=args.n_max,
        m_max=args.m_max,
        ids=tuple(ids),
    )
    reports = run_suite(config)
    if args.format == "json":
        for rep in reports:
            _emit_json(rep.to_json(), out)
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["id", "params", "pass", "power", "expected", "actual", "error"])
        for rep in reports:
            mm = rep.first_mismatch
            writer.writerow(
                [
                    rep.id,
                    _params_text(rep.params),
                    "true" if rep.passed else "false",
                    "" if mm is None else mm.power,
                    "" if mm is None else _pretty(mm.expected),
                    "" if mm is None else _pretty(mm.actual),
                    rep.error or "",
                ]
            )
    else:
        for rep in reports:
            line = f"{'PASS' if rep.passed else 'FAIL'} {rep.id} {_params_text(rep.params)}"
            if rep.first_mismatch is not None:
                mm = rep.first_mismatch
                line += f" | power {mm.power}: expected {_pretty(mm.expected)}, got {_pretty(mm.actual)}"
            if rep.error:
                line += f" | {rep.error}"
            out.write(line + "\n")
    failed = sum(not rep.passed for rep in reports)
    print(f"{len(reports) - failed}/{len(reports)} checks passed", file=sys.stderr)
    return 0 if all_passed(reports) else 1


def cmd_dobinski(args, out):
    if args.x <= 0:
        raise UsageError("--x must be positive")
    if args.terms < 1:
        raise UsageError("--terms must be >= 1")
    try:
        value = dobinski_float(args.p, args.r, args.x, args.lam, K=args.terms - 1, tol=args.tol)
    except DegenError as exc:
        print(f"error: {exc} (raise --terms)", file=sys.stderr)
        return 1
    exact = bell_r(args.p, args.r).evaluate(args.x, args.lam)
    diff = value - float(exact)
    ok = abs(diff) < args.tol
    if args.format == "json":
        _emit_json(
            {"value": value, "exact": format_rational(exact), "diff": diff, "tol": args.tol, "ok": ok}, out
        )
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["value", "exact", "diff"])
        writer.writerow([repr(value), format_rational(exact), repr(diff)])
    else:
        out.write(f"value = {value:.15f}\n")
        out.write(f"exact = {format_rational(exact)} ({float(exact):.15f})\n")
        out.write(f"diff  = {diff:.3e}\n")
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="degenbell",
        description="Degenerate r-Stirling, r-Bell and Fubini polynomials with exact identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default="pretty"):
        p.add_argument("--format", choices=FORMATS, default=default)

    table = sub.add_parser("table", help="degenerate r-Stirling triangle")
    table.add_argument("kind", choices=["stirling"])
    table.add_argument("--n-max", type=_nonneg, required=True)
    table.add_argument("--r", type=_nonneg, default=0)
    table.add_argument("--lambda", dest="lam", type=_rational, default=None)
    add_format(table, default="json")
    table.set_defaults(func=cmd_table)

    poly = sub.add_parser("poly", help="r-Bell or Fubini polynomial")
    poly.add_argument("kind", choices=["bell", "fubini"])
    poly.add_argument("--p", type=_nonneg, required=True)
    poly.add_argument("--r", type=_nonneg, default=0)
    poly.add_argument("--lambda", dest="lam", type=_rational, default=None)
    poly.add_argument("--x", type=_rational, default=None)
    add_format(poly)
    poly.set_defaults(func=cmd_poly)

    check = sub.add_parser("check", help="run identity checks")
    check.add_argument("ids", nargs="*", metavar="ID", help=f"check ids ({', '.join(CHECK_IDS)})")
    check.add_argument("--all", action="store_true")
    check.add_argument("--order", type=_nonneg, default=None)
    check.add_argument("--p-max", type=_nonneg, default=6)
    check.add_argument("--r-max", type=_nonneg, default=3)
    check.add_argument("--n-max", type=_nonneg, default=10)
    check.add_argument("--m-max", type=_nonneg, default=4)
    add_format(check)
    check.set_defaults(func=cmd_check)

    dob = sub.add_parser("dobinski", help="numeric Dobinski partial sum against the exact polynomial")
    dob.add_argument("--p", type=_nonneg, required=True)
    dob.add_argument("--r", type=_nonneg, default=0)
    dob.add_argument("--x", type=_rational, required=True)
    dob.add_argument("--lambda", dest="lam", type=_rational, required=True)
    dob.add_argument("--terms", type=_nonneg, default=40)
    dob.add_argument("--tol", type=_positive_float, default=1e-9)
    add_format(dob)
    dob.set_defaults(func=cmd_dobinski)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"degenbell: error: {exc}", file=sys.stderr)
        return 2
    except (DegenError, ValueError) as exc:
        print(f"degenbell: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
