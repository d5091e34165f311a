"""Command-line entry point: ``akx {w,table,verify,compress,stabilize}``.

Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction

from .closed_form import CURVE_COLUMNS, curve_rows, parse_p, w_closed
from .family import (
    ParseError,
    PreconditionError,
    SetFamily,
    elements_of,
    is_t_intersecting,
    measure,
    read_setfam,
    write_setfam,
)
from .shifting import format_trace, left_compress, stabilize
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return parse_p(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected NUM/DEN strictly between 0 and 1: {exc}") from None


def _show(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def cmd_w(args) -> int:
    res = w_closed(args.n, args.t, args.p)
    print(f"{_show(res.value)}\t{float(res.value):.12g}\tr={res.r_text()}\t{res.regime}")
    return EXIT_OK


def cmd_table(args) -> int:
    rows = curve_rows(args.n, args.tmax, args.grid)
    try:
        out = open(args.out, "w", newline="") if args.out else sys.stdout
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CURVE_COLUMNS)
        for row in rows:
            writer.writerow(row.fields())
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_verify(args) -> int:
    passed = failed = 0
    for check in run_suite(args.suite):
        if check.ok:
            passed += 1
        else:
            failed += 1
        if not args.quiet or not check.ok:
            print(check.line(), flush=True)
    print(f"SUMMARY\t{args.suite}\tpassed={passed}\tfailed={failed}")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def _load(path: str) -> SetFamily:
    try:
        return read_setfam(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _save(F: SetFamily, path: str):
    try:
        write_setfam(F, path)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _save_text(text: str, path: str):
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _report_measures(F: SetFamily, G: SetFamily, p):
    if p is not None:
        before, after = measure(F, p), measure(G, p)
        print(f"measure before: {_show(before)}\nmeasure after: {_show(after)}")


def cmd_compress(args) -> int:
    F = _load(args.input)
    G, trace = left_compress(F)
    _save(G, args.output)
    if args.trace:
        _save_text(format_trace(trace), args.trace)
    print(f"shifts applied: {len(trace)}")
    _report_measures(F, G, args.p)
    return EXIT_OK


def _fmt_set(mask: int) -> str:
    return "{" + ",".join(map(str, elements_of(mask))) + "}"


def cmd_stabilize(args) -> int:
    F = _load(args.input)
    if not is_t_intersecting(F, args.t):
        raise UsageError(f"input family is not {args.t}-intersecting")
    G, steps = stabilize(F, args.t, trace=True)
    _save(G, args.output)
    if args.trace:
        _save_text("".join(f"{_fmt_set(a)} -> {_fmt_set(b)}\n" for a, b in steps), args.trace)
    ok = is_t_intersecting(G, args.t)
    print(f"heavy shifts applied: {len(steps)}")
    print(f"{args.t}-intersecting after: {'yes' if ok else 'no'}")
    _report_measures(F, G, args.p)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="akx", description="Exact weighted t-intersecting family toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("w", help="closed-form w(n,t,p)")
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--t", type=int, required=True)
    w.add_argument("--p", type=_fraction, required=True, help="NUM/DEN")
    w.set_defaults(func=cmd_w)

    table = sub.add_parser("table", help="CSV of w(n,t,p) curves")
    table.add_argument("--n", type=int, default=20)
    table.add_argument("--tmax", type=int, default=5)
    table.add_argument("--grid", type=int, default=200)
    table.add_argument("--out", default=None, help="output file (default stdout)")
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    verify.add_argument("--quiet", action="store_true", help="print failures and the summary only")
    verify.set_defaults(func=cmd_verify)

    for name, func, helptext in (("compress", cmd_compress, "left-compress a SETFAM file"),
                                 ("stabilize", cmd_stabilize, "heavy-shift a SETFAM file")):
        sp = sub.add_parser(name, help=helptext)
        if name == "stabilize":
            sp.add_argument("--t", type=int, required=True)
        sp.add_argument("--in", dest="input", required=True)
        sp.add_argument("--out", dest="output", required=True)
        sp.add_argument("--trace", default=None)
        sp.add_argument("--p", type=_fraction, default=None, help="report measures at NUM/DEN")
        sp.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, PreconditionError) as exc:
        print(f"akx {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
