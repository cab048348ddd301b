"""
Command line front end.

    bernoulli bern 12                   -> -691/2730
    bernoulli bern 0..20 --method zeta
    bernoulli sumpow 1000 10 --inclusive
    bernoulli frac 16 / bernoulli denom 16
    bernoulli series tan 7
    bernoulli irregular 300 --json

Exit status: 0 success, 1 computation failure, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from .engine import bernoulli_double_sum, bernoulli_recurrence, bernoulli_table
from .faulhaber import power_sum_exclusive, power_sum_inclusive
from .irregular import irregular_primes_up_to
from .numeric import format_rational
from .series import FunctionTag, series_coefficients
from .staudt_clausen import ReconstructionError, sc_denominator, sc_fractional_part
from .zeta import bernoulli_zeta

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    pass


def rational_json(q):
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _emit(args, text_lines, payload):
    if args.json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _parse_indices(text):
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            n = int(text)
            return n, n, False
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"malformed index or range: {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty range: {text!r}")
    return lo, hi, True


def cmd_bern(args):
    lo, hi, is_range = _parse_indices(args.index)
    if lo < 0:
        raise UsageError("index must be non-negative")
    indices = range(lo, hi + 1)
    if args.method == "zeta":
        bad = [n for n in indices if n < 2 or n % 2]
        if bad:
            raise UsageError(f"the zeta method needs even indices >= 2 (got {bad[0]})")
        values = [bernoulli_zeta(n) for n in indices]
    elif args.method == "double-sum":
        values = [bernoulli_double_sum(n) for n in indices]
    else:
        table = bernoulli_table(hi)
        values = [table[n] for n in indices]

    if is_range:
        text = [f"B_{n} = {format_rational(v)}" for n, v in zip(indices, values)]
        payload = [{"n": n, "value": rational_json(v)} for n, v in zip(indices, values)]
    else:
        text = [format_rational(values[0])]
        payload = {"n": lo, "value": rational_json(values[0])}
    _emit(args, text, payload)


def cmd_sumpow(args):
    if args.n < 0 or args.r < 0:
        raise UsageError("n and r must be non-negative")
    if args.inclusive:
        total = power_sum_inclusive(args.n, args.r)
    else:
        total = power_sum_exclusive(args.n, args.r)
    convention = "inclusive" if args.inclusive else "exclusive"
    _emit(
        args,
        [str(total)],
        {"n": args.n, "r": args.r, "convention": convention, "sum": str(total)},
    )


def _check_two_k(two_k):
    if two_k < 2 or two_k % 2:
        raise UsageError(f"index must be an even integer >= 2, got {two_k}")


def cmd_frac(args):
    _check_two_k(args.two_k)
    f = sc_fractional_part(args.two_k)
    _emit(args, [format_rational(f)], {"two_k": args.two_k, "frac": rational_json(f)})


def cmd_denom(args):
    _check_two_k(args.two_k)
    d = sc_denominator(args.two_k)
    _emit(args, [str(d)], {"two_k": args.two_k, "denominator": str(d)})


def cmd_series(args):
    try:
        tag = FunctionTag.parse(args.tag)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.max_order < 1:
        raise UsageError("max_order must be at least 1")
    coeffs = series_coefficients(tag, args.max_order)
    _emit(
        args,
        [f"x^{m} {format_rational(c)}" for m, c in coeffs],
        [{"order": m, "coeff": rational_json(c)} for m, c in coeffs],
    )


def cmd_irregular(args):
    if args.limit < 0:
        raise UsageError("limit must be non-negative")
    grouped = {}
    for pair in irregular_primes_up_to(args.limit, method=args.method):
        grouped.setdefault(pair.p, []).append(pair.index)
    _emit(
        args,
        [f"p={p} irregular indices=[{','.join(map(str, ix))}]" for p, ix in grouped.items()],
        [{"p": str(p), "indices": ix} for p, ix in grouped.items()],
    )


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="bernoulli", description="Exact Bernoulli-number toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("bern", cmd_bern, "Bernoulli number B_n, or a range a..b")
    p.add_argument("index", help="n or a..b")
    p.add_argument("--method", choices=["recurrence", "double-sum", "zeta"], default="recurrence")

    p = add("sumpow", cmd_sumpow, "exact power sum of k^r")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    conv = p.add_mutually_exclusive_group()
    conv.add_argument("--inclusive", action="store_true", help="sum k = 1..n")
    conv.add_argument("--exclusive", action="store_true", help="sum k = 1..n-1 (default)")

    p = add("frac", cmd_frac, "fractional part of B_2k (von Staudt-Clausen)")
    p.add_argument("two_k", type=int)

    p = add("denom", cmd_denom, "denominator of B_2k (von Staudt-Clausen)")
    p.add_argument("two_k", type=int)

    p = add("series", cmd_series, "expansion coefficients up to an order")
    p.add_argument("tag", help=", ".join(t.value for t in FunctionTag))
    p.add_argument("max_order", type=int)

    p = add("irregular", cmd_irregular, "irregular primes up to a limit")
    p.add_argument("limit", type=int)
    p.add_argument("--method", choices=["exact", "modular"], default="exact")
    return parser


def main(argv=None) -> int:
    try:
        sys.stdout.reconfigure(line_buffering=True)
    except AttributeError:  # replaced stdout, e.g. under capture
        pass
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except UsageError as exc:
        print(f"bernoulli: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ReconstructionError as exc:
        print(f"bernoulli: computation failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
