"""Command-line front end.

Commands: cf, path, ringgens, member, resolve, verify.  Output goes to
stdout (or --out) as text, JSON, or DOT.  Exit codes: 0 success, 1 usage
or parse error, 2 verification failure, 3 indecisive stream comparison.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .emit import (
    emit_dot,
    emit_json,
    format_path_text,
    format_trace_text,
    format_verify_text,
)
from .exactnum import CFStream, IndecisiveComparisonError, cf_expand, sqrt2_stream
from .expr import ExpressionError, parse_rational_function
from .laurent import ZeroPolynomialError
from .resolution import resolve
from .valring import ring_generators
from .valtree import positive_path
from .valuation import MonomialValuation
from .verify import run_verify


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad usage; this CLI reserves 2 for
    # verification failures, so route usage errors through an exception.
    def error(self, message):
        raise UsageError(message)


def parse_stream_spec(spec: str) -> CFStream:
    """Stream spec: 'sqrt2' or '<preperiod>;<period>' comma lists.

    Example: sqrt(3) is '1;1,2'.  Finite digit lists denote rationals and
    are rejected; an irrational stream needs its period.
    """
    spec = spec.strip()
    if spec == "sqrt2":
        return sqrt2_stream()
    if ";" not in spec:
        raise ValueError(
            f"stream spec {spec!r} has no period; use 'sqrt2' or 'pre;period' digit lists"
        )
    pre_s, per_s = spec.split(";", 1)
    try:
        pre = tuple(int(d) for d in pre_s.split(",") if d.strip())
        per = tuple(int(d) for d in per_s.split(",") if d.strip())
    except ValueError:
        raise ValueError(f"stream spec {spec!r} contains a non-integer digit")
    return CFStream.from_periodic(pre, per)


def _cmd_cf(args) -> tuple[str, int]:
    r = Fraction(args.rational)
    cf = cf_expand(r)
    if args.format == "json":
        return emit_json(cf), 0
    return f"{r} = {cf}\n", 0


def _cmd_path(args) -> tuple[str, int]:
    if args.stream is not None:
        if args.a is not None or args.b is not None:
            raise ValueError("give either a stream or integer values, not both")
        stream = parse_stream_spec(args.stream)
        nu = MonomialValuation.from_stream(stream)
        max_steps = args.max_steps if args.max_steps is not None else 64
        heading = f"positive path for {nu.describe()}:"
    else:
        if args.a is None or args.b is None:
            raise ValueError("need both a and b (or --stream)")
        nu = MonomialValuation.rational(args.a, args.b)
        max_steps = args.max_steps if args.max_steps is not None else args.a + args.b
        heading = f"positive path for nu(x) = {args.a}, nu(y) = {args.b}:"
    path = positive_path(nu, max_steps=max_steps)
    if args.format == "json":
        return emit_json(path), 0
    if args.format == "dot":
        return emit_dot(path), 0
    return format_path_text(path, heading), 0


def _cmd_ringgens(args) -> tuple[str, int]:
    pres = ring_generators(args.a, args.b)
    if args.format == "json":
        return emit_json(pres), 0
    lines = [
        f"a = {pres.a}, b = {pres.b}: p = {pres.p}, q = {pres.q}"
        f" ({pres.p}*{pres.a} - {pres.q}*{pres.b} = 1)",
        f"u = {pres.u} (value 0)",
        f"v = {pres.v} (value 1)",
        "valuation ring: k[u, v] localized at (v)",
    ]
    return "\n".join(lines) + "\n", 0


def _cmd_member(args) -> tuple[str, int]:
    rf = parse_rational_function(args.expression)
    nu = MonomialValuation.rational(args.a, args.b)
    if rf.is_zero:
        member, value = True, "infinity"
    else:
        value = nu.group.realize(nu(rf))
        member = value >= 0
    if args.format == "json":
        payload = {
            "a": args.a,
            "b": args.b,
            "expression": args.expression,
            "member": member,
            "value": str(value),
        }
        return emit_json(payload), 0
    verdict = "member of" if member else "not a member of"
    return (
        f"{args.expression.strip()}: {verdict} the valuation ring for "
        f"nu(x) = {args.a}, nu(y) = {args.b} (value {value})\n",
        0,
    )


def _cmd_resolve(args) -> tuple[str, int]:
    trace = resolve(args.a, args.b)
    if args.format == "json":
        return emit_json(trace), 0
    if args.format == "dot":
        return emit_dot(trace), 0
    return format_trace_text(trace, show_steps=args.trace), 0


def _cmd_verify(args) -> tuple[str, int]:
    report = run_verify(args.max)
    code = 0 if report.all_passed else 2
    if args.format == "json":
        return emit_json(report), code
    return format_verify_text(report), code


def build_parser() -> _Parser:
    parser = _Parser(prog="monoval", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", metavar="PATH", help="write output to a file")

    p = sub.add_parser("cf", help="continued fraction of a rational p/q")
    p.add_argument("rational", help="rational number, e.g. 24/7")
    add_common(p)
    p.set_defaults(func=_cmd_cf)

    p = sub.add_parser("path", help="positive path of a monomial valuation")
    p.add_argument("a", nargs="?", type=int, help="nu(x)")
    p.add_argument("b", nargs="?", type=int, help="nu(y)")
    p.add_argument("--stream", help="digit stream spec: 'sqrt2' or 'pre;period'")
    p.add_argument("--max-steps", type=int, dest="max_steps")
    add_common(p, formats=("text", "json", "dot"))
    p.set_defaults(func=_cmd_path)

    p = sub.add_parser("ringgens", help="valuation ring generators for nu(x)=a, nu(y)=b")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    add_common(p)
    p.set_defaults(func=_cmd_ringgens)

    p = sub.add_parser("member", help="valuation ring membership of an expression")
    p.add_argument("expression", help="expression in x and y, e.g. \"x^2 - y^3\"")
    p.add_argument("--a", type=int, required=True, help="nu(x)")
    p.add_argument("--b", type=int, required=True, help="nu(y)")
    add_common(p)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("resolve", help="blow-up resolution of x^b = y^a")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--trace", action="store_true", help="show every blow-up step")
    add_common(p, formats=("text", "json", "dot"))
    p.set_defaults(func=_cmd_resolve)

    p = sub.add_parser("verify", help="exhaustive checks over coprime pairs")
    p.add_argument("--max", type=int, required=True, help="largest a in the sweep")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        output, code = args.func(args)
    except IndecisiveComparisonError as exc:
        print(f"error: indecisive stream comparison: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError, ZeroPolynomialError, ExpressionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
