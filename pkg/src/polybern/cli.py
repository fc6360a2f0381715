"""Command-line interface: sequence tables, identity verification, series eval.

Commands
    polybern table  --kind <sequence> -n <n_max> [flags]   exact value tables
    polybern verify --identity <name> --n-max <int> [...]  identity checking
    polybern eval   --expr <text> --order <int> [--egf]    series coefficients

Exit codes: 0 success/pass, 1 verification or evaluation failure, 2 usage
error. All values are printed as exact rationals ("p/q" or an integer),
never as floats.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bernoulli, polybernoulli
from .combinatorics import stirling1, stirling2
from .expr import ParseError, eval_expr, parse_expr

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def _parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text.strip()):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text.strip())


def _parse_k_range(text: str) -> list[int]:
    text = text.strip()
    m = re.match(r"^(-?\d+)\.\.(-?\d+)$", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise ValueError(f"empty k range: {text!r}")
        return list(range(lo, hi + 1))
    if re.match(r"^-?\d+$", text):
        return [int(text)]
    raise ValueError(f"not an integer or a..b range: {text!r}")


@dataclass
class SequenceTable:
    """One emitted sequence: name, parameters, and (index, value) entries."""

    sequence: str
    params: dict[str, str]
    entries: list[tuple[int, str]]

    def to_csv(self) -> str:
        lines = ["n,value"]
        lines.extend(f"{n},{value}" for n, value in self.entries)
        return "\n".join(lines)

    def to_json(self) -> str:
        payload = {
            "sequence": self.sequence,
            "params": self.params,
            "entries": [{"n": n, "value": value} for n, value in self.entries],
        }
        return json.dumps(payload, indent=2)


def _merge_value_flags(argv: list[str]) -> list[str]:
    # argparse cannot tokenize values like "-3..3" after --k/--x; fold them
    # into --k=-3..3 form before parsing.
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--k", "--x") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polybern",
        description="Exact Bernoulli-family sequence tables and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit a sequence table (CSV or JSON)")
    table.add_argument(
        "--kind",
        required=True,
        choices=[
            "bernoulli",
            "bernoulli2nd",
            "poly2nd",
            "stirling1",
            "stirling2",
            "higher-order",
        ],
    )
    table.add_argument("-n", "--n-max", type=int, required=True, dest="n_max")
    table.add_argument("-k", type=int, default=None, help="polylog order (poly2nd only)")
    table.add_argument("--x", default=None, help="evaluation point, rational literal p/q")
    table.add_argument("--l", type=int, default=None, dest="l", help="triangle column (stirling kinds)")
    table.add_argument("--convention", choices=["egf", "ogf"], default=None)
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="check a built-in identity exactly")
    verify.add_argument(
        "--identity",
        required=True,
        choices=sorted(polybernoulli.IDENTITIES),
    )
    verify.add_argument("--n-max", type=int, required=True, dest="n_max")
    verify.add_argument("--k", default=None, help="int or a..b range")
    verify.add_argument("--x", default=None, help="comma list of rationals")
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.set_defaults(func=cmd_verify)

    ev = sub.add_parser("eval", help="evaluate a series expression in t")
    ev.add_argument("--expr", required=True)
    ev.add_argument("--order", type=int, required=True)
    ev.add_argument("--egf", action="store_true", help="print n!*c_n instead of raw c_n")
    ev.set_defaults(func=cmd_eval)

    return parser


def _table_values(args, parser: argparse.ArgumentParser):
    kind = args.kind
    n_max = args.n_max
    params: dict[str, str] = {}

    if args.k is not None and kind != "poly2nd":
        parser.error("-k applies to --kind poly2nd only")
    if args.l is not None and kind not in ("stirling1", "stirling2"):
        parser.error("--l applies to stirling kinds only")
    if args.convention is not None and kind != "bernoulli2nd":
        parser.error("--convention applies to --kind bernoulli2nd only")
    if args.x is not None and kind in ("stirling1", "stirling2"):
        parser.error("--x does not apply to stirling kinds")

    x = None
    if args.x is not None:
        try:
            x = _parse_rational(args.x)
        except ValueError as exc:
            parser.error(str(exc))

    if kind == "bernoulli":
        if x is None:
            values = bernoulli.bernoulli_numbers(n_max)
        else:
            params["x"] = str(x)
            values = [
                bernoulli.higher_order_bernoulli_poly(n, 1, x) for n in range(n_max + 1)
            ]
    elif kind == "bernoulli2nd":
        convention = args.convention or "egf"
        params["convention"] = convention
        if x is not None:
            params["x"] = str(x)
            values = [bernoulli.bernoulli2nd_poly(n)(x) for n in range(n_max + 1)]
        else:
            values = bernoulli.bernoulli2nd_numbers(n_max)
        if convention == "ogf":
            values = [v / math.factorial(n) for n, v in enumerate(values)]
    elif kind == "poly2nd":
        if args.k is None:
            parser.error("--kind poly2nd requires -k")
        params["k"] = str(args.k)
        point = x if x is not None else Fraction(0)
        params["x"] = str(point)
        values = [r.value for r in polybernoulli.poly_b2nd_gf(n_max, args.k, point)]
    elif kind in ("stirling1", "stirling2"):
        if args.l is None:
            parser.error(f"--kind {kind} requires --l (triangle column)")
        params["l"] = str(args.l)
        fn = stirling1 if kind == "stirling1" else stirling2
        values = [fn(n, args.l) for n in range(n_max + 1)]
    else:  # higher-order
        point = x if x is not None else Fraction(0)
        params["x"] = str(point)
        values = [
            bernoulli.higher_order_bernoulli_poly(n, n, point) for n in range(n_max + 1)
        ]

    return SequenceTable(kind, params, [(n, str(v)) for n, v in enumerate(values)])


def cmd_table(args, parser: argparse.ArgumentParser) -> int:
    if args.n_max < 0:
        parser.error("--n-max must be >= 0")
    table = _table_values(args, parser)
    print(table.to_csv() if args.format == "csv" else table.to_json())
    return 0


def _report_text(report: polybernoulli.VerificationReport) -> str:
    lines = [f"identity: {report.identity}"]
    lines.append(
        "range: " + "; ".join(f"{k}={v}" for k, v in report.range_spec.items())
    )
    lines.append(f"points checked: {report.total}")
    lines.append(f"status: {report.status.upper()}")
    if not report.passed:
        first = report.first_counterexample
        point = ", ".join(f"{k}={v}" for k, v in first["params"].items())
        lines.append(f"failures: {len(report.failures)} of {report.total}")
        lines.append(f"first counterexample: {point}")
        lines.append(f"  lhs: {first['lhs']}")
        lines.append(f"  rhs: {first['rhs']}")
    return "\n".join(lines)


def _report_json(report: polybernoulli.VerificationReport) -> str:
    return json.dumps(
        {
            "identity": report.identity,
            "range": report.range_spec,
            "points": report.total,
            "status": report.status,
            "failures": report.failures,
            "checked": report.checked,
        },
        indent=2,
    )


def cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    ks = None
    xs = None
    try:
        if args.k is not None:
            ks = _parse_k_range(args.k)
        if args.x is not None:
            xs = [_parse_rational(part) for part in args.x.split(",") if part.strip()]
            if not xs:
                raise ValueError("--x needs at least one rational")
    except ValueError as exc:
        parser.error(str(exc))
    try:
        report = polybernoulli.verify_identity(args.identity, args.n_max, ks, xs)
    except ValueError as exc:
        parser.error(str(exc))
    print(_report_text(report) if args.format == "text" else _report_json(report))
    return 0 if report.passed else 1


def cmd_eval(args, parser: argparse.ArgumentParser) -> int:
    if args.order < 0:
        parser.error("--order must be >= 0")
    try:
        series = eval_expr(parse_expr(args.expr), args.order)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for n, c in enumerate(series.coeffs):
        value = math.factorial(n) * c if args.egf else c
        print(f"{n}: {value}")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_value_flags(argv))
        return args.func(args, parser)
    except SystemExit as exc:  # argparse usage errors and --help
        code = exc.code
        return code if isinstance(code, int) else 2
