"""Command-line front end.

Weights are always entered as lambda+rho coordinates (comma-separated
integers, fractions a/b, or exact decimals).  Subcommands:

    gkdim         GK dimension of a simple highest weight sl(n)-module
    hermitian     su(p,q) report: m, second column, ball signature, orbit
    series        GK dimensions along integer shifts z of the first p entries
    unitary       unitarity thresholds, and the closed-form value at --z
    verify-oracle cross-check the Hecke a-function against the tableau rule

Exit codes: 0 success, 1 parse error, 2 domain error (with a JSON error
object on stdout).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from itertools import permutations as _all_one_lines

from . import hecke
from .dimension import GKReport, gk_dimension
from .errors import DomainError, ParseError
from .hermitian import gk_pq, gkdim_series, unitary_gkdim, unitary_interval
from .permutations import Permutation, a_value_of_permutation
from .weights import PQContext, parse_rational, parse_weight


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="gkdim",
        description="Exact GK dimensions of simple highest weight sl(n)-modules "
        "and su(p,q) Harish-Chandra modules (weights given as lambda+rho).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, pq=False, weight=True):
        if weight:
            p.add_argument("--weight", help="lambda+rho coordinates, comma-separated")
            p.add_argument(
                "--batch", action="store_true",
                help="read one weight per line from stdin, emit one JSON per line",
            )
        if pq:
            p.add_argument("--pq", required=True, help="p,q (positive integers)")
        p.add_argument(
            "--output", choices=("json", "pretty"), default="json",
        )

    add_common(sub.add_parser("gkdim", help="general sl(n) computation"))
    add_common(sub.add_parser("hermitian", help="su(p,q) computation"), pq=True)

    p_series = sub.add_parser("series", help="GK dimension along integer z")
    add_common(p_series, pq=True)
    p_series.add_argument("--z-range", required=True, help="z_from,z_to (integers)")

    p_unitary = sub.add_parser("unitary", help="unitarity interval and value")
    add_common(p_unitary, pq=True)
    p_unitary.add_argument("--z", help="evaluation point (rational)")

    p_oracle = sub.add_parser(
        "verify-oracle", help="compare the Hecke a-function with the tableau rule"
    )
    p_oracle.add_argument("--rank", type=int, default=4)
    p_oracle.add_argument("--output", choices=("json", "pretty"), default="json")

    return parser


def _parse_pq(text: str) -> PQContext:
    try:
        p_str, q_str = text.split(",")
        return PQContext(int(p_str), int(q_str))
    except (ValueError, TypeError):
        raise ParseError(f"expected p,q with positive integers: {text!r}") from None


def _parse_z_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(t) for t in text.split(","))
        return lo, hi
    except (ValueError, TypeError):
        raise ParseError(f"expected z_from,z_to integers: {text!r}") from None


def _pretty_gk(report: GKReport) -> str:
    lines = [
        f"n = {report.n}   nu0 = {report.nu0}   integral = {report.integral}",
        f"a-value = {report.a_value}   GK dimension = {report.gk_dimension}",
    ]
    for cls, tab in zip(report.classes, report.tableaux):
        lines.append(f"class at positions {list(cls.indices)}:")
        lines.extend("  " + row for row in tab.pretty().splitlines())
    return "\n".join(lines)


def _pretty_hermitian(report) -> str:
    lines = [
        f"p = {report.p}   q = {report.q}   integral = {report.integral}",
        f"m = {report.m}   GK dimension = {report.gk_dimension}",
        f"orbit index = {report.orbit_index}   "
        f"orbit dimension = {report.orbit_dimension}",
    ]
    if report.second_column is not None:
        lines.append(
            "second column (top to bottom): "
            + ", ".join(str(e) for e in report.second_column)
        )
    if report.xi is not None:
        lines.append(f"ball signature = {report.xi.runs}")
    return "\n".join(lines)


def _emit(obj: dict, pretty: str, output: str) -> None:
    if output == "json":
        print(json.dumps(obj))
    else:
        print(pretty)


def _run_weight_command(args, compute) -> int:
    """Dispatch one weight or batch lines through `compute(weight) -> None`."""
    if args.batch:
        if args.weight is not None:
            raise ParseError("--batch and --weight are mutually exclusive")
        worst = 0
        for line in sys.stdin:
            line = line.strip()
            if not line:
                continue
            try:
                compute(parse_weight(line))
            except ParseError as exc:
                print(json.dumps({"error": {"code": "parse-error",
                                            "message": str(exc)}}))
                worst = max(worst, 1)
            except DomainError as exc:
                print(json.dumps({"error": exc.to_json()}))
                worst = 2
        return worst
    if args.weight is None:
        raise ParseError("--weight is required (or use --batch)")
    compute(parse_weight(args.weight))
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)

        if args.command == "gkdim":
            def compute(w):
                report = gk_dimension(w)
                _emit(report.to_json(), _pretty_gk(report), args.output)
            return _run_weight_command(args, compute)

        if args.command == "hermitian":
            ctx = _parse_pq(args.pq)

            def compute(w):
                report = gk_pq(w, ctx)
                _emit(report.to_json(), _pretty_hermitian(report), args.output)
            return _run_weight_command(args, compute)

        if args.command == "series":
            ctx = _parse_pq(args.pq)
            z_from, z_to = _parse_z_range(args.z_range)

            def compute(w):
                series = gkdim_series(w, ctx, z_from, z_to)
                obj = {
                    "p": ctx.p,
                    "q": ctx.q,
                    "series": [{"z": z, "gk_dimension": g} for z, g in series],
                }
                pretty = "\n".join(f"z = {z}: GK dimension = {g}" for z, g in series)
                _emit(obj, pretty, args.output)
            return _run_weight_command(args, compute)

        if args.command == "unitary":
            ctx = _parse_pq(args.pq)

            def compute(w):
                interval = unitary_interval(w, ctx)
                obj = interval.to_json()
                lines = [
                    f"p' = {interval.p_prime}   q' = {interval.q_prime}",
                    f"unitary for real z <= {interval.threshold_real} "
                    f"and integer z <= {interval.threshold_int}",
                ]
                if args.z is not None:
                    z = parse_rational(args.z)
                    obj["z"] = str(z)
                    obj["gk_dimension"] = unitary_gkdim(w, ctx, z)
                    lines.append(f"GK dimension at z = {z}: {obj['gk_dimension']}")
                _emit(obj, "\n".join(lines), args.output)
            return _run_weight_command(args, compute)

        if args.command == "verify-oracle":
            results = []
            for n in range(1, args.rank + 1):
                bad = []
                for ol in _all_one_lines(range(1, n + 1)):
                    sigma = Permutation(ol)
                    lhs = hecke.a_function_definitional(sigma, rank_bound=args.rank)
                    rhs = a_value_of_permutation(sigma)
                    if lhs != rhs:
                        bad.append(list(ol))
                results.append(
                    {"n": n, "checked": math.factorial(n), "discrepancies": bad}
                )
            ok = all(not r["discrepancies"] for r in results)
            if args.output == "json":
                print(json.dumps({"ok": ok, "ranks": results}))
            else:
                for r in results:
                    status = "ok" if not r["discrepancies"] else "MISMATCH"
                    print(f"n = {r['n']}: {r['checked']} elements, {status}")
            return 0 if ok else 2

        raise ParseError(f"unknown command {args.command!r}")
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(json.dumps({"error": exc.to_json()}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
