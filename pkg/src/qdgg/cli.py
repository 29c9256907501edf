"""Batch command line: build family graphs, verify identities, export.

Subcommands: build | verify | identity-table | export.  Exit codes:
0 all good, 1 at least one check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .fibonacci import (
    check_path_tableau_identity,
    check_reflection_agreement,
    fib_graphs,
    fib_words,
    word_key,
)
from .graded_graph import (
    QDGGPair,
    check_mixed_all,
    check_path_product_identity,
    check_specialization,
    pair_to_dict,
    path_gf_table,
    verify_qweyl,
)
from .permutations import check_inversion_identities, perm_graphs
from .qpoly import ZERO, q_factorial
from .report import CheckReport
from .reflection import build_by_reflection
from .tableaux import check_insertion_path_weights, tab_graphs
from .trees import check_extension_path_identity, tree_graphs

FAMILIES = ("fib", "perm", "tab", "tree", "reflect")
HEIGHT_GUARDS = {"fib": 14, "reflect": 14, "perm": 8, "tab": 8, "tree": 10}
CHECK_NAMES = ("qweyl", "theorem1", "mixed", "family-lemma", "q1", "qminus1")


class UsageError(Exception):
    pass


def build_family(family: str, r: int, height: int) -> QDGGPair:
    if family == "fib":
        return fib_graphs(r, height)
    if family == "reflect":
        return build_by_reflection(r, height)
    if family == "perm":
        return perm_graphs(height)
    if family == "tab":
        return tab_graphs(height)
    if family == "tree":
        return tree_graphs(height)
    raise UsageError(f"unknown family {family!r}")


def guard_height(family: str, height: int, force: bool) -> None:
    cap = HEIGHT_GUARDS[family]
    env = os.environ.get("QDGG_MAX_HEIGHT")
    if env is not None:
        try:
            cap = int(env)
        except ValueError:
            raise UsageError(f"QDGG_MAX_HEIGHT must be an integer, got {env!r}")
    if height > cap and not force:
        raise UsageError(
            f"height {height} exceeds the {family} guard of {cap}; "
            f"pass --force or set QDGG_MAX_HEIGHT"
        )


def applicable_checks(family: str, r: int) -> list[str]:
    checks = ["qweyl", "theorem1", "mixed", "q1", "qminus1"]
    if family != "fib" or r == 1:
        checks.append("family-lemma")
    return checks


def run_checks(family: str, r: int, pair: QDGGPair, checks: list[str]) -> CheckReport:
    report = CheckReport(f"{family} verification")
    height = pair.height
    for check in checks:
        if check == "qweyl":
            report.extend(verify_qweyl(pair, height - 1))
        elif check == "theorem1":
            for n in range(height + 1):
                report.extend(check_path_product_identity(pair, n))
        elif check == "mixed":
            report.extend(check_mixed_all(pair, height))
        elif check == "q1":
            report.extend(check_specialization(pair, 1, height - 1))
        elif check == "qminus1":
            report.extend(check_specialization(pair, -1, height - 1))
        elif check == "family-lemma":
            report.extend(family_lemma(family, r, pair))
        else:
            raise UsageError(f"unknown check {check!r}")
    return report


def family_lemma(family: str, r: int, pair: QDGGPair) -> CheckReport:
    height = pair.height
    if family == "fib":
        if r != 1:
            raise UsageError("the fib family-lemma check is defined for r = 1 only")
        report = CheckReport("fib family-lemma")
        for n in range(height + 1):
            for w in fib_words(1, n):
                report.extend(check_path_tableau_identity(w, pair))
        return report
    if family == "perm":
        report = CheckReport("perm family-lemma")
        for n in range(height + 1):
            report.extend(check_inversion_identities(n, pair))
        return report
    if family == "tab":
        report = CheckReport("tab family-lemma")
        for n in range(height + 1):
            report.extend(check_insertion_path_weights(n, pair))
        return report
    if family == "tree":
        report = CheckReport("tree family-lemma")
        for n in range(height + 1):
            report.extend(check_extension_path_identity(n, pair))
        return report
    if family == "reflect":
        return check_reflection_agreement(r, height, reflected=pair)
    raise UsageError(f"unknown family {family!r}")


def pair_to_dot(pair: QDGGPair) -> str:
    """Both graphs in one digraph: gamma solid, gamma_prime dashed."""

    def node_id(level: int, index: int) -> str:
        return f"v{level}_{index}"

    def label(key: str) -> str:
        return (key or "∅").replace('"', '\\"')

    lines = ["digraph qdgg {", "  rankdir=BT;"]
    for level, keys in enumerate(pair.levels):
        for index, key in enumerate(keys):
            lines.append(f'  {node_id(level, index)} [label="{label(key)}"];')
    for style, graph in (("solid", pair.gamma), ("dashed", pair.gamma_prime)):
        for i in range(pair.height):
            for src, dst, w in graph.edges(i):
                lines.append(
                    f'  {node_id(i, src)} -> {node_id(i + 1, dst)} '
                    f'[style={style}, label="{w}"];'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _print_report(report: CheckReport) -> None:
    rows = [("check", "where", "expected", "actual", "pass")]
    for row in report.rows:
        rows.append((row.check, row.where, row.expected, row.actual, "yes" if row.passed else "NO"))
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    for r in rows:
        print("  ".join(col.ljust(w) for col, w in zip(r, widths)).rstrip())
    print(report.summary())


def _add_common(sub: argparse.ArgumentParser, with_height: bool = True) -> None:
    sub.add_argument("--family", required=True, choices=FAMILIES)
    sub.add_argument("--r", type=int, default=None, help="differential coefficient (fib/reflect only)")
    if with_height:
        sub.add_argument("--height", type=int, required=True)
    sub.add_argument("--force", action="store_true", help="bypass the desk-scale height guard")


def _resolve_r(args) -> int:
    if args.family in ("fib", "reflect"):
        r = 1 if args.r is None else args.r
        if r < 1:
            raise UsageError("--r must be a positive integer")
        return r
    if args.r is not None:
        raise UsageError(f"--r is not meaningful for the {args.family} family")
    return 1


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="qdgg",
        description="Exact computations on pairs of graded graphs satisfying D'U - qUD' = rI.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a family pair and write JSON (and DOT)")
    _add_common(p_build)
    p_build.add_argument("--out", help="JSON output path (default stdout)")
    p_build.add_argument("--dot", help="also write a DOT rendering to this path")

    p_verify = sub.add_parser("verify", help="run exact identity checks on a family pair")
    _add_common(p_verify)
    p_verify.add_argument(
        "--checks",
        help=f"comma-separated subset of {','.join(CHECK_NAMES)} (default: all applicable)",
    )
    p_verify.add_argument("--out", help="write the machine-readable report (JSON) here")

    p_table = sub.add_parser("identity-table", help="tabulate the factorial identity as CSV")
    _add_common(p_table, with_height=False)
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--out", help="CSV output path (default stdout)")

    p_export = sub.add_parser("export", help="export a family pair as DOT or JSON")
    _add_common(p_export)
    p_export.add_argument("--format", choices=("dot", "json"), default="dot")
    p_export.add_argument("--out", help="output path (default stdout)")

    args = parser.parse_args(argv)
    try:
        r = _resolve_r(args)
        if args.command == "build":
            guard_height(args.family, args.height, args.force)
            pair = build_family(args.family, r, args.height)
            _write(json.dumps(pair_to_dict(pair), sort_keys=True, separators=(",", ":")) + "\n", args.out)
            if args.dot:
                _write(pair_to_dot(pair), args.dot)
            return 0
        if args.command == "verify":
            guard_height(args.family, args.height, args.force)
            if args.checks:
                checks = [c.strip() for c in args.checks.split(",") if c.strip()]
                for c in checks:
                    if c not in CHECK_NAMES:
                        raise UsageError(f"unknown check {c!r}; choose from {','.join(CHECK_NAMES)}")
            else:
                checks = applicable_checks(args.family, r)
            pair = build_family(args.family, r, args.height)
            report = run_checks(args.family, r, pair, checks)
            _print_report(report)
            if args.out:
                _write(json.dumps(report.to_rows(), indent=2) + "\n", args.out)
            return 0 if report.passed else 1
        if args.command == "identity-table":
            guard_height(args.family, args.n_max, args.force)
            pair = build_family(args.family, r, args.n_max)
            gf = path_gf_table(pair.gamma)
            gf_prime = path_gf_table(pair.gamma_prime)
            rows = []
            for n in range(args.n_max + 1):
                lhs = ZERO
                for a, b in zip(gf[n], gf_prime[n]):
                    lhs = lhs + a * b
                rhs = q_factorial(n) * (pair.r**n)
                rows.append((n, str(lhs), str(rhs), str(lhs == rhs).lower()))
            buf = io.StringIO()
            writer = csv.writer(buf)
            writer.writerow(["n", "lhs", "rhs", "equal"])
            writer.writerows(rows)
            _write(buf.getvalue(), args.out)
            return 0
        if args.command == "export":
            guard_height(args.family, args.height, args.force)
            pair = build_family(args.family, r, args.height)
            if args.format == "dot":
                _write(pair_to_dot(pair), args.out)
            else:
                _write(
                    json.dumps(pair_to_dict(pair), sort_keys=True, separators=(",", ":")) + "\n",
                    args.out,
                )
            return 0
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
