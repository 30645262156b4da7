"""Command-line interface.

Subcommands:
  jdv        compute a graph's JDV and support size
  check      test a JDV file for graphicality
  identity   evaluate the degree-weighted edge sum against n - n0
  construct  emit a half graph or its augmentation in edge-list format
  bounds     per-n bound table (CSV)
  beta0      the continuous-relaxation boundary constant
  verify-f   optimum of the normalized support-density objective
  diagnose   per-graph diagnostics and inequality-chain report
  oracle     exhaustive maximum support for small n

File arguments accept '-' for standard input.  Exit status: 0 on
success (including negative verdicts), 1 on malformed or out-of-domain
input, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction

from .constructions import augmented_half_graph, half_graph
from .graph import Graph, format_edge_list, parse_edge_list
from .jdv import check_graphical, jdv_from_json, jdv_of, jdv_to_json, support, weighted_degree_sum
from .oracle import DEFAULT_CAP, max_support_exhaustive
from .relaxations import CSV_HEADER, bound_report, format_csv_row, solve_beta0
from .second_bound import constraint_residuals, diagnostics, maximize_f, verify_chain


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_graph(path: str) -> Graph:
    return parse_edge_list(_read_text(path))


def _fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _cmd_jdv(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph_file)
    j = jdv_of(g)
    sys.stdout.write(jdv_to_json(j, extra={"support_size": len(support(j))}))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    j = jdv_from_json(_read_text(args.jdv_file))
    verdict = check_graphical(j, strict_vertex_budget=args.strict)
    doc = {
        "graphical": verdict.graphical,
        "strict_vertex_budget": args.strict,
        "class_sizes": {str(i): c for i, c in sorted(verdict.class_sizes.items())},
        "violation": None,
    }
    if verdict.first_violation is not None:
        v = verdict.first_violation
        doc["violation"] = {
            "kind": v.kind.value,
            "i": v.i,
            "k": v.k,
            "detail": v.detail,
        }
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_identity(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph_file)
    total = weighted_degree_sum(jdv_of(g))
    n0 = sum(1 for d in g.degrees()[1:] if d == 0)
    expected = g.n - n0
    print(f"weighted_degree_sum = {_fraction_str(total)} = {float(total):.9f}")
    print(f"n - n0 = {expected} (n = {g.n}, n0 = {n0})")
    print(f"identity holds: {total == expected}")
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "half":
        g = half_graph(args.n)
    else:
        g = augmented_half_graph(args.n)
    sys.stdout.write(format_edge_list(g))
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    if args.n_min < 2 or args.n_max < args.n_min:
        raise ValueError(
            f"invalid range: need 2 <= n-min <= n-max, got {args.n_min}..{args.n_max}"
        )
    rows = [CSV_HEADER]
    summaries = []
    for n in range(args.n_min, args.n_max + 1):
        report = bound_report(n)
        rows.append(format_csv_row(report))
        summaries.append(
            f"n={n}: alpha_n = {_fraction_str(report.alpha_n)}"
            f" = {float(report.alpha_n):.9f},"
            f" half_graph_ratio = {_fraction_str(report.half_graph_ratio)}"
            f" = {float(report.half_graph_ratio):.9f}"
        )
    csv_text = "\n".join(rows) + "\n"
    if args.csv is not None:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(csv_text)
        for line in summaries:
            print(line)
        print(f"wrote {args.n_max - args.n_min + 1} rows to {args.csv}")
    else:
        sys.stdout.write(csv_text)
    return 0


def _cmd_beta0(args: argparse.Namespace) -> int:
    beta0 = solve_beta0(args.tol)
    constant = ((beta0 - 2.0) ** 2 - 2.0) / (beta0 * (beta0 - 2.0))
    print(f"beta0 = {beta0:.12f}")
    print(f"limit_constant = {constant:.12f}")
    return 0


def _cmd_verify_f(args: argparse.Namespace) -> int:
    opt = maximize_f(args.grid_step)
    doc = asdict(opt)
    doc["constraint_residuals"] = constraint_residuals(opt)
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_diagnose(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph_file)
    diag = diagnostics(g)
    report = verify_chain(g)
    doc = {
        "n": diag.n,
        "n0": diag.n0,
        "support_size": diag.support_size,
        "D": {str(i): d for i, d in sorted(diag.D.items())},
        "B": diag.B,
        "m": diag.m,
        "s": diag.s,
        "y": diag.y,
        "z_sq": diag.z_sq,
        "g_value": diag.g_value,
        "chain": [asdict(link) for link in report.links],
        "all_passed": report.all_passed,
    }
    if diag.n0 > 0:
        doc["warning"] = (
            f"{diag.n0} isolated vertices: census bound uses the actual "
            "multiples population (n - s - n0)"
        )
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    result = max_support_exhaustive(args.n, cap=args.cap)
    print(f"# n = {result.n}")
    print(f"# max_support = {result.max_support}")
    print(f"# graphs_scanned = {result.graphs_scanned}")
    print("# witness (lowest-bitmask maximizer):")
    sys.stdout.write(format_edge_list(result.witness))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jdvtools",
        description="Joint degree vector toolkit: graphicality, constructions, bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jdv", help="compute the JDV of a graph")
    p.add_argument("graph_file", help="edge-list file, or '-' for stdin")
    p.set_defaults(func=_cmd_jdv)

    p = sub.add_parser("check", help="test a JDV for graphicality")
    p.add_argument("jdv_file", help="JDV JSON file, or '-' for stdin")
    p.add_argument(
        "--strict",
        action="store_true",
        help="additionally require the classes to fit the declared vertex count",
    )
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("identity", help="degree-weighted edge sum vs n - n0")
    p.add_argument("graph_file", help="edge-list file, or '-' for stdin")
    p.set_defaults(func=_cmd_identity)

    p = sub.add_parser("construct", help="emit a lower-bound construction")
    p.add_argument("family", choices=["half", "augmented"])
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("bounds", help="per-n bound table (CSV)")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--csv", metavar="PATH", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("beta0", help="continuous-relaxation boundary constant")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=_cmd_beta0)

    p = sub.add_parser("verify-f", help="optimum of the normalized objective")
    p.add_argument("--grid-step", type=float, default=1e-3)
    p.set_defaults(func=_cmd_verify_f)

    p = sub.add_parser("diagnose", help="per-graph bound diagnostics")
    p.add_argument("graph_file", help="edge-list file, or '-' for stdin")
    p.set_defaults(func=_cmd_diagnose)

    p = sub.add_parser("oracle", help="exhaustive max support for small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
