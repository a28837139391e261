"""Command-line interface.

Subcommands: ``validate``, ``centrality``, ``index``, ``allocate``,
``check``. Exit codes: 0 success, 1 domain error or violated property,
2 unreadable or malformed input. Output is deterministic for identical
inputs and flags. The environment variable ``SYMBICOST_ENUM_LIMIT``
overrides the enumeration limits used by ``--exact``, ``--with-checks``
and ``check``.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from fractions import Fraction

from .allocation import (
    DEFAULT_PRECISION,
    InvalidTransactionCost,
    allocate,
    render_report_table,
    report_to_json,
)
from .document import GraphDocumentError, load_graph
from .games import AggregationWeights, make_game
from .graph import GraphValidationError, SymbiosisGraph
from .rational import parse_rational, render_decimal
from .shapley import (
    EnumerationLimitExceeded,
    symbiosis_index,
    symbiosis_index_by_enumeration,
)
from .verify import (
    EXHAUSTIVE_LIMIT,
    FAIRNESS_LIMIT,
    InfeasibleSpec,
    RandomGraphSpec,
    check_convexity,
    check_core,
    check_fairness_axioms,
    check_monotonicity,
    check_stability,
    check_superadditivity,
    random_graph,
)

ENUM_LIMIT_ENV = "SYMBICOST_ENUM_LIMIT"

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2


class _InputError(Exception):
    pass


def _enum_limit(default: int) -> int:
    raw = os.environ.get(ENUM_LIMIT_ENV)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise _InputError(f"{ENUM_LIMIT_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise _InputError(f"{ENUM_LIMIT_ENV} must be positive, got {value}")
    return value


def _parse_flag_rational(label: str, raw: str) -> Fraction:
    try:
        return parse_rational(raw)
    except (ValueError, TypeError) as exc:
        raise _InputError(f"{label}: {exc}") from None


def _weights_from_args(args) -> AggregationWeights:
    alpha = _parse_flag_rational("--alpha", args.alpha)
    beta = _parse_flag_rational("--beta", args.beta)
    try:
        return AggregationWeights(alpha, beta)
    except ValueError as exc:
        raise _InputError(str(exc)) from None


def _format_table(headers, rows) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _cmd_validate(args) -> int:
    graph = load_graph(args.path)
    print(f"ok: valid symbiosis graph with {graph.firm_count} firms, {len(graph.edges)} edges")
    return EXIT_OK


def _cmd_centrality(args) -> int:
    graph = load_graph(args.path)
    rows = [
        (firm, str(c), render_decimal(c, 4))
        for firm, c in zip(graph.firms, graph.closeness)
    ]
    print(_format_table(("firm", "closeness", "decimal"), rows))
    return EXIT_OK


def _cmd_index(args) -> int:
    graph = load_graph(args.path)
    weights = _weights_from_args(args)
    index = symbiosis_index(graph, weights)
    rows = [
        (firm, str(p), str(q), str(s))
        for firm, p, q, s in zip(index.firms, index.physical, index.institutional, index.sigma)
    ]
    print(_format_table(("firm", "physical", "institutional", "sigma"), rows))
    if args.exact:
        oracle = symbiosis_index_by_enumeration(graph, weights, _enum_limit(20))
        if oracle != index:
            print("oracle: MISMATCH between closed form and enumeration")
            return EXIT_DOMAIN
        print("oracle: match")
    return EXIT_OK


def _cmd_allocate(args) -> int:
    graph = load_graph(args.path)
    weights = _weights_from_args(args)
    tau = _parse_flag_rational("--tc", args.tc)
    report = allocate(graph, tau, weights, precision=args.precision)
    if args.with_checks:
        limit = _enum_limit(EXHAUSTIVE_LIMIT)
        stability = check_stability(report, limit)
        core = check_core(make_game(graph, "aggregated", weights), report.index.sigma, limit)
        report = dataclasses.replace(report, axiom_summary=(stability, core))
    if args.format == "json":
        print(report_to_json(report))
    else:
        print(render_report_table(report))
    if args.with_checks and not all(c.holds for c in report.axiom_summary):
        return EXIT_DOMAIN
    return EXIT_OK


def _check_rows(graph: SymbiosisGraph, suite: str, tau, weights, seed: int):
    """(game, report) rows for one graph under the selected suite."""
    exhaustive = _enum_limit(EXHAUSTIVE_LIMIT)
    fairness = _enum_limit(FAIRNESS_LIMIT)
    rows = []
    if suite in ("all", "game-properties"):
        for kind in ("physical", "institutional", "aggregated"):
            game = make_game(graph, kind, weights)
            rows.append((kind, check_monotonicity(game, exhaustive)))
            rows.append((kind, check_superadditivity(game, exhaustive)))
            equality = kind == "institutional"
            rows.append((kind, check_convexity(game, exhaustive, require_equality=equality)))
    if suite in ("all", "core"):
        index = symbiosis_index(graph, weights)
        game = make_game(graph, "aggregated", weights)
        rows.append(("aggregated", check_core(game, index.sigma, exhaustive)))
    if suite in ("all", "axioms"):
        for report in check_fairness_axioms(
            graph, tau, weights, partner_seed=seed, limit=fairness
        ):
            rows.append(("-", report))
        rows.append(("-", check_stability(allocate(graph, tau, weights), exhaustive)))
    return rows


def _cmd_check(args) -> int:
    weights = _weights_from_args(args)
    tau = _parse_flag_rational("--tc", args.tc)
    density = _parse_flag_rational("--density", args.density)
    graphs: list[tuple[str, SymbiosisGraph]] = []
    if args.path:
        graphs.append(("input", load_graph(args.path)))
    for k in range(args.trials):
        n = args.firms if args.firms else 3 + k % 5
        spec = RandomGraphSpec(n, density, seed=args.seed + k)
        graphs.append((f"seed={spec.seed}", random_graph(spec)))
    if not graphs:
        raise _InputError("nothing to check: give a graph document path or --trials N")

    results = []
    for label, graph in graphs:
        for game_label, report in _check_rows(graph, args.suite, tau, weights, args.seed):
            results.append((label, game_label, report))
    all_hold = all(report.holds for _, _, report in results)

    if args.format == "json":
        payload = {
            "suite": args.suite,
            "results": [
                {"graph": label, "game": game_label, "report": report.to_json_dict()}
                for label, game_label, report in results
            ],
            "all_hold": all_hold,
        }
        print(json.dumps(payload, indent=2))
    else:
        rows = [
            (
                label,
                game_label,
                report.name,
                "holds" if report.holds else "VIOLATED",
                str(report.instances_checked),
            )
            for label, game_label, report in results
        ]
        print(_format_table(("graph", "game", "property", "result", "instances"), rows))
        if not all_hold:
            for label, game_label, report in results:
                if not report.holds and report.counterexample is not None:
                    c = report.counterexample
                    print(
                        f"counterexample [{label}/{game_label}/{report.name}]: "
                        f"coalitions {list(map(list, c.coalitions))} "
                        f"claimed {c.lhs} {c.relation} {c.rhs}"
                    )
    return EXIT_OK if all_hold else EXIT_DOMAIN


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symbicost",
        description="Exact transaction-cost allocation over symbiosis networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a graph document")
    p.add_argument("path")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("centrality", help="closeness centrality per firm")
    p.add_argument("path")
    p.set_defaults(handler=_cmd_centrality)

    p = sub.add_parser("index", help="per-firm symbiosis index")
    p.add_argument("path")
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", default="1")
    p.add_argument("--exact", action="store_true", help="cross-check with brute-force Shapley")
    p.set_defaults(handler=_cmd_index)

    p = sub.add_parser("allocate", help="allocate a transaction cost across firms")
    p.add_argument("path")
    p.add_argument("--tc", required=True, help="total transaction cost (rational)")
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", default="1")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--with-checks", action="store_true", dest="with_checks")
    p.set_defaults(handler=_cmd_allocate)

    p = sub.add_parser("check", help="run property and axiom checkers")
    p.add_argument("path", nargs="?")
    p.add_argument(
        "--suite",
        choices=("all", "game-properties", "axioms", "core"),
        default="all",
    )
    p.add_argument("--tc", default="100")
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", default="1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=0, help="number of random graphs to generate")
    p.add_argument("--firms", type=int, default=None, help="firm count for random graphs")
    p.add_argument("--density", default="0.6", help="edge density for random graphs")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(handler=_cmd_check)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except GraphDocumentError as exc:
        for problem in exc.problems:
            print(f"parse error: {problem}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GraphValidationError as exc:
        for violation in exc.violations:
            print(str(violation))
        return EXIT_DOMAIN
    except InvalidTransactionCost as exc:
        print(f"InvalidTransactionCost: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except EnumerationLimitExceeded as exc:
        print(f"EnumerationLimitExceeded: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InfeasibleSpec as exc:
        print(f"InfeasibleSpec: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
