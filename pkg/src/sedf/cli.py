"""Command-line front end.

Subcommands: verify, solve, kmn, lgraph, counterexample, bounds, elementary.
Output is line-oriented ``key: value`` text, or one JSON object with --json.
Exit codes: 0 success, 1 constraint violation (e.g. the labeling is not an
SEDF), 2 usage or parse error, 3 search budget exhausted.  Errors go to
stderr as ``error: <Code>: <message>``.  The environment variable
SEDF_MAX_NODES overrides the default search budget when --budget is absent.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import fileio
from .bounds import (
    DEFAULT_ELEMENTARY_MAX_NODES,
    elementary_lower_bound,
    g_bounds,
    max_elementary_subgraph,
    order_lower_bound,
)
from .constructions import (
    CONSTRUCTION_IDS,
    construction_weight,
    counterexample,
    kmn_case,
    kmn_construction,
    kmn_sedn,
    kmn_witness,
    l_graph,
    l_graph_params,
    l_graph_sedf,
)
from .domination import (
    DEFAULT_MAX_NODES,
    edge_domination_sum,
    exact_sedn,
    is_sedf,
    labeling_weight,
)
from .errors import FormatError, SedfError
from .graph import vertex_connectivity_at_least

EXIT_OK = 0
EXIT_CONSTRAINT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class Report:
    """Ordered key/value output, rendered as text lines or one JSON object."""

    def __init__(self, json_mode: bool):
        self.json_mode = json_mode
        self.items: list[tuple[str, object]] = []

    def add(self, key: str, value: object) -> None:
        self.items.append((key, value))

    @staticmethod
    def _text(value: object) -> str:
        if isinstance(value, bool):
            return "yes" if value else "no"
        return str(value)

    @staticmethod
    def _jsonable(value: object) -> object:
        if isinstance(value, Fraction):
            return str(value)
        if isinstance(value, (list, tuple)):
            return [Report._jsonable(v) for v in value]
        if isinstance(value, dict):
            return {k: Report._jsonable(v) for k, v in value.items()}
        return value

    def emit(self) -> None:
        if self.json_mode:
            json.dump({k: self._jsonable(v) for k, v in self.items}, sys.stdout)
            sys.stdout.write("\n")
            return
        for key, value in self.items:
            if isinstance(value, (list, dict)):
                continue  # structured extras are JSON-only
            print(f"{key}: {self._text(value)}")


def _budget(args: argparse.Namespace, fallback: int) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("SEDF_MAX_NODES")
    if env is None:
        return fallback
    try:
        return int(env)
    except ValueError:
        raise FormatError(f"SEDF_MAX_NODES must be an integer, got {env!r}")


def _cmd_verify(args: argparse.Namespace) -> int:
    g = fileio.read_graph(args.graph)
    f = fileio.read_labeling(g, args.labeling)
    rep = Report(args.json)
    sums = []
    ok = True
    for i, e in enumerate(g.edges):
        s = edge_domination_sum(g, f, i)
        sums.append({"u": e.u, "v": e.v, "label": f.values[i], "sum": s})
        ok = ok and s >= 1
        if not args.json:
            print(f"domination {e.u} {e.v}: {s}")
    rep.add("per_edge", sums)
    rep.add("edges", len(g.edges))
    rep.add("weight", labeling_weight(f))
    rep.add("sedf", ok)
    rep.emit()
    return EXIT_OK if ok else EXIT_CONSTRAINT


def _cmd_solve(args: argparse.Namespace) -> int:
    g = fileio.read_graph(args.graph)
    cert = exact_sedn(g, max_nodes=_budget(args, DEFAULT_MAX_NODES), workers=args.threads)
    rep = Report(args.json)
    rep.add("vertices", g.n_vertices)
    rep.add("edges", len(g.edges))
    rep.add("value", cert.value)
    rep.add("optimal", cert.optimal)
    rep.add("nodes", cert.nodes_explored)
    if args.witness:
        fileio.save_labeling(cert.witness, args.witness)
        rep.add("witness", args.witness)
    rep.emit()
    return EXIT_OK if cert.optimal else EXIT_BUDGET


def _cmd_kmn(args: argparse.Namespace) -> int:
    rep = Report(args.json)
    value = kmn_sedn(args.m, args.n)
    case = kmn_case(args.m, args.n)
    rep.add("m", args.m)
    rep.add("n", args.n)
    rep.add("value", value)
    rep.add("parity_case", case.parity_case)
    rep.add("active_branch", case.sub_case)
    rep.add("optimal_construction", case.construction_id)
    status = EXIT_OK
    if args.construction:
        f = kmn_construction(args.m, args.n, args.construction)
        w = labeling_weight(f)
        verified = is_sedf(f.graph, f)
        rep.add("construction", args.construction)
        rep.add("construction_weight", w)
        rep.add("advertised_weight", construction_weight(args.m, args.n, args.construction))
        rep.add("verified", verified)
        if not verified:
            status = EXIT_CONSTRAINT
        if args.witness:
            fileio.save_labeling(f, args.witness)
            rep.add("witness", args.witness)
    elif args.witness:
        f = kmn_witness(args.m, args.n)
        verified = is_sedf(f.graph, f) and labeling_weight(f) == value
        rep.add("witness_weight", labeling_weight(f))
        rep.add("verified", verified)
        if not verified:
            status = EXIT_CONSTRAINT
        fileio.save_labeling(f, args.witness)
        rep.add("witness", args.witness)
    rep.emit()
    return status


def _part_comments(parts: dict[str, tuple[int, ...]]) -> list[str]:
    return [f"part {name}: {' '.join(map(str, block))}" for name, block in parts.items()]


def _cmd_lgraph(args: argparse.Namespace) -> int:
    lg = l_graph(args.m, args.n)
    f = l_graph_sedf(lg)
    m, n, r = l_graph_params(lg)
    rep = Report(args.json)
    rep.add("m", m)
    rep.add("n", n)
    rep.add("block_size", r)
    rep.add("vertices", lg.graph.n_vertices)
    rep.add("edges", len(lg.graph.edges))
    rep.add("weight", labeling_weight(f))
    rep.add("weight_formula", r * (m - m * n) // 2)
    if args.out:
        fileio.save_graph(lg.graph, args.out, comments=_part_comments(lg.parts))
        rep.add("out", args.out)
    if args.sedf:
        fileio.save_labeling(f, args.sedf)
        rep.add("sedf", args.sedf)
    rep.emit()
    return EXIT_OK


def _cmd_counterexample(args: argparse.Namespace) -> int:
    lg, f = counterexample(args.m)
    g = lg.graph
    weight = labeling_weight(f)
    bound = Fraction(-args.m, 6) * g.n_vertices
    rep = Report(args.json)
    rep.add("m", args.m)
    rep.add("vertices", g.n_vertices)
    rep.add("edges", len(g.edges))
    rep.add("weight", weight)
    rep.add("bound", bound)
    rep.add("bound_holds", Fraction(weight) <= bound)
    rep.add("sedf", is_sedf(g, f))
    if g.n_vertices <= args.connectivity_limit:
        rep.add("connected_at_least_m", vertex_connectivity_at_least(g, args.m))
    else:
        rep.add("connected_at_least_m", "skipped")
    if args.out:
        fileio.save_graph(g, args.out, comments=_part_comments(lg.parts))
        rep.add("out", args.out)
    if args.sedf:
        fileio.save_labeling(f, args.sedf)
        rep.add("sedf_file", args.sedf)
    rep.emit()
    return EXIT_OK


def _cmd_bounds(args: argparse.Namespace) -> int:
    rep = Report(args.json)
    if args.k is not None:
        report = g_bounds(args.k)
        rep.add("k", report.k)
        rep.add("lower", report.lower)
        rep.add("lower_source", report.lower_source)
        if report.upper is not None:
            rep.add("upper", report.upper)
            rep.add("upper_source", report.upper_source)
        if report.sharper_upper is not None:
            rep.add("sharper_upper", report.sharper_upper)
            rep.add("sharper_source", report.sharper_source)
        rep.emit()
        return EXIT_OK
    g = fileio.read_graph(args.graph)
    h = max_elementary_subgraph(g, max_nodes=_budget(args, DEFAULT_ELEMENTARY_MAX_NODES))
    rep.add("vertices", g.n_vertices)
    rep.add("covered", h.covered)
    rep.add("alpha", h.alpha)
    rep.add("optimal", h.optimal)
    if h.optimal:
        rep.add("elementary_bound", elementary_lower_bound(g, h))
    rep.add("order_bound", order_lower_bound(g.n_vertices))
    rep.emit()
    return EXIT_OK if h.optimal else EXIT_BUDGET


def _cmd_elementary(args: argparse.Namespace) -> int:
    g = fileio.read_graph(args.graph)
    h = max_elementary_subgraph(g, max_nodes=_budget(args, DEFAULT_ELEMENTARY_MAX_NODES))
    rep = Report(args.json)
    rep.add("vertices", g.n_vertices)
    rep.add("covered", h.covered)
    rep.add("alpha", h.alpha)
    rep.add("optimal", h.optimal)
    if not args.json:
        for i in sorted(h.matching_edges):
            e = g.edges[i]
            print(f"matching: {e.u} {e.v}")
        for cyc in h.odd_cycles:
            print(f"cycle: {' '.join(map(str, cyc))}")
    rep.add("matching", [list(g.edges[i]) for i in sorted(h.matching_edges)])
    rep.add("cycles", [list(c) for c in h.odd_cycles])
    rep.emit()
    return EXIT_OK if h.optimal else EXIT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sedf",
        description="Signed edge domination: verify labelings, solve exactly, "
        "build extremal constructions, and evaluate bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit one JSON object")

    p = sub.add_parser("verify", help="check a labeling file against a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    common(p)

    p = sub.add_parser("solve", help="exact signed edge domination number")
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int, default=None, help="max search nodes")
    p.add_argument("--threads", type=int, default=1, help="parallel workers")
    p.add_argument("--witness", help="write the optimal labeling here")
    common(p)

    p = sub.add_parser("kmn", help="complete bipartite value and witnesses")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--witness", help="write a verified optimal labeling here")
    p.add_argument(
        "--construction",
        choices=CONSTRUCTION_IDS,
        help="build this specific labeling instead of the optimal one",
    )
    common(p)

    p = sub.add_parser("lgraph", help="layered clique graph and its labeling")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="write the graph here")
    p.add_argument("--sedf", help="write the labeling here")
    common(p)

    p = sub.add_parser("counterexample", help="m-connected graph with weight -(m/6)|V|")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", help="write the graph here")
    p.add_argument("--sedf", help="write the labeling here")
    p.add_argument(
        "--connectivity-limit",
        type=int,
        default=200,
        help="skip the connectivity check above this many vertices",
    )
    common(p)

    p = sub.add_parser("bounds", help="order sandwich or per-graph bound chain")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, help="graph order for the sandwich")
    group.add_argument("--graph", help="graph file for the elementary chain")
    p.add_argument("--budget", type=int, default=None, help="max search nodes")
    common(p)

    p = sub.add_parser("elementary", help="maximum elementary subgraph")
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int, default=None, help="max search nodes")
    common(p)

    return parser


_COMMANDS = {
    "verify": _cmd_verify,
    "solve": _cmd_solve,
    "kmn": _cmd_kmn,
    "lgraph": _cmd_lgraph,
    "counterexample": _cmd_counterexample,
    "bounds": _cmd_bounds,
    "elementary": _cmd_elementary,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except FormatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SedfError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
