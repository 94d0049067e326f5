"""Command-line entry point: ``warm-apsp <command> ...``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, wgm
from .baseline import floyd_warshall
from .graph_core import GraphError, append_node, drop_node
from .path_query import warm_shortest_path
from .warm_update import Strategy, UpdateConfig, apsp_add_node, apsp_modify_edge, apsp_remove_node

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_VERIFY = 3

_STRATEGIES = {"auto": Strategy.AUTO, "floyd": Strategy.ALWAYS_FLOYD, "dijkstra": Strategy.ALWAYS_DIJKSTRA}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _weight_list(text: str) -> list:
    try:
        return [wgm.parse_weight(tok.strip()) for tok in text.split(",") if tok.strip()]
    except wgm.FormatError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _sizes(text: str) -> list:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}")


def _weight(text: str) -> float:
    try:
        return wgm.parse_weight(text)
    except wgm.FormatError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--delta", type=float, default=0.8, help="cost threshold for full recomputation")
    common.add_argument("--epsilon", type=float, default=1e-9, help="distance comparison tolerance")
    common.add_argument("--strategy", choices=sorted(_STRATEGIES), default="auto")

    parser = _Parser(prog="warm-apsp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a random graph in WGM format")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--out", required=True)

    p = sub.add_parser("apsp", help="cold-start APSP of a WGM graph")
    p.add_argument("graph")
    p.add_argument("--out", help="APSP file (default: stdout)")

    p = sub.add_parser("remove", parents=[common], help="remove a node, updating graph and APSP files")
    p.add_argument("graph")
    p.add_argument("apsp")
    p.add_argument("--node", type=int, required=True)

    p = sub.add_parser("add", parents=[common], help="append a node, updating graph and APSP files")
    p.add_argument("graph")
    p.add_argument("apsp")
    p.add_argument("--out-weights", type=_weight_list, required=True,
                   help="comma-separated weights new->t")
    p.add_argument("--in-weights", type=_weight_list,
                   help="comma-separated weights t->new (default: same as --out-weights)")

    p = sub.add_parser("modify", parents=[common], help="reweight one edge, updating graph and APSP files")
    p.add_argument("graph")
    p.add_argument("apsp")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--weight", type=_weight, required=True)

    p = sub.add_parser("query", parents=[common], help="warm shortest path between two nodes")
    p.add_argument("graph")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--apsp", help="precomputed APSP file (default: computed)")

    p = sub.add_parser("bench", parents=[common], help="run a timing experiment")
    p.add_argument("experiment", choices=["exp1", "exp2", "exp3"])
    p.add_argument("--sizes", type=_sizes, default=[100])
    p.add_argument("--trials", type=int, default=3, help="repetitions (queries for exp3)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=1.0)
    p.add_argument("--undirected", action="store_true")
    p.add_argument("--out", help="write <out>.csv and <out>.json")
    return parser


def _config(args) -> UpdateConfig:
    try:
        return UpdateConfig(delta=args.delta, epsilon=args.epsilon, strategy_override=_STRATEGIES[args.strategy])
    except ValueError as exc:
        raise UsageError(str(exc))


def _load_pair(args):
    g = wgm.read_graph(args.graph)
    m = wgm.read_apsp(args.apsp)
    if m.n != g.n:
        raise GraphError(f"APSP file has {m.n} nodes but graph has {g.n}")
    return g, m


def _cmd_gen(args, out):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if not 0 < args.density <= 1:
        raise UsageError("--density must lie in (0, 1]")
    g = bench.gen_graph(args.n, args.directed, args.density, args.seed)
    wgm.write_graph(g, args.out)


def _cmd_apsp(args, out):
    g = wgm.read_graph(args.graph)
    text = wgm.dumps_apsp(floyd_warshall(g), g.directed)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)


def _cmd_remove(args, out):
    g, m = _load_pair(args)
    res = apsp_remove_node(m, g, args.node, _config(args))
    g2 = drop_node(g, args.node)
    wgm.write_graph(g2, args.graph)
    wgm.write_apsp(res.matrix, args.apsp, g2.directed)
    out.write(f"removed node {args.node}: cost {res.cost.value:.4f}, strategy {res.strategy}\n")


def _cmd_add(args, out):
    g, m = _load_pair(args)
    in_w = args.in_weights if args.in_weights is not None else args.out_weights
    g2 = append_node(g, args.out_weights, in_w)
    m2 = apsp_add_node(m, g2, args.out_weights, in_w)
    wgm.write_graph(g2, args.graph)
    wgm.write_apsp(m2, args.apsp, g2.directed)
    out.write(f"added node {g.n}\n")


def _cmd_modify(args, out):
    g, m = _load_pair(args)
    res = apsp_modify_edge(m, g, args.u, args.v, args.weight, _config(args))
    wgm.write_graph(res.graph, args.graph)
    wgm.write_apsp(res.matrix, args.apsp, res.graph.directed)
    out.write(f"edge ({args.u}, {args.v}) set to {wgm.format_weight(args.weight)}: "
              f"re-added node {res.removed}, strategy {res.strategy}\n")


def _cmd_query(args, out):
    g = wgm.read_graph(args.graph)
    if args.apsp:
        m = wgm.read_apsp(args.apsp)
        if m.n != g.n:
            raise GraphError(f"APSP file has {m.n} nodes but graph has {g.n}")
    else:
        m = floyd_warshall(g)
    res = warm_shortest_path(m, g, args.i, args.j, _config(args))
    if not res.found:
        out.write(f"no path from {args.i} to {args.j}\n")
    else:
        out.write(f"path {' '.join(map(str, res.nodes))}\n")
        out.write(f"total {wgm.format_weight(res.total)}\n")


def _cmd_bench(args, out):
    cfg = _config(args)
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if any(n < 2 for n in args.sizes) or not args.sizes:
        raise UsageError("--sizes must list graph sizes >= 2")
    if not 0 < args.density <= 1:
        raise UsageError("--density must lie in (0, 1]")
    directed = not args.undirected
    if args.experiment == "exp1":
        reports = bench.run_experiment_1(args.sizes, args.trials, cfg, args.seed, directed, args.density)
    elif args.experiment == "exp2":
        reports = bench.run_experiment_2(args.sizes, args.trials, cfg, args.seed, directed, args.density)
    else:
        reports = [bench.run_experiment_3(n, args.trials, cfg, args.seed, directed, args.density)
                   for n in args.sizes]
    csv_text = bench.reports_to_csv(reports)
    out.write(csv_text)
    if args.out:
        Path(f"{args.out}.csv").write_text(csv_text)
        Path(f"{args.out}.json").write_text(bench.reports_to_json(reports))


_COMMANDS = {
    "gen": _cmd_gen,
    "apsp": _cmd_apsp,
    "remove": _cmd_remove,
    "add": _cmd_add,
    "modify": _cmd_modify,
    "query": _cmd_query,
    "bench": _cmd_bench,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except bench.VerificationError as exc:
        err.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY
    except (GraphError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
