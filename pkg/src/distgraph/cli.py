"""Command-line surface: exact counts, graph generation, analysis, sweeps.

Every randomized command takes an explicit --seed; identical invocations
produce byte-identical output.  Exit codes: 0 success, 1 usage error,
2 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import analyze
from .degrees import expected_degree_finite, expected_degree_infinite
from .edgelist import format_edge_list, read_edge_list
from .errors import CapacityError
from .harness import SweepConfig, rows_to_csv, rows_to_json, run_sweep
from .lattice import (
    LatticeSpace,
    pair_count_by_distance,
    shell_count_finite,
    shell_count_infinite,
)
from .models import Constant, InverseDistance, WaxmanExponential
from .samplers import (
    sample_er_graph,
    sample_lattice_graph_naive,
    sample_lattice_graph_stratified,
    sample_waxman_graph,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_vertex(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"--vertex expects comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="distgraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count-shell", help="lattice points at an exact l1 distance")
    p.add_argument("--r", type=int, required=True, help="lattice dimension")
    p.add_argument("--d", type=int, required=True, help="l1 distance")
    p.add_argument("--n", type=int, help="box side length (finite count; needs --vertex)")
    p.add_argument("--vertex", type=str, help="center vertex, e.g. 0,0")
    p.add_argument("--out", type=str)

    p = sub.add_parser("pair-table", help="unordered pair counts by distance for a box")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", type=str)

    p = sub.add_parser("degree", help="exact expected degree under the inverse-distance model")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--infinite", action="store_true", help="use Z^r shells truncated at r(n-1)")
    p.add_argument("--vertex", type=str, help="finite-box vertex, e.g. 5,5")
    p.add_argument("--out", type=str)

    p = sub.add_parser("generate", help="sample a graph and write its edge list")
    p.add_argument("--family", choices=("lattice", "waxman", "er"), required=True)
    p.add_argument("--n", type=int, required=True, help="side length / point count / vertex count")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--beta", type=float, help="lattice exponent, or Waxman decay scale")
    p.add_argument("--alpha", type=float, default=1.0, help="Waxman amplitude")
    p.add_argument("--p", type=float, help="ER edge probability")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--sampler", choices=("naive", "stratified"), default="naive")
    p.add_argument("--coupled", action="store_true", help="key pair uniforms by (seed, pair index)")
    p.add_argument("--out", type=str)

    p = sub.add_parser("analyze", help="component summary of an edge list (stdin or file)")
    p.add_argument("edgelist", nargs="?", help="path to an edge list; stdin if omitted")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", type=str)

    p = sub.add_parser("sweep", help="run a Monte Carlo sweep from a JSON config")
    p.add_argument("--config", type=str, required=True)
    p.add_argument("--trials", type=int, help="override the config's trial count")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--timing", action="store_true", help="emit measured wall_time_ms")
    p.add_argument("--out", type=str)

    return parser


def _write(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_count_shell(args) -> str:
    if args.n is not None:
        if args.vertex is None:
            raise UsageError("finite counting (--n) also needs --vertex")
        space = LatticeSpace(n=args.n, r=args.r)
        value = shell_count_finite(space, _parse_vertex(args.vertex), args.d)
    else:
        value = shell_count_infinite(args.r, args.d)
    return f"{value}\n"


def _cmd_pair_table(args) -> str:
    table = pair_count_by_distance(LatticeSpace(n=args.n, r=args.r))
    if args.format == "json":
        return json.dumps({str(d): table[d] for d in sorted(table)}, indent=2) + "\n"
    lines = ["d,count"] + [f"{d},{table[d]}" for d in sorted(table)]
    return "\n".join(lines) + "\n"


def _cmd_degree(args) -> str:
    model = InverseDistance(beta=args.beta, n=args.n)
    space = LatticeSpace(n=args.n, r=args.r)
    if args.infinite:
        value = expected_degree_infinite(args.r, space.max_distance, model)
    else:
        if args.vertex is None:
            raise UsageError("finite expected degree needs --vertex (or pass --infinite)")
        value = expected_degree_finite(space, model, _parse_vertex(args.vertex))
    return f"{value:.6f}\n"


def _cmd_generate(args) -> str:
    if args.family == "lattice":
        if args.beta is None:
            raise UsageError("--family lattice needs --beta")
        space = LatticeSpace(n=args.n, r=args.r)
        model = InverseDistance(beta=args.beta, n=args.n)
        if args.sampler == "stratified":
            if args.coupled:
                raise UsageError("--coupled is only available with --sampler naive")
            graph = sample_lattice_graph_stratified(space, model, args.seed)
        else:
            graph = sample_lattice_graph_naive(space, model, args.seed, coupled=args.coupled)
    elif args.family == "waxman":
        if args.coupled:
            raise UsageError("--coupled applies to the lattice family only")
        if args.beta is None:
            raise UsageError("--family waxman needs --beta (decay scale)")
        model = WaxmanExponential(alpha=args.alpha, beta=args.beta)
        graph = sample_waxman_graph(args.n, args.r, model, args.seed)[1]
    else:
        if args.coupled:
            raise UsageError("--coupled applies to the lattice family only")
        if args.p is None:
            raise UsageError("--family er needs --p")
        graph = sample_er_graph(args.n, args.p, args.seed)
    return format_edge_list(graph)


def _cmd_analyze(args) -> str:
    if args.edgelist:
        with open(args.edgelist, "r", encoding="utf-8") as fh:
            graph = read_edge_list(fh)
    else:
        graph = read_edge_list(sys.stdin)
    summary = analyze(graph)
    if args.format == "csv":
        head = "vertex_count,edge_count,component_count,largest_component_size,isolated_count,mean_degree"
        row = (
            f"{summary.vertex_count},{summary.edge_count},{summary.component_count},"
            f"{summary.largest_component_size},{summary.isolated_count},{summary.mean_degree:.6f}"
        )
        return head + "\n" + row + "\n"
    return json.dumps(summary.to_dict(), indent=2, sort_keys=True) + "\n"


def _cmd_sweep(args) -> str:
    config = SweepConfig.from_json_file(args.config)
    if args.trials is not None:
        data = config.to_dict()
        data["trials"] = args.trials
        config = SweepConfig.from_dict(data)
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    rows = run_sweep(config, threads=args.threads)
    if args.format == "json":
        return rows_to_json(rows, include_timing=args.timing)
    return rows_to_csv(rows, include_timing=args.timing)


_COMMANDS = {
    "count-shell": _cmd_count_shell,
    "pair-table": _cmd_pair_table,
    "degree": _cmd_degree,
    "generate": _cmd_generate,
    "analyze": _cmd_analyze,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 2
    _write(text, getattr(args, "out", None))
    return 0


def entry_point() -> None:
    sys.exit(main())
