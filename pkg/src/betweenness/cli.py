"""Command line interface.

Exit status: 0 on success, 1 when a verification finds a counterexample,
2 on unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import io
from .constructions import bipartite_family, lemma31_weighting, step2_weighting
from .core import (
    BetweennessStructure,
    Graph,
    MetricSpace,
    WeightedGraph,
    adjacency_graph,
    betweenness_of_graph,
    betweenness_of_metric,
    betweenness_of_weighted,
)
from .enumeration import (
    enumerate_representations,
    verify_dress,
    verify_prop24,
    verify_theorem1,
    verify_theorem2,
)
from .errors import BetweennessError, BudgetExceeded, FormatError
from .geodesic import structure_geodesics, weighted_geodesics
from .metrizability import is_metrizable
from .recognition import classify

VERIFIERS = {
    "theorem1": verify_theorem1,
    "theorem2": verify_theorem2,
    "dress": verify_dress,
    "prop24": verify_prop24,
}


class InputError(Exception):
    pass


def _read(path: str, expect=None):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        obj = io.load(text)
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from None
    if expect is not None and not isinstance(obj, expect):
        names = " or ".join(t.__name__ for t in expect) if isinstance(expect, tuple) else expect.__name__
        raise InputError(f"{path}: expected {names}, got {type(obj).__name__}")
    return obj


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _construction_dict(res) -> dict:
    return {
        "claims": res.claims,
        "structure": io.structure_to_dict(res.structure),
        "weighted_graph": io.weighted_to_dict(res.weighted),
    }


def _report_dict(rep) -> dict:
    return {
        "graph": io.graph_to_dict(rep.graph),
        "count": rep.count,
        "flags": {
            "uniquely_representable": rep.is_uniquely_representable,
            "bounds_below": rep.bounds_below,
            "bounds_above": rep.bounds_above,
        },
        "representations": [io.structure_to_dict(b) for b in rep.representations],
    }


def cmd_betweenness(args) -> tuple[int, str]:
    obj = _read(args.input, (Graph, WeightedGraph, MetricSpace))
    if isinstance(obj, Graph):
        if not obj.is_connected():
            raise InputError(f"{args.input}: graph is not connected")
        b = betweenness_of_graph(obj)
    elif isinstance(obj, WeightedGraph):
        b = betweenness_of_weighted(obj)
    else:
        b = betweenness_of_metric(obj)
    if args.format == "text":
        return 0, "".join(f"{x} {y} {z}\n" for x, y, z in b.sorted_triples())
    return 0, io.write_structure(b)


def cmd_adjacency(args) -> tuple[int, str]:
    b = _read(args.input, BetweennessStructure)
    g = adjacency_graph(b)
    if args.format == "json":
        return 0, _dump(io.graph_to_dict(g))
    return 0, io.write_graph(g)


def cmd_classify(args) -> tuple[int, str]:
    g = _read(args.input, Graph)
    if not g.is_connected():
        raise InputError(f"{args.input}: graph is not connected")
    rep = classify(g)
    data = {
        "is_block_graph": rep.is_block_graph,
        "is_chordal": rep.is_chordal,
        "has_diamond": rep.has_diamond,
        "is_distance_hereditary": rep.is_distance_hereditary,
        "witnesses": {k: list(v) for k, v in rep.witnesses.items()},
    }
    if args.format == "text":
        lines = [f"{k}: {str(v).lower()}\n" for k, v in data.items() if k != "witnesses"]
        lines += [f"witness {k}: {' '.join(map(str, v))}\n" for k, v in sorted(data["witnesses"].items())]
        return 0, "".join(lines)
    return 0, _dump(data)


def cmd_metrizable(args) -> tuple[int, str]:
    b = _read(args.input, BetweennessStructure)
    witness = is_metrizable(b)
    if witness is None:
        return 0, "no\n"
    return 0, io.write_metric(witness)


def cmd_representations(args) -> tuple[int, str]:
    g = _read(args.input, Graph)
    try:
        rep = enumerate_representations(g, budget=args.budget, workers=args.workers)
    except BudgetExceeded as exc:
        partial = [io.structure_to_dict(b) for b in exc.found]
        msg = _dump({"error": str(exc), "explored": exc.explored, "partial": partial})
        raise InputError(msg.strip()) from None
    if args.format == "text":
        head = f"count {rep.count} unique {rep.is_uniquely_representable} "
        head += f"below {rep.bounds_below} above {rep.bounds_above}\n"
        body = "".join(
            " ".join(f"({x} {y} {z})" for x, y, z in b.sorted_triples()) + "\n"
            for b in rep.representations
        )
        return 0, head + body
    return 0, _dump(_report_dict(rep))


def cmd_construct(args) -> tuple[int, str]:
    if args.kind == "bipartite":
        if args.n is None:
            raise InputError("construct bipartite needs --n")
        results = bipartite_family(args.n)
        if args.format == "text":
            return 0, "\n".join(io.write_weighted_graph(r.weighted) for r in results)
        return 0, _dump([_construction_dict(r) for r in results])
    if args.input is None:
        raise InputError(f"construct {args.kind} needs --input")
    g = _read(args.input, Graph)
    if args.kind == "lemma31":
        if args.path is None:
            raise InputError("construct lemma31 needs --path, e.g. --path 0,1,2,3")
        try:
            path = [int(p) for p in args.path.split(",")]
        except ValueError:
            raise InputError(f"--path must be comma-separated vertices, got {args.path!r}") from None
        res = lemma31_weighting(g, path, args.eps)
    else:
        res = step2_weighting(g)
    if args.format == "text":
        return 0, io.write_weighted_graph(res.weighted)
    return 0, _dump(_construction_dict(res))


def cmd_verify(args) -> tuple[int, str]:
    check = VERIFIERS[args.theorem](args.max_n, workers=args.workers)
    rows = [r for r in check.rows if r.graph.n >= args.min_n]
    bad = [r for r in rows if not r.consistent]
    if args.format == "json":
        data = {
            "theorem": check.name,
            "graphs": len(rows),
            "holds": not bad,
            "rows": [
                {"graph": io.graph_to_dict(r.graph), "count": r.count, "values": r.values}
                for r in rows
            ],
            "counterexamples": [io.write_graph(r.graph) for r in bad],
        }
        return (1 if bad else 0), _dump(data)
    out = []
    for r in rows:
        edges = " ".join(f"{u}-{v}" for u, v in r.graph.sorted_edges()) or "-"
        vals = " ".join(f"{k}={'T' if v else 'F'}" for k, v in r.values.items())
        mark = "ok" if r.consistent else "FAIL"
        out.append(f"{mark} n={r.graph.n} count={r.count} {vals} edges: {edges}\n")
    out.append(f"{check.name}: {len(rows)} graphs, {len(bad)} counterexamples\n")
    for r in bad:
        out.append("counterexample (graph file follows):\n" + io.write_graph(r.graph))
    return (1 if bad else 0), "".join(out)


def cmd_geodesics(args) -> tuple[int, str]:
    obj = _read(args.input)
    x, z = args.pair
    n = obj.n
    if not (0 <= x < n and 0 <= z < n):
        raise InputError(f"--pair vertices must lie in 0..{n - 1}")
    if isinstance(obj, Graph):
        if not obj.is_connected():
            raise InputError(f"{args.input}: graph is not connected")
        obj = WeightedGraph.unit(obj)
    if isinstance(obj, WeightedGraph):
        geo = weighted_geodesics(obj, x, z)
    else:
        b = obj if isinstance(obj, BetweennessStructure) else betweenness_of_metric(obj)
        geo = structure_geodesics(b, x, z)
    if args.format == "json":
        return 0, _dump({"source": x, "target": z, "paths": [list(p) for p in geo.paths]})
    return 0, "".join(" ".join(map(str, p)) + "\n" for p in geo.paths)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/8, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betweenness",
        description="Betweenness structures of finite metric spaces and graph representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, fmt="json", takes_input=True):
        p = sub.add_parser(name, help=help)
        if takes_input:
            p.add_argument("input", help="input file, or - for stdin")
        p.add_argument("--format", choices=("json", "text"), default=fmt)
        p.add_argument("--output", "-o", help="write the result here instead of stdout")
        p.set_defaults(func=func)
        return p

    add("betweenness", cmd_betweenness, "structure induced by a graph, weighted graph or metric")
    add("adjacency", cmd_adjacency, "adjacency graph of a structure", fmt="text")
    add("classify", cmd_classify, "block / chordal / diamond / distance-hereditary verdicts")
    add("metrizable", cmd_metrizable, "witness metric for a structure, or 'no'")
    p = add("representations", cmd_representations, "all representations of a small graph")
    p.add_argument("--budget", type=int, help="search-node limit (n = 6 only)")
    p.add_argument("--workers", type=int, default=1)

    p = add("construct", cmd_construct, "build the weighted-graph constructions", takes_input=False)
    p.add_argument("kind", choices=("lemma31", "step2", "bipartite"))
    p.add_argument("--input", help="graph file (lemma31, step2)")
    p.add_argument("--path", help="induced path for lemma31, e.g. 0,1,2,3")
    p.add_argument("--eps", type=_fraction, help="path edge weight for lemma31, as p/q")
    p.add_argument("--n", type=int, help="order of the bipartite graph")

    p = add("verify", cmd_verify, "exhaustively check a theorem on small graphs",
            fmt="text", takes_input=False)
    p.add_argument("theorem", choices=sorted(VERIFIERS))
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--min-n", type=int, default=1, help="only report graphs of at least this order")
    p.add_argument("--workers", type=int, default=1)

    p = add("geodesics", cmd_geodesics, "all geodesics between two points", fmt="text")
    p.add_argument("--pair", type=int, nargs=2, metavar=("X", "Z"), required=True)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, out = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BetweennessError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())
