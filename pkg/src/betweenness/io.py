"""Reading and writing graphs, weighted graphs, structures and metrics.

Text formats (0-based vertices)::

    4          <- vertex count
    0 1        <- graph edge
    1 2 3/2    <- weighted-graph edge with an exact weight

JSON formats::

    {"n": 3, "triples": [[0, 1, 2]]}          betweenness structure
    {"n": 2, "d": [["0", "1"], ["1", "0"]]}   metric space

All writers are canonical: sorted edges and triples, sorted JSON keys.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import BetweennessStructure, Graph, MetricSpace, WeightedGraph, edge
from .errors import BetweennessError, FormatError
from .metrizability import validate_candidate


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {token!r}", line) from None


def _fraction(token: str, line: int | None) -> Fraction:
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"expected a rational like 3/2, got {token!r}", line) from None
    if "." in token or "e" in token.lower():
        raise FormatError(f"decimal weights are not exact, write {value} instead", line)
    return value


def _parse_edge_list(text: str):
    """``(n, rows)`` where each row is ``(line_number, tokens)``."""
    lines = [(i, ln.split("#", 1)[0].split()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, toks) for i, toks in lines if toks]
    if not lines:
        raise FormatError("empty input: expected the vertex count on the first line")
    first, toks = lines[0]
    if len(toks) != 1:
        raise FormatError("first line must hold only the vertex count", first)
    n = _int(toks[0], first, "vertex count")
    if n < 1:
        raise FormatError("vertex count must be positive", first)
    return n, lines[1:]


def _check_pair(u: int, v: int, n: int, seen: set, line: int) -> tuple[int, int]:
    if not (0 <= u < n and 0 <= v < n):
        raise FormatError(f"vertex out of range 0..{n - 1}", line)
    if u == v:
        raise FormatError(f"loop at vertex {u}", line)
    e = edge(u, v)
    if e in seen:
        raise FormatError(f"duplicate edge {e}", line)
    seen.add(e)
    return e


def parse_graph(text: str) -> Graph:
    n, rows = _parse_edge_list(text)
    seen: set = set()
    for line, toks in rows:
        if len(toks) != 2:
            raise FormatError(f"expected 'u v', got {len(toks)} fields", line)
        u, v = (_int(t, line, "vertex") for t in toks)
        _check_pair(u, v, n, seen, line)
    return Graph(n, frozenset(seen))


def parse_weighted_graph(text: str) -> WeightedGraph:
    n, rows = _parse_edge_list(text)
    seen: set = set()
    weights = {}
    for line, toks in rows:
        if len(toks) != 3:
            raise FormatError(f"expected 'u v p/q', got {len(toks)} fields", line)
        u, v = (_int(t, line, "vertex") for t in toks[:2])
        e = _check_pair(u, v, n, seen, line)
        w = _fraction(toks[2], line)
        if w <= 0:
            raise FormatError(f"weight must be positive, got {w}", line)
        weights[e] = w
    try:
        return WeightedGraph(Graph(n, frozenset(seen)), weights)
    except BetweennessError as exc:
        raise FormatError(str(exc)) from None


def write_graph(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.sorted_edges()])


def write_weighted_graph(w: WeightedGraph) -> str:
    lines = [f"{w.n}\n"]
    lines += [f"{u} {v} {wt}\n" for (u, v), wt in sorted(w.weights.items())]
    return "".join(lines)


def _load_json(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict):
        raise FormatError("expected a JSON object")
    return obj


def _json_n(obj: dict) -> int:
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError("field 'n' must be a positive integer")
    return n


def structure_to_dict(b: BetweennessStructure) -> dict:
    return {"n": b.n, "triples": [list(t) for t in b.sorted_triples()]}


def structure_from_dict(obj: dict) -> BetweennessStructure:
    n = _json_n(obj)
    raw = obj.get("triples")
    if not isinstance(raw, list):
        raise FormatError("field 'triples' must be a list")
    for k, t in enumerate(raw):
        if not (isinstance(t, list) and len(t) == 3 and all(type(p) is int for p in t)):
            raise FormatError(f"triples[{k}] must be a list of three integers")
    try:
        return validate_candidate(raw, n)
    except ValueError as exc:
        raise FormatError(f"field 'triples': {exc}") from None


def write_structure(b: BetweennessStructure) -> str:
    return _dumps(structure_to_dict(b))


def parse_structure(text: str) -> BetweennessStructure:
    return structure_from_dict(_load_json(text))


def metric_to_dict(m: MetricSpace) -> dict:
    return {"n": m.n, "d": [[str(v) for v in row] for row in m.d]}


def metric_from_dict(obj: dict) -> MetricSpace:
    n = _json_n(obj)
    d = obj.get("d")
    if not isinstance(d, list) or len(d) != n:
        raise FormatError(f"field 'd' must be a list of {n} rows")
    rows = []
    for i, row in enumerate(d):
        if not isinstance(row, list) or len(row) != n:
            raise FormatError(f"d[{i}] must be a list of {n} entries")
        vals = []
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (str, int)):
                raise FormatError(f"d[{i}][{j}] must be an integer or a 'p/q' string")
            vals.append(_fraction(str(v), None))
        rows.append(vals)
    try:
        return MetricSpace(n, rows)
    except ValueError as exc:
        raise FormatError(f"field 'd': {exc}") from None


def write_metric(m: MetricSpace) -> str:
    return _dumps(metric_to_dict(m))


def parse_metric(text: str) -> MetricSpace:
    return metric_from_dict(_load_json(text))


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def weighted_to_dict(w: WeightedGraph) -> dict:
    return {"n": w.n, "edges": [[u, v, str(wt)] for (u, v), wt in sorted(w.weights.items())]}


def load(text: str):
    """Parse any supported input, telling the formats apart by content.

    JSON with ``triples`` is a structure, JSON with ``d`` a metric; text with
    three fields per edge line is a weighted graph, otherwise a graph.
    """
    if text.lstrip().startswith("{"):
        obj = _load_json(text)
        if "triples" in obj:
            return structure_from_dict(obj)
        if "d" in obj:
            return metric_from_dict(obj)
        raise FormatError("JSON input needs a 'triples' or a 'd' field")
    _, rows = _parse_edge_list(text)
    if rows and len(rows[0][1]) == 3:
        return parse_weighted_graph(text)
    return parse_graph(text)
