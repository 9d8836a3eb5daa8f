"""Recognizers for block graphs, chordal graphs, diamonds and distance-hereditary graphs.

Each recognizer returns a :class:`Verdict`.  Negative answers (and the
positive answer of :func:`has_diamond`) carry a witness that can be checked
against the graph directly.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

from .core import Graph, Path
from .errors import DisconnectedGraph, DisconnectedSubgraph


class Verdict(NamedTuple):
    holds: bool
    witness: tuple | None = None


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraph("graph is not connected")


def biconnected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the blocks (Hopcroft-Tarjan); bridges give 2-vertex blocks."""
    disc = [-1] * g.n
    low = [0] * g.n
    blocks = []
    stack: list[tuple[int, int]] = []
    clock = 0

    def visit(u, parent):
        nonlocal clock
        disc[u] = low[u] = clock
        clock += 1
        for v in sorted(g.neighbors(u)):
            if disc[v] == -1:
                stack.append((u, v))
                visit(v, u)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    comp = set()
                    while True:
                        a, b = stack.pop()
                        comp.update((a, b))
                        if (a, b) == (u, v):
                            break
                    blocks.append(frozenset(comp))
            elif v != parent and disc[v] < disc[u]:
                stack.append((u, v))
                low[u] = min(low[u], disc[v])

    for s in range(g.n):
        if disc[s] == -1:
            visit(s, -1)
            if not g.neighbors(s):
                blocks.append(frozenset([s]))
    return blocks


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(vertices, 2))


def is_block_graph(g: Graph) -> Verdict:
    """Every block is a clique; the witness is a non-clique block."""
    _require_connected(g)
    for block in sorted(biconnected_components(g), key=sorted):
        if not is_clique(g, block):
            return Verdict(False, tuple(sorted(block)))
    return Verdict(True)


def find_induced_cycle(g: Graph, min_length: int = 4) -> tuple[int, ...] | None:
    """An induced cycle with at least ``min_length`` vertices, by exhaustive search."""
    path: list[int] = []

    def extend(s, u):
        for v in sorted(g.neighbors(u)):
            if v <= s or v in path:
                continue
            if len(path) == 1:
                path.append(v)
                found = extend(s, v)
                if found:
                    return found
                path.pop()
                continue
            if any(g.has_edge(v, p) for p in path[1:-1]):
                continue
            if g.has_edge(v, s):
                if len(path) + 1 >= min_length:
                    return tuple(path) + (v,)
                continue
            path.append(v)
            found = extend(s, v)
            if found:
                return found
            path.pop()
        return None

    for s in range(g.n):
        path[:] = [s]
        found = extend(s, s)
        if found:
            return found
    return None


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visiting order."""
    weight = [0] * g.n
    numbered = [False] * g.n
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not numbered[u]), key=lambda u: (weight[u], -u))
        numbered[v] = True
        order.append(v)
        for u in g.neighbors(v):
            if not numbered[u]:
                weight[u] += 1
    return order


def is_perfect_elimination_ordering(g: Graph, order: list[int]) -> bool:
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.neighbors(v) if position[u] > position[v]]
        if not is_clique(g, later):
            return False
    return True


def perfect_elimination_ordering(g: Graph) -> list[int] | None:
    order = _mcs_order(g)[::-1]
    return order if is_perfect_elimination_ordering(g, order) else None


def is_chordal(g: Graph) -> Verdict:
    """No induced cycle of length four or more; the witness is such a cycle."""
    if perfect_elimination_ordering(g) is not None:
        return Verdict(True)
    cycle = find_induced_cycle(g, 4)
    if cycle is None:
        raise RuntimeError("elimination ordering failed but no induced long cycle exists")
    return Verdict(False, cycle)


def chordal_by_cycle_search(g: Graph) -> bool:
    """Slow independent chordality test used to cross-check :func:`is_chordal`."""
    return find_induced_cycle(g, 4) is None


def _label_square(g: Graph, quad: tuple[int, ...]) -> tuple[int, int, int, int]:
    """Label an induced C4 or diamond as ``(x, y, u, v)`` with ``{x, y}`` a non-edge.

    ``x`` is the smallest vertex that has a non-neighbour in the set, ``y``
    that non-neighbour, and ``u < v`` the remaining two.
    """
    for x in quad:
        for y in quad:
            if x < y and not g.has_edge(x, y):
                u, v = sorted(p for p in quad if p not in (x, y))
                return (x, y, u, v)
    raise ValueError(f"{quad} has no non-edge")


def _square_kind(g: Graph, quad) -> str | None:
    es = [(a, b) for a, b in combinations(quad, 2) if g.has_edge(a, b)]
    if len(es) == 5:
        return "diamond"
    if len(es) == 4 and all(sum(p in e for e in es) == 2 for p in quad):
        return "C4"
    return None


def has_diamond(g: Graph) -> Verdict:
    """Induced diamond (4-cycle with one chord); witness ``(x, y, u, v)`` with ``{x, y}`` the non-edge."""
    for quad in combinations(range(g.n), 4):
        if _square_kind(g, quad) == "diamond":
            return Verdict(True, _label_square(g, quad))
    return Verdict(False)


def find_c4_or_diamond(g: Graph) -> tuple[str, tuple[int, int, int, int]] | None:
    """First induced C4 or diamond among 4-subsets in lexicographic order."""
    for quad in combinations(range(g.n), 4):
        kind = _square_kind(g, quad)
        if kind is not None:
            return kind, _label_square(g, quad)
    return None


def _induced_paths(g: Graph, x: int, z: int) -> list[Path]:
    if x == z:
        return [(x,)]
    found = []
    path = [x]

    def extend(u):
        for v in sorted(g.neighbors(u)):
            if v in path:
                continue
            # v may only touch the last vertex of the path
            if any(g.has_edge(v, p) for p in path[:-1]):
                continue
            if v == z:
                found.append(tuple(path) + (z,))
                continue
            path.append(v)
            extend(v)
            path.pop()

    extend(x)
    return sorted(found)


def induced_paths(g: Graph, x: int, y: int) -> list[Path]:
    """All induced ``x``-``y`` paths, sorted."""
    _require_connected(g)
    return _induced_paths(g, x, y)


def unique_induced_path(g: Graph, x: int, y: int) -> Path | None:
    paths = induced_paths(g, x, y)
    return paths[0] if len(paths) == 1 else None


def is_distance_hereditary(g: Graph) -> Verdict:
    """Every induced path is a shortest path; the witness is one that is not."""
    _require_connected(g)
    for x in range(g.n):
        dist = g.distances_from(x)
        for y in range(x + 1, g.n):
            for p in _induced_paths(g, x, y):
                if len(p) - 1 != dist[y]:
                    return Verdict(False, p)
    return Verdict(True)


def is_isometric_subgraph(g: Graph, us: Iterable[int]) -> bool:
    """Distances inside the subgraph induced by ``us`` agree with those of ``g``."""
    keep = sorted(set(us))
    if not g.is_connected(keep):
        raise DisconnectedSubgraph(f"subgraph induced by {keep} is not connected")
    index = {v: i for i, v in enumerate(keep)}
    sub = Graph(len(keep), frozenset((index[a], index[b]) for a, b in g.induced_edges(keep)))
    for v in keep:
        full = g.distances_from(v)
        local = sub.distances_from(index[v])
        if any(local[index[u]] != full[u] for u in keep):
            return False
    return True


@dataclass
class ClassReport:
    is_block_graph: bool
    is_chordal: bool
    has_diamond: bool
    is_distance_hereditary: bool
    witnesses: dict[str, tuple] = field(default_factory=dict)


def classify(g: Graph) -> ClassReport:
    block = is_block_graph(g)
    chordal = is_chordal(g)
    diamond = has_diamond(g)
    dh = is_distance_hereditary(g)
    witnesses = {}
    if block.witness:
        witnesses["non_clique_block"] = block.witness
    if chordal.witness:
        witnesses["induced_cycle"] = chordal.witness
    if diamond.witness:
        witnesses["diamond"] = diamond.witness
    if dh.witness:
        witnesses["non_geodesic_induced_path"] = dh.witness
    return ClassReport(block.holds, chordal.holds, diamond.holds, dh.holds, witnesses)
