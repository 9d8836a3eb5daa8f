"""Graphs, weighted graphs, finite metric spaces and betweenness structures.

Points and vertices are always the integers ``0 .. n-1``.  All distances are
exact (``int`` or :class:`fractions.Fraction`); nothing in here touches
floating point.

A betweenness relation is stored canonically: only triples ``(x, y, z)`` of
pairwise distinct points with ``x < z`` are kept, meaning "``y`` lies between
``x`` and ``z``".  The mirrored triple ``(z, y, x)`` and the trivial
betweennesses ``(x x z)`` are implied and never stored.
"""

from __future__ import annotations

import heapq
from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from types import MappingProxyType

from .errors import (
    DegenerateTriple,
    DisconnectedGraph,
    EmptySubset,
    SizeMismatch,
    TrichotomyViolation,
)

Edge = tuple[int, int]
Triple = tuple[int, int, int]
Path = tuple[int, ...]


def edge(u: int, v: int) -> Edge:
    """Return the unordered pair ``{u, v}`` as a sorted tuple."""
    return (u, v) if u < v else (v, u)


def canonical_triple(x: int, y: int, z: int) -> Triple:
    return (x, y, z) if x < z else (z, y, x)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on ``0 .. n-1``."""

    n: int
    edges: frozenset[Edge] = frozenset()
    _adj: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        norm = set()
        adj = [set() for _ in range(n)]
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            norm.add(edge(u, v))
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def distances_from(self, source: int) -> list[int | None]:
        """Hop distances from ``source``; ``None`` marks unreachable vertices."""
        dist: list[int | None] = [None] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in self._adj[u]:
                if dist[v] is None:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def is_connected(self, vertices: Iterable[int] | None = None) -> bool:
        """Connectivity of the whole graph, or of the subgraph induced by ``vertices``."""
        if vertices is None:
            return None not in self.distances_from(0)
        keep = set(vertices)
        if not keep:
            return False
        start = next(iter(keep))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in self._adj[u]:
                if v in keep and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen == keep

    def induced_edges(self, vertices: Iterable[int]) -> set[Edge]:
        vs = set(vertices)
        return {e for e in self.edges if e[0] in vs and e[1] in vs}

    def is_path(self, path: Sequence[int]) -> bool:
        """True when ``path`` is a walk through distinct, consecutively adjacent vertices."""
        if len(set(path)) != len(path) or not path:
            return False
        return all(self.has_edge(a, b) for a, b in zip(path, path[1:]))

    def is_induced_path(self, path: Sequence[int]) -> bool:
        if not self.is_path(path):
            return False
        return len(self.induced_edges(path)) == len(path) - 1


@dataclass(frozen=True, eq=True)
class WeightedGraph:
    """Connected graph whose edges carry positive exact rational weights."""

    graph: Graph
    weights: Mapping[Edge, Fraction]

    def __post_init__(self):
        g = self.graph
        norm = {}
        for (u, v), w in self.weights.items():
            e = edge(u, v)
            if e not in g.edges:
                raise ValueError(f"weight given for non-edge {e}")
            if isinstance(w, float):
                raise TypeError("weights must be exact (int, Fraction or 'p/q' string)")
            w = Fraction(w)
            if w <= 0:
                raise ValueError(f"weight of {e} must be positive, got {w}")
            norm[e] = w
        missing = g.edges - norm.keys()
        if missing:
            raise ValueError(f"edges without weight: {sorted(missing)}")
        if not g.is_connected():
            raise DisconnectedGraph("weighted graph must be connected")
        object.__setattr__(self, "weights", MappingProxyType(dict(sorted(norm.items()))))

    def __hash__(self):
        return hash((self.graph, tuple(self.weights.items())))

    @classmethod
    def from_edges(cls, n: int, weights: Mapping[Edge, object]) -> WeightedGraph:
        return cls(Graph(n, frozenset(weights)), dict(weights))

    @classmethod
    def unit(cls, g: Graph) -> WeightedGraph:
        return cls(g, {e: Fraction(1) for e in g.edges})

    @property
    def n(self) -> int:
        return self.graph.n

    def weight(self, u: int, v: int) -> Fraction:
        return self.weights[edge(u, v)]

    def path_weight(self, path: Sequence[int]) -> Fraction:
        return sum((self.weight(a, b) for a, b in zip(path, path[1:])), Fraction(0))


@dataclass(frozen=True)
class MetricSpace:
    """Finite metric space given by an exact distance matrix."""

    n: int
    d: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError("metric space needs at least one point")
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.d)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"distance matrix must be {n}x{n}")
        for x in range(n):
            if rows[x][x] != 0:
                raise ValueError(f"d({x},{x}) must be 0")
            for y in range(x + 1, n):
                if rows[x][y] != rows[y][x]:
                    raise ValueError(f"d is not symmetric at ({x},{y})")
                if rows[x][y] <= 0:
                    raise ValueError(f"d({x},{y}) must be positive")
        for x, y, z in permutations(range(n), 3):
            if rows[x][z] > rows[x][y] + rows[y][z]:
                raise ValueError(f"triangle inequality fails for ({x},{y},{z})")
        object.__setattr__(self, "d", rows)

    def __call__(self, x: int, y: int) -> Fraction:
        return self.d[x][y]

    def scaled(self, factor) -> MetricSpace:
        factor = Fraction(factor)
        return MetricSpace(self.n, tuple(tuple(v * factor for v in row) for row in self.d))


@dataclass(frozen=True)
class BetweennessStructure:
    """A point set ``0 .. n-1`` with a canonical betweenness relation.

    Triples may be given in either orientation; they are stored with the outer
    points ascending.  Degenerate triples and trichotomy violations raise.
    """

    n: int
    triples: frozenset[Triple] = frozenset()

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"point count must be a positive integer, got {n!r}")
        canon = set()
        middle_of: dict[frozenset[int], int] = {}
        for t in self.triples:
            x, y, z = t
            if not all(isinstance(p, int) and 0 <= p < n for p in t):
                raise ValueError(f"triple {tuple(t)} out of range for n={n}")
            if len({x, y, z}) != 3:
                raise DegenerateTriple(f"triple {tuple(t)} repeats a point")
            key = frozenset(t)
            prev = middle_of.setdefault(key, y)
            if prev != y:
                raise TrichotomyViolation(
                    f"points {sorted(key)} have two middles: {prev} and {y}"
                )
            canon.add(canonical_triple(x, y, z))
        object.__setattr__(self, "triples", frozenset(canon))

    def between(self, x: int, y: int, z: int) -> bool:
        """``(x y z)``: is ``y`` between ``x`` and ``z``, trivial cases included."""
        if y == x or y == z:
            return True
        if x == z:
            return False
        return canonical_triple(x, y, z) in self.triples

    def middle(self, a: int, b: int, c: int) -> int | None:
        """The point of ``{a, b, c}`` lying between the other two, if any."""
        for x, y, z in ((b, a, c), (a, b, c), (a, c, b)):
            if canonical_triple(x, y, z) in self.triples:
                return y
        return None

    def sorted_triples(self) -> list[Triple]:
        return sorted(self.triples)


def _metric_from_rows(rows) -> MetricSpace:
    return MetricSpace(len(rows), tuple(tuple(Fraction(v) for v in r) for r in rows))


def _hop_matrix(g: Graph) -> list[list[int]]:
    rows = [g.distances_from(s) for s in range(g.n)]
    if any(None in r for r in rows):
        raise DisconnectedGraph("graph is not connected")
    return rows


def graph_metric(g: Graph) -> MetricSpace:
    """Shortest-path (hop count) metric of a connected graph."""
    return _metric_from_rows(_hop_matrix(g))


def _dijkstra(w: WeightedGraph, source: int) -> list[Fraction | None]:
    g = w.graph
    dist: list[Fraction | None] = [None] * g.n
    dist[source] = Fraction(0)
    heap = [(Fraction(0), source)]
    done = [False] * g.n
    while heap:
        du, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v in g.neighbors(u):
            nd = du + w.weight(u, v)
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def weighted_distances(w: WeightedGraph) -> list[list[Fraction]]:
    rows = [_dijkstra(w, s) for s in range(w.n)]
    if any(None in r for r in rows):
        raise DisconnectedGraph("weighted graph is not connected")
    return rows


def weighted_graph_metric(w: WeightedGraph) -> MetricSpace:
    """Metric induced by a weighted graph: weight of a lightest path."""
    return _metric_from_rows(weighted_distances(w))


def _betweenness_from_matrix(n: int, d) -> BetweennessStructure:
    triples = []
    for a, b, c in combinations(range(n), 3):
        if d[a][c] == d[a][b] + d[b][c]:
            triples.append((a, b, c))
        elif d[b][c] == d[b][a] + d[a][c]:
            triples.append((b, a, c))
        elif d[a][b] == d[a][c] + d[c][b]:
            triples.append((a, c, b))
    return BetweennessStructure(n, frozenset(triples))


def betweenness_of_metric(m: MetricSpace) -> BetweennessStructure:
    return _betweenness_from_matrix(m.n, m.d)


def betweenness_of_graph(g: Graph) -> BetweennessStructure:
    return _betweenness_from_matrix(g.n, _hop_matrix(g))


def betweenness_of_weighted(w: WeightedGraph) -> BetweennessStructure:
    return _betweenness_from_matrix(w.n, weighted_distances(w))


def adjacency_graph(b: BetweennessStructure) -> Graph:
    """Graph joining every pair of points with nothing between them."""
    blocked = {(x, z) for x, _, z in b.triples}
    edges = {p for p in combinations(range(b.n), 2) if p not in blocked}
    return Graph(b.n, frozenset(edges))


def _subset(ys: Iterable[int], n: int) -> list[int]:
    pts = sorted(set(ys))
    if not pts:
        raise EmptySubset("subset must be nonempty")
    if pts[0] < 0 or pts[-1] >= n:
        raise ValueError(f"subset {pts} out of range for n={n}")
    return pts


def substructure(b: BetweennessStructure, ys: Iterable[int]) -> BetweennessStructure:
    """Restriction to ``ys``, relabelled ``0 .. |ys|-1`` in increasing order."""
    pts = _subset(ys, b.n)
    index = {p: i for i, p in enumerate(pts)}
    kept = {
        (index[x], index[y], index[z])
        for x, y, z in b.triples
        if x in index and y in index and z in index
    }
    return BetweennessStructure(len(pts), frozenset(kept))


def subspace(m: MetricSpace, ys: Iterable[int]) -> MetricSpace:
    pts = _subset(ys, m.n)
    return MetricSpace(len(pts), tuple(tuple(m.d[x][y] for y in pts) for x in pts))


def is_extension(a: BetweennessStructure, b: BetweennessStructure) -> bool:
    """``a`` extends ``b``: every triple of ``b`` also belongs to ``a``."""
    if a.n != b.n:
        raise SizeMismatch(f"structures on {a.n} and {b.n} points")
    return a.triples >= b.triples


def ordered_triples(seq: Sequence[int]) -> set[Triple]:
    """Canonical triples of the ordered structure ``[seq[0], ..., seq[-1]]``."""
    return {canonical_triple(x, y, z) for x, y, z in combinations(seq, 3)}


def restricted_triples(b: BetweennessStructure, ys: Iterable[int]) -> set[Triple]:
    """Triples of ``b`` lying inside ``ys``, in the original labels."""
    keep = set(ys)
    return {t for t in b.triples if t[0] in keep and t[1] in keep and t[2] in keep}


def is_ordered_as(b: BetweennessStructure, seq: Sequence[int]) -> bool:
    """True when ``b`` restricted to ``seq`` equals ``[seq[0], ..., seq[-1]]``."""
    return restricted_triples(b, seq) == ordered_triples(seq)


def _oriented(seq: Sequence[int]) -> Path:
    seq = tuple(seq)
    return seq if seq[0] <= seq[-1] else seq[::-1]


def _ordering_by_permutation(b: BetweennessStructure, pts: Sequence[int]) -> Path | None:
    for perm in permutations(pts):
        if perm[0] < perm[-1] and is_ordered_as(b, perm):
            return perm
    return None


def is_ordered(b: BetweennessStructure, ys: Iterable[int]) -> Path | None:
    """Find an ordering ``y1 .. yl`` with ``b|ys = [y1, .., yl]``.

    Returns the ordering (first point smaller than last) or ``None``.  Sets of
    at most two points are always ordered.
    """
    pts = _subset(ys, b.n)
    if len(pts) <= 2:
        return tuple(pts)
    inside = restricted_triples(b, pts)
    # an ordered set has a middle for every 3-subset
    if len(inside) != comb(len(pts), 3):
        return None
    middles = {t[1] for t in inside}
    for end in pts:
        if end in middles:
            continue
        rest = [p for p in pts if p != end]
        rest.sort(key=lambda y: sum(b.between(end, z, y) for z in rest if z != y))
        seq = (end, *rest)
        if is_ordered_as(b, seq):
            return _oriented(seq)
    if len(pts) <= 8:
        return _ordering_by_permutation(b, pts)
    return None
