"""Geodesics in weighted graphs and in betweenness structures, and tightness.

A geodesic of a betweenness structure ``B`` is an induced path of the
adjacency graph ``G(B)`` whose vertex set carries exactly the ordered
structure of the path.  :func:`check_prop24` runs the six standard facts about
these geodesics as executable checks.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .core import (
    BetweennessStructure,
    Edge,
    Graph,
    Path,
    WeightedGraph,
    adjacency_graph,
    betweenness_of_graph,
    canonical_triple,
    betweenness_of_weighted,
    edge,
    is_extension,
    is_ordered,
    is_ordered_as,
    restricted_triples,
    weighted_distances,
)
from .errors import NotTight
from .recognition import _induced_paths


@dataclass(frozen=True)
class GeodesicSet:
    source: int
    target: int
    paths: tuple[Path, ...]

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def vertices(self) -> set[int]:
        return {v for p in self.paths for v in p}


def weighted_geodesics(w: WeightedGraph, x: int, z: int, _dist=None) -> GeodesicSet:
    """All minimum-weight ``x``-``z`` paths, by pruned depth-first search."""
    if x == z:
        return GeodesicSet(x, z, ((x,),))
    dist = _dist if _dist is not None else weighted_distances(w)
    to_z = [dist[v][z] for v in range(w.n)]
    target = to_z[x]
    g = w.graph
    found = []
    path = [x]
    on_path = {x}

    def extend(u, used):
        for v in sorted(g.neighbors(u)):
            if v in on_path:
                continue
            nw = used + w.weight(u, v)
            # any completion from v costs at least dist(v, z)
            if nw + to_z[v] > target:
                continue
            if v == z:
                found.append(tuple(path) + (z,))
                continue
            path.append(v)
            on_path.add(v)
            extend(v, nw)
            path.pop()
            on_path.discard(v)

    extend(x, Fraction(0))
    return GeodesicSet(x, z, tuple(sorted(found)))


def structure_geodesics(
    b: BetweennessStructure, x: int, z: int, _graph: Graph | None = None
) -> GeodesicSet:
    """Induced ``x``-``z`` paths of ``G(b)`` whose vertex set is ordered along the path."""
    g = _graph if _graph is not None else adjacency_graph(b)
    paths = tuple(p for p in _induced_paths(g, x, z) if is_ordered_as(b, p))
    return GeodesicSet(x, z, paths)


def _lightest_detour(w: WeightedGraph, u: int, v: int) -> Fraction | None:
    """Weight of the lightest ``u``-``v`` path avoiding the edge ``{u, v}``."""
    g = w.graph
    best = {u: Fraction(0)}
    heap = [(Fraction(0), u)]
    done = set()
    while heap:
        du, a = heapq.heappop(heap)
        if a in done:
            continue
        if a == v:
            return du
        done.add(a)
        for c in g.neighbors(a):
            if {a, c} == {u, v}:
                continue
            nd = du + w.weight(a, c)
            if c not in best or nd < best[c]:
                best[c] = nd
                heapq.heappush(heap, (nd, c))
    return None


def tight_edges(w: WeightedGraph) -> set[Edge]:
    """Edges that are the unique lightest path between their endpoints."""
    tight = set()
    for u, v in w.graph.edges:
        detour = _lightest_detour(w, u, v)
        if detour is None or detour > w.weight(u, v):
            tight.add(edge(u, v))
    return tight


def is_tight(w: WeightedGraph) -> bool:
    return len(tight_edges(w)) == len(w.graph.edges)


def maximal_ordered_sets(b: BetweennessStructure) -> list[tuple[int, ...]]:
    """Inclusion-maximal ordered subsets, each as a sorted tuple."""
    n = b.n
    ordered = []
    # largest first, so maximality only needs a superset check against kept sets
    for size in range(n, 0, -1):
        for ys in combinations(range(n), size):
            s = set(ys)
            if any(s < k for k in ordered):
                continue
            if is_ordered(b, ys) is not None:
                ordered.append(s)
    return sorted(tuple(sorted(s)) for s in ordered)


@dataclass
class Prop24Report:
    """Outcome of the six geodesic checks; ``None`` marks a point that was not run."""

    points: dict[int, bool | None] = field(default_factory=dict)
    failures: dict[int, list] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.points.values())

    def fail(self, point: int, detail) -> None:
        self.points[point] = False
        self.failures.setdefault(point, []).append(detail)


def all_structure_geodesics(b: BetweennessStructure) -> dict[tuple[int, int], GeodesicSet]:
    """Geodesic sets of ``b`` for every ordered pair ``x < z``."""
    g = adjacency_graph(b)
    return {(x, z): structure_geodesics(b, x, z, g) for x, z in combinations(range(b.n), 2)}


def _path_structure_triples(p: Path) -> set:
    """Triples of B(P) for the path P, computed from P's own graph metric."""
    k = len(p)
    if k < 3:
        return set()
    local = betweenness_of_graph(Graph(k, frozenset((i, i + 1) for i in range(k - 1))))
    return {canonical_triple(p[x], p[y], p[z]) for x, y, z in local.triples}


def _geodesic_paths(geo: dict) -> set[Path]:
    return {p for gs in geo.values() for p in gs.paths}


def check_prop24(
    b: BetweennessStructure,
    w: WeightedGraph | None = None,
    others: Iterable[BetweennessStructure] = (),
) -> Prop24Report:
    """Verify the six geodesic facts for ``b``.

    Point 4 runs only when the inducing tight weighted graph ``w`` is supplied;
    point 6 runs over the structures in ``others`` that share ``b``'s adjacency
    graph.
    """
    if w is not None:
        if not is_tight(w):
            raise NotTight("the weighted graph is not tight")
        if betweenness_of_weighted(w) != b:
            raise ValueError("the weighted graph does not induce the given structure")
    report = Prop24Report()
    n = b.n
    g = adjacency_graph(b)
    geo = {(x, z): structure_geodesics(b, x, z, g) for x, z in combinations(range(n), 2)}

    report.points[1] = True
    for gs in geo.values():
        for p in gs.paths:
            if restricted_triples(b, p) != _path_structure_triples(p):
                report.fail(1, p)

    report.points[2] = True
    for ys in maximal_ordered_sets(b):
        seq = is_ordered(b, ys)
        if not (g.is_induced_path(seq) and is_ordered_as(b, seq)):
            report.fail(2, ys)

    report.points[3] = True
    for pair, gs in geo.items():
        if not gs.paths:
            report.fail(3, pair)

    if w is None:
        report.points[4] = None
    else:
        report.points[4] = True
        dist = weighted_distances(w)
        for (x, z), gs in geo.items():
            if set(weighted_geodesics(w, x, z, dist).paths) != set(gs.paths):
                report.fail(4, (x, z))

    report.points[5] = True
    for x, z in combinations(range(n), 2):
        on_geodesic = geo[(x, z)].vertices()
        for y in range(n):
            if y in (x, z):
                continue
            if b.between(x, y, z) != (y in on_geodesic):
                report.fail(5, (x, y, z))

    others = [a for a in others if adjacency_graph(a) == g]
    if not others:
        report.points[6] = None
    else:
        report.points[6] = True
        mine = _geodesic_paths(geo)
        for a in others:
            theirs = _geodesic_paths(all_structure_geodesics(a))
            if is_extension(a, b) != (mine <= theirs):
                report.fail(6, sorted(a.triples))
    return report


def extension_order_failures(
    structures: Sequence[BetweennessStructure],
) -> list[tuple[BetweennessStructure, BetweennessStructure]]:
    """Ordered pairs ``(a, b)`` with ``G(a) = G(b)`` where ``a <= b`` disagrees with
    "every geodesic of ``b`` is a geodesic of ``a``".

    Geodesics are computed once per structure, so this scales to all pairs of
    a graph's representations.
    """
    paths = [_geodesic_paths(all_structure_geodesics(b)) for b in structures]
    graphs = [adjacency_graph(b) for b in structures]
    bad = []
    for i, a in enumerate(structures):
        for j, b in enumerate(structures):
            if graphs[i] != graphs[j]:
                continue
            if is_extension(a, b) != (paths[j] <= paths[i]):
                bad.append((a, b))
    return bad


def geodesics_of_graph(g: Graph, x: int, z: int) -> GeodesicSet:
    """Shortest ``x``-``z`` paths of an unweighted graph."""
    return weighted_geodesics(WeightedGraph.unit(g), x, z)


def path_is_geodesic(g: Graph, path: Sequence[int]) -> bool:
    """True when ``path`` is a shortest path between its endpoints in ``g``."""
    return g.distances_from(path[0])[path[-1]] == len(path) - 1
