"""Exhaustive enumeration of all representations of small graphs.

A representation of a connected graph ``G`` is a metrizable betweenness
structure whose adjacency graph is ``G``.  The search assigns every 3-subset
of the vertices one of four states (no middle, or one of its three points as
the middle) and cuts branches with three sound rules:

a. an edge ``{x, z}`` of ``G`` never has a middle;
b. a non-edge needs at least one middle, checked once its last 3-subset is set;
c. ``(x y z)`` and ``(x z w)`` force ``(x y w)`` and ``(y z w)``; this is
   checked on every 4-subset as soon as its four 3-subsets are set.

Surviving complete assignments go to the exact LP in
:mod:`betweenness.metrizability`, which has the final word.
"""

from __future__ import annotations

from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

from .core import (
    BetweennessStructure,
    Graph,
    WeightedGraph,
    adjacency_graph,
    betweenness_of_graph,
    is_extension,
)
from .errors import BudgetExceeded, DisconnectedGraph, TooLarge
from .geodesic import check_prop24
from .metrizability import is_metrizable
from .recognition import is_block_graph, is_distance_hereditary

NONE = -1
# search nodes allowed at n = 6 unless the caller says otherwise
DEFAULT_BUDGET = 2_000_000
# an exact LP check on six points takes about as long as this many search nodes
LP_COST = 10_000
MAX_GRAPH_ORDER = 7


@dataclass(frozen=True)
class RepresentationReport:
    """All representations of one graph; the flags are derived from the list."""

    graph: Graph
    representations: tuple[BetweennessStructure, ...]
    graphic: BetweennessStructure = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "graphic", betweenness_of_graph(self.graph))
        if self.graphic not in self.representations:
            raise RuntimeError("the graph's own betweenness structure is missing")

    @property
    def count(self) -> int:
        return len(self.representations)

    @property
    def is_uniquely_representable(self) -> bool:
        return self.representations == (self.graphic,)

    @property
    def bounds_below(self) -> bool:
        """Every representation ``B`` satisfies ``B(G) <= B``, i.e. B(G)'s relation contains B's."""
        return all(is_extension(self.graphic, b) for b in self.representations)

    @property
    def bounds_above(self) -> bool:
        return all(is_extension(b, self.graphic) for b in self.representations)


class _Search:
    """Pruned depth-first search over 3-subset states for one graph."""

    def __init__(self, g: Graph, prune: bool = True):
        self.g = g
        self.prune = prune
        n = g.n
        self.triangles = list(combinations(range(n), 3))
        tindex = {t: i for i, t in enumerate(self.triangles)}
        self.tindex = tindex

        # rule (a): middles whose outer pair is a non-edge
        self.options = []
        for t in self.triangles:
            opts = [NONE]
            for m in t:
                outer = tuple(p for p in t if p != m)
                if not prune or not g.has_edge(*outer):
                    opts.append(m)
            self.options.append(opts)

        # rule (b): non-edges whose last 3-subset is triangle i
        self.closing = [[] for _ in self.triangles]
        for pair in combinations(range(n), 2):
            if g.has_edge(*pair):
                continue
            holders = [tindex[tuple(sorted(pair + (y,)))] for y in range(n) if y not in pair]
            if holders:
                self.closing[max(holders)].append((pair, holders))

        # rule (c): 4-subsets completed by triangle i, with their allowed states
        self.quads = [[] for _ in self.triangles]
        for quad in combinations(range(n), 4):
            tris = [tindex[t] for t in combinations(quad, 3)]
            self.quads[max(tris)].append((tris, _allowed_quad_states(quad)))

        self.nodes = 0

    def _consistent(self, i: int, state: list[int]) -> bool:
        for pair, holders in self.closing[i]:
            x, z = pair
            if not any(
                state[h] != NONE and state[h] not in pair for h in holders
            ):
                return False
        for tris, allowed in self.quads[i]:
            if tuple(state[t] for t in tris) not in allowed:
                return False
        return True

    def run(self, prefix=(), budget=None) -> Iterator[list[int]]:
        """Yield complete assignments extending ``prefix``."""
        state = list(prefix) + [NONE] * (len(self.triangles) - len(prefix))
        if self.prune:
            for i in range(len(prefix)):
                if state[i] not in self.options[i] or not self._consistent(i, state):
                    return
        yield from self._extend(len(prefix), state, budget)

    def charge(self, cost: int, budget: int | None) -> None:
        self.nodes += cost
        if budget is not None and self.nodes > budget:
            raise BudgetExceeded(f"search exceeded {budget} nodes", self.nodes)

    def _extend(self, i, state, budget):
        if i == len(self.triangles):
            yield list(state)
            return
        for m in self.options[i]:
            self.charge(1, budget)
            state[i] = m
            if self.prune and not self._consistent(i, state):
                continue
            yield from self._extend(i + 1, state, budget)
        state[i] = NONE

    def structure(self, state) -> BetweennessStructure:
        triples = []
        for t, m in zip(self.triangles, state):
            if m != NONE:
                x, z = (p for p in t if p != m)
                triples.append((x, m, z))
        return BetweennessStructure(self.g.n, frozenset(triples))


@lru_cache(maxsize=None)
def _allowed_quad_states(quad: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """State tuples of the four 3-subsets of ``quad`` that obey the inference rule."""
    tris = list(combinations(quad, 3))
    allowed = set()
    for states in product(*[(NONE,) + t for t in tris]):
        mid = dict(zip(map(frozenset, tris), states))

        def between(x, y, z):
            return mid[frozenset((x, y, z))] == y

        if all(
            between(x, y, w) and between(y, z, w)
            for x, y, z, w in permutations(quad)
            if between(x, y, z) and between(x, z, w)
        ):
            allowed.add(states)
    return frozenset(allowed)


def _check_input(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraph("graph is not connected")
    if g.n > 6:
        raise TooLarge(f"representation search supports n <= 6, got {g.n}")


def _collect(search: _Search, states, found=None, budget=None) -> list[BetweennessStructure]:
    found = [] if found is None else found
    for state in states:
        b = search.structure(state)
        if not search.prune and adjacency_graph(b) != search.g:
            continue
        search.charge(LP_COST, budget)
        if is_metrizable(b) is not None:
            found.append(b)
    return found


def _subtree(g: Graph, prefix: tuple[int, ...]) -> list[BetweennessStructure]:
    search = _Search(g)
    return _collect(search, search.run(prefix))


def enumerate_representations(
    g: Graph,
    prune: bool = True,
    budget: int | None = None,
    workers: int = 1,
) -> RepresentationReport:
    """Every representation of ``g``.

    ``prune=False`` runs the plain sweep over all ``4**C(n,3)`` assignments
    (the oracle for the pruning rules).  At ``n = 6`` the search is limited to
    ``budget`` nodes (``DEFAULT_BUDGET`` when unset) and raises
    :class:`BudgetExceeded` when it runs out; each candidate handed to the LP
    is charged ``LP_COST`` nodes.
    """
    _check_input(g)
    if budget is None and g.n >= 6:
        budget = DEFAULT_BUDGET
    if prune and budget is None and workers == 1:
        return _cached_report(g)
    search = _Search(g, prune)
    if workers > 1 and prune and budget is None and len(search.triangles) >= 2:
        # fixed states of the first two 3-subsets form the parallel subtrees
        prefixes = list(product(search.options[0], search.options[1]))
        with ProcessPoolExecutor(workers) as pool:
            parts = pool.map(_subtree, [g] * len(prefixes), prefixes)
            found = [b for part in parts for b in part]
    else:
        found = []
        try:
            _collect(search, search.run(budget=budget), found, budget)
        except BudgetExceeded as exc:
            exc.found = list(found)
            raise
    return RepresentationReport(g, tuple(sorted(found, key=lambda b: b.sorted_triples())))


@lru_cache(maxsize=None)
def _cached_report(g: Graph) -> RepresentationReport:
    search = _Search(g)
    found = _collect(search, search.run())
    return RepresentationReport(g, tuple(sorted(found, key=lambda b: b.sorted_triples())))


def connected_labeled_graphs(n: int) -> Iterator[Graph]:
    """All connected graphs on ``0..n-1``, ordered by edge bitmask."""
    if n > MAX_GRAPH_ORDER:
        raise TooLarge(f"labeled enumeration supports n <= {MAX_GRAPH_ORDER}, got {n}")
    if n < 1:
        raise ValueError("n must be positive")
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        nbr = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                nbr[u] |= 1 << v
                nbr[v] |= 1 << u
        seen = frontier = 1
        while frontier:
            reach = 0
            for v in range(n):
                if frontier >> v & 1:
                    reach |= nbr[v]
            frontier = reach & ~seen
            seen |= frontier
        if seen == full:
            yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def all_connected_graphs(n_max: int) -> list[Graph]:
    return [g for n in range(1, n_max + 1) for g in connected_labeled_graphs(n)]


@dataclass
class VerdictRow:
    graph: Graph
    values: dict[str, bool]
    count: int | None = None

    @property
    def consistent(self) -> bool:
        return len(set(self.values.values())) <= 1


@dataclass
class TheoremCheck:
    name: str
    rows: list[VerdictRow]

    @property
    def counterexamples(self) -> list[VerdictRow]:
        return [r for r in self.rows if not r.consistent]

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def _check_n_max(n_max: int) -> None:
    if n_max > 5:
        raise TooLarge(f"theorem sweeps support n <= 5, got {n_max}")


def _reports(graphs: list[Graph], workers: int) -> list[RepresentationReport]:
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_cached_report, graphs, chunksize=16))
    return [_cached_report(g) for g in graphs]


def _row_theorem1(g, rep):
    return VerdictRow(
        g,
        {"bounds_below": rep.bounds_below, "distance_hereditary": is_distance_hereditary(g).holds},
        rep.count,
    )


def _row_theorem2(g, rep):
    return VerdictRow(
        g,
        {
            "uniquely_representable": rep.count == 1,
            "block_graph": is_block_graph(g).holds,
            "bounds_above": rep.bounds_above,
        },
        rep.count,
    )


def verify_theorem1(n_max: int, workers: int = 1) -> TheoremCheck:
    """bounds-below <=> distance-hereditary, over every connected labeled graph."""
    _check_n_max(n_max)
    graphs = all_connected_graphs(n_max)
    rows = [_row_theorem1(g, r) for g, r in zip(graphs, _reports(graphs, workers))]
    return TheoremCheck("theorem1", rows)


def verify_theorem2(n_max: int, workers: int = 1) -> TheoremCheck:
    """unique <=> block graph <=> bounds-above, over every connected labeled graph."""
    _check_n_max(n_max)
    graphs = all_connected_graphs(n_max)
    rows = [_row_theorem2(g, r) for g, r in zip(graphs, _reports(graphs, workers))]
    return TheoremCheck("theorem2", rows)


def verify_dress(n_max: int, workers: int = 1) -> TheoremCheck:
    """Every labeled tree has exactly one representation."""
    _check_n_max(n_max)
    trees = [g for g in all_connected_graphs(n_max) if len(g.edges) == g.n - 1]
    rows = [
        VerdictRow(g, {"tree": True, "unique": r.count == 1}, r.count)
        for g, r in zip(trees, _reports(trees, workers))
    ]
    return TheoremCheck("dress", rows)


def verify_prop24(n_max: int, workers: int = 1) -> TheoremCheck:
    """The geodesic facts for ``B(g)`` of every connected graph, with point 6 over all representations."""
    _check_n_max(n_max)
    graphs = all_connected_graphs(n_max)
    rows = []
    for g, rep in zip(graphs, _reports(graphs, workers)):
        result = check_prop24(rep.graphic, WeightedGraph.unit(g), rep.representations)
        values = {f"point{k}": v for k, v in result.points.items() if v is not None}
        values["expected"] = True
        rows.append(VerdictRow(g, values, rep.count))
    return TheoremCheck("prop24", rows)
