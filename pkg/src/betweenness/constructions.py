"""Weighted-graph constructions producing non-graphic representations.

Each generator returns :class:`ConstructionResult` objects whose ``claims``
were all re-checked by direct computation before returning; a failed check
raises :class:`ConstructionError`.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .core import (
    BetweennessStructure,
    Graph,
    WeightedGraph,
    adjacency_graph,
    betweenness_of_graph,
    betweenness_of_weighted,
    edge,
    is_extension,
)
from .errors import (
    BadEpsilon,
    DisconnectedGraph,
    IsBlockGraph,
    NotDistanceHereditary,
    PathIsGeodesic,
    PathNotInduced,
    TooSmall,
)
from .families import complete_bipartite
from .geodesic import is_tight, path_is_geodesic, weighted_geodesics
from .recognition import find_c4_or_diamond, is_block_graph, is_distance_hereditary


class ConstructionError(RuntimeError):
    """A guaranteed property of a construction failed to hold."""


@dataclass
class ConstructionResult:
    weighted: WeightedGraph
    structure: BetweennessStructure
    claims: list[str] = field(default_factory=list)

    def require(self, claim: str, ok: bool) -> None:
        if not ok:
            raise ConstructionError(f"claim failed: {claim}")
        self.claims.append(claim)


def lemma31_weighting(g: Graph, p: Sequence[int], eps=None) -> ConstructionResult:
    """Make the induced, non-shortest path ``p`` the unique lightest route.

    Edges of ``p`` get weight ``eps`` (default ``1/(2|p|)``), all others 1.
    The induced structure has adjacency graph ``g`` yet is incomparable with
    ``B(g)``.
    """
    if not g.is_connected():
        raise DisconnectedGraph("graph is not connected")
    p = tuple(p)
    if not g.is_induced_path(p):
        raise PathNotInduced(f"{p} is not an induced path")
    if path_is_geodesic(g, p):
        raise PathIsGeodesic(f"{p} is already a shortest path")
    length = len(p) - 1
    eps = Fraction(1, 2 * length) if eps is None else Fraction(eps)
    if not 0 < eps < Fraction(1, length):
        raise BadEpsilon(f"eps must lie in (0, 1/{length}), got {eps}")

    on_path = {edge(a, b) for a, b in zip(p, p[1:])}
    w = WeightedGraph(g, {e: eps if e in on_path else Fraction(1) for e in g.edges})
    b = betweenness_of_weighted(w)
    bg = betweenness_of_graph(g)
    res = ConstructionResult(w, b)
    res.require("W is tight", is_tight(w))
    res.require("G(B) = G", adjacency_graph(b) == g)
    res.require("B is not an extension of B(G)", not is_extension(b, bg))
    res.require("B(G) is not an extension of B", not is_extension(bg, b))
    res.require(
        "P is the unique geodesic between its endpoints in W",
        weighted_geodesics(w, p[0], p[-1]).paths == (p,),
    )
    return res


def step2_weighting(g: Graph) -> ConstructionResult:
    """Second representation of a distance-hereditary graph that is not a block graph.

    Finds the first induced C4 or diamond ``x, y, u, v`` (``{x, y}`` a
    non-edge) and raises the weight of edge ``{x, u}`` to 3/2.
    """
    if not g.is_connected():
        raise DisconnectedGraph("graph is not connected")
    if is_block_graph(g).holds:
        raise IsBlockGraph("block graphs have a single representation")
    if not is_distance_hereditary(g).holds:
        raise NotDistanceHereditary("graph is not distance-hereditary")
    found = find_c4_or_diamond(g)
    if found is None:
        raise ConstructionError("no induced C4 or diamond in a non-block DH graph")
    kind, (x, y, u, v) = found
    heavy = edge(x, u)
    w = WeightedGraph(
        g, {e: Fraction(3, 2) if e == heavy else Fraction(1) for e in g.edges}
    )
    b = betweenness_of_weighted(w)
    bg = betweenness_of_graph(g)
    res = ConstructionResult(w, b)
    res.claims.append(f"H = {kind} on x={x}, y={y}, u={u}, v={v}")
    res.require("W is tight", is_tight(w))
    res.require("G(B) = G", adjacency_graph(b) == g)
    res.require(f"({x} {u} {y}) holds in B(G)", bg.between(x, u, y))
    res.require(f"({x} {u} {y}) fails in B(W)", not b.between(x, u, y))
    res.require("B != B(G)", b != bg)
    return res


def bipartite_family(n: int) -> list[ConstructionResult]:
    """Representations of the balanced complete bipartite graph from {1, 2} weightings.

    Vertex 0 and vertex ``n // 2`` (the first of each class) keep weight 1 on
    all their edges; every other edge takes each weight in {1, 2}.
    """
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    a = n // 2
    g = complete_bipartite(a, n - a)
    fixed = {0, a}
    free = sorted(e for e in g.edges if not fixed & set(e))
    results = []
    for choice in product((1, 2), repeat=len(free)):
        weights = {e: Fraction(1) for e in g.edges}
        weights.update((e, Fraction(c)) for e, c in zip(free, choice))
        w = WeightedGraph(g, weights)
        res = ConstructionResult(w, betweenness_of_weighted(w))
        res.require("W is tight", is_tight(w))
        res.require("G(B) = K_{a,b}", adjacency_graph(res.structure) == g)
        results.append(res)
    distinct = {r.structure for r in results}
    if len(distinct) != len(results):
        raise ConstructionError(
            f"only {len(distinct)} distinct structures among {len(results)} weightings"
        )
    for r in results:
        r.claims.append(f"pairwise distinct among {len(results)}")
    return results


def bipartite_lower_bound(n: int) -> int:
    """2 ** (floor(n/2) * ceil(n/2) - n + 1)."""
    return 2 ** ((n // 2) * (n - n // 2) - n + 1)
