import random
from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest

from betweenness.core import Graph, WeightedGraph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph(len(index), frozenset((index[u], index[v]) for u, v in h.edges))


def atlas_connected(max_n: int):
    """One representative of every connected unlabeled graph with 1..max_n vertices."""
    return [
        from_nx(h)
        for h in nx.graph_atlas_g()
        if 0 < h.number_of_nodes() <= max_n and nx.is_connected(h)
    ]


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    pairs = list(combinations(range(n), 2))
    while True:
        g = Graph(n, frozenset(e for e in pairs if rng.random() < p))
        if g.is_connected():
            return g


def random_weighted_graph(rng: random.Random, n: int, weights=None, p: float = 0.5) -> WeightedGraph:
    """Connected weighted graph with weights drawn from ``weights`` (quarters in [1/2, 2] by default)."""
    if weights is None:
        weights = [Fraction(k, 4) for k in range(2, 9)]
    g = random_connected_graph(rng, n, p)
    return WeightedGraph(g, {e: rng.choice(weights) for e in g.edges})


def floyd_warshall(w: WeightedGraph):
    n = w.n
    inf = None
    d = [[Fraction(0) if i == j else inf for j in range(n)] for i in range(n)]
    for (u, v), wt in w.weights.items():
        d[u][v] = d[v][u] = wt
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] is not None and d[k][j] is not None:
                    via = d[i][k] + d[k][j]
                    if d[i][j] is None or via < d[i][j]:
                        d[i][j] = via
    return d


@pytest.fixture
def rng():
    return random.Random(20240611)
