"""Named small graphs used throughout tests, demos and the constructions."""

from __future__ import annotations

from itertools import combinations

from .core import Graph


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with classes ``0..a-1`` and ``a..a+b-1``."""
    return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def diamond_graph() -> Graph:
    """The 4-cycle 0-2-1-3 with chord {2, 3}; {0, 1} is the only non-edge."""
    return Graph(4, frozenset([(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))


def bowtie_graph() -> Graph:
    """Two triangles sharing vertex 2."""
    return Graph(5, frozenset([(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]))
