"""
Betweenness of a graph and its adjacency graph
==============================================

A point y lies between x and z when d(x, z) = d(x, y) + d(y, z).  Pairs with
nothing between them form the adjacency graph, and for an unweighted
connected graph that recovers the graph itself.
"""

from fractions import Fraction

from betweenness import (
    WeightedGraph,
    adjacency_graph,
    betweenness_of_graph,
    betweenness_of_weighted,
    is_extension,
)
from betweenness.core import is_ordered
from betweenness.families import cycle_graph, path_graph

c4 = cycle_graph(4)
b = betweenness_of_graph(c4)
print("B(C4) triples:", b.sorted_triples())
print("G(B(C4)) == C4:", adjacency_graph(b) == c4)

# make one edge heavier: 0 and 2 now have a single shortest route, through 3
w = WeightedGraph(c4, {(0, 1): Fraction(3, 2), (1, 2): 1, (2, 3): 1, (0, 3): 1})
bw = betweenness_of_weighted(w)
print("weighted triples:", bw.sorted_triples())
print("same adjacency graph:", adjacency_graph(bw) == c4)

# B(C4) holds every triple of the weighted structure, so it extends it
print("B(C4) extends B(W):", is_extension(b, bw))
print("B(W) extends B(C4):", is_extension(bw, b))

# points of a path are ordered along it
print("order of P5:", is_ordered(betweenness_of_graph(path_graph(5)), [3, 0, 4, 1, 2]))
