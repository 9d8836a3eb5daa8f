"""
Geodesics and tight weighted graphs
===================================

A weighted graph is tight when every edge is the only lightest path between
its ends.  Exactly then does its betweenness structure give back the graph,
and its geodesics match the geodesics of the structure.
"""

from fractions import Fraction

from betweenness import WeightedGraph, adjacency_graph, betweenness_of_weighted
from betweenness.families import complete_graph, cycle_graph
from betweenness.geodesic import (
    check_prop24,
    is_tight,
    maximal_ordered_sets,
    structure_geodesics,
    tight_edges,
    weighted_geodesics,
)

c4 = cycle_graph(4)
unit = WeightedGraph.unit(c4)
print("unit C4 geodesics 0 -> 2:", weighted_geodesics(unit, 0, 2).paths)

w = WeightedGraph(c4, {(0, 1): Fraction(3, 2), (1, 2): 1, (2, 3): 1, (0, 3): 1})
print("heavier edge 0-1, geodesics 0 -> 2:", weighted_geodesics(w, 0, 2).paths)
b = betweenness_of_weighted(w)
print("structure geodesics 0 -> 2:", structure_geodesics(b, 0, 2).paths)
print("maximal ordered sets:", maximal_ordered_sets(b))

# a triangle whose long side equals the detour is not tight
tri = WeightedGraph(complete_graph(3), {(0, 1): 1, (1, 2): 1, (0, 2): 2})
print("triangle tight:", is_tight(tri), "tight edges:", sorted(tight_edges(tri)))
print("adjacency graph still the triangle:", adjacency_graph(betweenness_of_weighted(tri)) == tri.graph)

report = check_prop24(b, w)
print("geodesic checks:", report.points, "all ok:", report.ok)
