"""
Building other representations of a graph
=========================================

Three weightings give structures whose adjacency graph is the original graph
but which differ from its own betweenness.  Every stated property is checked
when the result is built.
"""

from betweenness.constructions import (
    bipartite_family,
    bipartite_lower_bound,
    lemma31_weighting,
    step2_weighting,
)
from betweenness.families import cycle_graph, diamond_graph

# a long induced path made lighter than the short way round
res = lemma31_weighting(cycle_graph(5), (0, 1, 2, 3))
print("C5 light path weights:", {e: str(v) for e, v in sorted(res.weighted.weights.items())})
for claim in res.claims:
    print("  ok:", claim)

# one edge of a square raised to 3/2
for g in (cycle_graph(4), diamond_graph()):
    res = step2_weighting(g)
    print(res.claims[0], "->", res.structure.sorted_triples())

# {1, 2} weights on complete bipartite graphs
for n in (4, 5, 6):
    family = bipartite_family(n)
    print(f"n={n}: {len(family)} distinct representations (bound {bipartite_lower_bound(n)})")
