"""
All representations of small graphs
===================================

The search assigns each 3-subset a middle point or none, prunes with the
adjacency graph and a sound inference rule, and lets the LP decide every
complete candidate.  Sweeping all connected labeled graphs checks the two
characterizations: a single representation exactly for block graphs, and
B(G) below every representation exactly for distance-hereditary graphs.
"""

import time

from betweenness.enumeration import enumerate_representations, verify_theorem1, verify_theorem2
from betweenness.errors import BudgetExceeded
from betweenness.families import complete_bipartite, cycle_graph, diamond_graph

for name, g in [("C4", cycle_graph(4)), ("diamond", diamond_graph()), ("C5", cycle_graph(5))]:
    rep = enumerate_representations(g)
    print(f"{name}: {rep.count} representations, below={rep.bounds_below} above={rep.bounds_above}")

t = time.time()
for check in (verify_theorem1(5), verify_theorem2(5)):
    print(f"{check.name}: {len(check.rows)} graphs, {len(check.counterexamples)} counterexamples")
print(f"sweeps took {time.time() - t:.1f}s")

# six points are best effort: the search stops at its node budget
try:
    enumerate_representations(complete_bipartite(3, 3), budget=200_000)
except BudgetExceeded as exc:
    print(f"K3,3: stopped after {exc.explored} nodes with {len(exc.found)} representations so far")
