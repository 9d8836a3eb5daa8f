"""
Block graphs and distance-hereditary graphs
===========================================

Block graphs (every block a clique) are the diamond-free chordal graphs.
Distance-hereditary graphs are those where every induced path is shortest.
Each negative answer comes with a witness.
"""

from betweenness.families import bowtie_graph, complete_bipartite, cycle_graph, diamond_graph
from betweenness.recognition import classify, find_c4_or_diamond, induced_paths

for name, g in [
    ("bowtie", bowtie_graph()),
    ("C4", cycle_graph(4)),
    ("diamond", diamond_graph()),
    ("K2,3", complete_bipartite(2, 3)),
    ("C5", cycle_graph(5)),
]:
    rep = classify(g)
    print(
        f"{name:8} block={rep.is_block_graph!s:5} chordal={rep.is_chordal!s:5} "
        f"diamond={rep.has_diamond!s:5} dh={rep.is_distance_hereditary!s:5} {rep.witnesses}"
    )

# in a block graph every pair is joined by exactly one induced path
print("bowtie 0 -> 4:", induced_paths(bowtie_graph(), 0, 4))
print("C5 0 -> 2:", induced_paths(cycle_graph(5), 0, 2))

# the labelled square used to build a second representation
print("square in K2,3:", find_c4_or_diamond(complete_bipartite(2, 3)))
