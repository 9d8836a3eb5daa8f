from itertools import combinations

import networkx as nx
import pytest

from betweenness.core import Graph
from betweenness.enumeration import connected_labeled_graphs
from betweenness.errors import DisconnectedGraph, DisconnectedSubgraph
from betweenness.families import (
    bowtie_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    diamond_graph,
    path_graph,
    star_graph,
)
from betweenness.geodesic import path_is_geodesic
from betweenness.recognition import (
    biconnected_components,
    chordal_by_cycle_search,
    classify,
    find_c4_or_diamond,
    find_induced_cycle,
    has_diamond,
    induced_paths,
    is_block_graph,
    is_chordal,
    is_distance_hereditary,
    is_isometric_subgraph,
    perfect_elimination_ordering,
    unique_induced_path,
)

from conftest import atlas_connected, random_connected_graph, to_nx

C4 = cycle_graph(4)
TREES = [path_graph(5), star_graph(4), Graph(6, frozenset([(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]))]
ATLAS7 = atlas_connected(7)


def test_block_graph_examples():
    for t in TREES:
        assert is_block_graph(t).holds
    assert is_block_graph(complete_graph(4)).holds
    assert is_block_graph(bowtie_graph()).holds
    v = is_block_graph(C4)
    assert not v.holds and set(v.witness) == {0, 1, 2, 3}
    with pytest.raises(DisconnectedGraph):
        is_block_graph(Graph(3, frozenset([(0, 1)])))


def test_chordal_and_diamond_examples():
    v = is_chordal(C4)
    assert not v.holds and sorted(v.witness) == [0, 1, 2, 3]
    assert not has_diamond(C4).holds
    assert is_chordal(diamond_graph()).holds
    d = has_diamond(diamond_graph())
    assert d.holds and set(d.witness) == {0, 1, 2, 3}
    for t in TREES:
        assert is_chordal(t).holds and not has_diamond(t).holds


def test_distance_hereditary_examples():
    v = is_distance_hereditary(cycle_graph(5))
    assert not v.holds
    assert len(v.witness) == 4 and not path_is_geodesic(cycle_graph(5), v.witness)
    assert is_distance_hereditary(C4).holds
    assert is_distance_hereditary(complete_bipartite(2, 3)).holds
    assert is_distance_hereditary(bowtie_graph()).holds


def test_isometric_subgraph_examples():
    assert is_isometric_subgraph(C4, range(4))
    assert is_isometric_subgraph(complete_graph(3), [0, 1])
    # P4 left after deleting a vertex of C5: its ends are at distance 2 in C5
    assert not is_isometric_subgraph(cycle_graph(5), [0, 1, 2, 3])
    # diamond block with a pendant vertex
    g = Graph(5, diamond_graph().edges | {(3, 4)})
    assert is_isometric_subgraph(g, [0, 1, 2, 3])
    with pytest.raises(DisconnectedSubgraph):
        is_isometric_subgraph(path_graph(3), [0, 2])


def test_induced_path_examples():
    g = bowtie_graph()
    for x, y in combinations(range(5), 2):
        assert len(induced_paths(g, x, y)) == 1
        assert unique_induced_path(g, x, y) is not None
    assert len(induced_paths(C4, 0, 2)) == 2
    assert unique_induced_path(C4, 0, 2) is None
    # the long way round has the chord {0, 1}, so only the edge is induced
    assert induced_paths(cycle_graph(5), 0, 1) == [(0, 1)]
    assert sorted(induced_paths(cycle_graph(5), 0, 2)) == [(0, 1, 2), (0, 4, 3, 2)]


def test_find_c4_or_diamond_labels():
    kind, (x, y, u, v) = find_c4_or_diamond(C4)
    assert kind == "C4"
    assert not C4.has_edge(x, y) and u < v
    assert all(C4.has_edge(a, b) for a in (x, y) for b in (u, v))
    kind, (x, y, u, v) = find_c4_or_diamond(diamond_graph())
    assert kind == "diamond" and (x, y) in [(0, 1), (1, 0)] and diamond_graph().has_edge(u, v)
    assert find_c4_or_diamond(bowtie_graph()) is None


def test_biconnected_components_match_networkx(rng):
    # networkx reports no block for a lone vertex, so start at two vertices
    for _ in range(100):
        g = random_connected_graph(rng, rng.randint(2, 8), 0.35)
        ours = sorted(sorted(c) for c in biconnected_components(g))
        theirs = sorted(sorted(c) for c in nx.biconnected_components(to_nx(g)))
        assert ours == theirs


def test_chordal_matches_networkx():
    for g in ATLAS7:
        assert is_chordal(g).holds == nx.is_chordal(to_nx(g))


def test_block_graph_iff_diamond_free_chordal():
    for g in ATLAS7:
        rep = classify(g)
        assert rep.is_block_graph == (rep.is_chordal and not rep.has_diamond), g


def test_block_graphs_are_distance_hereditary():
    for n in range(1, 6):
        for g in connected_labeled_graphs(n):
            if is_block_graph(g).holds:
                assert is_distance_hereditary(g).holds
    for g in atlas_connected(6):
        if is_block_graph(g).holds:
            assert is_distance_hereditary(g).holds


def test_dh_graphs_have_no_long_induced_cycle():
    for g in ATLAS7:
        if is_distance_hereditary(g).holds:
            assert find_induced_cycle(g, 5) is None


def test_block_graphs_have_unique_induced_paths():
    for g in atlas_connected(6):
        if is_block_graph(g).holds:
            for x, y in combinations(range(g.n), 2):
                assert len(induced_paths(g, x, y)) == 1


def test_peo_agrees_with_cycle_search():
    for g in ATLAS7:
        peo = perfect_elimination_ordering(g)
        assert (peo is not None) == chordal_by_cycle_search(g)


def test_distance_hereditary_matches_isometric_definition():
    for g in atlas_connected(6):
        expected = all(
            is_isometric_subgraph(g, s)
            for k in range(2, g.n + 1)
            for s in combinations(range(g.n), k)
            if g.is_connected(s)
        )
        assert is_distance_hereditary(g).holds == expected


def test_witnesses_validate():
    for g in ATLAS7:
        rep = classify(g)
        w = rep.witnesses
        if not rep.is_block_graph:
            block = w["non_clique_block"]
            assert any(set(block) == set(c) for c in biconnected_components(g))
        if not rep.is_chordal:
            cyc = w["induced_cycle"]
            assert len(cyc) >= 4
            assert nx.is_isomorphic(to_nx(g).subgraph(cyc), nx.cycle_graph(len(cyc)))
        if rep.has_diamond:
            assert to_nx(g).subgraph(w["diamond"]).number_of_edges() == 5
        if not rep.is_distance_hereditary:
            p = w["non_geodesic_induced_path"]
            assert g.is_induced_path(tuple(p)) and not path_is_geodesic(g, p)
