import pytest

from betweenness.constructions import step2_weighting
from betweenness.core import (
    Graph,
    adjacency_graph,
    betweenness_of_graph,
    is_extension,
)
from betweenness.enumeration import (
    RepresentationReport,
    all_connected_graphs,
    connected_labeled_graphs,
    enumerate_representations,
    verify_dress,
    verify_prop24,
    verify_theorem1,
    verify_theorem2,
)
from betweenness.errors import BudgetExceeded, DisconnectedGraph, TooLarge
from betweenness.families import (
    bowtie_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    diamond_graph,
    path_graph,
    star_graph,
)
from betweenness.recognition import is_block_graph, is_distance_hereditary

C4 = cycle_graph(4)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)])
def test_connected_labeled_graph_counts(n, count):
    graphs = list(connected_labeled_graphs(n))
    assert len(graphs) == count
    assert len(set(graphs)) == count
    assert all(g.is_connected() for g in graphs)


@pytest.mark.slow
def test_connected_labeled_graphs_n6():
    assert sum(1 for _ in connected_labeled_graphs(6)) == 26704


def test_connected_labeled_graphs_limits():
    with pytest.raises(TooLarge):
        next(connected_labeled_graphs(8))
    assert list(connected_labeled_graphs(3)) == list(connected_labeled_graphs(3))
    assert len(all_connected_graphs(4)) == 1 + 1 + 4 + 38


def test_small_counts():
    assert enumerate_representations(complete_graph(3)).count == 1
    assert enumerate_representations(star_graph(3)).count == 1
    assert enumerate_representations(bowtie_graph()).count == 1
    assert enumerate_representations(Graph(1, frozenset())).count == 1


def test_c4_has_several_representations():
    rep = enumerate_representations(C4)
    assert rep.count >= 2
    assert betweenness_of_graph(C4) in rep.representations
    assert step2_weighting(C4).structure in rep.representations
    assert rep.bounds_below and not rep.bounds_above
    assert not rep.is_uniquely_representable


def test_diamond_and_c5():
    rep = enumerate_representations(diamond_graph())
    assert rep.count > 1 and not is_block_graph(diamond_graph()).holds
    c5 = enumerate_representations(cycle_graph(5))
    assert not c5.bounds_below and not c5.bounds_above


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraph):
        enumerate_representations(Graph(3, frozenset([(0, 1)])))
    with pytest.raises(TooLarge):
        enumerate_representations(path_graph(7))


def test_report_requires_graphic_structure():
    with pytest.raises(RuntimeError):
        RepresentationReport(C4, ())


def test_representations_have_exact_adjacency_graph():
    for g in connected_labeled_graphs(4):
        rep = enumerate_representations(g)
        assert betweenness_of_graph(g) in rep.representations
        for b in rep.representations:
            assert adjacency_graph(b) == g


def test_unique_iff_bounded_both_ways():
    for g in all_connected_graphs(5):
        rep = enumerate_representations(g)
        assert rep.is_uniquely_representable == (rep.bounds_below and rep.bounds_above)


def test_flags_follow_the_list():
    rep = enumerate_representations(C4)
    g = betweenness_of_graph(C4)
    assert rep.bounds_below == all(is_extension(g, b) for b in rep.representations)
    assert rep.bounds_above == all(is_extension(b, g) for b in rep.representations)


def test_pruning_is_sound_on_n4():
    for g in connected_labeled_graphs(4):
        pruned = enumerate_representations(g)
        plain = enumerate_representations(g, prune=False)
        assert set(pruned.representations) == set(plain.representations)


def test_parallel_matches_serial():
    g = complete_bipartite(2, 3)
    serial = enumerate_representations(g)
    parallel = enumerate_representations(g, workers=2)
    assert parallel.representations == serial.representations


def test_budget_at_n6():
    with pytest.raises(BudgetExceeded) as info:
        enumerate_representations(complete_bipartite(3, 3), budget=50_000)
    assert info.value.explored > 50_000
    g = complete_bipartite(3, 3)
    for b in info.value.found:
        assert adjacency_graph(b) == g


def test_n6_within_budget():
    rep = enumerate_representations(path_graph(6))
    assert rep.count == 1
    assert enumerate_representations(complete_graph(6)).count == 1


def test_theorem_checks_n4():
    for check in (verify_theorem1(4), verify_theorem2(4), verify_dress(4), verify_prop24(4)):
        assert check.holds, check.counterexamples
    rows = {r.graph: r for r in verify_theorem1(4).rows}
    assert rows[C4].values["bounds_below"] and rows[C4].count >= 2


def test_theorem2_asymmetry_up_to_5():
    above, unique, below = set(), set(), set()
    for g in all_connected_graphs(5):
        rep = enumerate_representations(g)
        if rep.bounds_above:
            above.add(g)
        if rep.count == 1:
            unique.add(g)
        if rep.bounds_below:
            below.add(g)
        assert rep.bounds_below == is_distance_hereditary(g).holds
    assert above == unique
    assert unique < below
    assert C4 in below - unique


def test_trees_and_bowtie_unique():
    check = verify_dress(5)
    assert check.holds and check.rows
    assert all(r.count == 1 for r in check.rows)


def test_n_max_limit():
    with pytest.raises(TooLarge):
        verify_theorem1(6)
