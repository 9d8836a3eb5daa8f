from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betweenness.core import (
    BetweennessStructure,
    Graph,
    MetricSpace,
    WeightedGraph,
    adjacency_graph,
    betweenness_of_graph,
    betweenness_of_metric,
    betweenness_of_weighted,
    graph_metric,
    is_extension,
    is_ordered,
    is_ordered_as,
    subspace,
    substructure,
    weighted_graph_metric,
)
from betweenness.enumeration import connected_labeled_graphs
from betweenness.errors import (
    DegenerateTriple,
    DisconnectedGraph,
    EmptySubset,
    SizeMismatch,
    TrichotomyViolation,
)
from betweenness.families import complete_graph, cycle_graph, path_graph, star_graph

from conftest import floyd_warshall

F = Fraction

# C4 labelled x=0, u=1, y=2, v=3 in cycle order
X, U, Y, V = 0, 1, 2, 3
C4 = cycle_graph(4)
STEP2_C4 = WeightedGraph(C4, {(0, 1): F(3, 2), (1, 2): 1, (2, 3): 1, (0, 3): 1})


# -- types -----------------------------------------------------------------

def test_graph_normalizes_edges():
    g = Graph(3, frozenset([(1, 0), (2, 1)]))
    assert g.edges == {(0, 1), (1, 2)}
    assert g.neighbors(1) == {0, 2}


@pytest.mark.parametrize("n, edges", [(2, [(0, 0)]), (2, [(0, 2)]), (0, [])])
def test_graph_rejects_bad_input(n, edges):
    with pytest.raises(ValueError):
        Graph(n, frozenset(edges))


def test_weighted_graph_invariants():
    with pytest.raises(ValueError):
        WeightedGraph(path_graph(2), {(0, 1): 0})
    with pytest.raises(ValueError):
        WeightedGraph(path_graph(3), {(0, 1): 1})
    with pytest.raises(DisconnectedGraph):
        WeightedGraph(Graph(3, frozenset([(0, 1)])), {(0, 1): 1})
    with pytest.raises(TypeError):
        WeightedGraph(path_graph(2), {(0, 1): 0.5})


def test_metric_space_invariants():
    MetricSpace(2, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        MetricSpace(2, ((0, 1), (2, 0)))
    with pytest.raises(ValueError):
        MetricSpace(2, ((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        MetricSpace(3, ((0, 1, 3), (1, 0, 1), (3, 1, 0)))


def test_structure_canonicalizes_and_validates():
    b = BetweennessStructure(3, frozenset([(2, 1, 0)]))
    assert b.triples == {(0, 1, 2)}
    assert b.between(2, 1, 0) and b.between(0, 0, 2) and not b.between(1, 0, 2)
    with pytest.raises(TrichotomyViolation):
        BetweennessStructure(3, frozenset([(0, 1, 2), (0, 2, 1)]))
    with pytest.raises(DegenerateTriple):
        BetweennessStructure(3, frozenset([(0, 0, 1)]))


# -- metrics ---------------------------------------------------------------

def test_graph_metric_examples():
    d = graph_metric(path_graph(3))
    assert d(0, 2) == 2
    assert all(graph_metric(complete_graph(3))(a, b) == 1 for a, b in combinations(range(3), 2))
    m = graph_metric(C4)
    assert m(X, Y) == 2 and m(U, V) == 2
    assert all(m(a, b) == 1 for a, b in C4.edges)


def test_graph_metric_disconnected():
    with pytest.raises(DisconnectedGraph):
        graph_metric(Graph(3, frozenset([(0, 1)])))


def test_weighted_metric_examples():
    m = weighted_graph_metric(STEP2_C4)
    assert m(X, Y) == 2
    assert m(X, U) == F(3, 2)
    w = WeightedGraph(path_graph(3), {(0, 1): F(1, 3), (1, 2): F(1, 5)})
    assert weighted_graph_metric(w)(0, 2) == F(8, 15)


def test_unit_weights_match_graph_metric():
    for g in connected_labeled_graphs(4):
        assert weighted_graph_metric(WeightedGraph.unit(g)) == graph_metric(g)


def test_weighted_metric_matches_floyd_warshall(rng):
    from conftest import random_weighted_graph

    for _ in range(50):
        w = random_weighted_graph(rng, rng.randint(2, 7))
        assert [list(r) for r in weighted_graph_metric(w).d] == floyd_warshall(w)


# -- betweenness -----------------------------------------------------------

def test_betweenness_examples():
    assert betweenness_of_graph(path_graph(3)).triples == {(0, 1, 2)}
    assert betweenness_of_graph(complete_graph(3)).triples == set()
    assert betweenness_of_graph(C4).triples == {(X, U, Y), (X, V, Y), (U, X, V), (U, Y, V)}
    for n in range(2, 7):
        assert betweenness_of_graph(complete_graph(n)).triples == set()


def test_step2_c4_betweenness():
    # d(x,y) = 2 via v but 3/2 + 1 via u
    b = betweenness_of_weighted(STEP2_C4)
    assert b.between(X, V, Y) and b.between(U, Y, V)
    assert not b.between(X, U, Y)


def test_tree_betweenness_is_path_membership():
    g = star_graph(3)
    b = betweenness_of_graph(g)
    for x, y, z in permutations(range(4), 3):
        on_path = y == 0 and x != 0 and z != 0
        assert b.between(x, y, z) == on_path


def test_adjacency_examples():
    assert adjacency_graph(BetweennessStructure(3, frozenset([(0, 1, 2)]))) == path_graph(3)
    assert adjacency_graph(BetweennessStructure(5)) == complete_graph(5)
    assert adjacency_graph(betweenness_of_weighted(STEP2_C4)) == C4


def test_substructure_and_subspace():
    b = betweenness_of_graph(path_graph(4))
    assert substructure(b, [0, 1, 2]).triples == {(0, 1, 2)}
    assert substructure(b, [3]) == BetweennessStructure(1)
    # d(x,y) = 2 = d(x,u) + d(u,y) inside C4
    assert substructure(betweenness_of_graph(C4), [X, U, Y]).triples == {(0, 1, 2)}
    # relabelling keeps order: {1, 2, 3} -> {0, 1, 2}
    assert substructure(b, [1, 3, 2]).triples == {(0, 1, 2)}
    m = subspace(graph_metric(C4), [U, V])
    assert m.d == ((0, 2), (2, 0))
    with pytest.raises(EmptySubset):
        substructure(b, [])
    with pytest.raises(EmptySubset):
        subspace(graph_metric(C4), [])


def test_is_extension_examples():
    bc4 = betweenness_of_graph(C4)
    bw = betweenness_of_weighted(STEP2_C4)
    assert is_extension(bc4, bw) and not is_extension(bw, bc4)
    assert is_extension(bc4, bc4)
    assert not is_extension(BetweennessStructure(3), BetweennessStructure(3, frozenset([(0, 1, 2)])))
    with pytest.raises(SizeMismatch):
        is_extension(BetweennessStructure(3), BetweennessStructure(4))


def test_is_ordered_examples():
    assert is_ordered(betweenness_of_graph(path_graph(4)), range(4)) == (0, 1, 2, 3)
    assert is_ordered(betweenness_of_graph(complete_graph(3)), range(3)) is None
    assert is_ordered(betweenness_of_graph(C4), [X, U, Y]) == (X, U, Y)
    assert is_ordered(betweenness_of_graph(C4), [U, V]) == (U, V)
    with pytest.raises(EmptySubset):
        is_ordered(BetweennessStructure(2), [])


def test_is_ordered_on_scrambled_path():
    g = Graph(5, frozenset([(3, 0), (0, 4), (4, 1), (1, 2)]))
    assert is_ordered(betweenness_of_graph(g), range(5)) == (2, 1, 4, 0, 3)


# -- properties --------------------------------------------------------------

@st.composite
def metrics(draw, max_n=6):
    """Shortest-path metrics of random weighted complete graphs, with small denominators to force ties."""
    n = draw(st.integers(1, max_n))
    weights = {
        e: Fraction(draw(st.integers(1, 8)), draw(st.sampled_from([1, 2])))
        for e in combinations(range(n), 2)
    }
    g = Graph(n, frozenset(weights))
    return weighted_graph_metric(WeightedGraph(g, weights)) if n > 1 else MetricSpace(1, ((0,),))


@settings(max_examples=200, deadline=None)
@given(metrics())
def test_trichotomy_holds_for_every_metric(m):
    b = betweenness_of_metric(m)
    for trio in combinations(range(m.n), 3):
        middles = [y for y in trio if b.between(*[p for p in trio if p != y][:1], y, [p for p in trio if p != y][1])]
        assert len(middles) <= 1


@settings(max_examples=200, deadline=None)
@given(metrics())
def test_adjacency_graph_is_connected(m):
    assert adjacency_graph(betweenness_of_metric(m)).is_connected()


@settings(max_examples=300, deadline=None)
@given(metrics(), st.data())
def test_polygon_equality(m, data):
    k = data.draw(st.integers(1, m.n))
    seq = data.draw(st.permutations(range(m.n)))[:k]
    b = betweenness_of_metric(m)
    additive = m(seq[0], seq[-1]) == sum(m(a, c) for a, c in zip(seq, seq[1:]))
    assert is_ordered_as(b, seq) == additive
    if additive:
        found = is_ordered(b, seq)
        assert found in (tuple(seq), tuple(seq[::-1]))


@settings(max_examples=100, deadline=None)
@given(metrics(max_n=5), st.data())
def test_is_ordered_matches_permutation_search(m, data):
    b = betweenness_of_metric(m)
    ys = data.draw(st.sets(st.integers(0, m.n - 1), min_size=1))
    brute = [p for p in permutations(sorted(ys)) if is_ordered_as(b, p)]
    found = is_ordered(b, ys)
    assert (found is None) == (not brute)
    if found is not None:
        assert found in brute


def test_adjacency_fixed_point_small():
    for n in range(1, 6):
        for g in connected_labeled_graphs(n):
            assert adjacency_graph(betweenness_of_graph(g)) == g


@settings(max_examples=60, deadline=None)
@given(st.lists(metrics(max_n=4), min_size=3, max_size=3))
def test_extension_is_a_partial_order(ms):
    n = ms[0].n
    bs = [betweenness_of_metric(m) for m in ms if m.n == n]
    for a in bs:
        assert is_extension(a, a)
        for b in bs:
            if is_extension(a, b) and is_extension(b, a):
                assert a == b
            for c in bs:
                if is_extension(a, b) and is_extension(b, c):
                    assert is_extension(a, c)
