import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from pants_lab import graphs as G


def test_from_edges_rejects_loops_and_bad_vertices():
    with pytest.raises(G.GraphError):
        G.FiniteGraph.from_edges(3, [(0, 0)])
    with pytest.raises(G.GraphError):
        G.FiniteGraph.from_edges(3, [(0, 5)])


def test_json_roundtrip():
    g = G.petersen_graph()
    assert G.FiniteGraph.from_json(g.to_json()) == g


@pytest.mark.parametrize("g, thin, cen", [
    (G.complete_graph(5), 0, 1),
    (G.cycle_graph(6), 1, 1),
    (G.cycle_graph(3), 0, 1),
    (G.path_graph(7), 0, 0),
])
def test_known_constants(g, thin, cen):
    assert G.thinness(g) == thin
    assert G.centeredness(g) == cen


def test_cycle_ramp():
    prev_t = prev_c = 0
    for n in range(3, 17):
        g = G.cycle_graph(n)
        t, c = G.thinness(g), G.centeredness(g)
        assert t >= prev_t and c >= prev_c
        assert t <= 4 * c
        prev_t, prev_c = t, c
    assert prev_t > 0


def test_all_trees_counts():
    # nonisomorphic trees on 1..8 vertices
    counts = [1, 1, 1, 2, 3, 6, 11, 23]
    trees = G.all_trees(8)
    by_size = {}
    for t in trees:
        by_size[t.vertex_count] = by_size.get(t.vertex_count, 0) + 1
    assert [by_size[k] for k in range(1, 9)] == counts


def test_trees_are_zero():
    for t in G.all_trees(9):
        assert G.thinness(t) == 0
        assert G.centeredness(t) == 0


def test_prufer_tree_shape():
    t = G.prufer_tree([3, 3, 3])
    assert t.vertex_count == 5
    assert sorted(len(a) for a in t.adjacency) == [1, 1, 1, 1, 4]


def _small_graphs(count, seed, max_vertices):
    rng = random.Random(seed)
    return [G.random_connected_graph(rng, max_vertices) for _ in range(count)]


@pytest.mark.parametrize("g", _small_graphs(25, 11, 7))
def test_dp_matches_bruteforce(g):
    assert (G.thinness(g), G.centeredness(g)) == G.triangle_constants_bruteforce(g)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_relabel_invariance(seed):
    rng = random.Random(seed)
    g = G.random_connected_graph(rng, 12)
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert G.thinness(h) == G.thinness(g)
    assert G.centeredness(h) == G.centeredness(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_centered_implies_thin(seed):
    g = G.random_connected_graph(random.Random(seed), 20)
    assert G.verify_centered_implies_thin(g)


def test_random_graphs_connected_and_seeded():
    a = _small_graphs(5, 3, 15)
    b = _small_graphs(5, 3, 15)
    assert a == b
    for g in a:
        nxg = nx.Graph(list(g.edges))
        nxg.add_nodes_from(range(g.vertex_count))
        assert nx.is_connected(nxg)


def test_petersen_geodesics():
    g = G.petersen_graph()
    # diameter two, girth five: each nonadjacent pair has a unique common neighbour
    for x in range(10):
        for y in range(10):
            if x != y and y not in g.adjacency[x]:
                assert G.geodesic_count(g, x, y) == 1
                assert len(G.all_geodesics(g, x, y)) == 1


def test_geodesics_against_networkx():
    for g in _small_graphs(10, 5, 10):
        nxg = nx.Graph(list(g.edges))
        nxg.add_nodes_from(range(g.vertex_count))
        for x in range(g.vertex_count):
            for y in range(g.vertex_count):
                ours = G.all_geodesics(g, x, y)
                theirs = {tuple(p) for p in nx.all_shortest_paths(nxg, x, y)}
                assert ours == theirs


def test_geodesic_overflow():
    # a grid of 4-cycles in series doubles the count at each square
    edges = []
    for k in range(12):
        a, b, c, d = 3 * k, 3 * k + 1, 3 * k + 2, 3 * k + 3
        edges += [(a, b), (a, c), (b, d), (c, d)]
    g = G.FiniteGraph.from_edges(37, edges)
    assert G.geodesic_count(g, 0, 36) == 2 ** 12
    with pytest.raises(G.GeodesicOverflow):
        G.all_geodesics(g, 0, 36, cap=100)


@pytest.mark.parametrize("g, h, holds", [
    (G.complete_graph(5), 1, True),
    (G.all_trees(7)[-1], 1, True),
    (G.cycle_graph(12), 1, False),
])
def test_bowditch_family(g, h, holds):
    assert G.bowditch_family_check(g, G.interval_family(g), h) is holds
