from itertools import combinations

import pytest
from hypothesis import given, settings

from satgraph.constructions import petersen, s_graph, turan
from satgraph.graph import (
    Graph,
    GraphError,
    complete_graph,
    components,
    contains_clique,
    cycle_graph,
    diameter,
    empty_graph,
    find_clique,
    from_mask,
    girth,
    is_clique,
    path_graph,
    to_mask,
)

from . import oracles
from .strategies import graphs


def test_empty_graph():
    assert empty_graph(1).m == 0
    assert empty_graph(5).degrees() == [0] * 5
    with pytest.raises(GraphError):
        empty_graph(65)
    with pytest.raises(GraphError):
        empty_graph(0)
    assert empty_graph(64).n == 64


def test_add_edge():
    g = empty_graph(3).add_edge(0, 1)
    assert (g.degree(0), g.degree(1), g.degree(2)) == (1, 1, 0)
    assert g.add_edge(0, 1).m == 1
    assert g.add_edge(1, 0) == g
    with pytest.raises(GraphError):
        g.add_edge(2, 2)
    with pytest.raises(GraphError):
        g.add_edge(0, 3)
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)
    assert g.neighbors(0) == [1]


def test_invalid_rows_rejected():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0))  # loop
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0))  # bit beyond n


def test_non_edges():
    assert len(cycle_graph(5).non_edges()) == 5
    assert complete_graph(4).non_edges() == []
    assert len(empty_graph(4).non_edges()) == 6


def test_clique_examples():
    pet = petersen()
    # triangle scan by brute force
    assert not any(oracles.is_clique(oracles.edge_set(pet), t) for t in combinations(range(10), 3))
    assert not contains_clique(pet, 3)
    k23 = turan(5, 2)
    assert not contains_clique(k23, 3) and contains_clique(k23, 2)
    s63 = s_graph(6, 3)
    es = oracles.edge_set(s63)
    assert oracles.has_clique(6, es, 3) and not oracles.has_clique(6, es, 4)
    assert contains_clique(s63, 3) and not contains_clique(s63, 4)


def test_clique_small_k_conventions():
    g = empty_graph(3)
    assert find_clique(g, 0) == ()
    assert find_clique(g, 0, within=0) == ()
    assert find_clique(g, 1) == (0,)
    assert find_clique(g, 1, within=0) is None
    assert find_clique(g, 2) is None


def test_find_clique_is_lexicographically_least():
    g = Graph.from_edges(5, [(1, 2), (2, 3), (1, 3), (0, 4), (3, 4), (0, 3)])
    assert find_clique(g, 3) == (0, 3, 4)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_clique_matches_naive(g):
    es = oracles.edge_set(g)
    for k in range(0, g.n + 2):
        w = find_clique(g, k)
        assert (w is not None) == oracles.has_clique(g.n, es, k)
        if w is not None:
            assert len(w) == k and is_clique(g, w)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=20))
def test_handshake(g):
    assert sum(g.degrees()) == 2 * g.m == 2 * len(g.edges())
    assert len(g.non_edges()) == g.n * (g.n - 1) // 2 - g.m


def test_girth_diameter_components():
    pet = petersen()
    assert girth(pet) == 5 and diameter(pet) == 2
    star = s_graph(6, 2)
    assert girth(star) is None and diameter(star) == 2
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert diameter(two) is None
    assert components(two) == [[0, 1], [2, 3]]
    assert girth(cycle_graph(7)) == 7
    assert girth(complete_graph(4)) == 3
    assert girth(turan(6, 2)) == 4
    assert diameter(path_graph(5)) == 4
    assert diameter(empty_graph(1)) == 0


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_mask_roundtrip(g):
    assert from_mask(g.n, to_mask(g)) == g


def test_induced_and_complement():
    g = s_graph(6, 3)
    assert g.induced([0, 1]).m == 1
    assert g.induced([2, 3, 4]).m == 0
    assert g.complement().complement() == g
    assert g.complement().m == 15 - g.m


def test_relabel():
    g = path_graph(3)
    h = g.relabel([1, 0, 2])
    assert h.has_edge(1, 0) and h.has_edge(0, 2) and not h.has_edge(1, 2)
    with pytest.raises(GraphError):
        g.relabel([0, 0, 1])
