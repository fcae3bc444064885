from collections import Counter
from math import comb

import pytest

from satgraph.constructions import (
    hoffman_singleton,
    moore_graph,
    named_graph,
    petersen,
    s_graph,
    turan,
)
from satgraph.graph import GraphError, complete_graph, contains_clique, diameter, girth
from satgraph.saturation import is_saturated

from . import oracles


def test_s_graph_star():
    for n in range(3, 12):
        g = s_graph(n, 2)
        assert sorted(g.degrees()) == [1] * (n - 1) + [n - 1]
        assert g.m == n - 1


def test_s_5_3():
    g = s_graph(5, 3)
    assert g.m == 2 * 3 + 1 == 7
    assert Counter(g.degrees()) == Counter({4: 2, 2: 3})


def test_s_graph_shape_and_edge_count():
    for n in range(3, 21):
        for r in range(2, n):
            g = s_graph(n, r)
            assert g.m == (r - 1) * (n - r + 1) + comb(r - 1, 2)
            assert g.degrees() == [n - 1] * (r - 1) + [r - 1] * (n - r + 1)


def test_s_graph_saturated():
    for n in range(3, 11):
        for r in range(2, n):
            assert is_saturated(s_graph(n, r), r).saturated


def test_s_graph_range():
    for n, r in ((3, 1), (4, 4), (65, 3)):
        with pytest.raises(GraphError):
            s_graph(n, r)


def test_turan_5_2_is_extremal():
    g = turan(5, 2)
    assert g.m == 6
    # brute-force ex(5, K3) over all 1024 labeled graphs
    best = max(len(es) for es in oracles.all_edge_sets(5) if not oracles.has_clique(5, es, 3))
    assert best == 6


def test_turan_examples():
    for n in range(1, 9):
        assert turan(n, n) == complete_graph(n)
    g = turan(6, 3)
    assert g.m == 12 and set(g.degrees()) == {4}


def test_turan_clique_free_and_edge_count():
    for n in range(2, 13):
        for r in range(1, n):
            g = turan(n, r)
            assert not contains_clique(g, r + 1)
            sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
            assert g.m == (n * n - sum(s * s for s in sizes)) // 2


def test_turan_range():
    with pytest.raises(GraphError):
        turan(3, 4)
    with pytest.raises(GraphError):
        turan(3, 0)


@pytest.mark.parametrize("tag,k", [("C5", 2), ("Petersen", 3), ("HoffmanSingleton", 7)])
def test_moore_graphs(tag, k):
    g = moore_graph(tag)
    assert set(g.degrees()) == {k}
    assert g.n == k * k + 1
    assert girth(g) == 5
    assert diameter(g) == 2
    assert is_saturated(g, 2).saturated


def test_moore_unknown():
    with pytest.raises(GraphError):
        moore_graph("57-regular")


def test_named_dispatch():
    assert named_graph("s", 7, 3) == s_graph(7, 3)
    assert named_graph("turan", 6, 3) == turan(6, 3)
    assert named_graph("petersen") == petersen()
    assert named_graph("hoffman-singleton") == hoffman_singleton()
    with pytest.raises(GraphError):
        named_graph("s", 7)
    with pytest.raises(GraphError):
        named_graph("cube")
