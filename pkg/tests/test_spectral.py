import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from satgraph import spectral
from satgraph.canonical import refine_partition
from satgraph.constructions import hoffman_singleton, petersen, s_graph, turan
from satgraph.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    empty_graph,
    is_connected,
    path_graph,
)
from satgraph.spectral import (
    ConvergenceError,
    full_spectrum,
    jacobi_eigenvalues,
    nikiforov_lambda_n_check,
    quotient_matrix,
    quotient_spectral_radius,
    rayleigh_degree_bound,
    rho_s_formula,
    spectral_radius,
)

from . import oracles
from .strategies import graphs, random_graph

PHI = (1 + math.sqrt(5)) / 2


def test_regular_graphs():
    assert spectral_radius(petersen()) == pytest.approx(3, abs=1e-9)
    assert spectral_radius(hoffman_singleton()) == pytest.approx(7, abs=1e-9)
    assert spectral_radius(cycle_graph(8)) == pytest.approx(2, abs=1e-9)


def test_star():
    for n in range(3, 30):
        assert spectral_radius(s_graph(n, 2)) == pytest.approx(math.sqrt(n - 1), abs=1e-9)


def test_s_5_3():
    assert oracles.eigvalsh_desc(s_graph(5, 3))[0] == pytest.approx(3.0, abs=1e-12)
    assert spectral_radius(s_graph(5, 3)) == pytest.approx(3.0, abs=1e-9)


def test_bipartite_no_oscillation():
    for g in (turan(6, 2), path_graph(7), cycle_graph(6), Graph.from_edges(2, [(0, 1)])):
        assert spectral_radius(g) == pytest.approx(oracles.eigvalsh_desc(g)[0], abs=1e-9)


def test_disconnected_takes_max_component():
    g = Graph.from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 2), (5, 6)])
    assert spectral_radius(g) == pytest.approx(2.0, abs=1e-9)
    assert spectral_radius(empty_graph(4)) == pytest.approx(0.0, abs=1e-9)


def test_fallback_to_full_solver(monkeypatch):
    def boom(*a, **k):
        raise ConvergenceError("forced")

    monkeypatch.setattr(spectral, "power_iteration", boom)
    assert spectral_radius(petersen()) == pytest.approx(3, abs=1e-9)


def test_power_iteration_cap():
    a = spectral.adjacency_matrix(path_graph(30))
    with pytest.raises(ConvergenceError):
        spectral.power_iteration(a, max_iter=3)


def test_full_spectrum_c5():
    expected = sorted((2 * math.cos(2 * math.pi * k / 5) for k in range(5)), reverse=True)
    got = full_spectrum(cycle_graph(5)).eigenvalues
    assert np.allclose(got, expected, atol=1e-9)
    assert np.allclose(got, [2, PHI - 1, PHI - 1, -PHI, -PHI], atol=1e-9)


def test_full_spectrum_complete():
    for n in range(1, 9):
        got = full_spectrum(complete_graph(n)).eigenvalues
        assert np.allclose(got, [n - 1] + [-1] * (n - 1), atol=1e-9)


def test_full_spectrum_petersen():
    sp = full_spectrum(petersen())
    assert sp.method == "full_solver"
    assert np.allclose(sp.eigenvalues, [3] + [1] * 5 + [-2] * 4, atol=1e-9)
    assert np.allclose(sp.eigenvalues, oracles.eigvalsh_desc(petersen()), atol=1e-9)


def test_jacobi_random_symmetric():
    rng = np.random.default_rng(3)
    for n in (1, 2, 3, 7, 20, 40):
        m = rng.normal(size=(n, n))
        m = m + m.T
        eigs, off = jacobi_eigenvalues(m)
        assert off < 1e-12
        assert np.allclose(eigs, np.linalg.eigvalsh(m)[::-1], atol=1e-9)


def test_jacobi_sweep_cap():
    m = np.array([[0.0, 1.0], [1.0, 0.0]])
    with pytest.raises(ConvergenceError):
        jacobi_eigenvalues(m, max_sweeps=0)


def test_rayleigh_bound_examples():
    assert rayleigh_degree_bound(petersen()) == 3.0
    assert rayleigh_degree_bound(s_graph(5, 2)) == 2.0
    assert spectral_radius(s_graph(5, 2)) == pytest.approx(2.0, abs=1e-9)
    for k in range(1, 6):
        assert rayleigh_degree_bound(complete_graph(k + 1)) == k


def test_quotient_s_graph():
    for n in range(3, 15):
        for r in range(2, n):
            hubs, leaves = range(r - 1), range(r - 1, n)
            q = quotient_matrix(s_graph(n, r), [hubs, leaves])
            assert q.equitable
            assert q.entries == ((Fraction(r - 2), Fraction(n - r + 1)), (Fraction(r - 1), Fraction(0)))
            assert quotient_spectral_radius(q) == pytest.approx(rho_s_formula(n, r), abs=1e-12)
            assert quotient_spectral_radius(q) == pytest.approx(spectral_radius(s_graph(n, r)), abs=1e-9)


def test_quotient_non_equitable():
    q = quotient_matrix(cycle_graph(5), [[0], [1, 2, 3, 4]])
    assert not q.equitable
    assert q.entries[1] == (Fraction(1, 2), Fraction(3, 2))


def test_quotient_invalid_partitions():
    g = cycle_graph(5)
    for bad in ([[0, 1], []], [[0, 1], [1, 2, 3, 4]], [[0, 1], [2, 3]]):
        with pytest.raises(GraphError):
            quotient_matrix(g, bad)


def test_quotient_three_cells():
    g = turan(7, 3)
    q = quotient_matrix(g, [range(0, 3), range(3, 5), range(5, 7)])
    assert q.equitable
    assert quotient_spectral_radius(q) == pytest.approx(spectral_radius(g), abs=1e-9)


def test_rho_s_formula():
    for n in range(3, 40):
        assert rho_s_formula(n, 2) == pytest.approx(math.sqrt(n - 1), abs=1e-12)
    assert rho_s_formula(5, 3) == 3.0
    assert rho_s_formula(10, 4) == pytest.approx(1 + math.sqrt(22), abs=1e-12)
    assert oracles.eigvalsh_desc(s_graph(10, 4))[0] == pytest.approx(1 + math.sqrt(22), abs=1e-12)
    with pytest.raises(GraphError):
        rho_s_formula(4, 4)


def test_nikiforov_examples():
    res = nikiforov_lambda_n_check(cycle_graph(5), 2)
    assert res.smallest == pytest.approx(-PHI, abs=1e-9)
    assert res.bound == pytest.approx(-0.8) and res.holds
    res = nikiforov_lambda_n_check(turan(5, 2), 2)
    assert res.smallest == pytest.approx(-math.sqrt(6), abs=1e-9)
    assert res.bound == pytest.approx(-1.152) and res.holds
    res = nikiforov_lambda_n_check(Graph.from_edges(2, [(0, 1)]), 2)
    assert res.smallest == pytest.approx(-1, abs=1e-9)
    assert res.bound == pytest.approx(-0.5) and res.holds


def test_nikiforov_rejects():
    with pytest.raises(GraphError):
        nikiforov_lambda_n_check(complete_graph(3), 2)
    with pytest.raises(GraphError):
        nikiforov_lambda_n_check(empty_graph(3), 2)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=14))
def test_perron_bounds_and_spectrum_invariants(g):
    rho = spectral_radius(g)
    sp = full_spectrum(g)
    assert abs(sp.rho - rho) <= 1e-9
    assert abs(sum(sp.eigenvalues)) <= 1e-7
    assert abs(sum(x * x for x in sp.eigenvalues) - 2 * g.m) <= 1e-6
    assert rho + 1e-9 >= 2 * g.m / g.n
    if is_connected(g):
        assert min(g.degrees()) - 1e-9 <= rho <= max(g.degrees()) + 1e-9


def test_interlacing_and_equitable_consistency():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 14)
        g = random_graph(rng, n, rng.random())
        rho = spectral_radius(g)
        labels = [rng.randrange(3) for _ in range(n)]
        cells = [[v for v in range(n) if labels[v] == c] for c in range(3)]
        cells = [c for c in cells if c]
        q = quotient_matrix(g, cells)
        assert quotient_spectral_radius(q) <= rho + 1e-9
        eq = quotient_matrix(g, refine_partition(g))
        assert eq.equitable
        assert abs(quotient_spectral_radius(eq) - rho) <= 1e-9
