import math

import numpy as np
import pytest
from hypothesis import given, settings

from walkpowers.generators import complete_bipartite_graph, cycle_graph, generate, path_graph, star_graph
from walkpowers.graph import Graph, is_connected, is_regular
from walkpowers.spectral import (
    IndeterminateCrossover,
    NotConvergedError,
    SpectralResult,
    crossover_k,
    perron,
    spectral_walk_bound,
)
from walkpowers.walks import total_walks
from tests.conftest import graphs


def dense_spectral_radius(g):
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return float(np.linalg.eigvalsh(a)[-1])


def exact_crossover(nu_sq, lam_sq, delta):
    """Smallest k with nu_sq * lam**k < delta**k, compared after squaring, in integers."""
    k = 1
    while not nu_sq**2 * lam_sq**k < delta ** (2 * k):
        k += 1
    return k


def test_cycle(c4):
    sr = perron(c4)
    assert sr.lam == pytest.approx(2.0, abs=1e-9)
    np.testing.assert_allclose(sr.nu, np.ones(4), atol=1e-9)


def test_star(k13):
    sr = perron(k13)
    assert sr.lam == pytest.approx(math.sqrt(3), abs=1e-9)
    np.testing.assert_allclose(sr.nu, [math.sqrt(3), 1, 1, 1], atol=1e-9)


def test_path(p3):
    sr = perron(p3)
    assert sr.lam == pytest.approx(2 * math.cos(math.pi / 4), abs=1e-9)
    assert sr.lam == pytest.approx(dense_spectral_radius(p3), abs=1e-9)
    np.testing.assert_allclose(sr.nu, [1, math.sqrt(2), 1], atol=1e-9)


@pytest.mark.parametrize("n", range(2, 13))
def test_paths_match_closed_form(n):
    assert perron(path_graph(n)).lam == pytest.approx(2 * math.cos(math.pi / (n + 1)), abs=1e-9)


@pytest.mark.parametrize("a, b", [(1, 1), (2, 3), (3, 5), (4, 4)])
def test_bipartite_converges(a, b):
    sr = perron(complete_bipartite_graph(a, b))
    assert sr.lam == pytest.approx(math.sqrt(a * b), abs=1e-9)


@settings(max_examples=50, deadline=None)
@given(graphs(min_n=2, max_n=10))
def test_against_dense_eigensolver(g):
    if not is_connected(g):
        with pytest.raises(ValueError):
            perron(g)
        return
    sr = perron(g)
    delta = g.max_degree
    assert sr.lam == pytest.approx(dense_spectral_radius(g), abs=1e-9)
    assert sr.nu.min() == 1.0
    assert np.all(sr.nu >= 1.0)
    assert sr.residual <= 1e-12
    assert 0 < sr.lam <= delta * (1 + 1e-9)
    if is_regular(g) is None:
        assert sr.lam <= delta - 1e-6
    for k in range(21):
        assert float(total_walks(g, k)) <= spectral_walk_bound(g, k, sr) * (1 + 1e-6)


def test_preconditions():
    with pytest.raises(ValueError, match="no edges"):
        perron(Graph.from_edges(3, []))
    with pytest.raises(ValueError, match="not connected"):
        perron(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        perron(path_graph(3), tol=0)
    with pytest.raises(NotConvergedError):
        perron(path_graph(12), max_iters=3)


def test_spectral_walk_bound(c4, k13, p3):
    assert spectral_walk_bound(c4, 3, perron(c4)) == pytest.approx(32.0, abs=1e-9)
    assert spectral_walk_bound(k13, 0, perron(k13)) == pytest.approx(6.0, abs=1e-6)
    assert spectral_walk_bound(p3, 2, perron(p3)) == pytest.approx(8.0, abs=1e-6)
    assert spectral_walk_bound(p3, 10**6, perron(p3)) == math.inf


def test_crossover_examples(c4, k13, p3):
    assert crossover_k(c4, perron(c4)) is None
    assert crossover_k(k13, perron(k13)) == exact_crossover(6, 3, 3) == 4
    # 4 * sqrt(2)**4 == 2**4 exactly; the tie must not count as a crossing.
    assert crossover_k(p3, perron(p3)) == exact_crossover(4, 2, 2) == 5


@pytest.mark.parametrize("n", range(3, 13))
def test_star_crossover_matches_exact(n):
    # nu = (sqrt(n-1), 1, ..., 1): ||nu||^2 = 2(n-1), lambda^2 = n-1, Delta = n-1.
    g = star_graph(n)
    assert crossover_k(g, perron(g)) == exact_crossover(2 * (n - 1), n - 1, n - 1)


def test_crossover_bound_is_below_delta_power_afterwards():
    for seed in range(10):
        g = generate("random_connected", seed, n=9, p=0.4)
        sr = perron(g)
        kc = crossover_k(g, sr)
        if kc is None:
            assert is_regular(g) is not None
            continue
        for k in range(kc, kc + 11):
            assert spectral_walk_bound(g, k, sr) < g.max_degree**k
        if kc > 1:
            assert spectral_walk_bound(g, kc - 1, sr) >= g.max_degree ** (kc - 1) * (1 - 1e-9)


def test_crossover_indeterminate(p3):
    fake = SpectralResult(lam=2.0 - 1e-13, nu=np.array([1.0, 1.0, 1.0]), iterations=1, residual=0.0)
    with pytest.raises(IndeterminateCrossover):
        crossover_k(p3, fake)


def test_crossover_requires_connected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    sr = perron(cycle_graph(4))
    with pytest.raises(ValueError):
        crossover_k(g, sr)
