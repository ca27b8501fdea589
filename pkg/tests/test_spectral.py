import math

import numpy as np
import pytest

from oracles import generalized_eigvals

from graphbounds.families import cycle_graph, path_graph, random_graph, star_graph
from graphbounds.graph import Graph, GraphError, SubsetSpec, energy, energy_bilinear, inner
from graphbounds.spectral import (DIRICHLET, NEUMANN, assemble, kernel_check, lambda1,
                                  lambda_dirichlet, rayleigh, spectrum)


def test_assemble_examples():
    assert np.array_equal(assemble(path_graph(2)).dense(), [[1, -1], [-1, 1]])
    p3 = path_graph(3)
    op = assemble(p3, DIRICHLET, SubsetSpec.from_omega(p3, ["v1"]))
    assert op.dense().tolist() == [[2.0]]
    g = random_graph(6, np.random.default_rng(3))
    scaled = g.with_measure(4 * np.asarray(g.measure))
    assert np.allclose(assemble(scaled).dense(), assemble(g).dense() / 4, rtol=1e-14)


def test_assemble_rejects_empty_omega():
    p3 = path_graph(3)
    with pytest.raises(GraphError):
        assemble(p3, DIRICHLET, SubsetSpec.from_omega(p3, []))
    with pytest.raises(GraphError):
        assemble(p3, DIRICHLET)


def test_rayleigh_of_symmetrized_form(rng):
    g = random_graph(9, rng)
    s = assemble(g, NEUMANN).dense()
    f = rng.standard_normal(9)
    v = np.sqrt(g.measure) * f
    assert v @ s @ v / (v @ v) == pytest.approx(rayleigh(g, f), rel=1e-12)


@pytest.mark.parametrize("g, expected", [
    (path_graph(2), 2.0),
    (path_graph(3), 1.0),
])
def test_lambda1_small(g, expected):
    assert lambda1(g).eigenvalue == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("n", [3, 4, 5, 8, 17, 64])
def test_lambda1_cycle(n):
    closed = 2 * (1 - math.cos(2 * math.pi / n))
    res = lambda1(cycle_graph(n))
    assert res.eigenvalue == pytest.approx(closed, rel=1e-10)
    assert res.eigenvalue == pytest.approx(generalized_eigvals(cycle_graph(n))[1], rel=1e-10)


def test_lambda1_single_vertex():
    with pytest.raises(GraphError):
        lambda1(Graph(["x"]))


def test_lambda1_against_generalized_eigensolver(rng):
    for _ in range(30):
        g = random_graph(int(rng.integers(2, 20)), rng)
        res = lambda1(g)
        ref = generalized_eigvals(g)
        assert res.eigenvalue == pytest.approx(ref[1], rel=1e-10)
        assert abs(inner(g, res.eigenfunction, np.ones(g.n))) <= 1e-10
        assert inner(g, res.eigenfunction, res.eigenfunction) == pytest.approx(1.0)
        assert res.residual <= 1e-8 * max(1, res.eigenvalue)
        assert rayleigh(g, res.eigenfunction) == pytest.approx(res.eigenvalue, rel=1e-9)


def test_lambda_dirichlet_examples():
    p3, p5 = path_graph(3), path_graph(5)
    assert lambda_dirichlet(p3, SubsetSpec.from_omega(p3, ["v1"])).eigenvalue == pytest.approx(2)
    assert lambda_dirichlet(p5, ["v1", "v2", "v3"]).eigenvalue == pytest.approx(2 - math.sqrt(2))
    # omega = two separated vertices, each with one unit edge into D (masses 1 and 2)
    g = Graph(["a", "x", "b", "y"], [("a", "x", 1), ("x", "b", 1), ("b", "y", 1)],
              {"a": 1, "x": 1, "b": 1, "y": 2})
    lam = lambda_dirichlet(g, SubsetSpec.from_omega(g, ["a", "y"])).eigenvalue
    assert lam == pytest.approx(min(1 / 1, 1 / 2))


def test_lambda_dirichlet_errors():
    p3 = path_graph(3)
    with pytest.raises(GraphError):
        lambda_dirichlet(p3, SubsetSpec.from_omega(p3, p3.vertices))


def test_lambda_dirichlet_against_generalized_eigensolver(rng):
    for _ in range(30):
        g = random_graph(int(rng.integers(3, 20)), rng)
        k = int(rng.integers(1, g.n))
        s = SubsetSpec.from_omega(g, g.vertices[:k])
        res = lambda_dirichlet(g, s)
        ref = generalized_eigvals(g, s.mask(g))[0]
        assert res.eigenvalue > 0
        assert res.eigenvalue == pytest.approx(ref, rel=1e-10)
        assert np.all(res.eigenfunction[k:] == 0)
        assert res.residual <= 1e-8 * max(1, res.eigenvalue)


def test_rayleigh_examples():
    assert rayleigh(path_graph(2), [1, -1]) == 2
    with pytest.raises(GraphError):
        rayleigh(path_graph(2), [0, 0])
    p3 = path_graph(3)
    with pytest.raises(GraphError):
        rayleigh(p3, [1, 1, 0], SubsetSpec.from_omega(p3, ["v1"]))


def test_rayleigh_min_max(rng):
    p3 = path_graph(3)
    for _ in range(200):
        f = rng.standard_normal(3)
        f -= f.mean()
        assert rayleigh(p3, f) >= 1 - 1e-9
    g = random_graph(10, rng)
    s = SubsetSpec.from_omega(g, g.vertices[:6])
    lam = lambda_dirichlet(g, s).eigenvalue
    for _ in range(200):
        f = np.zeros(10)
        f[:6] = rng.standard_normal(6)
        assert rayleigh(g, f, s) >= lam - 1e-9


def test_kernel_check(rng):
    assert kernel_check(path_graph(2)).ok
    assert np.allclose(spectrum(path_graph(2)), [0, 2])
    for _ in range(20):
        assert kernel_check(random_graph(int(rng.integers(2, 31)), rng)).ok


@pytest.mark.parametrize("c", [0.5, 4.0])
def test_measure_scaling(rng, c):
    g = random_graph(8, rng)
    h = g.with_measure(c * np.asarray(g.measure))
    assert np.allclose(spectrum(h), spectrum(g) / c, rtol=1e-10, atol=1e-12)
    s = SubsetSpec.from_omega(g, g.vertices[:5])
    assert lambda_dirichlet(h, s).eigenvalue == pytest.approx(
        lambda_dirichlet(g, s).eigenvalue / c, rel=1e-10)


def test_dirichlet_monotone_under_shrinking_omega(rng):
    for _ in range(20):
        g = random_graph(12, rng)
        order = rng.permutation(g.n)
        prev = 0.0
        for k in range(g.n - 1, 0, -1):
            s = SubsetSpec.from_omega(g, [g.vertices[i] for i in order[:k]])
            lam = lambda_dirichlet(g, s).eigenvalue
            assert lam >= prev - 1e-9
            prev = lam


def test_positive_negative_split_of_eigenfunction(rng):
    for _ in range(20):
        g = random_graph(10, rng)
        f = lambda1(g).eigenfunction
        fp, fm = np.maximum(f, 0), np.maximum(-f, 0)
        assert energy_bilinear(g, fp, fm) <= 0
        assert energy(g, f) >= energy(g, fp) + energy(g, fm) - 1e-10


def test_iterative_matches_dense(rng):
    g = random_graph(60, rng, extra_edge_prob=0.1)
    dense, it = lambda1(g, method="dense"), lambda1(g, method="iterative")
    assert it.solver == "iterative"
    assert it.eigenvalue == pytest.approx(dense.eigenvalue, rel=1e-9)
    assert it.residual <= 1e-8 * max(1, it.eigenvalue)
    assert abs(inner(g, it.eigenfunction, np.ones(g.n))) <= 1e-10
    s = SubsetSpec.from_omega(g, g.vertices[:40])
    assert lambda_dirichlet(g, s, method="iterative").eigenvalue == pytest.approx(
        lambda_dirichlet(g, s).eigenvalue, rel=1e-9)


def test_iterative_large_path():
    n = 3000
    res = lambda1(path_graph(n))
    assert res.solver == "iterative"
    assert res.eigenvalue == pytest.approx(2 * (1 - math.cos(math.pi / n)), rel=1e-8)


def test_star_spectrum():
    # K_{1,k} with unit data has spectrum 0, 1 (k-1 times), k+1
    assert lambda1(star_graph(5)).eigenvalue == pytest.approx(1.0)
    assert np.allclose(spectrum(star_graph(5)), [0, 1, 1, 1, 1, 6])
