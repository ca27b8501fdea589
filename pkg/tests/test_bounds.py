import math

import numpy as np
import pytest

from graphbounds.bounds import (basic_inequality_check, dirichlet_bound, dirichlet_bound_relative,
                                dirichlet_pair, neumann_bound)
from graphbounds.families import cycle_graph, path_graph, random_graph, random_subset
from graphbounds.graph import Graph, GraphError, SubsetSpec
from graphbounds.metric import DistanceOracle
from graphbounds.spectral import lambda1


def test_basic_inequality_examples():
    p2 = path_graph(2)
    assert basic_inequality_check(p2, [3, 3], ["v0", "v1"]).lhs == 0
    chk = basic_inequality_check(p2, [0, 1], ["v0", "v1"])
    assert chk.holds and chk.lhs == chk.rhs == 1


def test_basic_inequality_fuzz(rng):
    for _ in range(500):
        g = random_graph(int(rng.integers(2, 10)), rng)
        f = rng.standard_normal(g.n) * rng.uniform(0.1, 10)
        walk = [g.vertices[int(rng.integers(g.n))]]
        for _ in range(int(rng.integers(0, 6))):
            nbrs = g.adjacency[g.index(walk[-1])]
            walk.append(g.vertices[nbrs[int(rng.integers(len(nbrs)))][0]])
        assert basic_inequality_check(g, f, walk).holds


@pytest.mark.parametrize("g, bound, lam", [
    (path_graph(2), 2.0, 2.0),
    (path_graph(3), 4 / 6, 1.0),
    (cycle_graph(4), 0.5, 2.0),
])
def test_neumann_bound_examples(g, bound, lam):
    rep = neumann_bound(g)
    assert rep.bound == pytest.approx(bound)
    assert rep.eigenvalue == pytest.approx(lam)
    assert rep.verdict == "holds"


def test_neumann_bound_is_tight_on_p2():
    assert neumann_bound(path_graph(2)).ratio == pytest.approx(1.0, abs=1e-12)


def test_neumann_bound_single_vertex():
    with pytest.raises(GraphError):
        neumann_bound(Graph(["x"]))


def test_dirichlet_bound_examples():
    p3, p5 = path_graph(3), path_graph(5)
    rep = dirichlet_bound(p3, ["v1"])
    assert (rep.bound, rep.eigenvalue) == (pytest.approx(1), pytest.approx(2)) and rep.holds
    rep = dirichlet_bound(p5, ["v1", "v2", "v3"])
    assert rep.bound == pytest.approx(1 / 6)
    assert rep.eigenvalue == pytest.approx(2 - math.sqrt(2))
    assert rep.holds


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_dirichlet_bound_star_hub(k):
    """omega = hub of K_{1,k}; bound 1, eigenvalue k, tight at k = 1."""
    leaves = [f"l{i}" for i in range(k)]
    g = Graph(["hub"] + leaves, [("hub", leaf, 1.0) for leaf in leaves])
    rep = dirichlet_bound(g, ["hub"])
    assert rep.bound == pytest.approx(1.0)
    assert rep.eigenvalue == pytest.approx(k)
    assert rep.holds


def test_dirichlet_bound_errors():
    p3 = path_graph(3)
    with pytest.raises(GraphError):
        dirichlet_bound(p3, SubsetSpec.from_dirichlet(p3, []))
    with pytest.raises(GraphError):
        dirichlet_bound(p3, [])


def test_relative_bound_examples():
    line = Graph(range(-12, 13), [(i, i + 1, 1.0) for i in range(-12, 12)])
    s = SubsetSpec.from_dirichlet(line, [x for x in line.vertices if x % 3 == 0])
    rep = dirichlet_bound_relative(line, s)
    assert rep.inputs == {"inradius": 1.0, "vol_sharp": 3.0}
    assert rep.bound == pytest.approx(1 / 3)
    assert rep.eigenvalue == pytest.approx(1.0)
    assert rep.holds
    p3 = path_graph(3)
    rel, plain = dirichlet_bound_relative(p3, ["v1"]), dirichlet_bound(p3, ["v1"])
    assert rel.bound == pytest.approx(1 / 3) and rel.bound <= plain.bound <= rel.eigenvalue


def test_window_label():
    rep = dirichlet_bound_relative(path_graph(3), ["v1"], window=True)
    assert rep.notes == ("window values",)


def test_all_bounds_hold_on_random_instances(rng):
    for _ in range(100):
        g = random_graph(int(rng.integers(2, 16)), rng)
        assert neumann_bound(g).holds
        s = SubsetSpec.from_dirichlet(g, random_subset(g, rng))
        a, b = dirichlet_pair(g, s)
        assert a.holds and b.holds
        assert a.inputs["inradius"] == b.inputs["inradius"]
        assert a.eigenvalue == b.eigenvalue


def test_neumann_from_dirichlet_split(rng):
    """Each sign part of the eigenfunction lies in a region of inradius <= diam."""
    for _ in range(30):
        g = random_graph(int(rng.integers(3, 12)), rng)
        o = DistanceOracle(g)
        res = lambda1(g)
        for part in (res.eigenfunction > 0, res.eigenfunction < 0):
            omega = [x for x, keep in zip(g.vertices, part) if keep]
            assert dirichlet_bound(g, omega, o).inputs["inradius"] <= o.diameter()
        vol = float(np.sum(g.measure))
        assert res.eigenvalue >= 1 / (o.diameter() * vol) - 1e-12
