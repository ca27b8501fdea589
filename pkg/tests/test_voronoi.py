import dataclasses
import math

import pytest

from oracles import floyd_warshall

from graphbounds.families import path_graph, random_graph, random_subset
from graphbounds.graph import Graph, GraphError, SubsetSpec
from graphbounds.spectral import lambda_dirichlet
from graphbounds.voronoi import (build_voronoi, cell_radius_bound, cellwise_constants,
                                 cellwise_dirichlet_constant, verify_voronoi)


def test_all_centers_gives_singletons(rng):
    g = random_graph(8, rng)
    dec = build_voronoi(g, g.vertices)
    assert all(len(c) == 1 for c in dec.cells().values())
    assert verify_voronoi(g, dec).ok
    radii = cell_radius_bound(g, dec)
    assert set(radii.radii.values()) == {0.0} and radii.ok


def test_p5_two_centers_tie_goes_to_first():
    p5 = path_graph(5)
    dec = build_voronoi(p5, ["v4", "v0"])
    assert dec.cells() == {"v0": {"v0", "v1", "v2"}, "v4": {"v3", "v4"}}
    assert dec.assignment["v2"] == "v0"
    assert dec.certificates["v2"] == ["v0", "v1", "v2"]
    radii = cell_radius_bound(p5, dec)
    assert radii.inradius == 2
    assert radii.radii == {"v0": 2, "v4": 1}


def test_single_center():
    p3 = path_graph(3)
    dec = build_voronoi(p3, ["v0"])
    assert dec.cells() == {"v0": {"v0", "v1", "v2"}}


def test_build_errors():
    with pytest.raises(GraphError):
        build_voronoi(path_graph(3), [])
    with pytest.raises(GraphError):
        build_voronoi(Graph(["a", "b"]), ["a"])


def test_moved_vertex_violates_v2():
    p5 = path_graph(5)
    dec = build_voronoi(p5, ["v0", "v4"])
    moved = dict(dec.assignment, v1="v4")
    verdict = verify_voronoi(p5, dataclasses.replace(dec, assignment=moved))
    assert not verdict.v2.ok and "'v1'" in verdict.v2.detail
    assert verdict.v3.ok
    # v1 cut off from v4 inside the cell {v1, v3, v4}
    assert not verdict.v1.ok


def test_non_partition_violates_v3():
    p5 = path_graph(5)
    dec = build_voronoi(p5, ["v0", "v4"])
    partial = {k: v for k, v in dec.assignment.items() if k != "v2"}
    verdict = verify_voronoi(p5, dataclasses.replace(dec, assignment=partial))
    assert not verdict.v3.ok and "not covered" in verdict.v3.detail
    stray = dict(dec.assignment, v2="v1")
    assert not verify_voronoi(p5, dataclasses.replace(dec, assignment=stray)).v3.ok


def test_v1_violation_detected_without_v2():
    # equal-distance detour: x reachable from p only through a vertex of q's cell
    g = Graph(["p", "a", "x", "q"], [("p", "a", 1), ("a", "x", 1), ("q", "a", 1)])
    dec = build_voronoi(g, ["p", "q"])
    assert dec.assignment["a"] == "p" and dec.assignment["x"] == "p"
    bad = dict(dec.assignment, a="q")
    verdict = verify_voronoi(g, dataclasses.replace(dec, assignment=bad))
    assert verdict.v2.ok and verdict.v3.ok
    assert not verdict.v1.ok


def test_random_graphs_pass_all_axioms(rng):
    for _ in range(100):
        g = random_graph(int(rng.integers(2, 31)), rng)
        centers = random_subset(g, rng, max_size=g.n)
        dec = build_voronoi(g, centers)
        assert verify_voronoi(g, dec).ok
        fw = floyd_warshall(g)
        for x, c in dec.assignment.items():
            row = fw[[g.index(p) for p in dec.centers], g.index(x)]
            assert dec.distance[x] == pytest.approx(row.min(), rel=1e-12, abs=1e-15)
        s = SubsetSpec.from_dirichlet(g, centers)
        assert cell_radius_bound(g, dec, s).ok


def test_deterministic(rng):
    g = random_graph(20, rng)
    centers = random_subset(g, rng)
    assert build_voronoi(g, centers) == build_voronoi(g, list(reversed(centers)))


def test_cell_constant_two_vertices():
    g = path_graph(2)
    c = cellwise_dirichlet_constant(g, ["v0", "v1"], "v0")
    assert c.constant == 1 and c.eigenvalue == pytest.approx(1)


def test_cell_constant_singleton():
    c = cellwise_dirichlet_constant(path_graph(2), ["v0"], "v0")
    assert c.unbounded and math.isinf(c.constant)


def test_cell_constant_p3_endpoint():
    c = cellwise_dirichlet_constant(path_graph(3), ["v0", "v1", "v2"], "v0")
    assert c.radius == 2 and c.volume == 2 and c.constant == pytest.approx(0.25)
    assert c.eigenvalue == pytest.approx((3 - math.sqrt(5)) / 2)


def test_cell_constant_center_outside_cell():
    with pytest.raises(GraphError):
        cellwise_dirichlet_constant(path_graph(3), ["v1", "v2"], "v0")


def test_summed_constant_below_dirichlet_eigenvalue(rng):
    for _ in range(100):
        g = random_graph(int(rng.integers(2, 21)), rng)
        d = random_subset(g, rng)
        dec = build_voronoi(g, d)
        consts = cellwise_constants(g, dec)
        lam = lambda_dirichlet(g, SubsetSpec.from_dirichlet(g, d)).eigenvalue
        assert min(c.constant for c in consts) <= lam * (1 + 1e-9)
        for c in consts:
            assert c.constant <= c.eigenvalue * (1 + 1e-9)
