"""Hand-checkable desk examples, runnable without pytest."""

import math

import numpy as np

from . import bounds, families, graph, lazy, metric, resistance, spectral, voronoi

TOL = 1e-9


def _close(a, b, tol=TOL):
    return abs(a - b) <= tol * max(1.0, abs(b))


def _p3_weighted():
    return families.path_graph(3, weights=[2.0, 4.0])


def _examples():
    p2 = families.path_graph(2)
    p3 = families.path_graph(3)
    p5 = families.path_graph(5)
    c4 = families.cycle_graph(4)
    tri = families.complete_graph(3)
    p5_sub = graph.SubsetSpec.from_omega(p5, ["v1", "v2", "v3"])
    p3_sub = graph.SubsetSpec.from_omega(p3, ["v1"])
    yield "volume of weighted subset", lambda: _close(
        graph.volume(families.path_graph(3, measure=[0.5, 2, 0.25]), ["v0", "v2"]), 0.75)
    yield "path length 1/2 + 1/4", lambda: _close(
        graph.path_length(_p3_weighted(), ["v0", "v1", "v2"]), 0.75)
    yield "energy on triangle", lambda: _close(graph.energy(tri, [0, 1, 2]), 6.0)
    yield "bilinear energy on P2", lambda: _close(graph.energy_bilinear(p2, [0, 1], [1, 0]), -1.0)
    yield "weighted P3 distance", lambda: _close(
        metric.DistanceOracle(_p3_weighted()).distance("v0", "v2"), 0.75)
    yield "C4 diameter", lambda: _close(metric.DistanceOracle(c4).diameter(), 2.0)
    yield "P5 inradius", lambda: _close(metric.DistanceOracle(p5).inradius(p5_sub), 2.0)
    yield "P3 vol_sharp at 1", lambda: _close(metric.DistanceOracle(p3).vol_sharp(1.0), 3.0)
    yield "C4 diameter via inradius", lambda: _close(
        metric.DistanceOracle(c4).diameter_via_inradius(), 2.0)
    yield "P2 lambda1", lambda: _close(spectral.lambda1(p2).eigenvalue, 2.0)
    yield "P3 lambda1", lambda: _close(spectral.lambda1(p3).eigenvalue, 1.0)
    yield "C8 lambda1 closed form", lambda: _close(
        spectral.lambda1(families.cycle_graph(8)).eigenvalue, 2 * (1 - math.cos(2 * math.pi / 8)))
    yield "P3 centre Dirichlet", lambda: _close(
        spectral.lambda_dirichlet(p3, p3_sub).eigenvalue, 2.0)
    yield "P5 interior Dirichlet", lambda: _close(
        spectral.lambda_dirichlet(p5, p5_sub).eigenvalue, 2 - math.sqrt(2))
    yield "P2 Neumann bound tight", lambda: _close(bounds.neumann_bound(p2).ratio, 1.0)
    yield "C4 Neumann bound", lambda: _close(bounds.neumann_bound(c4).bound, 0.5)
    yield "P5 Dirichlet bound", lambda: _close(bounds.dirichlet_bound(p5, p5_sub).bound, 1 / 6)
    yield "P3 relative Dirichlet bound", lambda: _close(
        bounds.dirichlet_bound_relative(p3, p3_sub).bound, 1 / 3)
    yield "P5 Voronoi tie-break", lambda: (
        voronoi.build_voronoi(p5, ["v0", "v4"]).assignment["v2"] == "v0")
    yield "P3 endpoint cell constant", lambda: _close(
        voronoi.cellwise_dirichlet_constant(p3, p3.vertices, "v0").constant, 0.25)
    yield "P3 endpoint cell eigenvalue", lambda: _close(
        voronoi.cellwise_dirichlet_constant(p3, p3.vertices, "v0").eigenvalue, (3 - math.sqrt(5)) / 2)
    yield "C4 opposite resistance", lambda: _close(
        resistance.ResistanceOracle(c4).resistance("v0", "v2"), 1.0)
    yield "C4 adjacent resistance", lambda: _close(
        resistance.ResistanceOracle(c4).resistance("v0", "v1"), 0.75)
    yield "P3 series resistance", lambda: _close(
        resistance.ResistanceOracle(p3).resistance("v0", "v2"), 2.0)
    yield "C4 refined Neumann bound", lambda: _close(resistance.refined_neumann_bound(c4).bound, 1.0)
    yield "variation", lambda: _close(resistance.variation([-1, 0, 5]), 6.0)
    yield "quarter inequality equality", lambda: _close(
        resistance.quarter_inequality_check([1, 1], [1, -1]).lhs, 2.0)
    yield "line window", lambda: lazy.extract_window(lazy.integer_line(), 3).graph.n == 7
    yield "3-regular tree ball", lambda: lazy.extract_window(lazy.regular_tree(3), 2).graph.n == 10
    yield "line truncation rows", lambda: all(
        r.holds and _close(r.inradius, 1) and _close(r.vol_sharp, 3) and r.lambda0 >= 1 - TOL
        for r in lazy.truncation_study(lazy.integer_line(3), [6, 12, 24]).rows)
    yield "P2 optimum at uniform measure", lambda: np.allclose(
        spectral.lambda1(p2.with_measure([0.5, 0.5])).eigenvalue, 4.0)


def run(out):
    """Print one PASS/FAIL line per example; return the number of failures."""
    failures = 0
    for name, check in _examples():
        try:
            ok = bool(check())
        except Exception as exc:  # a crash is a failure, not an abort
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'}\t{name}", file=out)
    return failures
