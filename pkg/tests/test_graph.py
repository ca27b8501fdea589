import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphbounds.families import complete_graph, path_graph, random_graph
from graphbounds.graph import (Graph, GraphError, GraphFormatError, SubsetSpec, digest, dumps,
                               energy, energy_bilinear, parse, path_length, require_valid,
                               support, validate, volume)


def test_minimal_graph_is_valid():
    assert validate(Graph(["a", "b"], [("a", "b", 1.0)])).ok


def test_two_vertices_without_edge_are_disconnected():
    rep = validate(Graph(["a", "b"]))
    assert rep.violations == ("disconnected",)


def test_zero_measure_is_reported():
    rep = validate(Graph(["a", "b"], [("a", "b", 1.0)], {"a": 0.0, "b": 1.0}))
    assert any("nonpositive measure" in v for v in rep.violations)


@pytest.mark.parametrize("edges, needle", [
    ([("a", "b", -1.0)], "nonpositive weight"),
    ([("a", "b", 1.0), ("b", "a", 2.0)], "asymmetric weight"),
    ([("a", "b", 1.0), ("a", "a", 1.0)], "self-loop"),
])
def test_axiom_violations(edges, needle):
    rep = validate(Graph(["a", "b"], edges))
    assert any(needle in v for v in rep.violations)
    with pytest.raises(GraphError):
        require_valid(Graph(["a", "b"], edges))


def test_symmetric_duplicate_is_accepted():
    g = Graph(["a", "b"], [("a", "b", 1.5), ("b", "a", 1.5)])
    assert validate(g).ok and len(g.edges) == 1


def test_volume():
    assert volume(path_graph(3), ["v0", "v1", "v2"]) == 3
    assert volume(path_graph(3), []) == 0
    g = path_graph(3, measure=[0.5, 2, 0.25])
    assert volume(g, ["v0", "v2"]) == pytest.approx(0.75)
    with pytest.raises(GraphError):
        volume(g, ["nope"])


def test_path_length():
    g = path_graph(3, weights=[2.0, 4.0])
    assert path_length(g, ["v1"]) == 0
    assert path_length(g, ["v0", "v1", "v2"]) == pytest.approx(0.75)
    assert path_length(path_graph(2), ["v0", "v1"]) == 1
    with pytest.raises(GraphError):
        path_length(g, ["v0", "v2"])


def test_energy_examples():
    assert energy(path_graph(4), np.full(4, 3.7)) == 0
    assert energy(path_graph(2), [0, 1]) == 1
    assert energy(complete_graph(3), [0, 1, 2]) == 6
    assert energy(path_graph(2), {"v0": 0, "v1": 1}) == 1


def test_energy_bilinear_examples():
    g = path_graph(2)
    assert energy_bilinear(g, [0, 1], [1, 0]) == -1
    assert energy_bilinear(g, [0, 1], [5, 5]) == 0


def test_energy_brute_force_double_sum(rng):
    g = random_graph(8, rng)
    f = rng.standard_normal(8)
    w = np.zeros((8, 8))
    for i, j, b in g.edges:
        w[i, j] = w[j, i] = b
    expected = 0.5 * sum(w[x, y] * (f[x] - f[y]) ** 2 for x in range(8) for y in range(8))
    assert energy(g, f) == pytest.approx(expected, rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.integers(0, 2**32 - 1))
def test_polarization_and_cross_sign(n, seed):
    rng = np.random.default_rng(seed)
    g = random_graph(n, rng)
    f, h = rng.standard_normal(n), rng.standard_normal(n)
    lhs = energy(g, f + h)
    rhs = energy(g, f) + 2 * energy_bilinear(g, f, h) + energy(g, h)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)
    assert energy_bilinear(g, f, h) == pytest.approx(energy_bilinear(g, h, f), rel=1e-12)
    fp, fm = np.maximum(f, 0), np.maximum(-f, 0)
    assert energy_bilinear(g, fp, fm) <= 0


def test_volume_additive_and_path_concatenation(rng):
    g = random_graph(10, rng)
    a, b = list(g.vertices[:4]), list(g.vertices[4:])
    assert volume(g, a) + volume(g, b) == pytest.approx(volume(g, g.vertices))
    v = g.vertices
    # walk along edges: any walk is a path in the package's sense
    walk = [v[0]]
    for _ in range(6):
        nbrs = g.adjacency[g.index(walk[-1])]
        walk.append(v[nbrs[int(rng.integers(len(nbrs)))][0]])
    total = path_length(g, walk)
    assert path_length(g, walk[:4]) + path_length(g, walk[3:]) == pytest.approx(total)


def test_support():
    assert support(path_graph(3), [0, 2, 0]) == {"v1"}


def test_subset_spec():
    g = path_graph(3)
    s = SubsetSpec.from_dirichlet(g, ["v0", "v2"])
    assert s.omega == {"v1"}
    with pytest.raises(GraphError, match="empty Dirichlet"):
        SubsetSpec.from_dirichlet(g, []).check(g)
    with pytest.raises(GraphError):
        SubsetSpec(frozenset({"v0"}), frozenset({"v0", "v1", "v2"})).check(g)


def test_graph_is_immutable():
    g = path_graph(3)
    with pytest.raises(ValueError):
        g.measure[0] = 2.0
    with pytest.raises(AttributeError):
        g.foo = 1


FILE = """\
# a weighted path
v a 0.5
v b 2
v c 0.25
e a b 2
e b c 4
d a
"""


def test_parse_and_roundtrip():
    g, d = parse(FILE)
    assert g.vertices == ("a", "b", "c")
    assert d == {"a"}
    assert g.weight("b", "a") == 2.0
    g2, d2 = parse(dumps(g, d))
    assert g2.vertices == g.vertices and g2.edges == g.edges and d2 == d
    assert np.array_equal(g2.measure, g.measure)
    assert digest(g, d) == digest(g2, d2)


@pytest.mark.parametrize("text, lineno", [
    ("v a 1\nv b 1\ne a b 1\ne b a 1\n", 4),
    ("v a 1\ne a z 1\n", 2),
    ("v a 1\nv a 2\n", 2),
    ("v a one\n", 1),
    ("x a\n", 1),
    ("v a 1\nd q\n", 2),
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(GraphFormatError) as exc:
        parse(text)
    assert exc.value.lineno == lineno
