"""Standard finite graph families and random instances.

Vertices are named ``"v0", "v1", ...`` except for stars, whose hub is ``"c"``.
"""

import numpy as np

from .graph import Graph


def _names(n):
    return [f"v{i}" for i in range(n)]


def _weights(weights, count):
    if weights is None:
        return [1.0] * count
    if np.ndim(weights) == 0:
        return [float(weights)] * count
    weights = [float(w) for w in weights]
    if len(weights) != count:
        raise ValueError(f"expected {count} weights, got {len(weights)}")
    return weights


def path_graph(n, weights=None, measure=1.0):
    names = _names(n)
    ws = _weights(weights, n - 1)
    return Graph(names, [(names[i], names[i + 1], ws[i]) for i in range(n - 1)], measure)


def cycle_graph(n, weights=None, measure=1.0):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    names = _names(n)
    ws = _weights(weights, n)
    return Graph(names, [(names[i], names[(i + 1) % n], ws[i]) for i in range(n)], measure)


def star_graph(k, weights=None, measure=1.0):
    """The star K_{1,k} with hub ``"c"`` and leaves ``v0..v{k-1}``."""
    leaves = _names(k)
    ws = _weights(weights, k)
    return Graph(["c"] + leaves, [("c", leaf, w) for leaf, w in zip(leaves, ws)], measure)


def complete_graph(n, weight=1.0, measure=1.0):
    names = _names(n)
    return Graph(names, [(names[i], names[j], weight)
                         for i in range(n) for j in range(i + 1, n)], measure)


def random_tree(n, rng, weight_range=(0.2, 5.0), measure_range=None):
    """Uniform random recursive tree with log-uniform edge weights."""
    names = _names(n)
    lo, hi = np.log(weight_range[0]), np.log(weight_range[1])
    edges = []
    for i in range(1, n):
        parent = int(rng.integers(0, i))
        edges.append((names[parent], names[i], float(np.exp(rng.uniform(lo, hi)))))
    return Graph(names, edges, _random_measure(n, rng, measure_range))


def random_graph(n, rng, extra_edge_prob=0.3, weight_range=(0.2, 5.0), measure_range=(0.2, 5.0)):
    """A random spanning tree plus independent extra edges, so always connected."""
    names = _names(n)
    lo, hi = np.log(weight_range[0]), np.log(weight_range[1])
    edges = {}
    order = rng.permutation(n)
    for k in range(1, n):
        a, b = int(order[k]), int(order[rng.integers(0, k)])
        edges[frozenset((a, b))] = float(np.exp(rng.uniform(lo, hi)))
    for a in range(n):
        for b in range(a + 1, n):
            key = frozenset((a, b))
            if key not in edges and rng.random() < extra_edge_prob:
                edges[key] = float(np.exp(rng.uniform(lo, hi)))
    edge_list = [(names[min(k)], names[max(k)], w) for k, w in edges.items()]
    return Graph(names, edge_list, _random_measure(n, rng, measure_range))


def _random_measure(n, rng, measure_range):
    if measure_range is None:
        return 1.0
    lo, hi = np.log(measure_range[0]), np.log(measure_range[1])
    return np.exp(rng.uniform(lo, hi, size=n))


def random_subset(graph, rng, min_size=1, max_size=None):
    """A random non-empty proper subset of vertices (as a list, canonical order)."""
    n = graph.n
    max_size = n - 1 if max_size is None else max_size
    k = int(rng.integers(min_size, max_size + 1))
    chosen = sorted(rng.choice(n, size=k, replace=False))
    return [graph.vertices[i] for i in chosen]
