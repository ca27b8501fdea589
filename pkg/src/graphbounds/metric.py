"""The path metric d with edge lengths 1/b, balls, diameter and inradius."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .graph import GraphError, SubsetSpec, require_valid

OPEN = "open"
CLOSED = "closed"


def shortest_paths(adj, sources, labels=None, allowed=None):
    """Multi-source Dijkstra over an index adjacency list.

    Each vertex is settled by the first heap entry popped for it; entries are
    ordered by ``(distance, source label, predecessor index)``, so exact ties
    go to the earlier label and then the earlier predecessor.

    Parameters
    ----------
    adj : sequence of sequences of ``(j, b)``
    sources : sequence of int
    labels : sequence of int, optional
        Rank of each source; defaults to its position in ``sources``.
    allowed : boolean array, optional
        Restrict the search to these vertices.

    Returns
    -------
    dist, label, pred : arrays
        ``label`` is the index into ``sources`` each vertex inherits,
        ``pred`` is -1 at sources and for unreached vertices.
    """
    n = len(adj)
    dist = np.full(n, np.inf)
    label = np.full(n, -1, dtype=int)
    pred = np.full(n, -1, dtype=int)
    done = np.zeros(n, dtype=bool)
    if labels is None:
        labels = range(len(sources))
    heap = [(0.0, lab, -1, s) for s, lab in zip(sources, labels)]
    heapq.heapify(heap)
    while heap:
        d, lab, p, v = heapq.heappop(heap)
        if done[v]:
            continue
        done[v] = True
        dist[v] = d
        label[v] = lab
        pred[v] = p
        for u, w in adj[v]:
            if done[u] or (allowed is not None and not allowed[u]):
                continue
            nd = d + 1.0 / w
            if nd <= dist[u]:
                dist[u] = nd
                heapq.heappush(heap, (nd, lab, v, u))
    return dist, label, pred


def _walk(pred, target):
    out = [target]
    while pred[out[-1]] >= 0:
        out.append(pred[out[-1]])
    return out[::-1]


@dataclass(frozen=True)
class Ball:
    center: object
    radius: float
    kind: str
    members: frozenset

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)


class DistanceOracle:
    """All-pairs distances and geodesic predecessors, computed up front.

    Parameters
    ----------
    graph : Graph
        Must pass validation.
    """

    def __init__(self, graph):
        require_valid(graph)
        self.graph = graph
        n = graph.n
        self._dist = np.empty((n, n))
        self._pred = np.empty((n, n), dtype=int)
        for s in range(n):
            d, _, p = shortest_paths(graph.adjacency, [s])
            self._dist[s] = d
            self._pred[s] = p
        # sums accumulated from opposite ends can differ in the last bit
        np.minimum(self._dist, self._dist.T, out=self._dist)
        self._dist.flags.writeable = False
        self._pred.flags.writeable = False

    @property
    def table(self):
        """Read-only ``n x n`` distance matrix in canonical order."""
        return self._dist

    def distance(self, x, y):
        return float(self._dist[self.graph.index(x), self.graph.index(y)])

    def geodesic(self, x, y):
        """A path from ``x`` to ``y`` whose length equals ``d(x, y)``."""
        i, j = self.graph.index(x), self.graph.index(y)
        return [self.graph.vertices[k] for k in _walk(self._pred[i], j)]

    def distance_to_set(self, x, subset):
        idx = self.graph.indices(subset)
        if not idx:
            return float("inf")
        return float(self._dist[self.graph.index(x), idx].min())

    def ball(self, x, r, kind=CLOSED):
        if r < 0:
            raise ValueError("negative radius")
        row = self._dist[self.graph.index(x)]
        if kind == OPEN:
            mask = row < r
        elif kind == CLOSED:
            mask = row <= r
        else:
            raise ValueError(f"unknown ball kind {kind!r}")
        members = frozenset(v for v, keep in zip(self.graph.vertices, mask) if keep)
        return Ball(x, float(r), kind, members)

    def diameter(self):
        return float(self._dist.max()) if self.graph.n else 0.0

    def inradius(self, subset):
        """``max_{x in omega} d(x, D)``, the attained form of the inradius."""
        if not isinstance(subset, SubsetSpec):
            subset = SubsetSpec.from_omega(self.graph, subset)
        subset.check(self.graph)
        rows = self.graph.indices(subset.omega)
        cols = self.graph.indices(subset.dirichlet)
        return float(self._dist[np.ix_(rows, cols)].min(axis=1).max())

    def vol_sharp(self, r, rtol=1e-12):
        """Largest closed-ball measure ``sup_x m(B_r(x))``.

        On a finite graph the distance values form a finite set, so the
        infimum over ``s > r`` of open-ball measures equals the closed-ball
        value at ``r``.  Membership uses ``d <= r (1 + rtol)`` (for r >= 1)
        to absorb rounding in distances that are geometrically equal to
        ``r``; this can only enlarge the result.
        """
        if r < 0:
            raise ValueError("negative radius")
        cut = r + rtol * max(1.0, r)
        return float(((self._dist <= cut) @ self.graph.measure).max())

    def diameter_via_inradius(self):
        """``max_x R(X minus {x})``; equals :meth:`diameter`."""
        if self.graph.n < 2:
            raise GraphError("need at least two vertices")
        g = self.graph
        return max(self.inradius(SubsetSpec.from_dirichlet(g, [x])) for x in g.vertices)
