"""Resistance metric, metric Poincare inequalities and variation bounds.

``rho(x, y) = sup{f(x) - f(y) : E(f) <= 1}`` and ``r = rho^2`` is the best
constant ``p(x, y)`` in ``(f(x) - f(y))^2 <= p(x, y) E(f)``.  The supremum
is attained by the potential ``u`` of a unit current from ``x`` to ``y``
(``A u = e_x - e_y``), which gives ``r(x, y) = u(x) - u(y)``, the effective
resistance of the network with conductances ``b``.

Potentials are computed with one vertex grounded: a dense Cholesky factor
of the reduced Laplacian at desk scale, conjugate gradients above
``DENSE_LIMIT``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg
from scipy.sparse import linalg as splinalg

from .bounds import NEUMANN_RESISTANCE, BoundReport, InequalityCheck
from .graph import GraphError, as_function, energy, require_valid, volume
from .metric import DistanceOracle
from .spectral import DENSE_LIMIT, lambda1

CG_RTOL = 1e-10


class ResistanceOracle:
    """Pairwise effective resistances of a connected graph.

    At desk scale the grounded inverse ``G`` is formed once and
    ``r(x, y) = G_xx + G_yy - 2 G_xy``; above ``DENSE_LIMIT`` every query is
    a conjugate-gradient solve.
    """

    def __init__(self, graph, method="auto"):
        require_valid(graph)
        self.graph = graph
        n = graph.n
        if method == "auto":
            method = "dense" if n <= DENSE_LIMIT else "iterative"
        self.method = method
        self._reduced = graph.laplacian()[1:, 1:].tocsc()
        self._green = None
        if method == "dense" and n > 1:
            chol = linalg.cho_factor(self._reduced.toarray())
            g = np.zeros((n, n))
            g[1:, 1:] = linalg.cho_solve(chol, np.eye(n - 1))
            g.flags.writeable = False
            self._green = g

    def potential(self, x, y):
        """Potential of a unit current from ``x`` to ``y``, zero at vertex 0."""
        i, j = self.graph.index(x), self.graph.index(y)
        n = self.graph.n
        if self._green is not None:
            return self._green[:, i] - self._green[:, j]
        rhs = np.zeros(n)
        rhs[i] += 1.0
        rhs[j] -= 1.0
        u = np.zeros(n)
        if n > 1 and i != j:
            sol, info = splinalg.cg(self._reduced, rhs[1:], rtol=CG_RTOL, atol=0.0,
                                    maxiter=10 * n)
            if info != 0:
                raise RuntimeError(f"conjugate gradients did not converge (info={info})")
            u[1:] = sol
        return u

    def resistance(self, x, y):
        i, j = self.graph.index(x), self.graph.index(y)
        if i == j:
            return 0.0
        if self._green is not None:
            g = self._green
            return float(g[i, i] + g[j, j] - 2.0 * g[i, j])
        u = self.potential(x, y)
        return float(u[i] - u[j])

    def rho(self, x, y):
        return float(np.sqrt(self.resistance(x, y)))

    def extremal_function(self, x, y):
        """``f`` with ``E(f) = 1`` and ``f(x) - f(y) = rho(x, y)``."""
        r = self.resistance(x, y)
        if r == 0:
            return np.zeros(self.graph.n)
        u = self.potential(x, y)
        return u / np.sqrt(r)

    def table(self):
        """``n x n`` resistance matrix in canonical order."""
        if self._green is not None:
            dg = np.diag(self._green)
            out = dg[:, None] + dg[None, :] - 2.0 * self._green
            np.fill_diagonal(out, 0.0)
            return np.maximum(out, 0.0)
        verts = self.graph.vertices
        n = self.graph.n
        out = np.zeros((n, n))
        for a in range(n):
            for b in range(a + 1, n):
                out[a, b] = out[b, a] = self.resistance(verts[a], verts[b])
        return out

    def diameter_r(self):
        """``diam_r(X) = max r(x, y)``."""
        return float(self.table().max()) if self.graph.n else 0.0

    def diameter_pair(self):
        t = self.table()
        a, b = np.unravel_index(np.argmax(t), t.shape)
        return self.graph.vertices[a], self.graph.vertices[b]

    def gvpi_constant(self):
        """Best constant ``C_P`` in ``Var(f)^2 <= C_P E(f)``; equals ``diam_r``."""
        return self.diameter_r()

    def mpi_check(self, f, x, y, distances=None, rtol=1e-12):
        """Check the metric Poincare inequality at ``(x, y)`` for d and r.

        Also evaluates the extremal function for ``(x, y)``, whose ratio
        ``(f(x) - f(y))^2 / E(f)`` should reproduce ``r(x, y)``.
        """
        g = self.graph
        f = as_function(g, f)
        distances = distances or DistanceOracle(g)
        i, j = g.index(x), g.index(y)
        e = energy(g, f)
        lhs = (f[i] - f[j]) ** 2
        slack = rtol * max(lhs, 1e-300)
        r = self.resistance(x, y)
        ext = self.extremal_function(x, y)
        tight = (ext[i] - ext[j]) ** 2 / energy(g, ext) if r > 0 else 0.0
        return MPICheck(InequalityCheck(lhs, distances.distance(x, y) * e, slack),
                        InequalityCheck(lhs, r * e, slack), r, tight)


@dataclass(frozen=True)
class MPICheck:
    path_metric: InequalityCheck
    resistance_metric: InequalityCheck
    resistance: float
    extremal_ratio: float

    @property
    def holds(self):
        return self.path_metric.holds and self.resistance_metric.holds


def variation(f):
    """``sup f - inf f``."""
    f = np.asarray(list(f.values()) if isinstance(f, dict) else f, dtype=float)
    return float(f.max() - f.min()) if f.size else 0.0


def sup_distance_to_constants(f):
    """``inf_t ||f - t||_inf`` and the minimizing ``t`` (the midrange)."""
    f = np.asarray(f, dtype=float)
    t = 0.5 * (f.max() + f.min())
    return float(np.abs(f - t).max()), float(t)


def gvpi_check(oracle, f, rtol=1e-12):
    """``Var(f)^2 <= C_P E(f)`` with ``C_P = diam_r``."""
    f = as_function(oracle.graph, f)
    lhs = variation(f) ** 2
    return InequalityCheck(lhs, oracle.gvpi_constant() * energy(oracle.graph, f),
                           rtol * max(lhs, 1e-300))


def quarter_inequality_check(measure, f, rtol=1e-12):
    """``||f||^2 <= 1/4 sup (f(x) - f(y))^2 mu(X)`` for f orthogonal to 1.

    ``f`` is first projected onto the mu-orthogonal complement of constants.
    """
    mu = np.asarray(list(measure.values()) if isinstance(measure, dict) else measure,
                    dtype=float)
    f = np.asarray(list(f.values()) if isinstance(f, dict) else f, dtype=float)
    if np.any(mu <= 0):
        raise GraphError("measure must be positive")
    total = mu.sum()
    # projection roundoff scales with the input, not the projected f
    scale = float(np.sum(f * f * mu))
    f = f - (f @ mu) / total
    lhs = float(np.sum(f * f * mu))
    rhs = 0.25 * variation(f) ** 2 * total
    return InequalityCheck(lhs, rhs, rtol * max(rhs, scale, 1e-300))


def refined_neumann_bound(graph, oracle=None):
    """``lambda1 >= 4 / (diam_r(X) vol(X))``; never weaker than the diameter bound."""
    require_valid(graph)
    if graph.n < 2:
        raise GraphError("the Neumann bound needs at least two vertices")
    oracle = oracle or ResistanceOracle(graph)
    dr = oracle.diameter_r()
    vol = volume(graph, graph.vertices)
    lam = lambda1(graph).eigenvalue
    return BoundReport(NEUMANN_RESISTANCE, {"diameter_r": dr, "volume": vol},
                       4.0 / (dr * vol), lam)


def is_tree(graph):
    return len(graph.edges) == graph.n - 1 and graph.n > 0
