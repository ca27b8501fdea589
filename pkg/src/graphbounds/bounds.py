"""Eigenvalue lower bounds in terms of diameter, inradius and volume.

Each bound is evaluated together with the eigenvalue it controls and packed
into a :class:`BoundReport`.  The bounds are theorems, so a violated verdict
means a bug (or a solver failure), never an interesting instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import GraphError, SubsetSpec, as_function, energy, path_length, require_valid, volume
from .metric import DistanceOracle
from .spectral import lambda1, lambda_dirichlet

VERDICT_RTOL = 1e-9

NEUMANN = "neumann-diameter"
NEUMANN_RESISTANCE = "neumann-resistance"
DIRICHLET = "dirichlet-inradius"
DIRICHLET_RELATIVE = "dirichlet-relative-volume"


@dataclass(frozen=True)
class BoundReport:
    """One instance of an eigenvalue lower bound.

    ``inputs`` holds the geometric quantities the bound was computed from,
    keyed by name (``diameter``, ``inradius``, ``volume``, ``vol_sharp``...).
    """

    theorem: str
    inputs: dict
    bound: float
    eigenvalue: float
    eigenvalue_name: str = "lambda1"
    notes: tuple = field(default=())

    @property
    def ratio(self):
        return self.eigenvalue / self.bound if self.bound > 0 else float("inf")

    @property
    def holds(self):
        return self.eigenvalue >= self.bound - VERDICT_RTOL * max(1.0, self.bound)

    @property
    def verdict(self):
        return "holds" if self.holds else "violated"


@dataclass(frozen=True)
class InequalityCheck:
    lhs: float
    rhs: float
    slack: float = 0.0

    @property
    def holds(self):
        return self.lhs <= self.rhs + self.slack


def basic_inequality_check(graph, f, path, atol=1e-12):
    """``(f(x) - f(y))^2 <= L(path) E(f)`` for a path from x to y."""
    f = as_function(graph, f)
    path = list(path)
    x, y = graph.index(path[0]), graph.index(path[-1])
    return InequalityCheck((f[x] - f[y]) ** 2, path_length(graph, path) * energy(graph, f), atol)


def neumann_bound(graph, distances=None):
    """``lambda1 >= 4 / (diam(X) vol(X))``."""
    require_valid(graph)
    if graph.n < 2:
        raise GraphError("the Neumann bound needs at least two vertices")
    distances = distances or DistanceOracle(graph)
    diam = distances.diameter()
    vol = volume(graph, graph.vertices)
    lam = lambda1(graph).eigenvalue
    return BoundReport(NEUMANN, {"diameter": diam, "volume": vol}, 4.0 / (diam * vol), lam)


def _subset(graph, subset):
    if not isinstance(subset, SubsetSpec):
        subset = SubsetSpec.from_omega(graph, subset)
    return subset.check(graph)


def dirichlet_bound(graph, subset, distances=None, eigenvalue=None):
    """``lambda0_D(omega) >= 1 / (R_omega vol(omega))``."""
    require_valid(graph)
    subset = _subset(graph, subset)
    distances = distances or DistanceOracle(graph)
    r = distances.inradius(subset)
    vol = volume(graph, subset.omega)
    if eigenvalue is None:
        eigenvalue = lambda_dirichlet(graph, subset).eigenvalue
    return BoundReport(DIRICHLET, {"inradius": r, "volume": vol}, 1.0 / (r * vol),
                       eigenvalue, "lambda0_D")


def dirichlet_bound_relative(graph, subset, distances=None, eigenvalue=None, window=False):
    """``lambda0_D(omega) >= 1 / (R_omega vol#[R_omega])``.

    With ``window=True`` the geometric inputs are labelled as values of a
    finite window, not of the ambient infinite graph.
    """
    require_valid(graph)
    subset = _subset(graph, subset)
    distances = distances or DistanceOracle(graph)
    r = distances.inradius(subset)
    vs = distances.vol_sharp(r)
    if eigenvalue is None:
        eigenvalue = lambda_dirichlet(graph, subset).eigenvalue
    notes = ("window values",) if window else ()
    return BoundReport(DIRICHLET_RELATIVE, {"inradius": r, "vol_sharp": vs}, 1.0 / (r * vs),
                       eigenvalue, "lambda0_D", notes)


def dirichlet_pair(graph, subset):
    """Both Dirichlet reports, sharing one distance table and one eigensolve."""
    subset = _subset(graph, subset)
    distances = DistanceOracle(graph)
    lam = lambda_dirichlet(graph, subset).eigenvalue
    return (dirichlet_bound(graph, subset, distances, lam),
            dirichlet_bound_relative(graph, subset, distances, lam))
