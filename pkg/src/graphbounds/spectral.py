"""Neumann and Dirichlet Laplacians on l2(X, m) and their bottom eigenvalues.

The operator ``H = M^{-1} A`` (``A`` the b-Laplacian, ``M = diag(m)``) is
self-adjoint in l2(X, m).  We work with the symmetric matrix
``S = M^{-1/2} A M^{-1/2}``, which has the same spectrum; an eigenvector
``v`` of ``S`` corresponds to the eigenfunction ``f = M^{-1/2} v``.

Dense symmetric eigendecomposition is used up to ``DENSE_LIMIT`` active
vertices, shift-invert Lanczos (ARPACK) above.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg, sparse
from scipy.sparse import linalg as splinalg

from .graph import GraphError, SubsetSpec, as_function, energy, norm2, require_valid

DENSE_LIMIT = 2048
RESIDUAL_RTOL = 1e-8

NEUMANN = "neumann"
DIRICHLET = "dirichlet"


@dataclass(frozen=True)
class LaplacianOperator:
    """Symmetrized Laplacian restricted to the active vertices.

    Attributes
    ----------
    kind : str
        ``"neumann"`` or ``"dirichlet"``.
    active : ndarray of int
        Indices of the active vertices (all of X, or omega).
    matrix : scipy.sparse.csr_matrix
        ``M^{-1/2} A M^{-1/2}`` on the active vertices.
    """

    kind: str
    active: np.ndarray
    matrix: sparse.csr_matrix
    sqrt_m: np.ndarray

    @property
    def dimension(self):
        return len(self.active)

    def dense(self):
        return self.matrix.toarray()


@dataclass(frozen=True)
class SpectralResult:
    eigenvalue: float
    eigenfunction: np.ndarray
    residual: float
    solver: str
    next_eigenvalue: float = np.inf

    @property
    def gap(self):
        return self.next_eigenvalue - self.eigenvalue


def assemble(graph, kind=NEUMANN, subset=None):
    """Build the symmetrized Neumann or Dirichlet operator.

    For the Dirichlet kind the rows and columns of the Dirichlet set are
    removed, i.e. functions are extended by zero there.
    """
    require_valid(graph)
    a = graph.laplacian()
    if kind == NEUMANN:
        active = np.arange(graph.n)
    elif kind == DIRICHLET:
        if subset is None:
            raise GraphError("the Dirichlet kind needs a subset")
        subset.check(graph)
        active = np.flatnonzero(subset.mask(graph))
        a = a[active][:, active]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    s = 1.0 / np.sqrt(graph.measure[active])
    mat = sparse.csr_matrix(a, copy=True)
    rows = np.repeat(np.arange(mat.shape[0]), np.diff(mat.indptr))
    mat.data = mat.data * s[rows] * s[mat.indices]
    return LaplacianOperator(kind, active, mat, 1.0 / s)


def _residual(graph, active, f, lam):
    """``||H f - lam f|| / ||f||`` in l2(m) on the active block."""
    a = graph.laplacian()
    if len(active) < graph.n:
        a = a[active][:, active]
    m = graph.measure[active]
    fa = f[active]
    r = a @ fa / m - lam * fa
    return float(np.sqrt(np.sum(r * r * m) / np.sum(fa * fa * m)))


def _fix_sign(v):
    k = np.flatnonzero(np.abs(v) > 1e-12 * np.abs(v).max())
    return -v if k.size and v[k[0]] < 0 else v


def _method(dim, method):
    if method == "auto":
        return "dense" if dim <= DENSE_LIMIT else "iterative"
    if method not in ("dense", "iterative"):
        raise ValueError(f"unknown method {method!r}")
    return method


def _lift(graph, op, v):
    f = np.zeros(graph.n)
    f[op.active] = v / op.sqrt_m
    f /= np.sqrt(norm2(graph, f))
    return _fix_sign(f)


def lambda1(graph, method="auto", seed=0):
    """First non-zero eigenvalue of the Neumann Laplacian.

    The constant direction ``M^{1/2} 1`` spans the kernel; the dense path
    drops it by sorting, the iterative path projects it out of every
    shift-invert application.  The returned eigenfunction is normalized in
    l2(m) and m-orthogonal to constants.
    """
    require_valid(graph)
    if graph.n < 2:
        raise GraphError("lambda1 needs at least two vertices")
    op = assemble(graph, NEUMANN)
    u = op.sqrt_m / np.linalg.norm(op.sqrt_m)
    solver = _method(op.dimension, method)
    if solver == "dense":
        w, v = linalg.eigh(op.dense())
        lam, vec = w[1], v[:, 1]
        nxt = w[2] if len(w) > 2 else np.inf
    else:
        k = min(2, op.dimension - 2)
        w, v = _shift_invert(op.matrix, k, seed, deflate=u)
        lam, vec = w[0], v[:, 0]
        nxt = w[1] if len(w) > 1 else np.inf
    vec = vec - u * (u @ vec)
    f = _lift(graph, op, vec)
    lam = float(lam)
    return SpectralResult(lam, f, _residual(graph, op.active, f, lam), solver, float(nxt))


def lambda_dirichlet(graph, subset, method="auto", seed=0):
    """Bottom of the spectrum of the Dirichlet Laplacian on omega."""
    if not isinstance(subset, SubsetSpec):
        subset = SubsetSpec.from_omega(graph, subset)
    op = assemble(graph, DIRICHLET, subset)
    solver = _method(op.dimension, method)
    if solver == "dense":
        w, v = linalg.eigh(op.dense())
    else:
        w, v = _shift_invert(op.matrix, min(2, op.dimension - 1), seed)
    lam = float(w[0])
    f = _lift(graph, op, v[:, 0])
    nxt = float(w[1]) if len(w) > 1 else np.inf
    return SpectralResult(lam, f, _residual(graph, op.active, f, lam), solver, nxt)


def _shift_invert(mat, k, seed, deflate=None):
    """Smallest ``k`` eigenpairs of a PSD sparse matrix via shift-invert Lanczos.

    With ``deflate`` (a unit vector spanning the kernel), each application of
    the inverse is sandwiched between projections onto its complement, so
    the kernel maps to 0 and is never selected.
    """
    n = mat.shape[0]
    tau = 1e-3 * max(float(mat.diagonal().mean()), 1e-300)
    lu = splinalg.splu(sparse.csc_matrix(mat + tau * sparse.identity(n)))
    if deflate is None:
        def apply(x):
            return lu.solve(x)
    else:
        def apply(x):
            x = x - deflate * (deflate @ x)
            y = lu.solve(x)
            return y - deflate * (deflate @ y)
    opinv = splinalg.LinearOperator((n, n), matvec=apply, dtype=float)
    v0 = np.random.default_rng(seed).standard_normal(n)
    if deflate is not None:
        v0 -= deflate * (deflate @ v0)
    w, v = splinalg.eigsh(mat, k=max(k, 1), sigma=-tau, which="LM", OPinv=opinv,
                          v0=v0, tol=1e-13)
    order = np.argsort(w)
    return w[order], v[:, order]


def rayleigh(graph, f, subset=None):
    """``E(f) / ||f||^2`` in l2(m); with ``subset``, f must vanish on D."""
    f = as_function(graph, f)
    if subset is not None:
        if not isinstance(subset, SubsetSpec):
            subset = SubsetSpec.from_omega(graph, subset)
        d = graph.indices(subset.dirichlet)
        if np.any(f[d] != 0):
            raise GraphError("function does not vanish on the Dirichlet set")
    nrm = norm2(graph, f)
    if nrm == 0:
        raise GraphError("zero function")
    return energy(graph, f) / nrm


@dataclass(frozen=True)
class KernelCheck:
    constants_residual: float
    second_eigenvalue: float

    @property
    def ok(self):
        return self.constants_residual <= 1e-12 and self.second_eigenvalue > 1e-10


def kernel_check(graph):
    """Check that ``H 1 = 0`` and that 0 is a simple eigenvalue."""
    require_valid(graph)
    a = graph.laplacian()
    res = float(np.abs(a @ np.ones(graph.n) / graph.measure).max())
    if graph.n < 2:
        return KernelCheck(res, np.inf)
    return KernelCheck(res, lambda1(graph).eigenvalue)


def spectrum(graph, subset=None):
    """All eigenvalues (ascending) of the Neumann or Dirichlet operator, dense."""
    if subset is None:
        op = assemble(graph, NEUMANN)
    else:
        op = assemble(graph, DIRICHLET, subset)
    return linalg.eigvalsh(op.dense())
