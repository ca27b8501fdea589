"""Minimizing lambda1 over probability measures.

Over all full-support probability measures ``m`` on a finite graph the
infimum of ``lambda1(X, b, m)`` equals ``4 / diam_r(X)``.  This module
approaches that infimum by projected gradient descent on the interior of
the simplex and reports how close it gets; it never claims attainment.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import GraphError, require_valid
from .resistance import ResistanceOracle
from .spectral import lambda1

GAP_TOL = 1e-10


@dataclass(frozen=True)
class MeasureGradient:
    """``d lambda1 / d m(x) = -lambda1 f(x)^2`` for the normalized eigenfunction.

    ``simple`` is False when the eigenvalue gap is at most ``GAP_TOL``; the
    gradient is then one element of the subdifferential.
    """

    gradient: np.ndarray
    eigenvalue: float
    gap: float

    @property
    def simple(self):
        return self.gap > GAP_TOL


def lambda1_measure_gradient(graph, measure=None):
    if measure is not None:
        graph = graph.with_measure(measure)
    require_valid(graph)
    res = lambda1(graph)
    return MeasureGradient(-res.eigenvalue * res.eigenfunction ** 2, res.eigenvalue, res.gap)


def project_simplex(v, floor=0.0):
    """Euclidean projection onto ``{m : m >= floor, sum m = 1}``.

    Shifting by ``floor`` reduces this to the projection onto a scaled
    simplex, done by sorting.
    """
    v = np.asarray(v, dtype=float)
    n = v.size
    radius = 1.0 - n * floor
    if radius < 0:
        raise ValueError("floor too large for the dimension")
    y = v - floor
    u = np.sort(y)[::-1]
    css = np.cumsum(u) - radius
    k = np.arange(1, n + 1)
    rho = np.flatnonzero(u - css / k > 0)[-1]
    theta = css[rho] / (rho + 1)
    return np.maximum(y - theta, 0.0) + floor


@dataclass(frozen=True)
class TraceRow:
    iteration: int
    lambda1: float
    gap_to_target: float
    step: float
    degenerate: bool = False


@dataclass(frozen=True)
class OptimizationResult:
    measure: np.ndarray
    lambda1: float
    target: float
    trace: list = field(default_factory=list)
    reason: str = ""

    @property
    def relative_gap(self):
        return (self.lambda1 - self.target) / self.target


def minimize_lambda1(graph, max_iters=2000, tol=1e-3, floor=1e-8, seed=0):
    """Projected gradient descent for ``min lambda1(m)`` on the simplex interior.

    Starting from the uniform measure, each step moves against the gradient
    (projected onto the tangent space of the simplex and scaled to unit
    sup-norm), then projects back onto ``{m >= floor, sum m = 1}``.  The
    step length starts at 1 and is halved until ``lambda1`` decreases.  At a
    multiple eigenvalue the measure is perturbed randomly (seeded) and the
    next initial step is halved.

    Stops after ``max_iters`` steps, when the relative gap to ``4 / diam_r``
    drops below ``tol``, or when the relative improvement of a step falls
    below 1e-12.

    Returns
    -------
    OptimizationResult
        Achieved measure and eigenvalue, the independently computed target,
        the per-iteration trace and the stopping reason.
    """
    require_valid(graph)
    if graph.n < 2:
        raise GraphError("need at least two vertices")
    rng = np.random.default_rng(seed)
    target = 4.0 / ResistanceOracle(graph).diameter_r()
    n = graph.n
    m = np.full(n, 1.0 / n)

    def evaluate(meas):
        return lambda1_measure_gradient(graph, meas)

    cur = evaluate(m)
    trace = [TraceRow(0, cur.eigenvalue, (cur.eigenvalue - target) / target, 0.0,
                      not cur.simple)]
    t0 = 1.0
    reason = "max_iters"
    for it in range(1, max_iters + 1):
        if (cur.eigenvalue - target) / target < tol:
            reason = "tolerance"
            break
        if not cur.simple:
            trial_m = project_simplex(m * (1.0 + 1e-3 * rng.uniform(-1.0, 1.0, n)), floor)
            trial = evaluate(trial_m)
            t0 *= 0.5
            if trial.eigenvalue <= cur.eigenvalue:
                m, cur = trial_m, trial
                trace.append(TraceRow(it, cur.eigenvalue, (cur.eigenvalue - target) / target,
                                      0.0, True))
                continue
        g = cur.gradient - cur.gradient.mean()
        scale = np.abs(g).max()
        if scale == 0:
            reason = "stationary"
            break
        direction = g / scale
        t = t0
        accepted = None
        while t > 1e-16:
            trial_m = project_simplex(m - t * direction, floor)
            trial = evaluate(trial_m)
            if trial.eigenvalue < cur.eigenvalue:
                accepted = (trial_m, trial)
                break
            t *= 0.5
        if accepted is None:
            reason = "no_descent"
            break
        improvement = (cur.eigenvalue - accepted[1].eigenvalue) / cur.eigenvalue
        m, cur = accepted
        trace.append(TraceRow(it, cur.eigenvalue, (cur.eigenvalue - target) / target, t,
                              not cur.simple))
        # let the next step grow back toward 1
        t0 = min(1.0, 2.0 * t)
        if improvement < 1e-12:
            reason = "stalled"
            break
    else:
        if (cur.eigenvalue - target) / target < tol:
            reason = "tolerance"
    return OptimizationResult(m, cur.eigenvalue, target, trace, reason)
