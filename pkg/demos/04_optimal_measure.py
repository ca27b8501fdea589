"""
Choosing the measure to minimize the first eigenvalue
=====================================================

Over probability measures with full support, the infimum of the first
nonzero eigenvalue is ``4 / diam_r``.  Projected gradient descent on the
simplex gets close on small graphs.
"""

import numpy as np

from graphbounds.families import cycle_graph, path_graph, random_tree, star_graph
from graphbounds.optimality import minimize_lambda1

graphs = {
    "P2": path_graph(2),
    "P3": path_graph(3),
    "P6": path_graph(6),
    "C4": cycle_graph(4),
    "C7": cycle_graph(7),
    "K1,4": star_graph(4),
    "tree": random_tree(9, np.random.default_rng(5)),
}

print(f"{'graph':<7}{'start':>10}{'final':>12}{'target':>10}{'iters':>7}  stop")
for name, g in graphs.items():
    res = minimize_lambda1(g)
    print(f"{name:<7}{res.trace[0].lambda1:>10.4f}{res.lambda1:>12.6f}{res.target:>10.4f}"
          f"{len(res.trace) - 1:>7}  {res.reason}")

# on P3 the mass moves to the two endpoints
res = minimize_lambda1(path_graph(3), tol=1e-6)
print("\nP3 measure:", np.round(res.measure, 4))
