"""
Diameter bounds for the first Neumann eigenvalue
================================================

The first nonzero eigenvalue of a weighted graph Laplacian is bounded
below by ``4 / (diam * vol)``, and the resistance diameter gives a bound
that is never weaker.
"""

import numpy as np

from graphbounds.bounds import neumann_bound
from graphbounds.families import cycle_graph, path_graph, random_graph
from graphbounds.resistance import refined_neumann_bound

# two vertices, one unit edge: the bound is attained
rep = neumann_bound(path_graph(2))
print("P2", rep.bound, rep.eigenvalue, rep.ratio)

# paths and cycles: the ratio grows with n
print("\nn   path ratio   cycle ratio")
for n in (4, 8, 16, 32):
    print(f"{n:<4}{neumann_bound(path_graph(n)).ratio:<13.4f}"
          f"{neumann_bound(cycle_graph(n)).ratio:.4f}")

# on a cycle, parallel paths shrink the resistance diameter
c = cycle_graph(8)
print("\nC8 plain  ", neumann_bound(c).bound)
print("C8 refined", refined_neumann_bound(c).bound)

# random weighted graphs
rng = np.random.default_rng(1)
ratios = []
for _ in range(200):
    g = random_graph(12, rng)
    plain, refined = neumann_bound(g), refined_neumann_bound(g)
    assert plain.holds and refined.holds and refined.bound >= plain.bound * (1 - 1e-12)
    ratios.append(refined.bound / plain.bound)
print("\nrefined / plain over 200 graphs: min %.3f, median %.3f, max %.3f"
      % (min(ratios), np.median(ratios), max(ratios)))
