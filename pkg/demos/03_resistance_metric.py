"""
Resistance metric
=================

``r(x, y)`` is the best constant in ``(f(x) - f(y))^2 <= r(x, y) E(f)``.
It is the effective resistance between x and y, never exceeds the path
distance, and equals it on trees.
"""

import numpy as np

from graphbounds.families import cycle_graph, random_graph, random_tree
from graphbounds.graph import energy
from graphbounds.metric import DistanceOracle
from graphbounds.resistance import ResistanceOracle, gvpi_check, variation

c4 = ResistanceOracle(cycle_graph(4))
print("C4 opposite", c4.resistance("v0", "v2"), " adjacent", c4.resistance("v0", "v1"))

rng = np.random.default_rng(3)
t = random_tree(15, rng)
print("tree: max |r - d| =",
      np.abs(ResistanceOracle(t).table() - DistanceOracle(t).table).max())

g = random_graph(15, rng, extra_edge_prob=0.4)
r, d = ResistanceOracle(g).table(), DistanceOracle(g).table
off = ~np.eye(g.n, dtype=bool)
print("graph: r/d ranges over [%.3f, %.3f]" % ((r / np.where(off, d, 1))[off].min(),
                                               (r / np.where(off, d, 1))[off].max()))

# the extremal function of the r-diameter pair attains the variation constant
o = ResistanceOracle(g)
f = o.extremal_function(*o.diameter_pair())
print("Var^2 / E =", variation(f) ** 2 / energy(g, f), " diam_r =", o.diameter_r())
checks = [gvpi_check(o, rng.standard_normal(g.n)) for _ in range(1000)]
print("largest Var^2 / (diam_r E) over 1000 random f: %.3f"
      % max(c.lhs / c.rhs for c in checks))
