"""
Inradius bounds and Voronoi cells
=================================

With a Dirichlet set D the bottom of the spectrum on the complement is
bounded below by ``1 / (R * vol)`` where R is the largest distance to D.
A Voronoi decomposition with centers in D shows where that comes from:
every cell fits in a ball of radius R around its center.
"""

import numpy as np

from graphbounds.bounds import dirichlet_pair
from graphbounds.families import path_graph, random_graph, random_subset
from graphbounds.graph import SubsetSpec
from graphbounds.voronoi import (build_voronoi, cell_radius_bound, cellwise_constants,
                                 verify_voronoi)

p5 = path_graph(5)
subset = SubsetSpec.from_dirichlet(p5, ["v0", "v4"])
for rep in dirichlet_pair(p5, subset):
    print(rep.theorem, rep.inputs, "bound %.4f  lambda0 %.4f" % (rep.bound, rep.eigenvalue))

# the middle vertex is equidistant; ties go to the earlier center
dec = build_voronoi(p5, ["v0", "v4"])
for p, cell in dec.cells().items():
    print(p, sorted(cell))
print(verify_voronoi(p5, dec))
print(cell_radius_bound(p5, dec, subset))

# each cell gives a constant; their minimum is below the eigenvalue
rng = np.random.default_rng(7)
g = random_graph(20, rng)
d = random_subset(g, rng, max_size=5)
dec = build_voronoi(g, d)
subset = SubsetSpec.from_dirichlet(g, d)
consts = cellwise_constants(g, dec)
print("\ncenter  size  constant   cell eigenvalue")
for c in consts:
    print(f"{c.center:<8}{c.size:<6}{c.constant:<11.4g}{c.eigenvalue:.4g}")
inradius_rep, relative_rep = dirichlet_pair(g, subset)
print("min constant", min(c.constant for c in consts))
print("lambda0     ", inradius_rep.eigenvalue)
print("R, bound    ", inradius_rep.inputs["inradius"], inradius_rep.bound)
