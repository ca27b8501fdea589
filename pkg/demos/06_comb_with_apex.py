"""
A graph without a Voronoi decomposition
=======================================

A half-line ``(n, 0)`` with weights 2, plus an apex joined to every
``(n, 0)`` with weight ``1 + 1/n``.  The line is the Dirichlet set.  The
apex has infinitely many neighbours, so no ball around it is finite.

Whether the apex has a nearest line vertex depends on how weights turn
into lengths.  With length ``1/b`` the vertex ``(1, 0)`` is nearest at
distance 1/2.  Reading the weights as lengths, the distances ``1 + 1/n``
decrease toward 1 without reaching it, so in every truncation the nearest
vertex is the last one and no nearest center exists.
"""

from graphbounds.lazy import (DIRECT, INVERSE, VertexCapExceeded, comb_nearest_center,
                              comb_with_apex, extract_window)

for conv in (INVERSE, DIRECT):
    print(f"\n{conv} lengths")
    print("n_max  nearest   distance     at edge")
    for row in comb_nearest_center([4, 16, 64, 256, 1024], conv):
        print(f"{row.n_max:<7}{str(row.nearest):<10}{row.distance:<13.8f}{row.at_truncation_edge}")

for conv in (INVERSE, DIRECT):
    try:
        extract_window(comb_with_apex(conv), 1.5, vertex_cap=10**4)
    except VertexCapExceeded as exc:
        print(f"{conv}: window around the apex is not finite ({exc})")
