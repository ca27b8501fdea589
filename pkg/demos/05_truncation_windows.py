"""
Finite windows of infinite graphs
=================================

On an infinite graph the relative-volume bound ``1 / (R * vol#[R])`` uses
the largest ball measure at radius R instead of the total volume.  Here it
is evaluated on growing metric balls of the integer line, the square
lattice and a regular tree.  All numbers are window values.
"""

from graphbounds.lazy import integer_line, regular_tree, square_lattice, truncation_study

studies = [
    (integer_line(3), [6, 12, 24, 48]),
    (square_lattice(3), [4, 8, 12]),
    (regular_tree(3, 2), [2, 4, 6]),
]
for gen, radii in studies:
    study = truncation_study(gen, radii)
    print(f"\n{study.generator}")
    print("radius  n      lambda0    R      vol#   bound    affected")
    for r in study.rows:
        print(f"{r.radius:<8g}{r.vertices:<7}{r.lambda0:<11.5f}{r.inradius:<7g}"
              f"{r.vol_sharp:<7g}{r.bound:<9.4f}{r.boundary_affected}")
    print("all hold:", study.all_hold)
