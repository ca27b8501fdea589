"""Geometric lower bounds for eigenvalues of weighted graph Laplacians."""

from .bounds import (BoundReport, basic_inequality_check, dirichlet_bound,
                     dirichlet_bound_relative, dirichlet_pair, neumann_bound)
from .graph import (Graph, GraphError, GraphFormatError, SubsetSpec, dump, dumps, energy,
                    energy_bilinear, load, parse, path_length, support, validate, volume)
from .lazy import (GraphGenerator, comb_with_apex, extract_window, integer_line,
                   regular_tree, square_lattice, truncation_study)
from .metric import Ball, DistanceOracle
from .optimality import lambda1_measure_gradient, minimize_lambda1
from .resistance import (ResistanceOracle, gvpi_check, quarter_inequality_check,
                         refined_neumann_bound, variation)
from .spectral import (LaplacianOperator, SpectralResult, assemble, kernel_check, lambda1,
                       lambda_dirichlet, rayleigh)
from .voronoi import (VoronoiDecomposition, build_voronoi, cell_radius_bound,
                      cellwise_dirichlet_constant, verify_voronoi)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "basic_inequality_check",
    "dirichlet_bound",
    "dirichlet_bound_relative",
    "dirichlet_pair",
    "neumann_bound",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "SubsetSpec",
    "dump",
    "dumps",
    "energy",
    "energy_bilinear",
    "load",
    "parse",
    "path_length",
    "support",
    "validate",
    "volume",
    "GraphGenerator",
    "comb_with_apex",
    "extract_window",
    "integer_line",
    "regular_tree",
    "square_lattice",
    "truncation_study",
    "Ball",
    "DistanceOracle",
    "lambda1_measure_gradient",
    "minimize_lambda1",
    "ResistanceOracle",
    "gvpi_check",
    "quarter_inequality_check",
    "refined_neumann_bound",
    "variation",
    "LaplacianOperator",
    "SpectralResult",
    "assemble",
    "kernel_check",
    "lambda1",
    "lambda_dirichlet",
    "rayleigh",
    "VoronoiDecomposition",
    "build_voronoi",
    "cell_radius_bound",
    "cellwise_dirichlet_constant",
    "verify_voronoi",
]
