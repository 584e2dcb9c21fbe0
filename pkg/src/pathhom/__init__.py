"""Exact path homology of digraphs and path complexes over the rationals."""

from .chains import (BoundaryMode, Chain, ElementaryPath, boundary,
                     concatenate_forms, cross_product, elevation,
                     exterior_differential, is_regular, is_step_like,
                     join_paths, pairing, parse_chain, project_x, project_y)
from .complexes import (DiGraph, PathComplex, SemiEdge, SimplicialComplex,
                        allowed_basis, connected_components, explicit_complex,
                        from_digraph, from_simplicial, parse_digraph,
                        parse_simplicial, semi_edges, structural_report)
from .errors import InputError, ResourceLimitError
from .exactalg import (L1Problem, L1Result, Rational, SparseMatrix, membership,
                       minimize_l1, nullspace_basis, rank)
from .algebra import (FiniteChainComplex, alternating_sum_check,
                      complex_homology_dims, export_omega_complex, tensor_product)
from .functors import (OrientedTriangulation, cartesian_product, cone,
                       cube_digraph, cycle_graph, cylinder, disjoint_union,
                       join_complexes, join_graphs, lift, product_complexes,
                       simplex_digraph, snake_digraph, solid_path,
                       sphere_digraph, star_digraph, surface_path, suspension)
from .holes import minimal_representative, minimized_generators
from .homology import (HomologySummary, OmegaBasis, cohomology_dims_oracle,
                       dim_omega2_formula, early_termination_check,
                       h0_equals_components, homology, homology_via_allowed,
                       no_squares_shortcut, omega_basis)
from .reduce import ReductionLedger, ReductionMove, apply_move, find_moves, reduce_fully

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
