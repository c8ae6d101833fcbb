"""Exact rational polyhedral toolkit for comparing extended-formulation notions."""

__version__ = "0.1.0"

from .arith import DimensionError, GramSingular, RMatrix, gram_solve, mat_mul, rank, solve_square
from .ef import (Detail, EfVerdict, EnumerationBoundExceeded, SizeReport, check_ef_iff,
                 check_ef_map, check_ef_standard, lemma9_size_report, synthesize_linear_map)
from .lp import LinearProgram, LpOutcome, Sense, Status, feasible_point, solve
from .maps import AffineMap, CoordinateSplit, graph_polyhedron, image, project_coords
from .polyhedra import (Polyhedron, dimension, h_contains, h_to_v, is_redundant, poly_equal,
                        remove_redundancy, v_contains, v_to_h)
from .reduction import (AffineGraph, ConsistencyWarning, ReductionInstance, check_graph_redundancy,
                        is_bijective_on, normalize_graph, two_step_solve, verify_equivalence)
from .reps import Constraint, HRep, VRep
