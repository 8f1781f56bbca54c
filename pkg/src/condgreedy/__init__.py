"""Conditional greedy edge-coloring of multigraphs, with exact oracles for testing it."""

from .coloring import (AdmissibilityViolation, PartialColoring, RunTrace, check_admissible,
                       conditional_greedy, cover_value, extend, free_vertices, is_free_edge,
                       uncolored_inside)
from .density import DensityResult, density, density_lower_bound_check
from .generators import InstanceSpec, generate
from .multigraph import GraphStats, Multigraph, build, induced_edge_count, parse, serialize, stats
from .oracles import OracleResult, chromatic_index, naive_admissible, validate_coloring
from .ordering import EdgeOrder, back_degree, reorder

__all__ = [
    "AdmissibilityViolation", "DensityResult", "EdgeOrder", "GraphStats", "InstanceSpec",
    "Multigraph", "OracleResult", "PartialColoring", "RunTrace", "back_degree", "build",
    "check_admissible", "chromatic_index", "conditional_greedy", "cover_value", "density",
    "density_lower_bound_check", "extend", "free_vertices", "generate", "induced_edge_count",
    "is_free_edge", "naive_admissible", "parse", "reorder", "serialize", "stats",
    "uncolored_inside", "validate_coloring",
]
