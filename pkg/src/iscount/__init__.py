"""Exact counting of weighted independent sets by branch-and-reduce with
bisection-guided branching, plus an inclusion-exclusion chromatic number."""

from .cardinality import State, format_rational, is_proper, trivial_cardinality, weight_of_set
from .chromatic import ChromaticResult, chromatic_bruteforce, chromatic_number, count_is_induced
from .engine import EngineConfig, SearchStats, count_independent_sets, iscount, measure, select_branch_vertex
from .graph import Graph, components, cut_vertices, find_separating_pair, parse_graph
from .oracle import count_is_bruteforce, restricted_total_bruteforce, weighted_total_bruteforce
from .partition import Partition, bisect, skeleton
from .procedures import DegenerateCut, d0, d1, d2, prop, reduction

__all__ = [
    "ChromaticResult",
    "DegenerateCut",
    "EngineConfig",
    "Graph",
    "Partition",
    "SearchStats",
    "State",
    "bisect",
    "chromatic_bruteforce",
    "chromatic_number",
    "components",
    "count_independent_sets",
    "count_is_bruteforce",
    "count_is_induced",
    "cut_vertices",
    "d0",
    "d1",
    "d2",
    "find_separating_pair",
    "format_rational",
    "is_proper",
    "iscount",
    "measure",
    "parse_graph",
    "prop",
    "reduction",
    "restricted_total_bruteforce",
    "select_branch_vertex",
    "skeleton",
    "trivial_cardinality",
    "weight_of_set",
    "weighted_total_bruteforce",
]
