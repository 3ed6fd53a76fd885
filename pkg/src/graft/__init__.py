"""Degree-preserving graph extensions, edit numbers and connected regular graphs."""

__version__ = "0.1.0"

from .edit_number import EditNumberResult, Method, check_corollary, edit_number, exact_oracle
from .extension import Extension, ExtensionProblem, optimal_extension, trivial_extension, validate_extension
from .graph import Graph, NotFound, complete_graph, degree_sequence, is_connected
from .regular import Mode, RegularSpec, generate
from .subgraph import DegreeBoundedSubgraph, find_rt_subgraph, max_degree_bounded_edges

__all__ = [
    "DegreeBoundedSubgraph",
    "EditNumberResult",
    "Extension",
    "ExtensionProblem",
    "Graph",
    "Method",
    "Mode",
    "NotFound",
    "RegularSpec",
    "check_corollary",
    "complete_graph",
    "degree_sequence",
    "edit_number",
    "exact_oracle",
    "find_rt_subgraph",
    "generate",
    "is_connected",
    "max_degree_bounded_edges",
    "optimal_extension",
    "trivial_extension",
    "validate_extension",
]
