"""Injective edge-coloring of sparse graphs with maximum degree at most 4."""
from injcolor.conflict import Coloring, ConflictGraph, ValidationReport, build_conflict_graph, sees, seen_by, validate
from injcolor.discharging import apply_discharging, audit_charges
from injcolor.exact import BudgetExhausted, ExactResult, chi_injective_exact, color_with_k
from injcolor.formats import ParseError, emit_coloring, emit_edge_list, parse_coloring, parse_edge_list
from injcolor.generators import gen_case_gadget, gen_gadget, gen_random_eligible
from injcolor.graph import CoreGraph, Graph, GraphError, VertexClass, classify, derive_core
from injcolor.mad import Eligibility, densest_subset, is_eligible, mad_bruteforce, mad_exact
from injcolor.reduction import (
    Configuration,
    Kind,
    NotEligible,
    ProofContractViolation,
    color_constructive,
    extend_coloring,
    find_reducible,
    reduce_with,
    run_constructive,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted", "Coloring", "Configuration", "ConflictGraph", "CoreGraph", "Eligibility",
    "ExactResult", "Graph", "GraphError", "Kind", "NotEligible", "ParseError", "ProofContractViolation",
    "ValidationReport", "VertexClass", "apply_discharging", "audit_charges", "build_conflict_graph",
    "chi_injective_exact", "classify", "color_constructive", "color_with_k", "densest_subset",
    "derive_core", "emit_coloring", "emit_edge_list", "extend_coloring", "find_reducible",
    "gen_case_gadget", "gen_gadget", "gen_random_eligible", "is_eligible", "mad_bruteforce",
    "mad_exact", "parse_coloring", "parse_edge_list", "reduce_with", "run_constructive", "sees",
    "seen_by", "validate",
]
