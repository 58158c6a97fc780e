"""Exact computation workbench for generalized Turán problems with double stars."""

from .errors import CapacityError, Graph6Error, HypothesisError, SpecError, TuranLabError
from .graph import Graph, common_neighbor_count, get_cap
from .graph6 import decode_graph6, encode_graph6
from .canon import canonical_form, canonical_key
from .matching import max_matching, max_matching_size, min_vertex_cover_size, star_or_matching_lower_bound
from .patterns import Pattern, chromatic_number, color_critical_edges, contains_pattern, count_double_star_edge, count_pattern
from .constructions import ConstructionSpec, build, regular_triangle_free
from .formulas import (
    DoubleStarParams,
    RValue,
    best_complete_bipartite,
    best_complete_bipartite_plus,
    cnc_value,
    count_in_complete_bipartite,
    f_value,
    klikks_value,
    r_value,
)
from .oracle import ExtremalRecord, enumerate_forbidden_free, ex_exhaustive, ex_stochastic
from .verify import AuditReport, audit_lemma, audit_theorem


__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "audit_lemma",
    "audit_theorem",
    "CapacityError",
    "ConstructionSpec",
    "DoubleStarParams",
    "ExtremalRecord",
    "Graph",
    "Graph6Error",
    "HypothesisError",
    "Pattern",
    "RValue",
    "SpecError",
    "TuranLabError",
    "best_complete_bipartite",
    "best_complete_bipartite_plus",
    "build",
    "canonical_form",
    "canonical_key",
    "chromatic_number",
    "cnc_value",
    "color_critical_edges",
    "common_neighbor_count",
    "contains_pattern",
    "count_double_star_edge",
    "count_in_complete_bipartite",
    "count_pattern",
    "decode_graph6",
    "encode_graph6",
    "enumerate_forbidden_free",
    "ex_exhaustive",
    "ex_stochastic",
    "f_value",
    "get_cap",
    "klikks_value",
    "max_matching",
    "max_matching_size",
    "min_vertex_cover_size",
    "r_value",
    "regular_triangle_free",
    "star_or_matching_lower_bound",
]
