"""Fractional matchings and spectral radii of aD(G) + bA(G)."""

from .bounds import (
    BoundQuery,
    GraphFacts,
    Verdict,
    check_alpha_condition,
    check_complement_condition,
    check_fpm_spectral,
    check_lower_bound,
    check_min_degree_condition,
    check_spectral_condition,
    mu_f_lower_bound,
    phi,
)
from .errors import (
    ConvergenceError,
    DomainError,
    Graph6Error,
    GraphError,
    NotBipartiteError,
    SpecmatchError,
)
from .families import FamilyBSpec, complete_bipartite, family_b, join_exception, random_graph
from .fracmatch import (
    FractionalMatching,
    HalfInt,
    deficiency_bruteforce,
    fractional_matching_number,
    fractional_matching_witness,
    verify_fractional_matching,
)
from .graph import Graph, complement, delete_vertices, is_connected, min_degree
from .graph6 import parse_graph6, write_graph6
from .scan import ScanReport, scan_for_counterexamples
from .spectral import (
    SpectralParams,
    build_matrix,
    eigenvalues,
    graph_quotient_matrix,
    interlaces,
    quotient_matrix,
    spectral_radius,
)

__version__ = "0.1.0"

__all__ = [
    "BoundQuery",
    "ConvergenceError",
    "DomainError",
    "FamilyBSpec",
    "FractionalMatching",
    "Graph",
    "Graph6Error",
    "GraphError",
    "GraphFacts",
    "HalfInt",
    "NotBipartiteError",
    "ScanReport",
    "SpecmatchError",
    "SpectralParams",
    "Verdict",
    "build_matrix",
    "check_alpha_condition",
    "check_complement_condition",
    "check_fpm_spectral",
    "check_lower_bound",
    "check_min_degree_condition",
    "check_spectral_condition",
    "complement",
    "complete_bipartite",
    "deficiency_bruteforce",
    "delete_vertices",
    "eigenvalues",
    "family_b",
    "fractional_matching_number",
    "fractional_matching_witness",
    "graph_quotient_matrix",
    "interlaces",
    "is_connected",
    "join_exception",
    "min_degree",
    "mu_f_lower_bound",
    "parse_graph6",
    "phi",
    "quotient_matrix",
    "random_graph",
    "scan_for_counterexamples",
    "spectral_radius",
    "verify_fractional_matching",
    "write_graph6",
]
