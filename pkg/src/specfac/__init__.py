"""A_alpha spectral radius and P>=2-factor covered graphs."""

from specfac.factor import (
    Violation,
    ViolationKind,
    deficiency_check,
    has_p2_factor,
    is_covered_direct,
    is_covered_structural,
)
from specfac.families import case_graph, claim1_graph, extremal_graph
from specfac.graph import Graph, complement, complete, empty, graph6_decode, graph6_encode, join, path, sequential_join, union
from specfac.spectral import Partition, a_alpha, eigenvalues, quotient, quotient_largest_eig, rho, spectral_radius
from specfac.thresholds import audit_inequalities, eta, f_alpha, theta

__all__ = [
    "Graph", "Partition", "Violation", "ViolationKind",
    "a_alpha", "audit_inequalities", "case_graph", "claim1_graph", "complement", "complete",
    "deficiency_check", "eigenvalues", "empty", "eta", "extremal_graph", "f_alpha",
    "graph6_decode", "graph6_encode", "has_p2_factor", "is_covered_direct", "is_covered_structural",
    "join", "path", "quotient", "quotient_largest_eig", "rho", "sequential_join", "spectral_radius",
    "theta", "union",
]
