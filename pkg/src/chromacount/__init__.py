"""chromacount: exact colouring counts, list-chromatic polynomials, and an
exhaustive verifier for the clique-with-trees colouring-count bound on small
connected 4-chromatic graphs."""

from .chromatic import (
    chromatic_polynomial,
    closed_form_cycle,
    count_colourings,
    falling_factorial,
    path_fixed_endpoints,
    shift_to_p,
    shift_to_q,
    theta_polynomial,
    tomescu_bound,
)
from .graphs import (
    LOOP,
    Graph,
    Loop,
    canonical_form,
    chromatic_number,
    contract_vertices,
    delete_edge,
    emit_graph6,
    has_twins,
    is_2_induced,
    is_edge_critical,
    is_vertex_critical,
    leaf_pruned_core,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_k4_with_trees,
    make_path,
    make_theta,
    parse_graph6,
    shortest_odd_cycle,
)
from .listcolor import (
    ForbiddenAssignment,
    ListAssignment,
    closed_form_check,
    compress,
    count_list_colourings,
    extremal_assignment,
    inclusion_exclusion_count,
    kempe_swap_map,
    list_chromatic_polynomial,
    path_A,
    path_B,
    path_C_hat,
)
from .polynomials import IntPolynomial, polynomial_from_json, polynomial_to_json
from .report import VerificationReport
from .verify import (
    census_report,
    enumerate_connected,
    enumerate_graphs,
    four_critical_census,
    groetzsch_graph,
    is_k4_with_trees,
    smallest_triangle_free_4chromatic,
    verify_claim_2induced,
    verify_small_lemmas,
    verify_theorem_main,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Loop",
    "LOOP",
    "IntPolynomial",
    "ListAssignment",
    "ForbiddenAssignment",
    "VerificationReport",
    "parse_graph6",
    "emit_graph6",
    "canonical_form",
    "chromatic_number",
    "contract_vertices",
    "delete_edge",
    "is_2_induced",
    "shortest_odd_cycle",
    "is_vertex_critical",
    "is_edge_critical",
    "has_twins",
    "leaf_pruned_core",
    "make_cycle",
    "make_path",
    "make_complete",
    "make_complete_bipartite",
    "make_theta",
    "make_k4_with_trees",
    "count_colourings",
    "chromatic_polynomial",
    "shift_to_q",
    "shift_to_p",
    "falling_factorial",
    "tomescu_bound",
    "closed_form_cycle",
    "path_fixed_endpoints",
    "theta_polynomial",
    "count_list_colourings",
    "compress",
    "kempe_swap_map",
    "extremal_assignment",
    "list_chromatic_polynomial",
    "path_A",
    "path_B",
    "path_C_hat",
    "inclusion_exclusion_count",
    "closed_form_check",
    "polynomial_to_json",
    "polynomial_from_json",
    "enumerate_connected",
    "enumerate_graphs",
    "verify_theorem_main",
    "is_k4_with_trees",
    "verify_claim_2induced",
    "verify_small_lemmas",
    "smallest_triangle_free_4chromatic",
    "four_critical_census",
    "census_report",
    "groetzsch_graph",
]
