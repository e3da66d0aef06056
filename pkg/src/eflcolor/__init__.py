"""Colorings of clique decompositions of K_n via modular arithmetic labelings.

The package models partitions of the edge set of a complete graph into
cliques, detects k-arithmetic structure under vertex labelings by Z_n,
derives the forced element coloring (at most n colors), and verifies every
claim against exact oracles. A hypergraph view exposes the same machinery
for intersecting linear hypergraphs (quasiclusters).
"""

from .arithmetic import (
    ArithmeticCertificate,
    Labeling,
    Progression,
    SingleCertificate,
    SplitCertificate,
    apply_labeling,
    arithmetic_orderings,
    central_vertex,
    check_certificate,
    element_options,
    find_certificate,
    search_labeling,
    split_orderings,
)
from .canonical import (
    ChromaticClass,
    ClassSummary,
    canonical_edge_color,
    chromatic_class,
    class_structure_report,
)
from .coloring import (
    ColoredDecomposition,
    case_label,
    color_decomposition,
    element_color,
    explain_element,
    matching_pairs,
)
from .errors import (
    BudgetExceededError,
    EdgeBecomesEmptyError,
    EvenLengthError,
    OddCardinalityError,
    ParseError,
    SelfLoopError,
    TheoremViolationError,
    TooLargeError,
    UnknownFixtureError,
    ValidationError,
    VertexInOneElementError,
    Violation,
)
from .fixtures import fixture, random_decomposition, trivial_edges, near_pencil
from .hypergraph import (
    Correspondence,
    EdgeArithmeticResult,
    Hypergraph,
    Quasicluster,
    check_vertex_coloring,
    corollary_condition,
    decomposition_to_quasicluster,
    edge_arithmetic_check,
    extend_coloring,
    pad_to_uniform,
    quasicluster_to_decomposition,
    strip_degree_one,
    transfer_coloring,
    transfer_coloring_back,
    validate_quasicluster,
)
from .model import (
    CliqueDecomposition,
    ConflictGraph,
    Element,
    Verdict,
    check_proper,
    intersection_graph,
    validate_decomposition,
)
from .oracle import (
    ExactResult,
    enumerate_decompositions,
    exact_chromatic_index,
    exhaustive_labeling_oracle,
    greedy_coloring,
)

__version__ = "0.1.0"

__all__ = [
    "ArithmeticCertificate",
    "BudgetExceededError",
    "ChromaticClass",
    "ClassSummary",
    "CliqueDecomposition",
    "ColoredDecomposition",
    "ConflictGraph",
    "Correspondence",
    "EdgeArithmeticResult",
    "EdgeBecomesEmptyError",
    "Element",
    "EvenLengthError",
    "ExactResult",
    "Hypergraph",
    "Labeling",
    "OddCardinalityError",
    "ParseError",
    "Progression",
    "Quasicluster",
    "SelfLoopError",
    "SingleCertificate",
    "SplitCertificate",
    "TheoremViolationError",
    "TooLargeError",
    "UnknownFixtureError",
    "ValidationError",
    "Verdict",
    "VertexInOneElementError",
    "Violation",
    "apply_labeling",
    "arithmetic_orderings",
    "canonical_edge_color",
    "case_label",
    "central_vertex",
    "check_certificate",
    "check_proper",
    "check_vertex_coloring",
    "chromatic_class",
    "class_structure_report",
    "color_decomposition",
    "corollary_condition",
    "decomposition_to_quasicluster",
    "edge_arithmetic_check",
    "element_color",
    "element_options",
    "enumerate_decompositions",
    "exact_chromatic_index",
    "exhaustive_labeling_oracle",
    "explain_element",
    "extend_coloring",
    "find_certificate",
    "fixture",
    "greedy_coloring",
    "intersection_graph",
    "matching_pairs",
    "near_pencil",
    "pad_to_uniform",
    "quasicluster_to_decomposition",
    "random_decomposition",
    "search_labeling",
    "split_orderings",
    "strip_degree_one",
    "transfer_coloring",
    "transfer_coloring_back",
    "trivial_edges",
    "validate_decomposition",
    "validate_quasicluster",
]
