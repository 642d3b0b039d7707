"""Anti-Ramsey numbers of paths: exact, tree, and approximate solvers.

ar(G, P_k) is the maximum number of colors in an edge coloring of G with no
rainbow path of length k.  The package provides the data model and validity
checker, an exact branch-and-prune solver (plain and precolored), a
linear-time tree algorithm, two approximation algorithms, and generators for
independent-set and 3-SAT hardness instances with witnesses and audits.
"""

from .approx import Bipartition, bipartite_star, bipartition_via_bfs, greedy_bounded_degree
from .errors import (
    AntiRamseyError,
    EmptyGraphError,
    GraphFormatError,
    InstanceTooLargeError,
    InvalidColoringError,
    MalformedCnfError,
    NotAForestError,
    NotBipartiteError,
    NotIndependentError,
    TriviallySatisfiableError,
    UnsatisfyingAssignmentError,
)
from .exact import (
    SearchLimits,
    SearchStats,
    SolveResult,
    ar_exact,
    ar_precolored,
    upper_bound,
)
from .graphs import (
    EdgeColoring,
    Graph,
    PartialColoring,
    PrecoloredInstance,
    SimplePath,
    VertexRole,
    color_classes_connected,
    complete_bipartite,
    cycle_graph,
    distinct_color_count,
    enumerate_paths,
    format_graph_text,
    has_path_of_length,
    is_pk_free,
    parse_graph_text,
    path_graph,
    star_graph,
    vertex_role,
)
from .reductions import (
    ClauseGadget,
    ReducedColoringAudit,
    ReducedMisInstance,
    ReductionParams,
    SatReducedInstance,
    VertexGadget,
    assignment_to_coloring,
    audit_reduced_coloring,
    colors_per_vertex_coefficient,
    cycle_middle_pair_coloring,
    extract_independent_set,
    family_exclusion_limit,
    mis_coloring,
    mis_instance_from_annotation,
    mis_instance_to_annotation,
    mis_to_3partite,
    mis_to_pk,
    normalize_formula,
    parse_dimacs,
    sat_to_precolored,
)
from .trees import (
    TreeDpTable,
    carnit,
    improve_to_mono_rainbow,
    normalize_color_connected,
    tree_dp,
)

__all__ = [
    "AntiRamseyError",
    "Bipartition",
    "ClauseGadget",
    "EdgeColoring",
    "EmptyGraphError",
    "Graph",
    "GraphFormatError",
    "InstanceTooLargeError",
    "InvalidColoringError",
    "MalformedCnfError",
    "NotAForestError",
    "NotBipartiteError",
    "NotIndependentError",
    "PartialColoring",
    "PrecoloredInstance",
    "ReducedColoringAudit",
    "ReducedMisInstance",
    "ReductionParams",
    "SatReducedInstance",
    "SearchLimits",
    "SearchStats",
    "SimplePath",
    "SolveResult",
    "TreeDpTable",
    "TriviallySatisfiableError",
    "UnsatisfyingAssignmentError",
    "VertexGadget",
    "VertexRole",
    "ar_exact",
    "ar_precolored",
    "assignment_to_coloring",
    "audit_reduced_coloring",
    "bipartite_star",
    "bipartition_via_bfs",
    "carnit",
    "color_classes_connected",
    "colors_per_vertex_coefficient",
    "complete_bipartite",
    "cycle_graph",
    "cycle_middle_pair_coloring",
    "distinct_color_count",
    "enumerate_paths",
    "extract_independent_set",
    "family_exclusion_limit",
    "format_graph_text",
    "greedy_bounded_degree",
    "has_path_of_length",
    "improve_to_mono_rainbow",
    "is_pk_free",
    "mis_coloring",
    "mis_instance_from_annotation",
    "mis_instance_to_annotation",
    "mis_to_3partite",
    "mis_to_pk",
    "normalize_color_connected",
    "normalize_formula",
    "parse_dimacs",
    "parse_graph_text",
    "path_graph",
    "sat_to_precolored",
    "star_graph",
    "tree_dp",
    "upper_bound",
    "vertex_role",
]
