"""Joint degree vector toolkit.

Computes joint degree vectors (JDVs) of simple graphs, tests integer
vectors for JDV graphicality, generates half-graph lower-bound
constructions, and evaluates the upper bounds on the maximum number of
nonzero JDV entries: the exact discrete relaxation, the closed-form
continuous relaxation, and the 13/24 support-density bound — all
cross-checked by an exhaustive small-n oracle.
"""

from .constructions import augmented_half_graph, half_graph, half_graph_support_size
from .graph import (
    DegreeProfile,
    Graph,
    degree_profile,
    format_edge_list,
    parse_edge_list,
)
from .jdv import (
    GraphicalityVerdict,
    Jdv,
    SupportSet,
    Violation,
    ViolationKind,
    check_graphical,
    jdv_from_json,
    jdv_of,
    jdv_to_json,
    support,
    weighted_degree_sum,
)
from .oracle import OracleResult, max_support_exhaustive
from .relaxations import (
    BoundReport,
    ContinuousBound,
    RelaxationSolution,
    WeightedPair,
    alpha_prime,
    bound_report,
    continuous_feasibility,
    pair_weights,
    solve_beta0,
    solve_discrete_relaxation,
)
from .second_bound import (
    ChainLink,
    ChainReport,
    FOptimum,
    SecondBoundDiagnostics,
    constraint_residuals,
    degree_sum_bound,
    diagnostics,
    maximize_f,
    verify_chain,
)

__all__ = [
    "BoundReport",
    "ChainLink",
    "ChainReport",
    "ContinuousBound",
    "DegreeProfile",
    "FOptimum",
    "Graph",
    "GraphicalityVerdict",
    "Jdv",
    "OracleResult",
    "RelaxationSolution",
    "SecondBoundDiagnostics",
    "SupportSet",
    "Violation",
    "ViolationKind",
    "WeightedPair",
    "alpha_prime",
    "augmented_half_graph",
    "bound_report",
    "check_graphical",
    "constraint_residuals",
    "continuous_feasibility",
    "degree_profile",
    "degree_sum_bound",
    "diagnostics",
    "format_edge_list",
    "half_graph",
    "half_graph_support_size",
    "jdv_from_json",
    "jdv_of",
    "jdv_to_json",
    "max_support_exhaustive",
    "maximize_f",
    "pair_weights",
    "parse_edge_list",
    "solve_beta0",
    "solve_discrete_relaxation",
    "support",
    "verify_chain",
    "weighted_degree_sum",
]

__version__ = "0.1.0"
