"""Node and hyperedge centrality from the two-steps walk tensor.

The centrality of a hypergraph's nodes and hyperedges is read off the
unique positive eigenvector of the third-order tensor that counts
two-steps walks in the incidence bipartite graph.  This package computes
it by a bracketed power iteration, checks the expansion-tree capacity
characterization of the same vector, and ships three comparison
centralities plus rank-correlation analytics.
"""

from .analysis import (
    CorrelationCurve,
    ScoreTable,
    kendall_tau,
    scatter_export,
    spearman_rho,
    top_labels,
    topk_curve,
)
from .baselines import (
    BaselineResult,
    MappingModel,
    baseline_centrality,
    linear_fixed_point_check,
)
from .capacity import (
    CapacityVector,
    ExpansionTree,
    capacity_convergence,
    enumerate_expansion_tree,
    geometric_capacity,
    linear_capacity,
    tree_capacity,
)
from .errors import (
    DimensionError,
    InvalidArgument,
    NoConvergence,
    NotConnected,
    ParseError,
    TooLarge,
    UndefinedCorrelation,
)
from .hypergraph import (
    BipartiteGraph,
    DatasetStats,
    Hypergraph,
    ParseCounters,
    build_incidence_bipartite,
    generate_sunflower,
    is_connected,
    largest_component,
    parse_hyperedge_list,
    parse_simplex_format,
    stats,
)
from .solver import (
    CentralityResult,
    SolverConfig,
    first_iteration_identities,
    htec,
    residual_inf,
    solve_bipartite,
)
from .tensor import (
    DenseTensor,
    PrimitivityReport,
    TwoStepsOperator,
    check_weak_primitivity,
    dense_apply,
    materialize_dense,
    representative_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BaselineResult",
    "BipartiteGraph",
    "CapacityVector",
    "CentralityResult",
    "CorrelationCurve",
    "DatasetStats",
    "DenseTensor",
    "DimensionError",
    "ExpansionTree",
    "Hypergraph",
    "InvalidArgument",
    "MappingModel",
    "NoConvergence",
    "NotConnected",
    "ParseCounters",
    "ParseError",
    "PrimitivityReport",
    "ScoreTable",
    "SolverConfig",
    "TooLarge",
    "TwoStepsOperator",
    "UndefinedCorrelation",
    "baseline_centrality",
    "build_incidence_bipartite",
    "capacity_convergence",
    "check_weak_primitivity",
    "dense_apply",
    "enumerate_expansion_tree",
    "first_iteration_identities",
    "generate_sunflower",
    "geometric_capacity",
    "htec",
    "is_connected",
    "kendall_tau",
    "largest_component",
    "linear_capacity",
    "linear_fixed_point_check",
    "materialize_dense",
    "parse_hyperedge_list",
    "parse_simplex_format",
    "representative_matrix",
    "residual_inf",
    "scatter_export",
    "solve_bipartite",
    "spearman_rho",
    "stats",
    "top_labels",
    "topk_curve",
    "tree_capacity",
]
