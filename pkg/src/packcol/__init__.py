"""Packing colorings: exact solver, constructive colorings, verification."""

from .backend import backend_name
from .coloring import (
    InvalidColoring,
    PackingVector,
    PartitionWitnessError,
    SColoring,
    TriPartition,
    Violation,
    coloring_to_partition,
    is_valid_s_coloring,
    lift_to_subdivision,
    partition_to_1122,
    verify_s_coloring,
)
from .families import (
    GeneralizedPetersen,
    HypothesisViolation,
    PrismSpec,
    TwoFactorSpec,
    complete,
    complete_tripartite,
    cycle,
    generalized_petersen,
    generalized_prism,
    path,
    random_tree,
    star,
    two_factor_graph,
)
from .graphs import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bipartition,
    is_i_packing,
    is_petersen,
    power_graph,
)
from .solver import (
    SearchConfig,
    TimeBudgetExceeded,
    all_subdiv_one_possible,
    diameter_bound,
    enumerate_s_coloring,
    packing_chromatic,
    s_colorable,
)
from .transforms import SubdividedGraph, subdivide

__version__ = "0.1.0"

__all__ = [
    "DistanceMatrix",
    "GeneralizedPetersen",
    "Graph",
    "HypothesisViolation",
    "InvalidColoring",
    "PackingVector",
    "PartitionWitnessError",
    "PrismSpec",
    "SColoring",
    "SearchConfig",
    "SubdividedGraph",
    "TimeBudgetExceeded",
    "TriPartition",
    "TwoFactorSpec",
    "UNREACHABLE",
    "Violation",
    "all_pairs_distances",
    "all_subdiv_one_possible",
    "backend_name",
    "bipartition",
    "coloring_to_partition",
    "complete",
    "complete_tripartite",
    "cycle",
    "diameter_bound",
    "enumerate_s_coloring",
    "generalized_petersen",
    "generalized_prism",
    "is_i_packing",
    "is_petersen",
    "is_valid_s_coloring",
    "lift_to_subdivision",
    "packing_chromatic",
    "partition_to_1122",
    "path",
    "power_graph",
    "random_tree",
    "s_colorable",
    "star",
    "subdivide",
    "two_factor_graph",
    "verify_s_coloring",
]
