"""Exact, fair and stable transaction-cost allocation for symbiosis networks.

The pipeline: a validated connectivity graph of firms induces a physical
game (edge weights inside a coalition), an institutional game (closeness
centralities of the members) and their normalized weighted sum. A firm's
symbiosis index is its exact Shapley value in the aggregated game, computed
either by brute-force enumeration or by polynomial closed forms, and the
transaction cost is shared in proportion to that index. Everything is exact
rational arithmetic; decimals appear only in rendered output.
"""

from .allocation import (
    AllocationReport,
    DEFAULT_PRECISION,
    InvalidTransactionCost,
    TransactionCost,
    allocate,
    allocate_by_enumeration,
    render_report_table,
    report_to_json,
    report_to_json_dict,
)
from .document import (
    FORMAT_VERSION,
    GraphDocument,
    GraphDocumentError,
    document_to_graph,
    load_graph,
    load_graph_document,
    parse_graph_document,
)
from .games import (
    AggregationWeights,
    CharacteristicGame,
    DEFAULT_WEIGHTS,
    EMPTY_COALITION,
    add_games,
    additive_game,
    aggregated_value,
    all_coalitions,
    coalition_members,
    coalition_of,
    coalition_size,
    grand_coalition,
    institutional_value,
    make_game,
    physical_value,
    scale_game,
    subcoalitions,
    synthetic_game,
)
from .graph import (
    GraphValidationError,
    SymbiosisGraph,
    Violation,
    ViolationKind,
    build_graph,
    closeness_centrality,
    closeness_vector,
    graph_from_matrix,
    graph_violations,
    hop_distances,
)
from .rational import parse_rational, render_decimal
from .shapley import (
    DEFAULT_ENUMERATION_LIMIT,
    EnumerationLimitExceeded,
    SymbiosisIndex,
    institutional_shapley,
    physical_shapley,
    shapley_value,
    shapley_values,
    symbiosis_index,
    symbiosis_index_by_enumeration,
)
from .verify import (
    Counterexample,
    EXHAUSTIVE_LIMIT,
    FAIRNESS_LIMIT,
    InfeasibleSpec,
    PropertyReport,
    RandomGraphSpec,
    check_convexity,
    check_core,
    check_fairness_axioms,
    check_monotonicity,
    check_stability,
    check_superadditivity,
    random_graph,
    relation_holds,
)

__version__ = "0.1.0"

__all__ = [
    "AggregationWeights",
    "AllocationReport",
    "CharacteristicGame",
    "Counterexample",
    "DEFAULT_ENUMERATION_LIMIT",
    "DEFAULT_PRECISION",
    "DEFAULT_WEIGHTS",
    "EMPTY_COALITION",
    "EXHAUSTIVE_LIMIT",
    "EnumerationLimitExceeded",
    "FAIRNESS_LIMIT",
    "FORMAT_VERSION",
    "GraphDocument",
    "GraphDocumentError",
    "GraphValidationError",
    "InfeasibleSpec",
    "InvalidTransactionCost",
    "PropertyReport",
    "RandomGraphSpec",
    "SymbiosisGraph",
    "SymbiosisIndex",
    "TransactionCost",
    "Violation",
    "ViolationKind",
    "add_games",
    "additive_game",
    "aggregated_value",
    "all_coalitions",
    "allocate",
    "allocate_by_enumeration",
    "build_graph",
    "check_convexity",
    "check_core",
    "check_fairness_axioms",
    "check_monotonicity",
    "check_stability",
    "check_superadditivity",
    "closeness_centrality",
    "closeness_vector",
    "coalition_members",
    "coalition_of",
    "coalition_size",
    "document_to_graph",
    "grand_coalition",
    "graph_from_matrix",
    "graph_violations",
    "hop_distances",
    "institutional_shapley",
    "institutional_value",
    "load_graph",
    "load_graph_document",
    "make_game",
    "parse_graph_document",
    "parse_rational",
    "physical_shapley",
    "physical_value",
    "random_graph",
    "relation_holds",
    "render_decimal",
    "render_report_table",
    "report_to_json",
    "report_to_json_dict",
    "scale_game",
    "shapley_value",
    "shapley_values",
    "subcoalitions",
    "symbiosis_index",
    "symbiosis_index_by_enumeration",
    "synthetic_game",
]
