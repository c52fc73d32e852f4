"""Signed edge domination functions: exact solving, constructions, bounds."""

from .errors import (
    CaseRangeViolation,
    DuplicateEdge,
    FormatError,
    IndexOutOfRange,
    InvalidSubgraph,
    LabelingGraphMismatch,
    LoopEdge,
    NotACycle,
    NotAnLGraph,
    NotAnSedf,
    OverflowGuard,
    SedfError,
    UnknownConstruction,
    ZeroPart,
)
from .graph import (
    Edge,
    EdgeLabeling,
    Graph,
    all_positive,
    build_graph,
    closed_neighborhood,
    complete_bipartite,
    vertex_connectivity_at_least,
    vertex_sum,
)
from .domination import (
    DEFAULT_MAX_NODES,
    SednCertificate,
    edge_domination_sum,
    exact_sedn,
    is_sedf,
    labeling_weight,
)
from .constructions import (
    CONSTRUCTION_IDS,
    KmnCase,
    PartitionedGraph,
    construction_weight,
    counterexample,
    kmn_blocks,
    kmn_case,
    kmn_construction,
    kmn_sedn,
    kmn_witness,
    l_graph,
    l_graph_params,
    l_graph_sedf,
    remark_bound,
)
from .bounds import (
    BoundsReport,
    ElementarySubgraph,
    cycle_sum_check,
    elementary_lower_bound,
    g_bounds,
    max_elementary_subgraph,
    order_lower_bound,
)

__all__ = [
    "CaseRangeViolation",
    "DuplicateEdge",
    "FormatError",
    "IndexOutOfRange",
    "InvalidSubgraph",
    "LabelingGraphMismatch",
    "LoopEdge",
    "NotACycle",
    "NotAnLGraph",
    "NotAnSedf",
    "OverflowGuard",
    "SedfError",
    "UnknownConstruction",
    "ZeroPart",
    "Edge",
    "EdgeLabeling",
    "Graph",
    "all_positive",
    "build_graph",
    "closed_neighborhood",
    "complete_bipartite",
    "vertex_connectivity_at_least",
    "vertex_sum",
    "DEFAULT_MAX_NODES",
    "SednCertificate",
    "edge_domination_sum",
    "exact_sedn",
    "is_sedf",
    "labeling_weight",
    "CONSTRUCTION_IDS",
    "KmnCase",
    "PartitionedGraph",
    "construction_weight",
    "counterexample",
    "kmn_blocks",
    "kmn_case",
    "kmn_construction",
    "kmn_sedn",
    "kmn_witness",
    "l_graph",
    "l_graph_params",
    "l_graph_sedf",
    "remark_bound",
    "BoundsReport",
    "ElementarySubgraph",
    "cycle_sum_check",
    "elementary_lower_bound",
    "g_bounds",
    "max_elementary_subgraph",
    "order_lower_bound",
]
