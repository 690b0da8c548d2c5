"""Triameter of graphs: computation, auxiliary invariants and bound verification."""

__version__ = "0.1.0"

from .errors import (
    CapError,
    Graph6ParseError,
    GraphInputError,
    MetricsError,
    RegistryError,
    TrimetricError,
    UndefinedParameterError,
    UnsupportedFormError,
)
from .graph import (
    FamilySpec,
    Graph,
    cartesian_product,
    complement,
    enumerate_labeled_connected,
    enumerate_labeled_trees,
    from_edge_list,
    generate_family,
    is_connected,
    parse_graph6,
    to_graph6,
)
from .metrics import distance_matrix, metrics_summary
from .theorems import check, check_all, exhaustive_scan, ng_scan, verify_family_formula
from .triameter import TriameterResult, triameter, triameter_naive, triameter_pruned, triameter_tree

__all__ = [
    "CapError",
    "FamilySpec",
    "Graph",
    "Graph6ParseError",
    "GraphInputError",
    "MetricsError",
    "RegistryError",
    "TrimetricError",
    "TriameterResult",
    "UndefinedParameterError",
    "UnsupportedFormError",
    "cartesian_product",
    "check",
    "check_all",
    "complement",
    "distance_matrix",
    "enumerate_labeled_connected",
    "enumerate_labeled_trees",
    "exhaustive_scan",
    "from_edge_list",
    "generate_family",
    "is_connected",
    "metrics_summary",
    "ng_scan",
    "parse_graph6",
    "to_graph6",
    "triameter",
    "triameter_naive",
    "triameter_pruned",
    "triameter_tree",
    "verify_family_formula",
]
