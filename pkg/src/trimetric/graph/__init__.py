from .core import (
    Graph,
    cartesian_product,
    complement,
    components,
    from_edge_list,
    from_mask,
    is_connected,
    iter_bits,
)
from .enumeration import (
    canonical_mask,
    enumerate_labeled_connected,
    enumerate_labeled_trees,
    prufer_to_tree,
)
from .families import FamilySpec, generate_family, parse_family_spec
from .io import (
    parse_edge_list,
    parse_graph6,
    read_graph6_file,
    read_graphs,
    to_edge_list,
    to_graph6,
    write_graph6_file,
)

__all__ = [
    "Graph",
    "FamilySpec",
    "canonical_mask",
    "cartesian_product",
    "complement",
    "components",
    "enumerate_labeled_connected",
    "enumerate_labeled_trees",
    "from_edge_list",
    "from_mask",
    "generate_family",
    "is_connected",
    "iter_bits",
    "parse_edge_list",
    "parse_family_spec",
    "parse_graph6",
    "prufer_to_tree",
    "read_graph6_file",
    "read_graphs",
    "to_edge_list",
    "to_graph6",
    "write_graph6_file",
]
