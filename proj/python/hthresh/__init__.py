"""H-product algebra on partitioned graphs."""

from ._hthresh import (
    Digraph,
    DimensionError,
    Graph,
    ParseError,
    PartitionedGraph,
    contains_induced,
    enumerate_graphs,
    expand_representation,
    factorize,
    factors_commute,
    h_product,
    is_difference,
    is_h_threshold,
    is_prime,
    is_threshold,
    mine_minimal_obstructions,
    product_chain,
    recognize_width2,
    threshold_width,
)

H0 = Digraph(2, [(1, 1), (1, 2)])
H_PRIME = Digraph(2, [(1, 2)])

__all__ = [
    "Digraph",
    "DimensionError",
    "Graph",
    "H0",
    "H_PRIME",
    "ParseError",
    "PartitionedGraph",
    "contains_induced",
    "enumerate_graphs",
    "expand_representation",
    "factorize",
    "factors_commute",
    "h_product",
    "is_difference",
    "is_h_threshold",
    "is_prime",
    "is_threshold",
    "mine_minimal_obstructions",
    "product_chain",
    "recognize_width2",
    "threshold_width",
]
