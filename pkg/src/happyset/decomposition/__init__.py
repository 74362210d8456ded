from .cluster import (
    ClusterDeletionSet,
    compute_cluster_deletion_set,
    is_cluster_deletion_set,
    make_cluster_deletion_set,
    minimum_cluster_deletion_set,
)
from .cwexpr import CwExpression, evaluate_cw_expression, parse_tree_to_cw_expression
from .modular import ParseNode, ParseTree, is_module, modular_decompose
from .twins import TwinPartition, compute_twin_partition

__all__ = [
    "ClusterDeletionSet",
    "CwExpression",
    "ParseNode",
    "ParseTree",
    "TwinPartition",
    "compute_cluster_deletion_set",
    "compute_twin_partition",
    "evaluate_cw_expression",
    "is_cluster_deletion_set",
    "is_module",
    "make_cluster_deletion_set",
    "minimum_cluster_deletion_set",
    "modular_decompose",
    "parse_tree_to_cw_expression",
]
