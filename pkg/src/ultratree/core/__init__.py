# Finite labeled trees and their text format
from ultratree.core.textformat import format_number, load_tree, parse_tree, serialize_tree
from ultratree.core.tree import (
    LabeledTree,
    TreePath,
    bfs_layers,
    bfs_order,
    bfs_parents,
    degree,
    hull,
    path_between,
)

__all__ = [
    "LabeledTree",
    "TreePath",
    "bfs_layers",
    "bfs_order",
    "bfs_parents",
    "degree",
    "format_number",
    "hull",
    "load_tree",
    "parse_tree",
    "path_between",
    "serialize_tree",
]
