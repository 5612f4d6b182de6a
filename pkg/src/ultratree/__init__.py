"""
ultratree: ultrametric spaces generated by vertex-labeled trees

Finite trees are handled exactly (``core``, ``metric``); infinite trees are
described by schemas (``lazygen``) and classified symbolically (``classify``).
"""
from ultratree.cardinality import OMEGA, UNCOUNTABLE, Cardinality
from ultratree.config import Settings, load_settings
from ultratree.core import LabeledTree, hull, load_tree, parse_tree, serialize_tree
from ultratree.errors import UltratreeError

__version__ = "0.1.0"

__all__ = [
    "OMEGA",
    "UNCOUNTABLE",
    "Cardinality",
    "LabeledTree",
    "Settings",
    "UltratreeError",
    "__version__",
    "hull",
    "load_settings",
    "load_tree",
    "parse_tree",
    "serialize_tree",
]
