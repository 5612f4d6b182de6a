# Brute-force oracles and seeded random instances for differential tests
from ultratree.oracle.brute import brute_ball, brute_dist, brute_hull, brute_packing
from ultratree.oracle.random_trees import (
    LabelingMode,
    RandomTreeSpec,
    random_schema,
    random_tree,
)

__all__ = [
    "LabelingMode",
    "RandomTreeSpec",
    "brute_ball",
    "brute_dist",
    "brute_hull",
    "brute_packing",
    "random_schema",
    "random_tree",
]
