# The ultrametric d_l generated by a labeled tree
from ultratree.metric.balls import (
    Ball,
    DiscreteCheck,
    ball,
    ball_partition,
    bounded_witness,
    diameter,
    is_bounded_by,
    is_discrete_subset,
    packing_number,
    w_epsilon,
)
from ultratree.metric.distance import (
    DegenerateEdge,
    NonDegenerate,
    UltrametricVerdict,
    dist_naive,
    require_non_degenerate,
    validate_labeling,
)
from ultratree.metric.index import PathMaxIndex, build_index, dist_indexed, dist_many

__all__ = [
    "Ball",
    "DegenerateEdge",
    "DiscreteCheck",
    "NonDegenerate",
    "PathMaxIndex",
    "UltrametricVerdict",
    "ball",
    "ball_partition",
    "bounded_witness",
    "build_index",
    "diameter",
    "dist_indexed",
    "dist_many",
    "dist_naive",
    "is_bounded_by",
    "is_discrete_subset",
    "packing_number",
    "require_non_degenerate",
    "validate_labeling",
    "w_epsilon",
]
