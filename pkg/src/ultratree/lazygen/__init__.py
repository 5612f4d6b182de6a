# Finite descriptions of infinite labeled trees
from ultratree.lazygen.canonical import (
    canonical_ray,
    canonical_star,
    fig1_comb,
    fig2_star_of_paths,
)
from ultratree.lazygen.materialize import (
    Budget,
    BudgetExceeded,
    ExploreResult,
    FiniteBall,
    Truncation,
    explore_ball,
    instantiate,
)
from ultratree.lazygen.rules import LabelRule, RuleKind, Scope, ZeroSet, ZeroSetKind
from ultratree.lazygen.schema import (
    ChainLength,
    ChildSpec,
    LengthMode,
    NodeType,
    SpecRef,
    TreeSchema,
)
from ultratree.lazygen.schema_parser import load_schema, parse_schema, write_schema

__all__ = [
    "Budget",
    "BudgetExceeded",
    "ChainLength",
    "ChildSpec",
    "ExploreResult",
    "FiniteBall",
    "LabelRule",
    "LengthMode",
    "NodeType",
    "RuleKind",
    "Scope",
    "SpecRef",
    "TreeSchema",
    "Truncation",
    "ZeroSet",
    "ZeroSetKind",
    "canonical_ray",
    "canonical_star",
    "explore_ball",
    "fig1_comb",
    "fig2_star_of_paths",
    "instantiate",
    "load_schema",
    "parse_schema",
    "write_schema",
]
