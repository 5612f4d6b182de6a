"""
Seeded random instances: labeled trees by uniform parent attachment, and small
countable schemas over the whole rule family
"""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ultratree.cardinality import OMEGA, Cardinality
from ultratree.core.tree import LabeledTree
from ultratree.lazygen.rules import LabelRule, Scope
from ultratree.lazygen.schema import ChainLength, ChildSpec, LengthMode, NodeType, TreeSchema

logger = logging.getLogger(__name__)

SEED_MASK = (1 << 64) - 1


class LabelingMode(Enum):
    POSITIVE_UNIFORM = "positive-uniform"      # multiples of 0.5 in (0, 10]
    WITH_ZEROS = "with-zeros"                  # positive-uniform, each label 0 with some probability
    INJECTIVE_ORDINAL = "injective-ordinal"    # a permutation of 1..n


@dataclass(frozen=True)
class RandomTreeSpec:
    n: int
    mode: LabelingMode = LabelingMode.POSITIVE_UNIFORM
    seed: int = 0
    zero_probability: float = 0.3

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"a tree needs n >= 1 vertices, got {self.n}")
        if not 0 <= self.zero_probability <= 1:
            raise ValueError("zero_probability must lie in [0, 1]")


def random_tree(spec: RandomTreeSpec) -> LabeledTree:
    """Vertex x_k attaches to a uniform earlier vertex; ids x0 .. x{n-1}"""
    rng = np.random.default_rng(spec.seed & SEED_MASK)
    n = spec.n
    ids = [f"x{k}" for k in range(n)]
    edges = [(ids[int(rng.integers(0, k))], ids[k]) for k in range(1, n)]

    if spec.mode is LabelingMode.INJECTIVE_ORDINAL:
        values = rng.permutation(n) + 1
    else:
        values = rng.integers(1, 21, size=n) / 2
        if spec.mode is LabelingMode.WITH_ZEROS:
            values = np.where(rng.random(n) < spec.zero_probability, 0.0, values)

    labels = {v: float(x) for v, x in zip(ids, values)}
    return LabeledTree(labels, edges, name=f"random_{spec.mode.value}_{n}_{spec.seed}")


def _random_rule(rng: np.random.Generator, finite_count: bool) -> LabelRule:
    scope = Scope.SIBLING if rng.random() < 0.5 else Scope.DEPTH
    choice = int(rng.integers(0, 6 if finite_count else 5))
    if choice == 0:
        return LabelRule.const(float(rng.integers(1, 4)), scope)
    if choice == 1:
        a, b = int(rng.integers(0, 3)), int(rng.integers(1, 3))
        return LabelRule.affine(a, b, scope)
    if choice == 2:
        return LabelRule.recip(scope)
    if choice == 3:
        return LabelRule.pow(float(rng.choice([-1.0, 0.5, 1.0, 2.0])), scope)
    if choice == 4:
        return LabelRule.geom(float(rng.integers(1, 3)), float(rng.choice([0.5, 2.0])), scope)
    return LabelRule.inherit()


def _random_length(rng: np.random.Generator) -> ChainLength:
    choice = int(rng.integers(0, 5))
    if choice == 3:
        return ChainLength(LengthMode.INDEX)
    if choice == 4:
        return ChainLength(LengthMode.SIBLING)
    return ChainLength.fixed(1 + choice % 2)


def random_schema(seed: int) -> TreeSchema:
    """A countable schema with at most 4 types and no zero labels"""
    rng = np.random.default_rng(seed & SEED_MASK)
    names = [f"T{k}" for k in range(int(rng.integers(1, 5)))]
    types = []
    for name in names:
        specs = []
        for _ in range(int(rng.integers(0, 3))):
            count = OMEGA if rng.random() < 0.25 else Cardinality.finite(int(rng.integers(1, 4)))
            rule = _random_rule(rng, count.is_finite)
            specs.append(ChildSpec(str(rng.choice(names)), count, rule, _random_length(rng)))
        types.append(NodeType(name, tuple(specs)))
    schema = TreeSchema(f"random_{seed}", names[0], float(rng.integers(1, 6)), tuple(types))
    logger.debug(f"Random schema {schema.name}: {len(names)} types")
    return schema
