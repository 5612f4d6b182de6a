"""
Locally finite labelings of countable trees: label every vertex by its BFS ordinal

With injective integer labels 1, 2, 3, ... a closed ball of radius r holds at most
floor(r) + 1 vertices, whatever tree they sit in.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Union, overload

from ultratree.classify.classifier import cardinality_of_vertex_set
from ultratree.core.tree import LabeledTree, bfs_order
from ultratree.errors import UncountableInputError
from ultratree.lazygen.materialize import DEFAULT_UNCOUNTABLE_SAMPLE, Budget, Truncation, instantiate
from ultratree.lazygen.schema import TreeSchema

logger = logging.getLogger(__name__)


def ordinal_labels(t: LabeledTree) -> Dict[str, float]:
    """BFS ordinals from the smallest id, neighbors in sorted order"""
    return {v: float(i) for i, v in enumerate(bfs_order(t, t.root), start=1)}


@dataclass(frozen=True)
class OrdinalLabeling:
    """The ordinal labeling of a countable schema, applied to its truncations"""
    schema: TreeSchema

    def truncate(self, budget: Budget) -> Truncation:
        truncation = instantiate(self.schema, budget, DEFAULT_UNCOUNTABLE_SAMPLE)
        # materialization is breadth-first, so ids already carry the BFS ordinal
        labels = {v: float(truncation.ordinal(v)) for v in truncation.tree.vertices}
        return truncation.relabeled(labels)


@overload
def synthesize_labeling(x: LabeledTree) -> LabeledTree: ...


@overload
def synthesize_labeling(x: TreeSchema) -> OrdinalLabeling: ...


def synthesize_labeling(x: Union[LabeledTree, TreeSchema]) -> Union[LabeledTree, OrdinalLabeling]:
    if isinstance(x, LabeledTree):
        return x.relabeled(ordinal_labels(x))
    if not cardinality_of_vertex_set(x).is_countable:
        raise UncountableInputError(f"schema {x.name} has uncountably many vertices; "
                                    f"no locally finite labeling exists")
    logger.debug(f"Ordinal labeling attached to schema {x.name}")
    return OrdinalLabeling(x)
