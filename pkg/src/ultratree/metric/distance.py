"""
The path-maximum mapping d_l and the non-degeneracy test that decides
whether it is an ultrametric
"""
from dataclasses import dataclass
from typing import Union

from ultratree.core.tree import LabeledTree, path_between
from ultratree.errors import DegenerateLabelingError


@dataclass(frozen=True)
class NonDegenerate:
    """Every edge has an endpoint with positive label; d_l is an ultrametric"""

    @property
    def is_ultrametric(self) -> bool:
        return True


@dataclass(frozen=True)
class DegenerateEdge:
    """An edge with both endpoints labeled 0; d_l(u, v) = 0 although u != v"""
    u: str
    v: str

    @property
    def is_ultrametric(self) -> bool:
        return False


UltrametricVerdict = Union[NonDegenerate, DegenerateEdge]


def validate_labeling(t: LabeledTree) -> UltrametricVerdict:
    """NonDegenerate, or the first degenerate edge in sorted edge order"""
    labels = t.labels
    for u, v in t.edges:
        if max(labels[u], labels[v]) <= 0:
            return DegenerateEdge(u, v)
    return NonDegenerate()


def require_non_degenerate(t: LabeledTree, operation: str) -> None:
    verdict = validate_labeling(t)
    if isinstance(verdict, DegenerateEdge):
        raise DegenerateLabelingError((verdict.u, verdict.v), operation)


def dist_naive(t: LabeledTree, u: str, v: str) -> float:
    """0 on the diagonal, otherwise the largest label on the path, endpoints included"""
    if t.check(u) == t.check(v):
        return 0.0
    labels = t.labels
    return max(labels[w] for w in path_between(t, u, v))
