"""
Balls, diameters, discreteness, epsilon-partitions, packing numbers and W_eps
"""
import logging
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from ultratree.core.tree import LabeledTree
from ultratree.core.unionfind import UnionFind
from ultratree.errors import EmptyVertexSetError
from ultratree.metric.distance import require_non_degenerate
from ultratree.metric.index import PathMaxIndex, build_index

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ball:
    """Closed ball B_r(c) = {x : d_l(c, x) <= r}"""
    center: str
    radius: float
    members: FrozenSet[str]

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class DiscreteCheck:
    """Outcome of the discrete-subset test"""
    discrete: bool
    radii: Dict[str, float] = field(default_factory=dict)
    violating_pair: Optional[Tuple[str, str]] = None

    def __bool__(self) -> bool:
        return self.discrete


def _check_radius(r: float, what: str = "radius") -> float:
    r = float(r)
    if math.isnan(r) or r < 0:
        raise ValueError(f"{what} must be nonnegative, got {r}")
    return r


def _check_epsilon(eps: float) -> float:
    eps = float(eps)
    if math.isnan(eps) or eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    return eps


def _members(t: LabeledTree, a: Iterable[str], operation: str) -> List[str]:
    members = sorted({t.check(v) for v in a})
    if not members:
        raise EmptyVertexSetError(f"{operation} of an empty vertex set")
    return members


def _index_for(t: LabeledTree, index: Optional[PathMaxIndex]) -> PathMaxIndex:
    if index is None:
        return build_index(t)
    if index.tree is not t and index.tree != t:
        raise ValueError("path-max index was built for a different tree")
    return index


def ball(t: LabeledTree, c: str, r: float) -> Ball:
    """Flood fill from c through vertices labeled at most r"""
    t.check(c)
    r = _check_radius(r)
    labels = t.labels
    if labels[c] > r:
        return Ball(c, r, frozenset((c,)))

    reached = {c}
    queue = deque([c])
    while queue:
        u = queue.popleft()
        for w in t.neighbors(u):
            if w not in reached and labels[w] <= r:
                reached.add(w)
                queue.append(w)
    return Ball(c, r, frozenset(reached))


def diameter(t: LabeledTree, a: Iterable[str], index: Optional[PathMaxIndex] = None) -> float:
    """Largest pairwise distance inside a; 0 for a singleton

    Pass a prebuilt index to answer repeated queries on the same tree.
    """
    members = _members(t, a, "diameter")
    if len(members) == 1:
        return 0.0
    ix = _index_for(t, index)
    positions = [ix.position(v) for v in members]
    best = 0.0
    for i, p in enumerate(positions):
        for q in positions[i + 1:]:
            best = max(best, ix.query(p, q))
    return best


def bounded_witness(t: LabeledTree, a: Iterable[str],
                    index: Optional[PathMaxIndex] = None) -> Ball:
    """A closed ball around a member of a that contains a and its whole hull"""
    members = _members(t, a, "bounded witness")
    center = members[0]
    return ball(t, center, diameter(t, members, index))


def is_bounded_by(t: LabeledTree, a: Iterable[str], b: Ball) -> bool:
    return set(_members(t, a, "boundedness check")) <= b.members


def is_discrete_subset(t: LabeledTree, s: Iterable[str],
                       index: Optional[PathMaxIndex] = None) -> DiscreteCheck:
    """Every point isolated by some positive radius, or a pair at distance 0"""
    members = _members(t, s, "discreteness check")
    if len(members) == 1:
        return DiscreteCheck(True, {members[0]: math.inf})

    ix = _index_for(t, index)
    positions = {v: ix.position(v) for v in members}
    nearest = {v: math.inf for v in members}
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            d = ix.query(positions[u], positions[v])
            if d == 0:
                return DiscreteCheck(False, violating_pair=(u, v))
            nearest[u] = min(nearest[u], d)
            nearest[v] = min(nearest[v], d)
    return DiscreteCheck(True, {v: nearest[v] / 2 for v in members})


def ball_partition(t: LabeledTree, a: Iterable[str], eps: float) -> List[FrozenSet[str]]:
    """Classes of the equivalence relation d_l <= eps restricted to a

    Two distinct vertices are within eps exactly when every label on their path is
    at most eps, so the classes are read off the components of the sub-forest of
    vertices labeled at most eps. Classes are ordered by their smallest member.
    """
    eps = _check_epsilon(eps)
    members = _members(t, a, "ball partition")
    require_non_degenerate(t, "ball partition")

    labels = t.labels
    forest = UnionFind()
    for u, v in t.edges:
        if labels[u] <= eps and labels[v] <= eps:
            forest.union(u, v)

    classes: Dict[str, List[str]] = {}
    for v in members:
        key = forest.find(v) if labels[v] <= eps else v
        classes.setdefault(key, []).append(v)
    partition = sorted((frozenset(vs) for vs in classes.values()), key=min)
    logger.debug(f"Partitioned {len(members)} vertices into {len(partition)} classes at eps={eps}")
    return partition


def packing_number(t: LabeledTree, a: Iterable[str], eps: float) -> int:
    """Largest number of points of a pairwise farther apart than eps"""
    return len(ball_partition(t, a, eps))


def w_epsilon(t: LabeledTree, eps: float) -> FrozenSet[str]:
    """W_eps = {v : l(v) <= eps}, possibly empty"""
    eps = _check_radius(eps, "epsilon")
    return frozenset(v for v, label in t.labels.items() if label <= eps)
