"""
Budget-bounded materialization and ball exploration of schemas

Both walks are breadth-first and deterministic. A vertex gets its children in
this order: the continuation of the chain it belongs to, then the specs of its
type in declaration order, siblings 1, 2, 3, ... within a spec. Vertex ids are
``v1, v2, ...`` in materialization order, ``v1`` being the root.
"""
import itertools
import logging
import math
from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Deque, Dict, FrozenSet, Iterator, List, Mapping, Tuple, Union

from ultratree.cardinality import OMEGA
from ultratree.config import Settings
from ultratree.core.tree import LabeledTree
from ultratree.lazygen.rules import LabelRule, RuleKind, Scope
from ultratree.lazygen.schema import ChildSpec, TreeSchema
from ultratree.metric.balls import Ball

logger = logging.getLogger(__name__)

DEFAULT_UNCOUNTABLE_SAMPLE = 8


@dataclass(frozen=True)
class Budget:
    """Upper bounds on materialized vertices (root included) and depth"""
    max_vertices: int = 10_000
    max_depth: int = 1_000

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_depth < 1:
            raise ValueError(f"budget bounds must be >= 1, got ({self.max_vertices}, {self.max_depth})")

    @classmethod
    def from_settings(cls, settings: Settings) -> "Budget":
        return cls(settings.budget_vertices, settings.budget_depth)


@dataclass(frozen=True)
class Truncation:
    """A finite materialization of a schema and the vertices it cut short"""
    schema_name: str
    tree: LabeledTree
    frontier: FrozenSet[str]
    types: Mapping[str, str]
    depths: Mapping[str, int]
    budget: Budget

    @property
    def is_complete(self) -> bool:
        return not self.frontier

    def ordinal(self, v: str) -> int:
        """Materialization ordinal, 1 for the root"""
        return int(self.tree.check(v)[1:])

    def in_order(self) -> List[str]:
        return sorted(self.tree.vertices, key=self.ordinal)

    def vertices_of_type(self, type_name: str) -> List[str]:
        return [v for v in self.in_order() if self.types[v] == type_name]

    def relabeled(self, labels: Mapping[str, float]) -> "Truncation":
        return Truncation(self.schema_name, self.tree.relabeled(labels), self.frontier,
                          self.types, self.depths, self.budget)


@dataclass(frozen=True)
class FiniteBall:
    """The ball around the root closed off within budget"""
    ball: Ball
    tree: LabeledTree

    @property
    def members(self) -> FrozenSet[str]:
        return self.ball.members


@dataclass(frozen=True)
class BudgetExceeded:
    """The ball around the root was still open when exploration stopped"""
    reason: str
    frontier: Tuple[str, ...]
    explored: int


ExploreResult = Union[FiniteBall, BudgetExceeded]


@dataclass(frozen=True)
class _Node:
    id: str
    type_name: str
    depth: int
    label: float
    chain_left: int


@dataclass(frozen=True)
class _Slot:
    type_name: str
    label: float
    chain_left: int


class _InfiniteFamily(Exception):
    def __init__(self, spec: ChildSpec):
        self.spec = spec
        super().__init__(spec.child_type)


def child_label(rule: LabelRule, sibling: int, child_depth: int, parent_label: float) -> float:
    """Label of the sibling-th child of a spec, the child sitting at child_depth"""
    if rule.kind is RuleKind.INHERIT:
        return parent_label
    if rule.scope is Scope.SIBLING:
        return rule.evaluate(sibling)
    return rule.evaluate(child_depth + 1)


def _slot(spec: ChildSpec, sibling: int, node: _Node) -> _Slot:
    label = child_label(spec.rule, sibling, node.depth + 1, node.label)
    return _Slot(spec.child_type, label, spec.length.resolve(node.depth + 1, sibling) - 1)


def _slots(schema: TreeSchema, node: _Node, uncountable_sample: int) -> Iterator[_Slot]:
    if node.chain_left:
        yield _Slot(node.type_name, node.label, node.chain_left - 1)
    for spec in schema.node_type(node.type_name).children:
        if spec.count.is_finite:
            siblings = range(1, spec.count.n + 1)
        elif spec.count == OMEGA:
            siblings = itertools.count(1)
        else:
            siblings = range(1, uncountable_sample + 1)
        for i in siblings:
            yield _slot(spec, i, node)


def _region_slots(schema: TreeSchema, node: _Node, r: float) -> Iterator[_Slot]:
    """Children of node labeled at most r; raises _InfiniteFamily if there are infinitely many"""
    if node.chain_left:
        yield _Slot(node.type_name, node.label, node.chain_left - 1)
    for spec in schema.node_type(node.type_name).children:
        if spec.is_empty:
            continue
        if spec.count.is_finite:
            for i in range(1, spec.count.n + 1):
                slot = _slot(spec, i, node)
                if slot.label <= r:
                    yield slot
            continue

        rule = spec.rule
        if rule.scope is Scope.DEPTH:
            if _slot(spec, 1, node).label <= r:
                raise _InfiniteFamily(spec)
        elif rule.has_infinitely_many_at_most(r):
            raise _InfiniteFamily(spec)
        elif rule.divergent:
            # divergent rules are nondecreasing, so the members <= r form a prefix
            for i in itertools.count(1):
                slot = _slot(spec, i, node)
                if slot.label > r:
                    break
                yield slot


def _root(schema: TreeSchema) -> _Node:
    return _Node("v1", schema.root_type, 0, schema.root_label, 0)


class _Builder:
    def __init__(self, root: _Node):
        self.labels: Dict[str, float] = {root.id: root.label}
        self.edges: List[Tuple[str, str]] = []
        self.types: Dict[str, str] = {root.id: root.type_name}
        self.depths: Dict[str, int] = {root.id: 0}

    def __len__(self) -> int:
        return len(self.labels)

    def add(self, parent: _Node, slot: _Slot) -> _Node:
        child = _Node(f"v{len(self.labels) + 1}", slot.type_name, parent.depth + 1,
                      slot.label, slot.chain_left)
        self.labels[child.id] = child.label
        self.edges.append((parent.id, child.id))
        self.types[child.id] = child.type_name
        self.depths[child.id] = child.depth
        return child

    def tree(self, name: str) -> LabeledTree:
        return LabeledTree(self.labels, self.edges, name=name)


def _stop_reason(node: _Node, built: int, budget: Budget) -> str:
    if node.depth + 1 > budget.max_depth:
        return "depth budget"
    if built >= budget.max_vertices:
        return "vertex budget"
    return ""


def instantiate(s: TreeSchema, b: Budget,
                uncountable_sample: int = DEFAULT_UNCOUNTABLE_SAMPLE) -> Truncation:
    """Materialize s breadth-first until a budget bound stops expansion

    Uncountable families contribute at most ``uncountable_sample`` representatives
    and always leave their parent on the frontier.
    """
    root = _root(s)
    built = _Builder(root)
    frontier = set()
    queue: Deque[_Node] = deque([root])

    while queue:
        node = queue.popleft()
        if any(spec.count > OMEGA for spec in s.node_type(node.type_name).children):
            frontier.add(node.id)
        for slot in _slots(s, node, uncountable_sample):
            if _stop_reason(node, len(built), b):
                frontier.add(node.id)
                break
            queue.append(built.add(node, slot))

    tree = built.tree(s.name)
    logger.info(f"Materialized {s.name}: {len(tree)} vertices, {len(frontier)} on the frontier")
    return Truncation(s.name, tree, frozenset(frontier), MappingProxyType(built.types),
                      MappingProxyType(built.depths), b)


def explore_ball(s: TreeSchema, r: float, b: Budget) -> ExploreResult:
    """Semi-decide finiteness of the closed ball of radius r around the root"""
    r = float(r)
    if math.isnan(r) or r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    root = _root(s)
    built = _Builder(root)
    if root.label > r:
        return FiniteBall(Ball(root.id, r, frozenset((root.id,))), built.tree(s.name))

    queue: Deque[_Node] = deque([root])
    reason = ""
    frontier: List[str] = []
    while queue:
        node = queue.popleft()
        try:
            for slot in _region_slots(s, node, r):
                stop = _stop_reason(node, len(built), b)
                if stop or reason:
                    reason = reason or stop
                    frontier.append(node.id)
                    break
                queue.append(built.add(node, slot))
        except _InfiniteFamily as e:
            if not reason:
                logger.debug(f"Infinite family {node.type_name} -> {e.spec.child_type} within radius {r}")
                return BudgetExceeded("infinite family", (node.id,), len(built))
            frontier.append(node.id)

    if reason:
        logger.info(f"Ball of radius {r} in {s.name} still open after {len(built)} vertices ({reason})")
        return BudgetExceeded(reason, tuple(frontier), len(built))

    tree = built.tree(s.name)
    logger.info(f"Ball of radius {r} in {s.name} closed with {len(tree)} members")
    return FiniteBall(Ball(root.id, r, frozenset(tree.vertices)), tree)
