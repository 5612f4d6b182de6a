"""
Finite schemas for (possibly infinite) labeled trees

A schema declares node types. Each type lists child specs: how many children of
which type a vertex gets, how they are labeled, and how long a chain each child
heads. Instances are built lazily by ``materialize``.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Set, Tuple

from ultratree.cardinality import UNCOUNTABLE, ZERO, Cardinality
from ultratree.errors import SchemaError
from ultratree.lazygen.rules import LabelRule, RuleKind

logger = logging.getLogger(__name__)


class LengthMode(Enum):
    FIXED = "fixed"
    INDEX = "index"        # the parent's position index
    SIBLING = "sibling"    # the child's sibling index


@dataclass(frozen=True)
class ChainLength:
    """Number of vertices in the chain each child of a spec heads"""
    mode: LengthMode = LengthMode.FIXED
    k: int = 1

    def __post_init__(self):
        if self.mode is LengthMode.FIXED and self.k < 1:
            raise SchemaError(f"chain length must be >= 1, got {self.k}")

    @classmethod
    def fixed(cls, k: int) -> "ChainLength":
        return cls(LengthMode.FIXED, int(k))

    @classmethod
    def parse(cls, token: str) -> "ChainLength":
        if token in ("index", "sibling"):
            return cls(LengthMode(token))
        if not token.isdigit():
            raise ValueError(f"bad chain length: {token!r}")
        return cls.fixed(int(token))

    def resolve(self, parent_position: int, sibling: int) -> int:
        if self.mode is LengthMode.INDEX:
            return parent_position
        if self.mode is LengthMode.SIBLING:
            return sibling
        return self.k

    @property
    def may_exceed_one(self) -> bool:
        return self.mode is not LengthMode.FIXED or self.k > 1

    def render(self) -> str:
        return str(self.k) if self.mode is LengthMode.FIXED else self.mode.value


SINGLE = ChainLength()


@dataclass(frozen=True)
class ChildSpec:
    """`count` children of `child_type`, labeled by `rule`"""
    child_type: str
    count: Cardinality
    rule: LabelRule
    length: ChainLength = SINGLE

    @property
    def is_empty(self) -> bool:
        return self.count == ZERO

    @property
    def is_infinite(self) -> bool:
        return not self.count.is_finite


@dataclass(frozen=True)
class NodeType:
    name: str
    children: Tuple[ChildSpec, ...] = ()


@dataclass(frozen=True)
class SpecRef:
    """A child spec together with its parent type and position in the declaration"""
    parent: str
    index: int
    spec: ChildSpec

    @property
    def child(self) -> str:
        return self.spec.child_type


@dataclass(frozen=True)
class TreeSchema:
    """Validated, immutable schema

    Construction checks that every referenced type is declared, that uncountable
    counts carry a positive constant rule, that ``inherit`` only appears with
    finite counts, and that no parent/child pair can both be labeled 0.
    """
    name: str
    root_type: str
    root_label: float
    types: Tuple[NodeType, ...]
    _by_name: Dict[str, NodeType] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "types", tuple(self.types))
        object.__setattr__(self, "root_label", float(self.root_label))
        by_name: Dict[str, NodeType] = {}
        for node_type in self.types:
            if node_type.name in by_name:
                raise SchemaError(f"type {node_type.name} declared twice")
            by_name[node_type.name] = node_type
        object.__setattr__(self, "_by_name", by_name)
        self._validate()

    # lookups

    @property
    def type_names(self) -> Tuple[str, ...]:
        return tuple(t.name for t in self.types)

    def node_type(self, name: str) -> NodeType:
        try:
            return self._by_name[name]
        except KeyError:
            raise SchemaError(f"undeclared type {name}") from None

    def specs(self, type_name: str) -> Iterator[SpecRef]:
        for index, spec in enumerate(self.node_type(type_name).children):
            yield SpecRef(type_name, index, spec)

    def reachable_types(self) -> Tuple[str, ...]:
        """Types reachable from the root through nonempty specs, in declaration order"""
        seen = {self.root_type}
        queue = deque([self.root_type])
        while queue:
            name = queue.popleft()
            for spec in self.node_type(name).children:
                if not spec.is_empty and spec.child_type not in seen:
                    seen.add(spec.child_type)
                    queue.append(spec.child_type)
        return tuple(n for n in self.type_names if n in seen)

    def reachable_specs(self) -> List[SpecRef]:
        return [ref for name in self.reachable_types() for ref in self.specs(name)
                if not ref.spec.is_empty]

    # validation

    def _validate(self) -> None:
        if not self.types:
            raise SchemaError("a schema needs at least one type")
        if self.root_type not in self._by_name:
            raise SchemaError(f"undeclared root type {self.root_type}")
        if self.root_label < 0:
            raise SchemaError("root label must be nonnegative")

        for node_type in self.types:
            for spec in node_type.children:
                where = f"{node_type.name} -> {spec.child_type}"
                if spec.child_type not in self._by_name:
                    raise SchemaError(f"undeclared type {spec.child_type} in {where}")
                if spec.count == UNCOUNTABLE:
                    if spec.rule.kind is not RuleKind.CONST or spec.rule.params[0] <= 0:
                        raise SchemaError(f"uncountable count in {where} requires "
                                          f"rule const c with c > 0")
                if spec.rule.kind is RuleKind.INHERIT and not spec.count.is_finite:
                    raise SchemaError(f"inherit in {where} requires a finite count")

        self._check_non_degenerate()

    def may_be_zero(self) -> Set[str]:
        """Reachable types some instance of which may carry label 0"""
        zero: Set[str] = {self.root_type} if self.root_label == 0 else set()
        refs = self.reachable_specs()
        changed = True
        while changed:
            changed = False
            for ref in refs:
                if ref.child not in zero and self._spec_may_be_zero(ref, zero):
                    zero.add(ref.child)
                    changed = True
        return zero

    @staticmethod
    def _spec_may_be_zero(ref: SpecRef, zero: Set[str]) -> bool:
        rule = ref.spec.rule
        if rule.kind is RuleKind.INHERIT:
            return ref.parent in zero
        return not rule.zero_set.is_empty

    def _check_non_degenerate(self) -> None:
        zero = self.may_be_zero()
        for ref in self.reachable_specs():
            if not self._spec_may_be_zero(ref, zero):
                continue
            where = f"{ref.parent} -> {ref.child}"
            if ref.parent in zero:
                raise SchemaError(f"degenerate rule pair in {where}: parent and child "
                                  f"may both be labeled 0")
            if ref.spec.length.may_exceed_one:
                raise SchemaError(f"degenerate chain in {where}: consecutive chain "
                                  f"vertices may both be labeled 0")
        logger.debug(f"Schema {self.name}: non-degenerate, {len(self.types)} types")

