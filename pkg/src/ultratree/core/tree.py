"""
Finite vertex-labeled trees: validated construction, unique paths, degrees,
breadth-first layers and hulls
"""
import logging
import math
from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

from ultratree.core.unionfind import UnionFind
from ultratree.errors import (
    EmptyVertexSetError,
    InvalidLabelError,
    NotATreeError,
    UnknownVertexError,
)

logger = logging.getLogger(__name__)

Edge = Tuple[str, str]


def _check_vertex_id(v: str) -> str:
    if not isinstance(v, str) or not v or any(ch.isspace() for ch in v) or v.startswith("#"):
        raise ValueError(f"invalid vertex id: {v!r}")
    return v


def _check_label(v: str, label) -> float:
    try:
        value = float(label)
    except (TypeError, ValueError):
        raise InvalidLabelError(f"label of {v} is not a number: {label!r}") from None
    if math.isnan(value) or math.isinf(value) or value < 0:
        raise InvalidLabelError(f"label of {v} must be a finite nonnegative number, got {label!r}")
    return value


def _canonical_cycle(cycle: List[str]) -> Tuple[str, ...]:
    """Rotate to the smallest id and pick the lexicographically smaller direction"""
    start = cycle.index(min(cycle))
    forward = cycle[start:] + cycle[:start]
    backward = [forward[0]] + forward[:0:-1]
    return tuple(min(forward, backward))


class LabeledTree:
    """A finite tree with a nonnegative real label on every vertex

    Immutable after construction. Vertex ids are opaque strings; the rooted
    orientation used for path queries hangs from the smallest id.
    """

    def __init__(self, labels: Mapping[str, float], edges: Iterable[Edge], name: str = "t"):
        if not labels:
            raise NotATreeError("not a tree: no vertices")
        self.name = name

        checked: Dict[str, float] = {}
        for v, label in labels.items():
            checked[_check_vertex_id(v)] = _check_label(v, label)
        self._vertices: Tuple[str, ...] = tuple(sorted(checked))
        self._labels = MappingProxyType({v: checked[v] for v in self._vertices})

        adjacency: Dict[str, List[str]] = {v: [] for v in self._vertices}
        forest = UnionFind()
        normalized = []
        for u, v in edges:
            if u not in checked:
                raise UnknownVertexError(u)
            if v not in checked:
                raise UnknownVertexError(v)
            if u == v:
                raise NotATreeError.for_cycle([u])
            if not forest.union(u, v):
                closing = self._forest_path(adjacency, u, v)
                raise NotATreeError.for_cycle(_canonical_cycle(closing))
            adjacency[u].append(v)
            adjacency[v].append(u)
            normalized.append((u, v) if u < v else (v, u))

        if len(normalized) != len(self._vertices) - 1:
            root_of_first = forest.find(self._vertices[0])
            stray = [v for v in self._vertices if forest.find(v) != root_of_first]
            stray_root = forest.find(stray[0])
            raise NotATreeError.for_component(v for v in stray if forest.find(v) == stray_root)

        self._edges: Tuple[Edge, ...] = tuple(sorted(normalized))
        self._adjacency: Mapping[str, Tuple[str, ...]] = MappingProxyType(
            {v: tuple(sorted(ns)) for v, ns in adjacency.items()}
        )
        self._parent, self._depth = self._orient(self._vertices[0])
        logger.debug(f"Built tree {name!r} with {len(self._vertices)} vertices")

    @staticmethod
    def _forest_path(adjacency: Mapping[str, List[str]], source: str, target: str) -> List[str]:
        parent = {source: None}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if u == target:
                break
            for w in adjacency[u]:
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        path = [target]
        while path[-1] != source:
            path.append(parent[path[-1]])
        return path

    def _orient(self, root: str) -> Tuple[Dict[str, Optional[str]], Dict[str, int]]:
        parent: Dict[str, Optional[str]] = {root: None}
        depth = {root: 0}
        for u in bfs_order(self, root):
            for w in self._adjacency[u]:
                if w not in parent:
                    parent[w] = u
                    depth[w] = depth[u] + 1
        return parent, depth

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def labels(self) -> Mapping[str, float]:
        return self._labels

    @property
    def root(self) -> str:
        return self._vertices[0]

    @property
    def size(self) -> int:
        return len(self._vertices)

    def check(self, v: str) -> str:
        if v not in self._labels:
            raise UnknownVertexError(v)
        return v

    def label(self, v: str) -> float:
        return self._labels[self.check(v)]

    def neighbors(self, v: str) -> Tuple[str, ...]:
        return self._adjacency[self.check(v)]

    def parent(self, v: str) -> Optional[str]:
        """Parent in the orientation rooted at the smallest id"""
        return self._parent[self.check(v)]

    def depth(self, v: str) -> int:
        return self._depth[self.check(v)]

    def induced(self, vertices: Iterable[str]) -> "LabeledTree":
        """The subtree induced by a connected vertex subset"""
        keep = {self.check(v) for v in vertices}
        return LabeledTree(
            {v: self._labels[v] for v in keep},
            [(u, v) for u, v in self._edges if u in keep and v in keep],
            name=self.name,
        )

    def relabeled(self, labels: Mapping[str, float]) -> "LabeledTree":
        return LabeledTree(labels, self._edges, name=self.name)

    def __contains__(self, v: object) -> bool:
        return v in self._labels

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledTree):
            return NotImplemented
        return self._edges == other._edges and dict(self._labels) == dict(other._labels)

    def __hash__(self) -> int:
        return hash((self._edges, tuple(self._labels.items())))

    def __repr__(self) -> str:
        return f"LabeledTree(name={self.name!r}, vertices={len(self._vertices)})"


@dataclass(frozen=True)
class TreePath:
    """Ordered distinct vertices, consecutive ones adjacent"""
    vertices: Tuple[str, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a path has at least one vertex")

    @property
    def start(self) -> str:
        return self.vertices[0]

    @property
    def end(self) -> str:
        return self.vertices[-1]

    def reversed(self) -> "TreePath":
        return TreePath(self.vertices[::-1])

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)


def bfs_order(t: LabeledTree, source: str) -> Iterator[str]:
    """Vertices in breadth-first order from source, neighbors in sorted order"""
    t.check(source)
    seen = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        yield u
        for w in t._adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)


def bfs_parents(t: LabeledTree, source: str) -> Dict[str, Optional[str]]:
    """Parent pointers of the orientation rooted at source"""
    parent: Dict[str, Optional[str]] = {source: None}
    for u in bfs_order(t, source):
        for w in t._adjacency[u]:
            if w not in parent:
                parent[w] = u
    return parent


def path_between(t: LabeledTree, u: str, v: str) -> TreePath:
    """The unique path joining u and v; the trivial path when u == v"""
    t.check(u)
    t.check(v)
    parent, depth = t._parent, t._depth

    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    return TreePath(tuple(left + right[-2::-1]))


def degree(t: LabeledTree, v: str) -> int:
    return len(t.neighbors(v))


def bfs_layers(t: LabeledTree, v: str) -> List[FrozenSet[str]]:
    """N_1(v) = N(v), N_{j+1}(v) = union of N(u) over u in N_j(v)

    Layers are not disjoint: N_2 contains v again. The list stops at the first
    layer after which {v} and the layers so far cover the whole tree.
    """
    t.check(v)
    adjacency = t._adjacency
    seen = {v}
    layers: List[FrozenSet[str]] = []
    current: FrozenSet[str] = frozenset((v,))
    while len(seen) < t.size:
        current = frozenset(w for u in current for w in adjacency[u])
        layers.append(current)
        seen.update(current)
    return layers


def hull(t: LabeledTree, a: Iterable[str], base: Optional[str] = None) -> LabeledTree:
    """Smallest subtree containing a, built as the union of paths from base to a

    ``base`` defaults to the smallest id in a; the vertex set does not depend on it.
    """
    members = {t.check(v) for v in a}
    if not members:
        raise EmptyVertexSetError("hull of an empty vertex set")
    if base is None:
        base = min(members)
    elif base not in members:
        raise ValueError(f"base point {base} is not in the vertex set")
    if len(members) == 1:
        return t.induced([base])

    parent = bfs_parents(t, base)
    covered = {base}
    for v in sorted(members):
        climb = []
        w = v
        while w not in covered:
            climb.append(w)
            w = parent[w]
        covered.update(climb)
    return t.induced(covered)
