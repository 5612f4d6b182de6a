"""
Exhaustive reference implementations for small instances

These work on plain networkx graphs rebuilt from a tree's edge list and share no
path, index or ball code with ``ultratree.core.tree`` or ``ultratree.metric``.
"""
import itertools
from typing import FrozenSet, Iterable, List

import networkx as nx

from ultratree.core.tree import LabeledTree
from ultratree.errors import EmptyVertexSetError, OracleSizeError, UnknownVertexError

HULL_LIMIT = 16
BALL_LIMIT = 64
PACKING_LIMIT = 14


def _graph(t: LabeledTree) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(t.labels)
    g.add_edges_from(t.edges)
    return g


def _require(g: nx.Graph, *vertices: str) -> None:
    for v in vertices:
        if v not in g:
            raise UnknownVertexError(v)


def _dist(g: nx.Graph, labels, u: str, v: str) -> float:
    if u == v:
        return 0.0
    return max(labels[w] for w in nx.shortest_path(g, u, v))


def brute_dist(t: LabeledTree, u: str, v: str) -> float:
    """Max label over the BFS-recovered path"""
    g = _graph(t)
    _require(g, u, v)
    return _dist(g, t.labels, u, v)


def brute_hull(t: LabeledTree, a: Iterable[str]) -> FrozenSet[str]:
    """Intersection of every connected vertex set containing a"""
    g = _graph(t)
    members = set(a)
    _require(g, *members)
    if not members:
        raise EmptyVertexSetError("hull of an empty vertex set")
    if g.number_of_nodes() > HULL_LIMIT:
        raise OracleSizeError(f"brute_hull needs at most {HULL_LIMIT} vertices, "
                              f"got {g.number_of_nodes()}")

    rest = sorted(set(g) - members)
    result = set(g)
    for size in range(len(rest) + 1):
        for extra in itertools.combinations(rest, size):
            candidate = members.union(extra)
            if nx.is_connected(g.subgraph(candidate)):
                result &= candidate
    return frozenset(result)


def brute_ball(t: LabeledTree, c: str, r: float) -> FrozenSet[str]:
    """Filter every vertex by its distance to c"""
    g = _graph(t)
    _require(g, c)
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    if g.number_of_nodes() > BALL_LIMIT:
        raise OracleSizeError(f"brute_ball needs at most {BALL_LIMIT} vertices, "
                              f"got {g.number_of_nodes()}")
    labels = t.labels
    return frozenset(x for x in g if _dist(g, labels, c, x) <= r)


def brute_packing(t: LabeledTree, a: Iterable[str], eps: float) -> int:
    """Largest subset of a whose points are pairwise farther apart than eps"""
    g = _graph(t)
    members: List[str] = sorted(set(a))
    _require(g, *members)
    if not members:
        raise EmptyVertexSetError("packing of an empty vertex set")
    if len(members) > PACKING_LIMIT:
        raise OracleSizeError(f"brute_packing needs at most {PACKING_LIMIT} points, "
                              f"got {len(members)}")

    labels = t.labels
    far = {(u, v): _dist(g, labels, u, v) > eps
           for u, v in itertools.combinations(members, 2)}
    for size in range(len(members), 1, -1):
        for subset in itertools.combinations(members, size):
            if all(far[pair] for pair in itertools.combinations(subset, 2)):
                return size
    return 1
