"""
Disjoint-set forest with union by rank and path compression
"""
from collections import Counter
from typing import Dict, Hashable


class UnionFind:
    """Disjoint sets over arbitrary hashable items, created on first use"""

    def __init__(self):
        self.parent: Dict[Hashable, Hashable] = {}
        self.rank: Counter = Counter()

    def find(self, x: Hashable) -> Hashable:
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        # compress
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: Hashable, y: Hashable) -> bool:
        """Merge the sets of x and y; False if they were already joined"""
        px = self.find(x)
        py = self.find(y)
        if px == py:
            return False

        if self.rank[px] == self.rank[py]:
            self.parent[py] = px
            self.rank[px] += 1
        elif self.rank[px] > self.rank[py]:
            self.parent[py] = px
        else:
            self.parent[px] = py
        return True

    def connected(self, x: Hashable, y: Hashable) -> bool:
        return self.find(x) == self.find(y)
