"""Edges, the deterministic edge total order, union-find and Kruskal.

The (weight, u, v) lexicographic order is a strict total order on canonical
edges, which makes the minimum spanning forest unique. Every MST routine in
the package breaks ties through this order, so their outputs are comparable
edge for edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import UsageError


@dataclass(frozen=True)
class Edge:
    """Undirected weighted edge on global vertex indices, stored with u < v."""

    u: int
    v: int
    w: float

    def __post_init__(self):
        u, v, w = int(self.u), int(self.v), float(self.w)
        if u == v:
            raise UsageError(f"self-loop edge on vertex {u}")
        if u > v:
            u, v = v, u
        if not math.isfinite(w):
            raise UsageError(f"edge weight must be finite, got {w!r}")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)


def edge_key(e: Edge) -> tuple[float, int, int]:
    """Sort key realizing the (w, u, v) total order."""
    return (e.w, e.u, e.v)


def edge_order(a: Edge, b: Edge) -> int:
    """Compare two edges under the total order: -1, 0 or +1."""
    ka, kb = edge_key(a), edge_key(b)
    if ka < kb:
        return -1
    if ka == kb:
        return 0
    return 1


@dataclass
class EdgeList:
    """A sequence of edges plus the vertex-count context it was built against."""

    edges: list[Edge] = field(default_factory=list)
    vertex_count_hint: int = 0

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __getitem__(self, i):
        return self.edges[i]

    def total_weight(self) -> float:
        return math.fsum(e.w for e in self.edges)

    def sorted(self) -> "EdgeList":
        return EdgeList(sorted(self.edges, key=edge_key), self.vertex_count_hint)

    def dedup(self) -> "EdgeList":
        """Drop repeated (u, v) pairs, keeping the first occurrence."""
        seen: set[tuple[int, int]] = set()
        kept = []
        for e in self.edges:
            pair = (e.u, e.v)
            if pair not in seen:
                seen.add(pair)
                kept.append(e)
        return EdgeList(kept, self.vertex_count_hint)


class UnionFind:
    """Disjoint sets over n integer slots, union by rank with path compression."""

    __slots__ = ("parent", "rank")

    def __init__(self, n: int):
        if n < 0:
            raise UsageError("slot count must be non-negative")
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def kruskal(candidates: EdgeList | Iterable[Edge], n: int) -> EdgeList:
    """Minimum spanning forest of the candidate multigraph under the total order.

    Output comes back sorted by edge_key. Duplicate pairs are harmless: the
    second copy closes a two-edge cycle and is skipped by union-find.
    """
    edges = list(candidates.edges if isinstance(candidates, EdgeList) else candidates)
    for e in edges:
        if e.u < 0 or e.v >= n:
            raise UsageError(f"edge ({e.u}, {e.v}) out of range for {n} vertices")
    uf = UnionFind(n)
    forest = [e for e in sorted(edges, key=edge_key) if uf.union(e.u, e.v)]
    return EdgeList(forest, n)
