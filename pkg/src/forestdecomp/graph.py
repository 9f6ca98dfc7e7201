"""Multigraph representation and forest primitives.

Vertices are dense integers ``0..n-1``.  Edges are addressed by their
position in the edge list, so parallel edges stay distinguishable and every
edge keeps a stable id.  Edge subsets and vertex subsets are plain iterables
of ids; all functions here are pure and a :class:`Graph` never changes after
construction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

__all__ = [
    "Graph",
    "DisjointSet",
    "Components",
    "restriction_edge_count",
    "is_forest",
    "components",
    "path_in_forest",
]


@dataclass(frozen=True)
class Graph:
    """An immutable multigraph on vertices ``0..n-1``.

    ``edges[eid]`` is the unordered endpoint pair of edge ``eid``.  Parallel
    edges (repeated pairs under distinct ids) are allowed.  Self-loops are
    representable; they can never sit inside a forest, so decomposition
    rejects them with a one-vertex violation certificate.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        normalized = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", normalized)
        for eid, (u, v) in enumerate(normalized):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(
                    f"edge {eid} has endpoint out of range: ({u}, {v}) with n={self.n}"
                )

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def endpoints(self, eid: int) -> tuple[int, int]:
        if not 0 <= eid < self.m:
            raise ValueError(f"edge id {eid} out of range for m={self.m}")
        return self.edges[eid]

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex incidence: ``adjacency[v]`` holds ``(edge id, other end)``.

        A self-loop at ``v`` appears once, as ``(eid, v)``.
        """
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((eid, v))
            if v != u:
                adj[v].append((eid, u))
        return tuple(tuple(entries) for entries in adj)

    def has_self_loop(self) -> bool:
        return any(u == v for u, v in self.edges)


class DisjointSet:
    """Union-find over ``0..n-1`` with path compression and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if already together."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)


class Components(NamedTuple):
    """Connected components: vertex lists plus a vertex -> part index map."""

    parts: list[list[int]]
    labels: list[int]


def _check_edge_ids(g: Graph, s: Iterable[int]) -> list[int]:
    ids = [int(e) for e in s]
    for e in ids:
        if not 0 <= e < g.m:
            raise ValueError(f"edge id {e} out of range for m={g.m}")
    return ids


def restriction_edge_count(g: Graph, x: Iterable[int]) -> int:
    """Number of edges of ``g`` with both endpoints in ``x``.

    Parallel edges count with multiplicity; a self-loop at ``v`` counts
    whenever ``v`` is in ``x``.
    """
    xs = set(x)
    for v in xs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex id {v} out of range for n={g.n}")
    return sum(1 for u, v in g.edges if u in xs and v in xs)


def is_forest(g: Graph, s: Iterable[int]) -> bool:
    """True iff the subgraph ``(V, s)`` is acyclic.

    Any self-loop, or any edge joining two vertices already connected within
    ``s``, makes the subset cyclic.
    """
    dsu = DisjointSet(g.n)
    for eid in _check_edge_ids(g, s):
        u, v = g.edges[eid]
        if u == v or not dsu.union(u, v):
            return False
    return True


def components(g: Graph, s: Iterable[int]) -> Components:
    """Connected components of ``(V, s)``.

    Isolated vertices form singleton parts.  Parts are ordered by their
    smallest contained vertex id and each part lists its vertices in
    ascending order, so the result is deterministic.
    """
    dsu = DisjointSet(g.n)
    for eid in _check_edge_ids(g, s):
        u, v = g.edges[eid]
        dsu.union(u, v)
    parts: list[list[int]] = []
    labels = [-1] * g.n
    index_of_root: dict[int, int] = {}
    for v in range(g.n):
        root = dsu.find(v)
        idx = index_of_root.get(root)
        if idx is None:
            idx = len(parts)
            index_of_root[root] = idx
            parts.append([])
        parts[idx].append(v)
        labels[v] = idx
    return Components(parts, labels)


def path_in_forest(g: Graph, s: Iterable[int], u: int, v: int) -> list[int] | None:
    """Edge ids of the unique ``u``-``v`` path in the forest ``(V, s)``.

    Returns ``[]`` for ``u == v`` and ``None`` when the endpoints lie in
    different components.  The caller is responsible for ``s`` being acyclic;
    on cyclic input the result is unspecified.
    """
    for x in (u, v):
        if not 0 <= x < g.n:
            raise ValueError(f"vertex id {x} out of range for n={g.n}")
    if u == v:
        return []
    adj: dict[int, list[tuple[int, int]]] = {}
    for eid in _check_edge_ids(g, s):
        a, b = g.edges[eid]
        if a == b:
            continue
        adj.setdefault(a, []).append((eid, b))
        adj.setdefault(b, []).append((eid, a))
    parent: dict[int, tuple[int, int]] = {u: (-1, -1)}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for eid, w in adj.get(x, ()):
            if w not in parent:
                parent[w] = (x, eid)
                queue.append(w)
    if v not in parent:
        return None
    path: list[int] = []
    x = v
    while x != u:
        x, eid = parent[x]
        path.append(eid)
    path.reverse()
    return path
