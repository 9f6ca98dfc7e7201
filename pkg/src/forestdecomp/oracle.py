"""Brute-force ground truth and validators.

Everything here is deliberately independent of the insertion algorithm:
the condition check enumerates all vertex subsets, the exhaustive
decomposer tries assignments directly, and the validators re-derive their
verdicts from first principles.  They anchor the test suite and make every
answer of the fast path independently checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .decompose import Certificate, Decomposition
from .graph import DisjointSet, Graph

__all__ = [
    "ConditionReport",
    "check_condition",
    "brute_decompose",
    "verify_decomposition",
    "verify_certificate",
]


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the subset sweep.

    When violated, ``violator`` is the offending vertex set and
    ``excess = e(X) - r(|X|-1) >= 1`` its margin.
    """

    satisfied: bool
    violator: frozenset[int] | None = None
    excess: int | None = None


def check_condition(g: Graph, r: int, max_n: int = 20) -> ConditionReport:
    """Check ``e(X) <= r(|X|-1)`` over all nonempty vertex sets ``X``.

    Enumerates all ``2^n - 1`` subsets, so ``n`` is capped at ``max_n``.
    Among violations the report carries the one maximizing the excess,
    breaking ties toward smaller sets and then earlier bitmask order.
    """
    if r < 0:
        raise ValueError(f"forest count must be nonnegative, got {r}")
    n = g.n
    if n > max_n:
        raise ValueError(f"n={n} exceeds the enumeration limit max_n={max_n}")

    loops = [0] * n
    mult: list[dict[int, int]] = [dict() for _ in range(n)]
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
        else:
            mult[u][v] = mult[u].get(v, 0) + 1
            mult[v][u] = mult[v].get(u, 0) + 1
    neighbor_bits = [
        [(1 << w, count) for w, count in sorted(mult[v].items())] for v in range(n)
    ]

    # e(X) for every subset by adding one vertex to a smaller subset.
    edge_count = [0] * (1 << n)
    best_excess = 0
    best_mask = 0
    best_size = 0
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        acc = edge_count[rest] + loops[v]
        for bit, count in neighbor_bits[v]:
            if bit & rest:
                acc += count
        edge_count[mask] = acc
        size = mask.bit_count()
        excess = acc - r * (size - 1)
        if excess > best_excess or (
            excess == best_excess and excess > 0 and size < best_size
        ):
            best_excess = excess
            best_mask = mask
            best_size = size

    if best_excess <= 0:
        return ConditionReport(True)
    violator = frozenset(v for v in range(n) if best_mask >> v & 1)
    return ConditionReport(False, violator, best_excess)


class _RollbackDSU:
    """Union by size without compression, so unions can be undone."""

    __slots__ = ("parent", "size", "history")

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n
        self.history: list[tuple[int, int]] = []

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append((rb, ra))
        return True

    def undo(self) -> None:
        child, root = self.history.pop()
        self.parent[child] = child
        self.size[root] -= self.size[child]


def brute_decompose(g: Graph, r: int, max_m: int = 12) -> Decomposition | None:
    """Exhaustively search the ``r^m`` assignments in lexicographic order.

    Returns the first assignment whose classes are all acyclic, or ``None``
    when no partition into ``r`` forests exists.  Branches whose prefix
    already closes a cycle are skipped; that prunes only assignments that
    could never be valid, so the lexicographic-first answer is unchanged.
    """
    if r < 0:
        raise ValueError(f"forest count must be nonnegative, got {r}")
    if g.m > max_m:
        raise ValueError(f"m={g.m} exceeds the search limit max_m={max_m}")
    if r == 0:
        return Decomposition(0, {}) if g.m == 0 else None

    forests = [_RollbackDSU(g.n) for _ in range(r)]
    assignment = [0] * g.m

    def place(k: int) -> bool:
        if k == g.m:
            return True
        u, v = g.edges[k]
        if u == v:
            return False
        for f in range(r):
            if forests[f].union(u, v):
                assignment[k] = f + 1
                if place(k + 1):
                    return True
                forests[f].undo()
        return False

    if not place(0):
        return None
    return Decomposition(r, {eid: f for eid, f in enumerate(assignment)})


def verify_decomposition(g: Graph, d: Decomposition) -> bool:
    """True iff ``d`` assigns every edge once, into ``1..r``, acyclically."""
    if d.r < 0:
        return False
    if set(d.assignment) != set(range(g.m)):
        return False
    forests = [DisjointSet(g.n) for _ in range(d.r)]
    for eid in range(g.m):
        f = d.assignment[eid]
        if not 1 <= f <= d.r:
            return False
        u, v = g.edges[eid]
        if u == v or not forests[f - 1].union(u, v):
            return False
    return True


def verify_certificate(g: Graph, r: int, x: Iterable[int] | Certificate) -> bool:
    """True iff ``x`` is nonempty and ``e(x) > r(|x|-1)``."""
    if isinstance(x, Certificate):
        xs = set(x.vertices)
    else:
        xs = {int(v) for v in x}
    if not xs:
        return False
    for v in xs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex id {v} out of range for n={g.n}")
    count = sum(1 for u, v in g.edges if u in xs and v in xs)
    return count > r * (len(xs) - 1)
