"""Pin chosen edges into chosen forests of an existing decomposition.

Given a valid decomposition into ``r`` forests and distinct edges
``e_1..e_s`` (``s <= r``), rewrites the assignment so that ``e_i`` lands in
forest ``i`` while every class stays a forest.  Pins are established one by
one; each step either moves the pinned edge directly or swaps it with one
edge of its target forest, and never disturbs the pins already placed.
"""

from __future__ import annotations

from typing import Sequence

from .decompose import Decomposition
from .graph import DisjointSet, Graph, path_in_forest

__all__ = ["preassign"]


def _forest_dsu(g: Graph, edge_ids, skip: int = -1) -> DisjointSet:
    dsu = DisjointSet(g.n)
    for eid in edge_ids:
        if eid == skip:
            continue
        u, v = g.edges[eid]
        dsu.union(u, v)
    return dsu


def preassign(g: Graph, d: Decomposition, pins: Sequence[int]) -> Decomposition:
    """Return a decomposition with pin ``k`` (0-based) in forest ``k + 1``.

    ``pins`` must be distinct edge ids of ``g`` with ``len(pins) <= d.r``;
    ``d`` must be a valid decomposition of ``g``.  Edges untouched by any
    swap keep their assignment.
    """
    pin_list = [int(e) for e in pins]
    if len(pin_list) > d.r:
        raise ValueError(
            f"{len(pin_list)} pins exceed the {d.r} available forests"
        )
    seen: set[int] = set()
    for e in pin_list:
        if not 0 <= e < g.m:
            raise ValueError(f"pinned edge id {e} out of range for m={g.m}")
        if e in seen:
            raise ValueError(f"edge {e} pinned twice")
        seen.add(e)

    assignment = dict(d.assignment)
    if set(assignment) != set(range(g.m)):
        raise ValueError("decomposition must assign every edge of the graph")

    class_edges: dict[int, set[int]] = {i: set() for i in range(1, d.r + 1)}
    for eid, f in assignment.items():
        if not 1 <= f <= d.r:
            raise ValueError(f"edge {eid} assigned to invalid forest {f}")
        class_edges[f].add(eid)

    for k, pinned in enumerate(pin_list):
        target = k + 1
        source = assignment[pinned]
        if source == target:
            continue
        u, v = g.edges[pinned]

        target_dsu = _forest_dsu(g, class_edges[target])
        if not target_dsu.connected(u, v):
            # The pinned edge joins two trees of its target forest.
            assignment[pinned] = target
            class_edges[source].remove(pinned)
            class_edges[target].add(pinned)
            continue

        path = path_in_forest(g, class_edges[target], u, v)
        assert path is not None
        # Removing the pinned edge splits its own forest between u and v, so
        # the target-forest path crosses that split somewhere.
        split_dsu = _forest_dsu(g, class_edges[source], skip=pinned)
        swap = -1
        for eid in path:
            x, y = g.edges[eid]
            if not split_dsu.connected(x, y):
                swap = eid
                break
        if swap < 0:
            raise RuntimeError("no crossing edge on the target-forest path")

        assignment[pinned] = target
        assignment[swap] = source
        class_edges[source].remove(pinned)
        class_edges[target].add(pinned)
        class_edges[target].remove(swap)
        class_edges[source].add(swap)

    return Decomposition(d.r, assignment)
