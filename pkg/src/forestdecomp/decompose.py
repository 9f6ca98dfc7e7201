"""Certified forest decomposition by incremental edge insertion.

For a multigraph and a forest budget ``r``, the edge set splits into ``r``
forests exactly when every nonempty vertex set ``X`` satisfies the sparsity
condition ``e(X) <= r(|X|-1)``, where ``e(X)`` counts the edges with both
endpoints in ``X``.  :func:`decompose` builds such a partition edge by edge,
or returns a :class:`Certificate` carrying a violating ``X`` when none
exists, so every answer is independently checkable.

Insertion always targets forest 1.  When the new edge ``(a, b)`` would close
a cycle there, exchange steps move one edge out of forest 1 into a deficient
forest (one holding fewer than ``|C| - 1`` edges inside the component ``C``
of ``a``), possibly pulling a witness edge back.  Each step strictly shrinks
``C``; the loop ends when ``b`` drops out of ``C`` or, with every forest
saturated inside ``C``, with ``C`` itself as the violating set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .graph import DisjointSet, Graph, is_forest

__all__ = [
    "SubtreeLabel",
    "SubtreeClass",
    "Decomposition",
    "Certificate",
    "ExchangeTrace",
    "ArboricityResult",
    "UnboundedArboricityError",
    "classify_subtrees",
    "find_deficient_forest",
    "insert_edge",
    "decompose",
    "arboricity",
]


class UnboundedArboricityError(ValueError):
    """The graph contains a self-loop, so no forest count suffices."""


class SubtreeLabel(enum.Enum):
    ISOLATED = "isolated"
    PECULIAR = "peculiar"
    NEITHER = "neither"


@dataclass(frozen=True)
class SubtreeClass:
    """Verdict for one part among disjoint subtrees of a forest.

    A part is *isolated* when no other part shares its component.  It is
    *peculiar* when removing one forest edge incident with the part (and
    lying inside no part) leaves it isolated; that edge is the ``witness``.
    """

    label: SubtreeLabel
    witness: int | None = None

    def __post_init__(self) -> None:
        if (self.label is SubtreeLabel.PECULIAR) != (self.witness is not None):
            raise ValueError("witness edge is carried exactly by peculiar parts")

    @classmethod
    def isolated(cls) -> "SubtreeClass":
        return cls(SubtreeLabel.ISOLATED)

    @classmethod
    def peculiar(cls, witness: int) -> "SubtreeClass":
        return cls(SubtreeLabel.PECULIAR, witness)

    @classmethod
    def neither(cls) -> "SubtreeClass":
        return cls(SubtreeLabel.NEITHER)


@dataclass(frozen=True)
class Decomposition:
    """Assignment of edge ids to forest indices ``1..r``."""

    r: int
    assignment: dict[int, int]

    def forest_edges(self, i: int) -> list[int]:
        """Edge ids of forest ``i``, ascending."""
        return sorted(e for e, f in self.assignment.items() if f == i)

    def classes(self) -> list[list[int]]:
        """All forest classes, indexed ``0..r-1`` for forests ``1..r``."""
        groups: list[list[int]] = [[] for _ in range(self.r)]
        for e in sorted(self.assignment):
            groups[self.assignment[e] - 1].append(e)
        return groups


@dataclass(frozen=True)
class Certificate:
    """A nonempty vertex set violating the sparsity condition.

    Against the pair ``(g, r)`` it was issued for, ``e(X) > r(|X|-1)``
    holds, which rules out any partition into ``r`` forests.
    """

    vertices: frozenset[int]

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)


@dataclass(frozen=True)
class ExchangeTrace:
    """One exchange step of an insertion, for debugging and testing."""

    inserted_edge: int
    component: frozenset[int]
    deficient_forest: int
    chosen_part: frozenset[int]
    moved_edge: int
    witness_edge: int | None


@dataclass(frozen=True)
class ArboricityResult:
    """Exact arboricity with a decomposition and, for positive values, a
    certificate showing one fewer forest cannot work."""

    arboricity: int
    decomposition: Decomposition
    certificate: Certificate | None


class _PartClassifier:
    """Labels disjoint connected parts of a forest, lazily per component.

    ``adj`` is per-vertex forest incidence ``adj[v] -> (edge id, other end)``,
    ``parts`` the part vertex lists, ``part_of`` the vertex -> part index map
    over exactly the part vertices (other vertices are plain tree nodes).
    """

    def __init__(
        self,
        adj: Sequence[Sequence[tuple[int, int]]],
        parts: Sequence[Sequence[int]],
        part_of: Mapping[int, int],
    ) -> None:
        self.adj = adj
        self.parts = parts
        self.part_of = part_of
        self._comp_of: dict[int, int] = {}
        self._comp_parts: list[list[int]] = []
        self._members: dict[int, list[int]] = {}
        self._labels: dict[int, SubtreeClass] = {}

    def label(self, j: int) -> SubtreeClass:
        got = self._labels.get(j)
        if got is not None:
            return got
        start = self.parts[j][0]
        cid = self._comp_of.get(start)
        if cid is None:
            cid = self._explore(start)
        parts_here = self._comp_parts[cid]
        if len(parts_here) == 1:
            self._labels[j] = SubtreeClass.isolated()
        else:
            self._analyze(cid, parts_here)
        return self._labels[j]

    def _explore(self, start: int) -> int:
        comp_of = self._comp_of
        cid = len(self._comp_parts)
        part_seen: set[int] = set()
        parts_here: list[int] = []
        stack = [start]
        comp_of[start] = cid
        members = [start]
        while stack:
            x = stack.pop()
            p = self.part_of.get(x)
            if p is not None and p not in part_seen:
                part_seen.add(p)
                parts_here.append(p)
            for _eid, w in self.adj[x]:
                if w not in comp_of:
                    comp_of[w] = cid
                    members.append(w)
                    stack.append(w)
        self._comp_parts.append(parts_here)
        self._members[cid] = members
        return cid

    def _analyze(self, cid: int, parts_here: list[int]) -> None:
        # Contract each part to a single node; the result is again a forest,
        # so a part is peculiar exactly when all other parts of its component
        # hang off one incident edge, which is then the unique witness.
        part_of = self.part_of
        members = self._members[cid]

        def encode(v: int) -> int:
            p = part_of.get(v)
            return -(p + 1) if p is not None else v

        cadj: dict[int, list[tuple[int, int, int, int]]] = {}
        for u in members:
            for eid, w in self.adj[u]:
                if w < u:
                    continue
                nu, nw = encode(u), encode(w)
                if nu == nw:
                    continue
                cadj.setdefault(nu, []).append((eid, u, w, nw))
                cadj.setdefault(nw, []).append((eid, w, u, nu))

        root = encode(members[0])
        parent: dict[int, int | None] = {root: None}
        order = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            for _eid, _mine, _theirs, nbr in cadj.get(x, ()):
                if nbr not in parent:
                    parent[nbr] = x
                    order.append(nbr)
                    stack.append(nbr)

        count: dict[int, int] = {node: int(node < 0) for node in order}
        for node in reversed(order):
            up = parent[node]
            if up is not None:
                count[up] += count[node]

        total = len(parts_here)
        for j in parts_here:
            node = -(j + 1)
            others = total - 1
            witnesses: list[int] = []
            for eid, _mine, _theirs, nbr in cadj.get(node, ()):
                if nbr == parent[node]:
                    branch = total - count[node]
                else:
                    branch = count[nbr]
                if branch == others:
                    witnesses.append(eid)
            if witnesses:
                self._labels[j] = SubtreeClass.peculiar(min(witnesses))
            else:
                self._labels[j] = SubtreeClass.neither()


def _normalize_parts(
    g: Graph, parts: Sequence[Iterable[int]]
) -> tuple[list[list[int]], dict[int, int]]:
    normalized: list[list[int]] = []
    part_of: dict[int, int] = {}
    for j, raw in enumerate(parts):
        members = sorted({int(v) for v in raw})
        if not members:
            raise ValueError(f"part {j} is empty")
        for v in members:
            if not 0 <= v < g.n:
                raise ValueError(f"part {j} contains out-of-range vertex {v}")
            if v in part_of:
                raise ValueError(f"parts {part_of[v]} and {j} overlap at vertex {v}")
            part_of[v] = j
        normalized.append(members)
    return normalized, part_of


def classify_subtrees(
    g: Graph, t: Iterable[int], parts: Sequence[Iterable[int]]
) -> list[SubtreeClass]:
    """Label each part Isolated, Peculiar (with witness edge) or Neither.

    ``t`` must be a forest and the parts pairwise disjoint nonempty vertex
    sets, each inducing a connected subgraph of ``(V, t)``.  Labels come back
    in part order; a peculiar part's witness is the smallest-id forest edge
    outside every part, incident with the part, whose removal isolates it.
    """
    t_ids = sorted({int(e) for e in t})
    if not is_forest(g, t_ids):
        raise ValueError("edge subset is not a forest")
    normalized, part_of = _normalize_parts(g, parts)

    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for eid in t_ids:
        u, v = g.edges[eid]
        adj[u].append((eid, v))
        adj[v].append((eid, u))

    for j, members in enumerate(normalized):
        inside = set(members)
        reached = {members[0]}
        stack = [members[0]]
        while stack:
            x = stack.pop()
            for _eid, w in adj[x]:
                if w in inside and w not in reached:
                    reached.add(w)
                    stack.append(w)
        if len(reached) != len(members):
            raise ValueError(f"part {j} is not connected in the forest")

    classifier = _PartClassifier(adj, normalized, part_of)
    return [classifier.label(j) for j in range(len(normalized))]


def find_deficient_forest(
    g: Graph, partial: Decomposition, component: Iterable[int]
) -> int | None:
    """Smallest forest index ``i >= 2`` holding fewer than ``|C| - 1`` edges
    inside the vertex set ``component``; ``None`` when every one is full
    (in particular whenever ``r <= 1``).

    Assumes forest 1 restricted to ``component`` is a spanning tree of it.
    """
    comp = {int(v) for v in component}
    need = len(comp) - 1
    counts = [0] * (partial.r + 1)
    for eid, f in partial.assignment.items():
        u, v = g.edges[eid]
        if u in comp and v in comp:
            counts[f] += 1
    for i in range(2, partial.r + 1):
        if counts[i] < need:
            return i
    return None


class _Engine:
    """Mutable insertion state.

    Every forest keeps per-vertex incidence lists, per-vertex degrees and an
    incrementally maintained vertex -> component id array (splits relabel
    the smaller side, merges relabel the smaller tree), so component
    membership tests are O(1) and updates cost the side actually touched.
    Forest 1 additionally keeps rooted parent/depth structure for extracting
    tree paths.  The per-iteration sweep over all edges (which edges lie
    inside the component ``C``, how full each forest is there) is vectorized
    over numpy endpoint arrays.
    """

    def __init__(self, g: Graph, r: int) -> None:
        self.g = g
        self.r = r
        self.n = g.n
        self.m = g.m
        self.eu = np.fromiter((e[0] for e in g.edges), dtype=np.intp, count=g.m)
        self.ev = np.fromiter((e[1] for e in g.edges), dtype=np.intp, count=g.m)
        self.forest = np.zeros(g.m, dtype=np.intp)
        none: list = [None]
        self.adj: list[list[list[tuple[int, int]]]] = none + [
            [[] for _ in range(g.n)] for _ in range(r)
        ]
        self.deg: list[list[int]] = none + [[0] * g.n for _ in range(r)]
        self.comp: list[np.ndarray] = none + [
            np.arange(g.n, dtype=np.intp) for _ in range(r)
        ]
        self.comp_size: list[dict[int, int]] = none + [
            {v: 1 for v in range(g.n)} for _ in range(r)
        ]
        self.next_comp = g.n
        # Python mirror of comp[1] for fast scalar reads in the hot loops.
        self.comp_list = list(range(g.n))
        # Rooted structure for forest 1 only (tree paths).
        self.parent = [-1] * g.n
        self.parent_edge = [-1] * g.n
        self.depth = [0] * g.n
        self.assigned = 0

    # -- forest bookkeeping -------------------------------------------------

    def load(self, assignment: Mapping[int, int]) -> None:
        for eid, f in assignment.items():
            self._attach(eid, f)

    def _attach(self, eid: int, f: int) -> None:
        """Add an edge to forest ``f``, merging two of its trees."""
        u, v = self.g.edges[eid]
        comp = self.comp[f]
        sizes = self.comp_size[f]
        cu = int(comp[u])
        cv = int(comp[v])
        if cu == cv:
            raise RuntimeError(f"forest {f} would acquire a cycle")
        if sizes[cu] < sizes[cv]:
            big, attach_big, attach_small = cv, v, u
        else:
            big, attach_big, attach_small = cu, u, v
        small = cu if big == cv else cv
        adj = self.adj[f]
        rooted = f == 1
        if rooted:
            parent = self.parent
            parent_edge = self.parent_edge
            depth = self.depth
            parent[attach_small] = attach_big
            parent_edge[attach_small] = eid
            depth[attach_small] = depth[attach_big] + 1
        seen = {attach_small}
        stack = [attach_small]
        order = [attach_small]
        while stack:
            x = stack.pop()
            for e2, w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    if rooted:
                        parent[w] = x
                        parent_edge[w] = e2
                        depth[w] = depth[x] + 1
                    order.append(w)
                    stack.append(w)
        comp[order] = big
        if rooted:
            comp_list = self.comp_list
            for w in order:
                comp_list[w] = big
        sizes[big] += sizes.pop(small)
        self.forest[eid] = f
        self.deg[f][u] += 1
        self.deg[f][v] += 1
        adj[u].append((eid, v))
        adj[v].append((eid, u))
        self.assigned += 1

    def _remove_entry(self, f: int, x: int, eid: int) -> None:
        entries = self.adj[f][x]
        for k, (e2, _w) in enumerate(entries):
            if e2 == eid:
                entries[k] = entries[-1]
                entries.pop()
                return
        raise RuntimeError(f"edge {eid} missing from adjacency of {x}")

    def _detach(self, eid: int, f: int) -> None:
        """Remove an edge from forest ``f >= 2``; relabels the smaller of
        the two resulting trees (found by alternating search)."""
        u, v = self.g.edges[eid]
        self._remove_entry(f, u, eid)
        self._remove_entry(f, v, eid)
        self.forest[eid] = 0
        self.deg[f][u] -= 1
        self.deg[f][v] -= 1
        self.assigned -= 1
        adj = self.adj[f]
        seen_u = {u}
        seen_v = {v}
        stack_u = [u]
        stack_v = [v]
        smaller = None
        while True:
            if not stack_u:
                smaller = seen_u
                break
            if not stack_v:
                smaller = seen_v
                break
            for seen, stack in ((seen_u, stack_u), (seen_v, stack_v)):
                if stack:
                    x = stack.pop()
                    for _e2, w in adj[x]:
                        if w not in seen:
                            seen.add(w)
                            stack.append(w)
        comp = self.comp[f]
        sizes = self.comp_size[f]
        old = int(comp[u])
        fresh = self.next_comp
        self.next_comp += 1
        members = list(smaller)
        comp[members] = fresh
        sizes[fresh] = len(members)
        sizes[old] -= len(members)

    def _cut_f1(self, eid: int, near: int, far: int) -> None:
        """Remove a forest-1 edge; the ``far`` side becomes a new component.

        The surviving (``near``) side keeps its root, parents and depth
        offsets; the far side is rerooted at ``far``.
        """
        self._remove_entry(1, near, eid)
        self._remove_entry(1, far, eid)
        parent = self.parent
        parent_edge = self.parent_edge
        depth = self.depth
        if parent[near] == far:
            parent[near] = -1
            parent_edge[near] = -1
        parent[far] = -1
        parent_edge[far] = -1
        depth[far] = 0
        adj1 = self.adj[1]
        seen = {far}
        stack = [far]
        order = [far]
        while stack:
            x = stack.pop()
            for e2, w in adj1[x]:
                if w not in seen:
                    seen.add(w)
                    parent[w] = x
                    parent_edge[w] = e2
                    depth[w] = depth[x] + 1
                    order.append(w)
                    stack.append(w)
        comp = self.comp[1]
        sizes = self.comp_size[1]
        old = int(comp[far])
        fresh = self.next_comp
        self.next_comp += 1
        comp[order] = fresh
        comp_list = self.comp_list
        for w in order:
            comp_list[w] = fresh
        sizes[fresh] = len(order)
        sizes[old] -= len(order)
        u, v = self.g.edges[eid]
        self.forest[eid] = 0
        self.deg[1][u] -= 1
        self.deg[1][v] -= 1
        self.assigned -= 1

    def _tree_path(self, a: int, target: int) -> list[tuple[int, int, int]]:
        """Edges of the forest-1 path as ``(edge id, nearer-a end, other end)``
        in walking order from ``a`` to ``target``."""
        depth = self.depth
        parent = self.parent
        parent_edge = self.parent_edge
        left: list[tuple[int, int, int]] = []
        right: list[tuple[int, int, int]] = []
        x, y = a, target
        while x != y:
            if depth[x] >= depth[y]:
                left.append((parent_edge[x], x, parent[x]))
                x = parent[x]
            else:
                right.append((parent_edge[y], parent[y], y))
                y = parent[y]
        right.reverse()
        left.extend(right)
        return left

    # -- the exchange loop --------------------------------------------------

    def insert(
        self,
        eid: int,
        trace: list[ExchangeTrace] | None = None,
        validate: bool = False,
    ) -> Certificate | None:
        """Place edge ``eid``; return a Certificate when impossible."""
        a, b = self.g.edges[eid]
        eu, ev, forest = self.eu, self.ev, self.forest
        comp1 = self.comp[1]
        size1 = self.comp_size[1]

        sorted_c: np.ndarray | None = None
        prev_size = None
        iterations = 0
        while True:
            iterations += 1
            if iterations > self.n + 1:
                raise RuntimeError("exchange loop exceeded its iteration bound")
            cid = int(comp1[a])
            if cid != int(comp1[b]):
                self._attach(eid, 1)
                return None
            csize = size1[cid]
            if prev_size is not None and csize >= prev_size:
                raise RuntimeError("exchange step failed to shrink the component")
            prev_size = csize

            inside = (comp1[eu] == cid) & (comp1[ev] == cid)
            counts = np.bincount(forest[inside], minlength=self.r + 1)
            need = csize - 1
            deficient = 0
            for i in range(2, self.r + 1):
                if counts[i] < need:
                    deficient = i
                    break
            if not deficient:
                members = np.nonzero(comp1 == cid)[0]
                return Certificate(frozenset(members.tolist()))

            # Ascending component vertices; parts are met at their smallest
            # vertex, which reproduces the deterministic part order.
            if sorted_c is None:
                sorted_c = np.nonzero(comp1 == cid)[0]
            else:
                sorted_c = sorted_c[comp1[sorted_c] == cid]

            adj_i = self.adj[deficient]
            deg_i = self.deg[deficient]
            comp_i = self.comp[deficient]
            comp1_l = self.comp_list
            seen: set[int] = set()
            part: set[int] | None = None
            found = False
            peculiar = False
            witness = -1
            v1 = -1
            pos = 0
            while pos < sorted_c.size and not found:
                chunk = sorted_c[pos : pos + 512].tolist()
                pos += 512
                for v in chunk:
                    if v in seen:
                        continue
                    # The part of v: its component of (C, forest-i edges
                    # inside C).  Neighbors stay inside C exactly when they
                    # share C's forest-1 component id.
                    part = {v}
                    stack = [v]
                    degsum = deg_i[v]
                    has_a = v == a
                    while stack:
                        x = stack.pop()
                        for _e2, w in adj_i[x]:
                            if w not in part and comp1_l[w] == cid:
                                part.add(w)
                                degsum += deg_i[w]
                                if w == a:
                                    has_a = True
                                stack.append(w)
                    seen |= part
                    if has_a:
                        continue
                    if degsum == 2 * (len(part) - 1):
                        # No forest-i edge leaves the part: its whole tree is
                        # the part itself, hence isolated.
                        found = True
                        v1 = v
                        break
                    tree_mask = comp_i[sorted_c] == int(comp_i[v])
                    others_total = int(np.count_nonzero(tree_mask)) - len(part)
                    if others_total == 0:
                        # The tree reaches outside C but meets no other part.
                        found = True
                        v1 = v
                        break
                    # Another part shares the tree.  Explore the branch next
                    # to the smallest outside vertex: the part is peculiar
                    # exactly when that one branch holds every other component
                    # vertex of the tree, and its attachment edge to the part
                    # is then the witness.
                    w0 = -1
                    for w in sorted_c[tree_mask].tolist():
                        if w not in part:
                            w0 = w
                            break
                    touched = {w0}
                    stack = [w0]
                    found_others = 1
                    entering: set[int] = set()
                    while stack:
                        x = stack.pop()
                        for e2, w in adj_i[x]:
                            if w in part:
                                entering.add(e2)
                            elif w not in touched:
                                touched.add(w)
                                if comp1_l[w] == cid:
                                    found_others += 1
                                stack.append(w)
                    if found_others < others_total:
                        continue
                    witness = min(entering)
                    wx, wy = self.g.edges[witness]
                    v1 = wx if wx in part else wy
                    found = True
                    peculiar = True
                    break
            if not found or part is None:
                raise RuntimeError("no isolated or peculiar part available")

            moved = -1
            near = far = -1
            for e2, x, y in self._tree_path(a, v1):
                if (x in part) != (y in part):
                    moved, near, far = e2, x, y
                    break
            if moved < 0:
                raise RuntimeError("no crossing edge on the exchange path")

            if trace is not None:
                trace.append(
                    ExchangeTrace(
                        inserted_edge=eid,
                        component=frozenset(sorted_c.tolist()),
                        deficient_forest=deficient,
                        chosen_part=frozenset(part),
                        moved_edge=moved,
                        witness_edge=witness if peculiar else None,
                    )
                )

            self._cut_f1(moved, near, far)
            if peculiar:
                # The witness leaves forest i first: only then does the moved
                # edge join two different trees of that forest.
                self._detach(witness, deficient)
            self._attach(moved, deficient)
            if peculiar:
                self._attach(witness, 1)
            if validate:
                self._validate_state()

    # -- diagnostics ---------------------------------------------------------

    def _validate_state(self) -> None:
        """Re-derive every invariant from scratch; test-mode only."""
        for i in range(1, self.r + 1):
            ids = np.nonzero(self.forest == i)[0]
            dsu = DisjointSet(self.n)
            for eid in ids:
                u, v = self.g.edges[int(eid)]
                if u == v or not dsu.union(u, v):
                    raise RuntimeError(f"forest {i} acquired a cycle")
            # Component ids must match the forest's true components.
            root_to_cid: dict[int, int] = {}
            cid_seen: set[int] = set()
            for v in range(self.n):
                root = dsu.find(v)
                cid = int(self.comp[i][v])
                if root in root_to_cid:
                    if root_to_cid[root] != cid:
                        raise RuntimeError(f"component ids diverged in forest {i}")
                else:
                    if cid in cid_seen:
                        raise RuntimeError(f"distinct trees share an id in forest {i}")
                    root_to_cid[root] = cid
                    cid_seen.add(cid)
                if self.comp_size[i][cid] != dsu.size[root]:
                    raise RuntimeError(f"component size wrong in forest {i}")
        for v in range(self.n):
            p = self.parent[v]
            if p < 0:
                continue
            e = self.parent_edge[v]
            if int(self.forest[e]) != 1:
                raise RuntimeError("parent edge is not in forest 1")
            x, y = self.g.edges[e]
            if {x, y} != {v, p}:
                raise RuntimeError("parent edge does not join child and parent")
            if self.depth[v] != self.depth[p] + 1:
                raise RuntimeError("depth is inconsistent with parent")

    def to_decomposition(self) -> Decomposition:
        assignment = {
            int(eid): int(f) for eid, f in enumerate(self.forest) if f != 0
        }
        return Decomposition(self.r, assignment)


def _check_r(r: int) -> int:
    r = int(r)
    if r < 0:
        raise ValueError(f"forest count must be nonnegative, got {r}")
    return r


def insert_edge(
    g: Graph,
    r: int,
    partial: Decomposition,
    edge_id: int,
    *,
    trace: list[ExchangeTrace] | None = None,
    validate: bool = False,
) -> Decomposition | Certificate:
    """Extend a decomposition of all edges but ``edge_id`` by that edge.

    Returns the completed :class:`Decomposition`, or a :class:`Certificate`
    for the component of the edge's first endpoint when every forest is
    saturated inside it.  Precondition violations (self-loop, wrong edge
    coverage, non-forest classes) raise ``ValueError`` and are never reported
    as infeasibility.
    """
    r = _check_r(r)
    if r == 0:
        raise ValueError(
            "insertion requires at least one forest; r=0 is decided by decompose"
        )
    if not 0 <= edge_id < g.m:
        raise ValueError(f"edge id {edge_id} out of range for m={g.m}")
    u, v = g.edges[edge_id]
    if u == v:
        raise ValueError(f"edge {edge_id} is a self-loop; no forest can hold it")
    if partial.r != r:
        raise ValueError(f"partial decomposition targets r={partial.r}, expected {r}")
    expected = set(range(g.m)) - {edge_id}
    if set(partial.assignment) != expected:
        raise ValueError("partial decomposition must cover exactly the other edges")
    for eid, f in partial.assignment.items():
        if not 1 <= f <= r:
            raise ValueError(f"edge {eid} assigned to invalid forest {f}")
    for i in range(1, r + 1):
        if not is_forest(g, (e for e, f in partial.assignment.items() if f == i)):
            raise ValueError(f"class {i} of the partial decomposition is not a forest")

    engine = _Engine(g, r)
    engine.load(partial.assignment)
    cert = engine.insert(edge_id, trace=trace, validate=validate)
    if cert is not None:
        return cert
    return engine.to_decomposition()


def decompose(
    g: Graph,
    r: int,
    *,
    trace: list[ExchangeTrace] | None = None,
    validate: bool = False,
) -> Decomposition | Certificate:
    """Partition all edges into ``r`` forests, or certify that none exists.

    Self-loops are rejected immediately with a one-vertex certificate.  For
    ``r = 0`` only the edgeless graph is feasible.  Otherwise edges are
    inserted in increasing id order and the first violation found is
    returned.  ``trace``, when given, collects one :class:`ExchangeTrace`
    per exchange step; ``validate`` re-checks every invariant after each
    step.
    """
    r = _check_r(r)
    for eid, (u, v) in enumerate(g.edges):
        if u == v:
            return Certificate(frozenset({u}))
    if r == 0:
        if g.m == 0:
            return Decomposition(0, {})
        return Certificate(frozenset(g.edges[0]))
    engine = _Engine(g, r)
    for eid in range(g.m):
        cert = engine.insert(eid, trace=trace, validate=validate)
        if cert is not None:
            return cert
    return engine.to_decomposition()


def arboricity(g: Graph) -> ArboricityResult:
    """Minimum number of forests covering all edges, with witnesses.

    Returns the minimum ``r*`` together with a decomposition for ``r*`` and,
    when ``r* >= 1``, a certificate proving ``r* - 1`` forests do not
    suffice.  Self-loops make every budget infeasible and raise
    :class:`UnboundedArboricityError`.
    """
    for eid, (u, v) in enumerate(g.edges):
        if u == v:
            raise UnboundedArboricityError(
                f"self-loop at vertex {u} (edge {eid}): arboricity is unbounded"
            )
    if g.m == 0:
        return ArboricityResult(0, Decomposition(0, {}), None)

    lower = -(-g.m // (g.n - 1))  # ceil(m / (n - 1)); m >= 1 forces n >= 2 here
    probe = max(lower, 1)
    last_cert: Certificate | None = None
    while True:
        result = decompose(g, probe)
        if isinstance(result, Decomposition):
            break
        last_cert = result
        probe += 1

    if last_cert is None:
        # First probe already worked, so synthesize the witness for one less.
        all_vertices = frozenset(range(g.n))
        if g.m > (probe - 1) * (g.n - 1):
            last_cert = Certificate(all_vertices)
        else:
            fallback = decompose(g, probe - 1)
            assert isinstance(fallback, Certificate)
            last_cert = fallback
    return ArboricityResult(probe, result, last_cert)
