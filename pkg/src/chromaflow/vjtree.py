"""Chromatic polynomials of trees joined to an extra apex vertex.

A VertexJoinTree is a tree on vertices 0..n-1 plus an implicit apex
vertex carrying mult[v] parallel edges to each tree vertex v.  The
chromatic polynomial of the realized multigraph is computed in three
stages:

  1. multiplicities clamp to 0/1 (parallel edges are chromatically
     inert), and empty or singleton joins fall out as closed forms;
  2. every tree edge not on a cycle of the joined graph is a bridge;
     stripping them multiplies the polynomial by (t-1) per edge and
     leaves the minimal subtree spanning the joined vertices;
  3. a single leaf-to-root sweep over that core maintains, per vertex a,
     the pair P(T_a), P(H_a) for the subgraph T_a on a, its descendants
     and the apex, where H_a identifies a with the apex.

With children c_1..c_k of a split into I = {c : mult 1} and Z = {c :
mult 0}, the sweep steps are clique-cut products over the shared apex
edge (or apex vertex), reduced to exact divisions:

  P(H_a)   = prod_I P(T_c) * prod_Z (P(T_c) - P(H_c))          / t^(k-1)
  P1(T_a)  = prod_I P(T_c)(t-2) * prod_Z ((t-2)P(T_c) + P(H_c)) / (t(t-1))^(k-1)
  P(T_a)   = P1(T_a) if mult(a) = 1 else P1(T_a) + P(H_a)

Leaves take P(T_a), P(H_a) = (t(t-1), t) when joined and (t^2, t) when
not.  The root's P(T_a) is the answer for the stripped core.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .errors import InvalidSize, InvalidTree, InvalidVertex
from .multigraph import MultiGraph
from .polyring import T, IntPoly, balanced_product

_TM1 = IntPoly((-1, 1))
_TM2 = IntPoly((-2, 1))
_TTM1 = IntPoly((0, -1, 1))


@dataclass(frozen=True)
class VertexJoinTree:
    """Tree on 0..n-1 with apex multiplicities (absent vertices mean 0)."""

    n: int
    tree_edges: tuple[tuple[int, int], ...]
    mult: Mapping[int, int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidTree(f"tree needs at least one vertex, got n={self.n}")
        edges = tuple(tuple(e) for e in self.tree_edges)
        if len(edges) != self.n - 1:
            raise InvalidTree(f"tree on {self.n} vertices needs {self.n - 1} edges, got {len(edges)}")
        for u, v in edges:
            if not (0 <= u < self.n) or not (0 <= v < self.n):
                raise InvalidVertex(f"tree edge ({u}, {v}) outside 0..{self.n - 1}")
            if u == v:
                raise InvalidTree(f"tree edge ({u}, {v}) is a loop")
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise InvalidTree("tree edges contain a cycle")
            parent[ru] = rv
        cleaned = {}
        for v in sorted(self.mult):
            m = self.mult[v]
            if not (0 <= v < self.n):
                raise InvalidVertex(f"joined vertex {v} outside 0..{self.n - 1}")
            if m < 0:
                raise InvalidSize(f"multiplicity of vertex {v} is negative")
            if m:
                cleaned[v] = m
        object.__setattr__(self, "tree_edges", edges)
        object.__setattr__(self, "mult", cleaned)

    @property
    def support(self) -> tuple[int, ...]:
        """Vertices joined to the apex at least once, ascending."""
        return tuple(sorted(self.mult))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.tree_edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def realize(self) -> MultiGraph:
        """Explicit multigraph: tree plus apex vertex n with its parallel edges."""
        edges = list(self.tree_edges)
        for v in self.support:
            edges.extend([(v, self.n)] * self.mult[v])
        return MultiGraph(self.n + 1, edges)


@dataclass(frozen=True)
class BridgeReduction:
    """Result of stripping bridges: the spanning core and the factor count."""

    core: VertexJoinTree
    b: int
    removed: frozenset[int]
    core_ids: tuple[int, ...]


class NodeState(NamedTuple):
    pt: IntPoly
    ph: IntPoly


@dataclass(frozen=True)
class LeveledTree:
    """Core tree rooted for the sweep; node_state fills during sweep()."""

    root: int
    level: dict[int, int]
    children: dict[int, tuple[int, ...]]
    parent: dict[int, int]
    node_state: dict[int, NodeState] = field(default_factory=dict)

    @property
    def depth(self) -> int:
        return max(self.level.values())


def reduce_multiplicities(t: VertexJoinTree) -> VertexJoinTree:
    """Clamp multiplicities to 0/1; the chromatic polynomial is unchanged."""
    return VertexJoinTree(t.n, t.tree_edges, {v: 1 for v in t.mult})


def chromatic_small_s(t: VertexJoinTree) -> IntPoly | None:
    """Closed forms when at most one vertex is joined, else None.

    No joins: tree times an isolated apex, t^2 (t-1)^(n-1).  One joined
    vertex: the apex hangs off a tree on n+1 vertices, t(t-1)^n.
    """
    s = len(t.mult)
    if s == 0:
        return IntPoly((0, 0, 1)) * _TM1 ** (t.n - 1)
    if s == 1:
        return T * _TM1**t.n
    return None


def strip_bridges(t: VertexJoinTree) -> BridgeReduction:
    """Remove tree vertices outside every cycle of the joined graph.

    With at least two joined vertices, the edges on cycles are exactly
    those of the minimal subtree spanning the joined vertices, so the
    core is found by repeatedly peeling unjoined leaves.  Each peeled
    vertex accounts for one bridge.
    """
    if len(t.mult) < 2:
        raise InvalidTree("bridge stripping needs at least two joined vertices")
    adj = t.adjacency()
    deg = [len(a) for a in adj]
    removed: set[int] = set()
    queue = deque(v for v in range(t.n) if deg[v] == 1 and v not in t.mult)
    while queue:
        v = queue.popleft()
        removed.add(v)
        for w in adj[v]:
            if w in removed:
                continue
            deg[w] -= 1
            if deg[w] == 1 and w not in t.mult:
                queue.append(w)
    core_ids = tuple(v for v in range(t.n) if v not in removed)
    index = {v: i for i, v in enumerate(core_ids)}
    core_edges = tuple(
        (index[u], index[v])
        for u, v in t.tree_edges
        if u in index and v in index
    )
    core = VertexJoinTree(
        len(core_ids), core_edges, {index[v]: m for v, m in t.mult.items()}
    )
    return BridgeReduction(core, len(removed), frozenset(removed), core_ids)


def build_leveled(core: VertexJoinTree, root: int | None = None) -> LeveledTree:
    """Root the core and record levels; children are ordered by id.

    The default root is the smallest-id joined vertex.  Any vertex is
    admissible; the sweep result does not depend on the choice.
    """
    if root is None:
        if not core.mult:
            raise InvalidTree("no joined vertex available as root")
        root = min(core.mult)
    if not (0 <= root < core.n):
        raise InvalidVertex(f"root {root} outside 0..{core.n - 1}")
    adj = core.adjacency()
    level = {root: 0}
    parent: dict[int, int] = {}
    children: dict[int, tuple[int, ...]] = {}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        kids = sorted(w for w in adj[v] if w != parent.get(v))
        children[v] = tuple(kids)
        for w in kids:
            parent[w] = v
            level[w] = level[v] + 1
            queue.append(w)
    if len(level) != core.n:
        raise InvalidTree("core is not connected")
    return LeveledTree(root, level, children, parent)


def sweep(lt: LeveledTree, core: VertexJoinTree) -> IntPoly:
    """Evaluate the recurrences bottom-up; returns P at the root.

    Populates lt.node_state with the (P(T_a), P(H_a)) pair per vertex.
    """
    state = lt.node_state
    order = sorted(lt.level, key=lambda v: lt.level[v], reverse=True)
    for a in order:
        joined = a in core.mult
        kids = lt.children[a]
        k = len(kids)
        if k == 0:
            pt = IntPoly((0, -1, 1)) if joined else IntPoly((0, 0, 1))
            state[a] = NodeState(pt, T)
            continue
        in_i = [c for c in kids if c in core.mult]
        in_z = [c for c in kids if c not in core.mult]
        prod_i = balanced_product(state[c].pt for c in in_i)
        ph = prod_i * balanced_product(state[c].pt - state[c].ph for c in in_z)
        p1 = (
            prod_i
            * _TM2 ** len(in_i)
            * balanced_product(_TM2 * state[c].pt + state[c].ph for c in in_z)
        )
        if k > 1:
            ph = ph.exact_div(T ** (k - 1))
            p1 = p1.exact_div(_TTM1 ** (k - 1))
        state[a] = NodeState(p1 if joined else p1 + ph, ph)
    return state[lt.root].pt


def chromatic_vjtree(t: VertexJoinTree) -> IntPoly:
    """Chromatic polynomial of the realized join, exactly."""
    t = reduce_multiplicities(t)
    early = chromatic_small_s(t)
    if early is not None:
        return early
    reduction = strip_bridges(t)
    lt = build_leveled(reduction.core)
    p = sweep(lt, reduction.core)
    return p * _TM1**reduction.b
