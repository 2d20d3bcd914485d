"""Flow polynomials of outerplanar multigraphs via the dual tree join.

A biconnected outerplanar multigraph is a polygon (its unique
Hamiltonian cycle) plus non-crossing chords, parallel copies and loops.
Its weak dual is a tree of bounded faces, and adjacency to the outer
face turns into apex multiplicities, so the dual is exactly a
VertexJoinTree and the flow polynomial is its chromatic one over t.

The outer cycle is recovered by degree-2 elimination: every degree-2
vertex of a biconnected outerplanar graph sits on the outer cycle
between its two neighbors, so it can be removed and reinserted later.
Reinsertion, the cycle certificate and the chord laminarity sweep
reject non-outerplanar inputs deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappop, heappush

from .errors import NotBiconnected, NotOuterplanar
from .multigraph import MultiGraph
from .polyring import ONE, T, ZERO, IntPoly
from .vjtree import VertexJoinTree, chromatic_vjtree

_TM1 = IntPoly((-1, 1))

Edge = tuple[int, int]


@dataclass(frozen=True)
class OuterCycle:
    """Canonical outerplanar certificate of one biconnected component.

    order starts at the smallest vertex and runs toward its smaller
    cycle neighbor, so equal graphs yield identical certificates.  A
    two-vertex order marks the degenerate parallel-bundle cycle.
    """

    order: tuple[int, ...]
    chord_set: tuple[Edge, ...]
    parallel_count: dict[Edge, int]
    loop_count: int


def find_outer_cycle(g: MultiGraph) -> OuterCycle:
    """Recover the outer Hamiltonian cycle of a biconnected multigraph."""
    if len(g.components()) != 1:
        raise NotBiconnected("input is not connected")
    loop_count = sum(1 for u, v in g.edges if u == v)
    counts: dict[Edge, int] = {}
    for u, v in g.edges:
        if u != v:
            counts[(u, v)] = counts.get((u, v), 0) + 1

    if g.n == 1:
        raise NotOuterplanar("single vertex has no outer cycle")
    if g.n == 2:
        if not counts or next(iter(counts.values())) < 2:
            raise NotOuterplanar("two vertices need a parallel bundle to close a cycle")
        return OuterCycle((0, 1), (), counts, loop_count)

    adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in counts:
        adj[u].add(v)
        adj[v].add(u)
    _reject_cut_vertices(g.n, adj)

    # Peel degree-2 vertices, lowest id first, remembering where each one
    # must be sewn back into the cycle.
    steps: list[tuple[int, int, int]] = []
    worklist = [v for v in range(g.n) if len(adj[v]) == 2]
    heapify(worklist)
    alive = g.n
    while alive > 3:
        x = None
        while worklist:
            cand = heappop(worklist)
            if cand in adj and len(adj[cand]) == 2:
                x = cand
                break
        if x is None:
            raise NotOuterplanar("degree-2 elimination stalled")
        a, b = sorted(adj[x])
        adj[a].discard(x)
        adj[b].discard(x)
        del adj[x]
        steps.append((x, a, b))
        if b not in adj[a]:
            adj[a].add(b)
            adj[b].add(a)
        for w in (a, b):
            if len(adj[w]) == 2:
                heappush(worklist, w)
        alive -= 1

    base = sorted(adj)
    for i in range(3):
        if base[(i + 1) % 3] not in adj[base[i]]:
            raise NotOuterplanar("reduction did not end in a triangle")
    nxt = {base[0]: base[1], base[1]: base[2], base[2]: base[0]}
    prv = {w: v for v, w in nxt.items()}
    for x, a, b in reversed(steps):
        if nxt[a] == b:
            lo, hi = a, b
        elif nxt[b] == a:
            lo, hi = b, a
        else:
            raise NotOuterplanar(f"vertex {x} cannot rejoin the cycle between {a} and {b}")
        nxt[lo], nxt[x], prv[x], prv[hi] = x, hi, lo, x

    start = min(nxt)
    step = nxt if nxt[start] <= prv[start] else prv
    order = [start]
    cur = step[start]
    while cur != start:
        order.append(cur)
        cur = step[cur]
    if len(order) != g.n:
        raise NotOuterplanar("reconstructed cycle misses vertices")
    cycle_edges = set()
    for i, u in enumerate(order):
        v = order[(i + 1) % g.n]
        e = (u, v) if u <= v else (v, u)
        if e not in counts:
            raise NotOuterplanar(f"cycle side ({u}, {v}) is not an edge")
        cycle_edges.add(e)

    chord_set = tuple(sorted(e for e in counts if e not in cycle_edges))
    pos = {v: i for i, v in enumerate(order)}
    _reject_crossing_chords(
        sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in chord_set)
    )
    return OuterCycle(tuple(order), chord_set, counts, loop_count)


def _reject_cut_vertices(n: int, adj: dict[int, set[int]]) -> None:
    # Low-link articulation test on the simple skeleton.
    disc = {}
    low = {}
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(sorted(adj[root])))]
    while stack:
        v, parent, it = stack[-1]
        pushed = False
        for w in it:
            if w not in disc:
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(sorted(adj[w]))))
                pushed = True
                break
            if w != parent and disc[w] < low[v]:
                low[v] = disc[w]
        if pushed:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            if low[v] < low[p]:
                low[p] = low[v]
            if p != root and low[v] >= disc[p]:
                raise NotBiconnected(f"vertex {p} is a cut vertex")
    if root_children > 1:
        raise NotBiconnected(f"vertex {root} is a cut vertex")


def _reject_crossing_chords(intervals: list[tuple[int, int]]) -> None:
    # Chords as polygon index intervals must be laminar (nested or
    # disjoint, endpoints may touch).
    intervals = sorted(intervals, key=lambda ij: (ij[0], -ij[1]))
    stack: list[tuple[int, int]] = []
    for i, j in intervals:
        while stack and stack[-1][1] <= i:
            stack.pop()
        if stack and not (stack[-1][0] <= i and j <= stack[-1][1]):
            raise NotOuterplanar(f"chords {stack[-1]} and {(i, j)} cross")
        stack.append((i, j))


def build_dual(oc: OuterCycle) -> tuple[VertexJoinTree, int]:
    """Weak dual of the certified component, as a tree join.

    One tree vertex per bounded face; faces sharing a chord are
    adjacent; a face's multiplicity counts its single outer edges.  A
    bundle of k parallel copies stacks k-1 two-sided faces, inserted as
    a path of k-1 extra vertices subdividing the corresponding dual
    edge (toward the apex for cycle bundles, between the two face
    vertices for chord bundles).
    """
    order = oc.order
    n = len(order)
    if n == 2:
        k = oc.parallel_count[(min(order), max(order))]
        faces = k - 1
        edges = tuple((i, i + 1) for i in range(faces - 1))
        mult = {0: 2} if faces == 1 else {0: 1, faces - 1: 1}
        return VertexJoinTree(faces, edges, mult), oc.loop_count

    pos = {v: i for i, v in enumerate(order)}
    intervals = sorted(
        ((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in oc.chord_set),
        key=lambda ij: (ij[0], -ij[1]),
    )
    face_of_interval = {iv: fid for fid, iv in enumerate(intervals, start=1)}

    # Innermost containing interval owns each polygon side; the sweep
    # overwrites outer assignments with nested ones.
    owner = [0] * n
    tree_edges: list[Edge] = []
    stack: list[tuple[int, int]] = []
    for iv in intervals:
        i, j = iv
        while stack and stack[-1][1] <= i:
            stack.pop()
        parent = face_of_interval[stack[-1]] if stack else 0
        tree_edges.append((parent, face_of_interval[iv]))
        stack.append(iv)
        for p in range(i, j):
            owner[p] = face_of_interval[iv]

    mult: dict[int, int] = {}
    total = len(intervals) + 1
    extra_edges: list[Edge] = []

    for p in range(n):
        u, v = order[p], order[(p + 1) % n]
        e = (u, v) if u <= v else (v, u)
        k = oc.parallel_count[e]
        face = owner[p]
        if k == 1:
            mult[face] = mult.get(face, 0) + 1
        else:
            prev = face
            for _ in range(k - 1):
                extra_edges.append((prev, total))
                prev = total
                total += 1
            mult[prev] = mult.get(prev, 0) + 1

    dual_edges: list[Edge] = []
    for iv, (a, b) in zip(intervals, tree_edges):
        u, v = order[iv[0]], order[iv[1]]
        e = (u, v) if u <= v else (v, u)
        k = oc.parallel_count[e]
        if k == 1:
            dual_edges.append((a, b))
        else:
            prev = a
            for _ in range(k - 1):
                dual_edges.append((prev, total))
                prev = total
                total += 1
            dual_edges.append((prev, b))

    dual_edges.extend(extra_edges)
    return VertexJoinTree(total, tuple(dual_edges), mult), oc.loop_count


def flow_outerplanar(g: MultiGraph) -> IntPoly:
    """Flow polynomial of an outerplanar multigraph, exactly.

    Component by component: a bridge kills the flow outright, isolated
    vertices are inert, loops factor out (t - 1) each, and everything
    else goes through the dual: F = P(dual) / t per component.
    """
    result = ONE
    for comp in g.components():
        sub = g.induced_subgraph(comp)
        if sub.bridges():
            return ZERO
        if not sub.edges:
            continue
        if all(u == v for u, v in sub.edges):
            result = result * _TM1**sub.m
            continue
        dual, loops = build_dual(find_outer_cycle(sub))
        factor = chromatic_vjtree(dual).exact_div(T)
        result = result * factor * _TM1**loops
    return result
