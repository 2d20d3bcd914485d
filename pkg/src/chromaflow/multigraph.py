"""Undirected multigraphs with stable integer edge ids.

Vertices are 0..n-1.  Edges are an ordered multiset of unordered pairs;
an edge's id is its position, so deleting edge e shifts later ids down
by one.  Loops (u == v) and parallel copies are allowed everywhere.

Contraction follows a fixed renumbering so results are reproducible:
the merged vertex keeps id min(u, v), and every id above max(u, v)
shifts down by one.  All u-v copies vanish, so contraction never
creates a loop.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import InvalidEdge, InvalidVertex, SelfContract


class MultiGraph:
    __slots__ = ("n", "edges")

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidVertex(f"vertex count must be nonnegative, got {n}")
        norm = []
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) outside 0..{n - 1}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MultiGraph is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"MultiGraph({self.n}, {list(self.edges)!r})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        """Vertex degrees; a loop adds 2 at its vertex."""
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """adj[v] = [(neighbor, edge id), ...]; loops omitted."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            if u != v:
                adj[u].append((v, eid))
                adj[v].append((u, eid))
        return adj

    # -- queries -------------------------------------------------------------

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of connected components, each sorted, ordered by minimum."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return [tuple(groups[r]) for r in sorted(groups)]

    def bridges(self) -> frozenset[int]:
        """Edge ids whose removal disconnects their component.

        Standard low-link DFS, tracking the entering edge by id so a
        parallel copy counts as a cycle rather than the tree edge.
        Loops and parallel edges are never bridges.
        """
        disc = [-1] * self.n
        low = [0] * self.n
        adj = self.adjacency()
        found: set[int] = set()
        timer = 0
        for root in range(self.n):
            if disc[root] >= 0:
                continue
            disc[root] = low[root] = timer
            timer += 1
            stack: list[tuple[int, int, Iterator[tuple[int, int]]]] = [
                (root, -1, iter(adj[root]))
            ]
            while stack:
                v, pe, it = stack[-1]
                pushed = False
                for w, eid in it:
                    if disc[w] < 0:
                        disc[w] = low[w] = timer
                        timer += 1
                        stack.append((w, eid, iter(adj[w])))
                        pushed = True
                        break
                    if eid != pe and disc[w] < low[v]:
                        low[v] = disc[w]
                if pushed:
                    continue
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        found.add(pe)
        return frozenset(found)

    # -- surgery -------------------------------------------------------------

    def delete_edge(self, e: int) -> MultiGraph:
        if not (0 <= e < len(self.edges)):
            raise InvalidEdge(f"edge id {e} outside 0..{len(self.edges) - 1}")
        return MultiGraph(self.n, self.edges[:e] + self.edges[e + 1 :])

    def contract(self, u: int, v: int) -> MultiGraph:
        """Identify u and v, dropping every u-v copy (no loop is created)."""
        if not (0 <= u < self.n) or not (0 <= v < self.n):
            raise InvalidVertex(f"contract endpoints ({u}, {v}) outside 0..{self.n - 1}")
        if u == v:
            raise SelfContract(f"cannot contract vertex {u} with itself")
        lo, hi = (u, v) if u < v else (v, u)

        def remap(w: int) -> int:
            if w == hi:
                return lo
            return w - 1 if w > hi else w

        kept = [
            (remap(a), remap(b))
            for a, b in self.edges
            if {a, b} != {lo, hi}
        ]
        return MultiGraph(self.n - 1, kept)

    def induced_subgraph(self, vertices: Iterable[int]) -> MultiGraph:
        """Subgraph on the given vertices, renumbered 0..k-1 in sorted order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        for v in keep:
            if not (0 <= v < self.n):
                raise InvalidVertex(f"vertex {v} outside 0..{self.n - 1}")
        sub = [
            (index[a], index[b])
            for a, b in self.edges
            if a in index and b in index
        ]
        return MultiGraph(len(keep), sub)
