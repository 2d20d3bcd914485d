"""Closed formulas for cycles and cliques joined to an apex vertex.

A PhiString a_1..a_n encodes a cycle on n vertices plus an apex carrying
a_i parallel spokes to the i-th cycle vertex (a generalized wheel).  The
planar dual of such a wheel is again one, and phi_dual computes its
string directly: walking the cycle clockwise, each spoke pair at one
vertex bounds a two-sided face (a zero in the dual), and the last spoke
at a vertex bounds, together with the first spoke at the next joined
vertex, a face with one dual spoke per outer edge between them.

The chromatic polynomial comes from deleting the spokes one at a time;
each deletion step contracts to a chain of cycle faces glued along
single edges, so every term is a product of cycle polynomials divided
by t(t-1) per gluing.  Two independent routes are provided: the closed
per-term formula driven by the face-size bookkeeping (telescoped), and
a literal spoke-by-spoke recursion (stepwise); they must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InvalidSize, InvalidVertex, NoSpokes
from .multigraph import MultiGraph
from .polyring import (
    T,
    ZERO,
    IntPoly,
    balanced_product,
    chromatic_complete,
    chromatic_cycle,
)

_TM1 = IntPoly((-1, 1))
_TTM1 = IntPoly((0, -1, 1))


@dataclass(frozen=True)
class PhiString:
    """Spoke multiplicities around the cycle, clockwise."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        if len(vals) < 1:
            raise InvalidSize("phi string must have at least one entry")
        if any(a < 0 for a in vals):
            raise InvalidSize("phi entries must be nonnegative")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def s(self) -> int:
        return sum(self.values)

    def reduce(self) -> PhiString:
        """Clamp entries to 0/1; parallel spokes are chromatically inert."""
        return PhiString(tuple(min(a, 1) for a in self.values))

    def realize(self) -> MultiGraph:
        """Explicit multigraph: cycle 0..n-1 plus apex vertex n."""
        n = self.n
        if n == 1:
            cycle = [(0, 0)]
        elif n == 2:
            cycle = [(0, 1), (0, 1)]
        else:
            cycle = [(i, (i + 1) % n) for i in range(n)]
        spokes = [(i, n) for i, a in enumerate(self.values) for _ in range(a)]
        return MultiGraph(n + 1, cycle + spokes)


@dataclass(frozen=True)
class FaceDecomposition:
    """Bounded face sizes of a wheel, clockwise from the first spoke."""

    n: int
    face_sizes: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.face_sizes)

    def merged_size(self, i: int) -> int:
        """Size u_i of the face left after dropping spokes i..s, 2 <= i <= s+1.

        Dropping a spoke merges the two faces beside it and frees their
        shared pair of spoke sides, hence the -2 per merge.
        """
        if not (2 <= i <= self.s + 1):
            raise InvalidSize(f"merged face index {i} outside 2..{self.s + 1}")
        return 2 * (i - self.s - 1) + sum(self.face_sizes[i - 2 :])

    def term_faces(self, i: int) -> tuple[int, ...]:
        """Face sizes after restoring spokes 1..i and contracting spoke i.

        Contraction shortens the two faces flanking spoke i by one side
        each; for i = 1 the lone bounded face loses both spoke sides.
        """
        if not (1 <= i <= self.s):
            raise InvalidSize(f"telescope term index {i} outside 1..{self.s}")
        if i == 1:
            return (self.n,)
        f = self.face_sizes
        return f[: i - 2] + (f[i - 2] - 1, self.merged_size(i + 1) - 1)


def phi_dual(phi: PhiString) -> PhiString:
    """String of the dual wheel; needs at least one spoke.

    Swaps length and total: the dual has one cycle vertex per bounded
    face (s of them) and one spoke per outer edge (n of them).
    """
    values = phi.values
    n = phi.n
    if phi.s == 0:
        raise NoSpokes("dual string undefined without spokes")
    joined = [i for i, a in enumerate(values) if a]
    out: list[int] = []
    for idx, i in enumerate(joined):
        nxt = joined[(idx + 1) % len(joined)]
        gap = (nxt - i - 1) % n
        out.extend([0] * (values[i] - 1))
        out.append(gap + 1)
    return PhiString(tuple(out))


def face_sizes(phi: PhiString) -> FaceDecomposition:
    """Bounded face sizes: each face has two spoke sides plus its outer edges."""
    dual = phi_dual(phi)
    return FaceDecomposition(phi.n, tuple(a + 2 for a in dual.values))


def chromatic_clique_join(n: int, mult: Mapping[int, int]) -> IntPoly:
    """Chromatic polynomial of a complete graph joined to an apex.

    Joined vertices force distinct colors on the apex's neighborhood,
    so the apex sees s forbidden colors: (t - s) * P(K_n).
    """
    if n < 1:
        raise InvalidSize(f"clique needs n >= 1, got {n}")
    s = 0
    for v, m in mult.items():
        if not (0 <= v < n):
            raise InvalidVertex(f"joined vertex {v} outside 0..{n - 1}")
        if m < 0:
            raise InvalidSize(f"multiplicity of vertex {v} is negative")
        if m:
            s += 1
    return IntPoly((-s, 1)) * chromatic_complete(n)


def _chain_value(sizes: Iterable[int], glue_count: int) -> IntPoly:
    # Chromatic polynomial of cycles glued in a chain along single edges:
    # product of the cycles over t(t-1) per gluing.
    prod = balanced_product(chromatic_cycle(x) for x in sizes)
    if glue_count:
        return prod.exact_div(_TTM1**glue_count)
    return prod


def chromatic_wheel_telescoped(phi: PhiString) -> IntPoly:
    """Chromatic polynomial of the wheel via the per-term closed formula."""
    reduced = phi.reduce()
    n, s = reduced.n, reduced.s
    pcn = chromatic_cycle(n)
    if s == 0:
        return T * pcn
    if s == 1:
        return pcn * _TM1
    fd = face_sizes(reduced)
    total = T * pcn
    for i in range(1, s + 1):
        total = total - _chain_value(fd.term_faces(i), i - 1)
    return total


def chromatic_wheel_stepwise(phi: PhiString) -> IntPoly:
    """Same polynomial by literally peeling spokes one at a time.

    Each step applies deletion-contraction to the clockwise-last
    remaining spoke, with the contracted graph's faces read directly
    off the spoke positions.  Kept separate from the telescoped route
    as a guard against index slips in the closed formula.
    """
    reduced = phi.reduce()
    n = reduced.n
    positions = [i for i, a in enumerate(reduced.values) if a]
    total = T * chromatic_cycle(n)
    for k in range(1, len(positions) + 1):
        total = total - _contracted_spoke(n, positions[:k])
    return total


def _contracted_spoke(n: int, positions: list[int]) -> IntPoly:
    # P of the cycle plus the given spokes, with the last spoke contracted.
    m = len(positions)
    if m == 1:
        return chromatic_cycle(n)
    sizes = []
    for a in range(m):
        gap = (positions[(a + 1) % m] - positions[a]) % n
        sizes.append(gap + 2)
    sizes[m - 2] -= 1
    sizes[m - 1] -= 1
    return _chain_value(sizes, m - 1)


def flow_wheel(phi: PhiString) -> IntPoly:
    """Flow polynomial of the wheel, via the dual wheel's chromatic one."""
    if phi.s == 0:
        # Bare cycle plus isolated apex: (t - 1) times 1.
        return _TM1
    if phi.s == 1:
        return ZERO
    dual = phi_dual(phi)
    return chromatic_wheel_telescoped(dual).exact_div(T)
