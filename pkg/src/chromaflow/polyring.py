"""Exact univariate polynomials over the integers.

Coefficients are arbitrary-precision Python ints stored densely in
ascending order.  The representation is canonical: no trailing zeros,
and the zero polynomial is the empty tuple (its degree is None).

Multiplication has two paths that produce identical results: plain
schoolbook, and a Kronecker-substitution path that packs coefficients
into one big integer so CPython's sub-quadratic integer multiply does
the work.  The fast path only pays off when both operands are long, so
dispatch is on the smaller operand's length.

>>> T * T - T
IntPoly((0, -1, 1))
>>> chromatic_tree(3).evaluate(3)
12
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush
from itertools import count
from typing import Iterable, Sequence

from .errors import InvalidSize, NonExactDivision

# Crossover measured on CPython 3.10 (see tests/test_polyring.py for the
# agreement suite); below this the packing overhead dominates.
FAST_MUL_CUTOFF = 48


class IntPoly:
    """Immutable integer polynomial; coeffs[i] is the coefficient of t^i."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntPoly is immutable")

    # -- basics ------------------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(value: IntPoly | int) -> IntPoly:
        if isinstance(value, IntPoly):
            return value
        if isinstance(value, int):
            return IntPoly((value,))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = list(self.coeffs)
        b = other.coeffs
        if len(out) < len(b):
            out.extend([0] * (len(b) - len(out)))
        for i, c in enumerate(b):
            out[i] -= c
        return IntPoly(out)

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly((other,)) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if min(len(a), len(b)) < FAST_MUL_CUTOFF:
            return IntPoly(_mul_schoolbook(a, b))
        return IntPoly(_mul_kronecker(a, b))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise InvalidSize(f"negative exponent {n}")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def exact_div(self, divisor: IntPoly | int) -> IntPoly:
        """Quotient self / divisor; raises NonExactDivision on any remainder."""
        divisor = self._coerce(divisor)
        d = divisor.coeffs
        if not d:
            raise NonExactDivision("division by zero polynomial")
        if not self.coeffs:
            return ZERO
        if len(self.coeffs) < len(d):
            raise NonExactDivision("divisor degree exceeds dividend degree")
        num = self.coeffs
        # Divisors here are mostly t^a (t-1)^b; peel those factors in
        # linear passes (slice, then synthetic division at the root 1)
        # instead of quadratic long division.
        shift = 0
        while d[shift] == 0:
            shift += 1
        if shift:
            if any(num[:shift]):
                raise NonExactDivision(f"dividend is not divisible by t^{shift}")
            num = num[shift:]
            d = d[shift:]
        while len(d) > 1 and sum(d) == 0:
            d = _synth_div_at_one(d)
            num = _synth_div_at_one(num)
        if len(d) == 1:
            c = d[0]
            if c in (1, -1):
                return IntPoly(num) if c == 1 else IntPoly(tuple(-a for a in num))
            quot = []
            for a in num:
                q, r = divmod(a, c)
                if r:
                    raise NonExactDivision("coefficient not divisible by constant term")
                quot.append(q)
            return IntPoly(quot)
        rem = list(num)
        lead = d[-1]
        qlen = len(rem) - len(d) + 1
        quot = [0] * qlen
        for k in range(qlen - 1, -1, -1):
            c = rem[k + len(d) - 1]
            if c % lead:
                raise NonExactDivision(f"leading term not divisible at t^{k}")
            qc = c // lead
            quot[k] = qc
            if qc:
                for j, dc in enumerate(d):
                    rem[k + j] -= qc * dc
        if any(rem):
            raise NonExactDivision("nonzero remainder")
        return IntPoly(quot)

    def evaluate(self, x: int) -> int:
        """Horner evaluation at an integer point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _synth_div_at_one(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    # One pass of synthetic division by (t - 1); exact or it raises.
    d = len(coeffs) - 1
    if d < 1:
        raise NonExactDivision("constant is not divisible by t - 1")
    q = [0] * d
    q[d - 1] = coeffs[d]
    for i in range(d - 1, 0, -1):
        q[i - 1] = coeffs[i] + q[i]
    if coeffs[0] + q[0]:
        raise NonExactDivision("nonzero remainder at t = 1")
    return tuple(q)


def _mul_schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) > len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if not c:
            continue
        for j, d in enumerate(b):
            out[i + j] += c * d
    return out


def _mul_kronecker(a: Sequence[int], b: Sequence[int]) -> list[int]:
    # Evaluate both polynomials at t = 2^w with w wide enough that result
    # coefficients occupy disjoint bit ranges, multiply as integers, and
    # read the coefficients back out.  Signs are handled by splitting each
    # operand into its positive and negative parts, which keeps every
    # packed value nonnegative.
    amax = max(c if c >= 0 else -c for c in a)
    bmax = max(c if c >= 0 else -c for c in b)
    w = amax.bit_length() + bmax.bit_length() + min(len(a), len(b)).bit_length() + 1
    w = (w + 7) & ~7
    wb = w // 8

    def pack(cs: Sequence[int]) -> tuple[int, int]:
        pos = bytearray(len(cs) * wb)
        neg = bytearray(len(cs) * wb)
        for i, c in enumerate(cs):
            if c > 0:
                pos[i * wb : i * wb + wb] = c.to_bytes(wb, "little")
            elif c < 0:
                neg[i * wb : i * wb + wb] = (-c).to_bytes(wb, "little")
        return int.from_bytes(pos, "little"), int.from_bytes(neg, "little")

    ap, an = pack(a)
    bp, bn = pack(b)
    same = ap * bp + an * bn
    cross = ap * bn + an * bp
    nout = len(a) + len(b) - 1
    buf_same = same.to_bytes(nout * wb + wb, "little")
    buf_cross = cross.to_bytes(nout * wb + wb, "little")
    out = []
    for k in range(nout):
        lo, hi = k * wb, k * wb + wb
        out.append(
            int.from_bytes(buf_same[lo:hi], "little")
            - int.from_bytes(buf_cross[lo:hi], "little")
        )
    return out


ZERO = IntPoly()
ONE = IntPoly((1,))
T = IntPoly((0, 1))


def balanced_product(factors: Iterable[IntPoly]) -> IntPoly:
    """Product of many polynomials, always combining the two smallest.

    Keeps intermediate degrees balanced so the total multiplication work
    stays near the sum of output sizes rather than quadratic in it.
    """
    tie = count()
    heap = [(len(p.coeffs), next(tie), p) for p in factors]
    if not heap:
        return ONE
    heapify(heap)
    while len(heap) > 1:
        _, _, p = heappop(heap)
        _, _, q = heappop(heap)
        r = p * q
        heappush(heap, (len(r.coeffs), next(tie), r))
    return heap[0][2]


def chromatic_complete(n: int) -> IntPoly:
    """Chromatic polynomial of the complete graph: t(t-1)...(t-n+1)."""
    if n < 1:
        raise InvalidSize(f"complete graph needs n >= 1, got {n}")
    return balanced_product(IntPoly((-i, 1)) for i in range(n))


def chromatic_cycle(n: int) -> IntPoly:
    """Chromatic polynomial of the n-cycle: (t-1)^n + (-1)^n (t-1).

    n=1 is a loop (identically zero) and n=2 a parallel pair, so the
    formula is usable for every n >= 1.
    """
    if n < 1:
        raise InvalidSize(f"cycle needs n >= 1, got {n}")
    tm1 = IntPoly((-1, 1))
    sign = 1 if n % 2 == 0 else -1
    return tm1**n + sign * tm1


def chromatic_tree(n: int) -> IntPoly:
    """Chromatic polynomial of any tree on n vertices: t(t-1)^(n-1)."""
    if n < 1:
        raise InvalidSize(f"tree needs n >= 1, got {n}")
    return T * IntPoly((-1, 1)) ** (n - 1)
