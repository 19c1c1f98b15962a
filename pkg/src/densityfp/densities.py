"""Closed-form density functions of a weighted periodic sequence.

``psi(S, k)`` is the fraction of the unit cell covered by exactly ``k`` of
the grown intervals ``[p_i - r_i - t, p_i + r_i + t]``.  For ``k >= 1`` it is
a sum of ``m`` trapezoids, one per window of ``k`` consecutive intervals;
``psi0`` is a decreasing polyline determined by the sorted gaps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from . import pwl
from .errors import IndexOutOfRange, IndexTooSmall
from .pwl import PiecewiseLinear
from .seqcore import PeriodicSequence, RationalLike, as_fraction, gaps

HALF = Fraction(1, 2)


class _Unrolled:
    """Gaps and radii of ``S`` indexed 1-based over the unrolled line.

    ``g(j)`` is the gap in front of interval ``j``; indices past ``m`` wrap
    periodically.  Range sums use prefix tables so each lookup is O(1).
    """

    def __init__(self, S: PeriodicSequence):
        gv = gaps(S)
        self.m = S.m
        self.gaps = gv.gaps
        self.radii = S.radii
        self.total_length = gv.total_length
        self._gpre = [Fraction(0)]
        self._rpre = [Fraction(0)]
        for x in self.gaps:
            self._gpre.append(self._gpre[-1] + x)
        for x in self.radii:
            self._rpre.append(self._rpre[-1] + x)

    def g(self, j: int) -> Fraction:
        return self.gaps[(j - 1) % self.m]

    def r(self, j: int) -> Fraction:
        return self.radii[(j - 1) % self.m]

    def _prefix(self, table, n: int) -> Fraction:
        q, rem = divmod(n, self.m)
        return q * table[self.m] + table[rem]

    def gsum(self, a: int, b: int) -> Fraction:
        """Sum of ``g(j)`` for ``a <= j <= b`` (zero when ``b < a``)."""
        if b < a:
            return Fraction(0)
        return self._prefix(self._gpre, b) - self._prefix(self._gpre, a - 1)

    def rsum(self, a: int, b: int) -> Fraction:
        if b < a:
            return Fraction(0)
        return self._prefix(self._rpre, b) - self._prefix(self._rpre, a - 1)


@dataclass(frozen=True)
class Trapezoid:
    """One summand ``eta_{k,i}`` of ``psi_k``.

    ``corners`` lists the four corner points in the order of the closed-form
    formula, so for ``k = 1`` the middle pair may appear swapped.  ``key`` is
    the generating data: ``(g_i, r_i, g_{i+1})`` for ``k = 1`` and
    ``(g, s, g')`` for ``k >= 2``.
    """

    k: int
    i: int
    key: Tuple[Fraction, Fraction, Fraction]
    start: Fraction
    corners: Tuple[Tuple[Fraction, Fraction], ...]

    @property
    def onset(self) -> Fraction:
        return self.corners[0][0]

    @property
    def rise_end(self) -> Fraction:
        return min(self.corners[1][0], self.corners[2][0])

    @property
    def fall_start(self) -> Fraction:
        return max(self.corners[1][0], self.corners[2][0])

    @property
    def end(self) -> Fraction:
        return self.corners[3][0]

    @property
    def height(self) -> Fraction:
        return self.corners[1][1]

    def as_pwl(self) -> PiecewiseLinear:
        return pwl.from_corners(self.start, sorted(self.corners))


def _check_index(S: PeriodicSequence, i: int) -> None:
    if not 1 <= i <= S.m:
        raise IndexOutOfRange(f"interval index {i} outside 1..{S.m}")


def psi0(S: PeriodicSequence) -> PiecewiseLinear:
    """Uncovered fraction of the cell, from the sorted gaps."""
    gv = gaps(S)
    m = S.m
    base = 1 - gv.total_length
    corners = []
    acc = Fraction(0)
    for idx, g in enumerate(sorted(gv.gaps), 1):
        corners.append((g / 2, base - acc - (m - idx + 1) * g))
        acc += g
    return pwl.from_corners(base, corners)


def _trapezoid1(u: _Unrolled, i: int) -> Trapezoid:
    r = u.r(i)
    gi, gn = u.g(i), u.g(i + 1)
    top = min(gi, gn) + 2 * r
    corners = (
        (Fraction(0), 2 * r),
        (gi / 2, top),
        (gn / 2, top),
        ((gi + gn) / 2 + r, Fraction(0)),
    )
    return Trapezoid(1, i, (gi, r, gn), 2 * r, corners)


def _trapezoidk(u: _Unrolled, k: int, i: int) -> Trapezoid:
    s = u.gsum(i + 1, i + k - 1) + 2 * u.rsum(i + 1, i + k - 2)
    left = u.g(i) + 2 * u.r(i)
    right = u.g(i + k) + 2 * u.r(i + k - 1)
    g, g2 = min(left, right), max(left, right)
    zero = Fraction(0)
    corners = (
        (s / 2, zero),
        ((g + s) / 2, g),
        ((s + g2) / 2, g),
        ((g + s + g2) / 2, zero),
    )
    return Trapezoid(k, i, (g, s, g2), zero, corners)


def trapezoid1(S: PeriodicSequence, i: int) -> Trapezoid:
    """Length covered by interval ``i`` alone (1-based ``i``)."""
    _check_index(S, i)
    return _trapezoid1(_Unrolled(S), i)


def trapezoid_k(S: PeriodicSequence, k: int, i: int) -> Trapezoid:
    """Length covered by exactly the window of intervals ``i .. i+k-1``, ``k >= 2``."""
    if k < 2:
        raise ValueError("trapezoid_k needs k >= 2; use trapezoid1 for k = 1")
    _check_index(S, i)
    return _trapezoidk(_Unrolled(S), k, i)


def trapezoids(S: PeriodicSequence, k: int) -> List[Trapezoid]:
    if k < 1:
        raise ValueError("trapezoid decomposition exists for k >= 1")
    u = _Unrolled(S)
    make = _trapezoid1 if k == 1 else (lambda u_, i: _trapezoidk(u_, k, i))
    return [make(u, i) for i in range(1, S.m + 1)]


def psi(S: PeriodicSequence, k: int) -> PiecewiseLinear:
    """The ``k``-th density function, computed directly for any ``k >= 0``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return psi0(S)
    return pwl.pwl_sum(t.as_pwl() for t in trapezoids(S, k))


def psi_via_periodicity(S: PeriodicSequence, k: int) -> PiecewiseLinear:
    """``psi_k`` assembled from ``psi_{k-m}`` shifted right by 1/2.

    Only the part on ``[1/2, inf)`` comes from the shift; ``[0, 1/2)`` is
    taken from the direct computation.  A mismatch at ``t = 1/2`` raises
    :class:`~densityfp.errors.DiscontinuityError`.
    """
    m = S.m
    if k < m:
        raise IndexTooSmall(f"periodicity needs k >= m = {m}, got {k}")
    lower = psi(S, k - m)
    direct = psi(S, k)
    head = [(t, v) for t, v in direct.corners if t < HALF]
    head.append((HALF, direct(HALF)))
    tail = [(HALF, lower.start)] + [(t + HALF, v) for t, v in lower.corners]
    return pwl.from_corners(direct.start, head + tail)


@dataclass(frozen=True)
class DensityFingerprint:
    sequence: PeriodicSequence
    functions: Tuple[PiecewiseLinear, ...]

    @property
    def m(self) -> int:
        return self.sequence.m

    @property
    def depth(self) -> int:
        return len(self.functions) - 1

    def psi(self, k: int) -> PiecewiseLinear:
        if k <= self.depth:
            return self.functions[k]
        return psi(self.sequence, k)

    def value(self, k: int, t: RationalLike) -> Fraction:
        """``psi_k(t)``, reducing large ``k`` by the half-shift rule when ``t >= 1/2``."""
        t = as_fraction(t)
        while k > self.depth and k >= self.m and t >= HALF:
            k -= self.m
            t -= HALF
        return pwl.evaluate(self.psi(k), t)


def fingerprint(S: PeriodicSequence, K: Optional[int] = None) -> DensityFingerprint:
    if K is None:
        K = S.m
    if K < 0:
        raise ValueError("K must be non-negative")
    return DensityFingerprint(S, tuple(psi(S, k) for k in range(K + 1)))


def densigram(fp: DensityFingerprint) -> List[PiecewiseLinear]:
    """Accumulated sums ``psi_1 + ... + psi_k`` for ``k = 1..K``."""
    if fp.depth < 1:
        raise ValueError("densigram needs a fingerprint with K >= 1")
    out = []
    acc = pwl.zero()
    for f in fp.functions[1:]:
        acc = pwl.pwl_sum([acc, f])
        out.append(acc)
    return out
