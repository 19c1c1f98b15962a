"""Exact continuous piecewise-linear functions on ``[0, inf)``.

A function is stored as its value at ``t = 0`` plus the corner points where
the gradient changes; it is constant after the last corner.  The canonical
form has strictly increasing abscissas, no collinear corners and no flat
final segment, so two functions are equal iff their dataclasses compare
equal.
"""

from __future__ import annotations

import bisect
import decimal
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import DiscontinuityError, NegativeArgument, NonMonotoneAbscissas, ParseError
from .seqcore import RationalLike, as_fraction, format_rational, parse_rational

Point = Tuple[Fraction, Fraction]

ZERO = Fraction(0)


@dataclass(frozen=True)
class PiecewiseLinear:
    start: Fraction
    corners: Tuple[Point, ...] = ()

    @property
    def right_value(self) -> Fraction:
        return self.corners[-1][1] if self.corners else self.start

    @property
    def points(self) -> Tuple[Point, ...]:
        """Origin point followed by the corners."""
        return ((ZERO, self.start),) + self.corners

    @property
    def abscissas(self) -> Tuple[Fraction, ...]:
        return tuple(t for t, _ in self.corners)

    def __call__(self, t: RationalLike) -> Fraction:
        return evaluate(self, t)

    def slopes(self) -> List[Fraction]:
        """Gradient on each finite segment; the tail after the last corner is flat."""
        pts = self.points
        return [(v1 - v0) / (t1 - t0) for (t0, v0), (t1, v1) in zip(pts, pts[1:])]


def _slope(a: Point, b: Point) -> Fraction:
    return (b[1] - a[1]) / (b[0] - a[0])


def _canonical(start: Fraction, corners: Iterable[Point]) -> PiecewiseLinear:
    stack: List[Point] = [(ZERO, start)]
    for p in corners:
        last = stack[-1]
        if p[0] == last[0]:
            if p[1] != last[1]:
                raise DiscontinuityError(f"two values {last[1]} and {p[1]} at t = {p[0]}")
            continue
        if len(stack) >= 2 and _slope(stack[-2], last) == _slope(last, p):
            stack.pop()
        stack.append(p)
    while len(stack) >= 2 and stack[-1][1] == stack[-2][1]:
        stack.pop()
    return PiecewiseLinear(start, tuple(stack[1:]))


def from_corners(start: RationalLike, corners: Iterable[Tuple[RationalLike, RationalLike]]) -> PiecewiseLinear:
    """Build the canonical function through ``(0, start)`` and ``corners``.

    Repeated corners collapse into one; a corner at ``t = 0`` must agree with
    ``start``.
    """
    start = as_fraction(start)
    pts = [(as_fraction(t), as_fraction(v)) for t, v in corners]
    if start < 0 or any(v < 0 for _, v in pts):
        raise ValueError("function values must be non-negative")
    prev = ZERO
    for t, _ in pts:
        if t < prev:
            raise NonMonotoneAbscissas(f"abscissa {t} follows {prev}")
        prev = t
    return _canonical(start, pts)


def zero() -> PiecewiseLinear:
    return PiecewiseLinear(ZERO, ())


def constant(c: RationalLike) -> PiecewiseLinear:
    return from_corners(c, ())


def evaluate(f: PiecewiseLinear, t: RationalLike) -> Fraction:
    t = as_fraction(t)
    if t < 0:
        raise NegativeArgument(f"t must be >= 0, got {t}")
    cs = f.corners
    if not cs or t >= cs[-1][0]:
        return f.right_value
    j = bisect.bisect_right(f.abscissas, t)
    t0, v0 = (ZERO, f.start) if j == 0 else cs[j - 1]
    t1, v1 = cs[j]
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0)


def _slope_events(f: PiecewiseLinear) -> Tuple[Fraction, List[Tuple[Fraction, Fraction]]]:
    """Initial gradient and the list of ``(t, gradient jump)`` at each corner."""
    slopes = f.slopes() + [ZERO]
    events = [(t, slopes[j + 1] - slopes[j]) for j, (t, _) in enumerate(f.corners)]
    return slopes[0], events


def pwl_sum(fs: Iterable[PiecewiseLinear]) -> PiecewiseLinear:
    """Exact pointwise sum, merging gradient jumps in one sorted pass."""
    start = ZERO
    slope = ZERO
    events: List[Tuple[Fraction, Fraction]] = []
    for f in fs:
        s0, ev = _slope_events(f)
        start += f.start
        slope += s0
        events.extend(ev)
    events.sort(key=lambda e: e[0])
    corners = []
    t_prev, v = ZERO, start
    i, n = 0, len(events)
    while i < n:
        t = events[i][0]
        jump = ZERO
        while i < n and events[i][0] == t:
            jump += events[i][1]
            i += 1
        v += slope * (t - t_prev)
        t_prev = t
        if jump:
            corners.append((t, v))
            slope += jump
    return _canonical(start, corners)


def shifted(f: PiecewiseLinear, d: RationalLike) -> PiecewiseLinear:
    """``t -> f(t - d)`` for ``t >= d``, extended by the constant ``f(0)`` on ``[0, d)``."""
    d = as_fraction(d)
    if d < 0:
        raise NegativeArgument("shift must be non-negative")
    pts = [(d, f.start)] + [(t + d, v) for t, v in f.corners]
    return _canonical(f.start, pts)


def equal(f: PiecewiseLinear, g: PiecewiseLinear) -> bool:
    return f.start == g.start and f.corners == g.corners


def local_maxima(f: PiecewiseLinear) -> List[Tuple[Fraction, Fraction, Fraction]]:
    """Local maxima as ``(t_start, t_end, value)``; plateaus are reported once.

    A maximum needs a rise (or the left end ``t = 0``) before it and a descent
    after it, so a flat infinite tail is never a maximum.
    """
    pts = f.points
    slopes = f.slopes()
    n = len(slopes)
    out = []
    i = 0
    while i <= n:
        j = i
        while j < n and slopes[j] == 0:
            j += 1
        before = slopes[i - 1] if i > 0 else None
        after = slopes[j] if j < n else None
        if (before is None or before > 0) and after is not None and after < 0:
            out.append((pts[i][0], pts[j][0], pts[i][1]))
        i = j + 1
    return out


# -- CSV ---------------------------------------------------------------------

def to_decimal_str(x: Fraction, digits: int = 12) -> str:
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        d = decimal.Decimal(x.numerator) / decimal.Decimal(x.denominator)
    return f"{d:g}" if d else "0"


def to_csv(f: PiecewiseLinear, with_decimal: bool = False) -> str:
    buf = io.StringIO()
    buf.write("t,value,value_decimal\n" if with_decimal else "t,value\n")
    for t, v in f.points:
        row = f"{format_rational(t)},{format_rational(v)}"
        if with_decimal:
            row += f",{to_decimal_str(v)}"
        buf.write(row + "\n")
    return buf.getvalue()


def from_csv(text: str) -> PiecewiseLinear:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("t,value"):
        raise ParseError("missing 't,value' header")
    pts = []
    for ln in lines[1:]:
        fields = ln.split(",")
        pts.append((parse_rational(fields[0]), parse_rational(fields[1])))
    if not pts or pts[0][0] != 0:
        raise ParseError("first row must be at t = 0")
    return from_corners(pts[0][1], pts[1:])


def union_abscissas(fs: Sequence[PiecewiseLinear]) -> List[Fraction]:
    ts = {ZERO}
    for f in fs:
        ts.update(f.abscissas)
    return sorted(ts)
