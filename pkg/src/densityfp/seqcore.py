"""Weighted periodic sequences on the line.

A sequence is a finite motif of closed intervals ``[p - r, p + r]`` repeated
with a fixed period.  Everything is exact: coordinates are
:class:`fractions.Fraction` and the normal form has period 1 with centers
sorted in ``[0, 1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from .errors import EmptyMotif, InvalidSequence, OverlapError, ParseError

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def as_fraction(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings; floats are rejected."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"not a rational literal of the form a or a/b: {text!r}")
    if s.endswith("/0"):
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(s)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class PeriodicSequence:
    """Motif of ``(center, radius)`` pairs repeated with ``period``.

    Instances may be "raw" (any period, unsorted centers); call
    :func:`normalize` to obtain the canonical period-1 form that the
    density computations expect.
    """

    period: Fraction
    points: Tuple[Tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        object.__setattr__(self, "period", as_fraction(self.period))
        pts = tuple((as_fraction(c), as_fraction(r)) for c, r in self.points)
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_lists(cls, centers: Iterable[RationalLike],
                   radii: Iterable[RationalLike] | None = None,
                   period: RationalLike = 1) -> "PeriodicSequence":
        centers = [as_fraction(c) for c in centers]
        if radii is None:
            radii = [Fraction(0)] * len(centers)
        radii = [as_fraction(r) for r in radii]
        if len(radii) != len(centers):
            raise ValueError("centers and radii differ in length")
        return cls(as_fraction(period), tuple(zip(centers, radii)))

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def centers(self) -> Tuple[Fraction, ...]:
        return tuple(c for c, _ in self.points)

    @property
    def radii(self) -> Tuple[Fraction, ...]:
        return tuple(r for _, r in self.points)

    @property
    def total_length(self) -> Fraction:
        return 2 * sum(self.radii, Fraction(0))

    def is_normalized(self) -> bool:
        if self.period != 1 or not self.points:
            return False
        cs = self.centers
        return 0 <= cs[0] and cs[-1] < 1 and all(a < b for a, b in zip(cs, cs[1:]))

    def __str__(self) -> str:
        body = ", ".join(f"{c}:{r}" for c, r in self.points)
        return f"PeriodicSequence(period={self.period}; {body})"


@dataclass(frozen=True)
class GapVector:
    gaps: Tuple[Fraction, ...]
    total_length: Fraction

    def sorted(self) -> Tuple[Fraction, ...]:
        return tuple(sorted(self.gaps))


def _cyclic_gaps(centers: Sequence[Fraction], radii: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    m = len(centers)
    out = []
    for i in range(m):
        prev_c = centers[i - 1] - 1 if i == 0 else centers[i - 1]
        out.append((centers[i] - radii[i]) - (prev_c + radii[i - 1]))
    return tuple(out)


def normalize(raw: PeriodicSequence) -> PeriodicSequence:
    """Rescale to period 1, reduce centers mod 1 and sort them.

    Raises :class:`EmptyMotif` for an empty motif and :class:`OverlapError`
    when two centers coincide modulo the period or intervals overlap.
    Touching intervals (zero gaps) are allowed.
    """
    if raw.period <= 0:
        raise InvalidSequence(f"period must be positive, got {raw.period}")
    if raw.m == 0:
        raise EmptyMotif("motif has no points")
    if any(r < 0 for r in raw.radii):
        raise InvalidSequence("radii must be non-negative")
    pts = sorted(((c / raw.period) % 1, r / raw.period) for c, r in raw.points)
    for (a, _), (b, _) in zip(pts, pts[1:]):
        if a == b:
            raise OverlapError(f"two points share the center {a} modulo the period")
    centers = [c for c, _ in pts]
    radii = [r for _, r in pts]
    g = _cyclic_gaps(centers, radii)
    bad = [i + 1 for i, x in enumerate(g) if x < 0]
    if bad:
        raise OverlapError(f"intervals overlap before gap(s) {bad}")
    return PeriodicSequence(Fraction(1), tuple(pts))


def _require_normalized(S: PeriodicSequence) -> None:
    if not S.is_normalized():
        raise InvalidSequence("sequence must be normalized first")


def gaps(S: PeriodicSequence) -> GapVector:
    """Cyclic gaps ``g_i`` between interval ``i-1`` and interval ``i``.

    ``gaps[0]`` is the gap that wraps around from the last interval of the
    previous cell to the first interval.
    """
    _require_normalized(S)
    g = _cyclic_gaps(S.centers, S.radii)
    if any(x < 0 for x in g):
        raise OverlapError("negative gap")
    return GapVector(g, S.total_length)


def neighbor_radii(S: PeriodicSequence) -> PeriodicSequence:
    """Give every point half the distance to its nearest neighbor."""
    _require_normalized(S)
    if any(r != 0 for r in S.radii):
        raise InvalidSequence("neighbor radii are defined for zero-radius sequences")
    cs = S.centers
    m = len(cs)
    if m == 1:
        return PeriodicSequence(Fraction(1), ((cs[0], Fraction(1, 2)),))
    pts = []
    for i, c in enumerate(cs):
        left = c - (cs[i - 1] - 1 if i == 0 else cs[i - 1])
        right = (cs[i + 1] if i + 1 < m else cs[0] + 1) - c
        pts.append((c, min(left, right) / 2))
    return PeriodicSequence(Fraction(1), tuple(pts))


def translate(S: PeriodicSequence, d: RationalLike) -> PeriodicSequence:
    _require_normalized(S)
    d = as_fraction(d)
    return normalize(PeriodicSequence(Fraction(1), tuple((c + d, r) for c, r in S.points)))


def reflect(S: PeriodicSequence) -> PeriodicSequence:
    """Mirror image under ``t -> 1 - t``."""
    _require_normalized(S)
    return normalize(PeriodicSequence(Fraction(1), tuple((1 - c, r) for c, r in S.points)))


# -- text format -----------------------------------------------------------

def loads(text: str) -> PeriodicSequence:
    """Parse the line format ``period <q>`` followed by ``<center> <radius>`` lines.

    Returns the raw (not yet normalized) sequence.
    """
    period = None
    points = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if period is None:
            if len(fields) != 2 or fields[0] != "period":
                raise ParseError(f"line {lineno}: expected 'period <rational>'")
            period = parse_rational(fields[1])
            continue
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected '<center> <radius>'")
        points.append((parse_rational(fields[0]), parse_rational(fields[1])))
    if period is None:
        raise ParseError("missing 'period' line")
    if not points:
        raise ParseError("sequence file lists no points")
    return PeriodicSequence(period, tuple(points))


def dumps(S: PeriodicSequence) -> str:
    lines = [f"period {format_rational(S.period)}"]
    lines += [f"{format_rational(c)} {format_rational(r)}" for c, r in S.points]
    return "\n".join(lines) + "\n"


def load(path) -> PeriodicSequence:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(S: PeriodicSequence, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(S))
