"""Brute-force k-fold coverage by sweeping interval endpoints.

This module deliberately shares nothing with :mod:`densityfp.densities`
beyond the sequence type: it unrolls the grown intervals around the unit
cell and counts coverage directly.  It is the ground truth for the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from .errors import NegativeArgument
from .pwl import PiecewiseLinear, evaluate
from .seqcore import PeriodicSequence, RationalLike, as_fraction


@dataclass(frozen=True)
class CoverageProfile:
    t: Fraction
    lengths: Dict[int, Fraction] = field(default_factory=dict)

    def __getitem__(self, k: int) -> Fraction:
        return self.lengths.get(k, Fraction(0))

    @property
    def max_fold(self) -> int:
        return max((k for k, v in self.lengths.items() if v), default=0)


def coverage(S: PeriodicSequence, t: RationalLike) -> CoverageProfile:
    """Exact lengths of the regions of ``[0, 1]`` covered exactly ``k`` times."""
    t = as_fraction(t)
    if t < 0:
        raise NegativeArgument(f"t must be >= 0, got {t}")
    # integer arithmetic over a common denominator keeps the sweep cheap
    values = [t] + [x for pt in S.points for x in pt]
    D = math.lcm(*(v.denominator for v in values))
    T = t.numerator * (D // t.denominator)
    pts = [(c.numerator * (D // c.denominator), r.numerator * (D // r.denominator))
           for c, r in S.points]

    reach = math.ceil(2 * t) + 1
    delta: Dict[int, int] = {0: 0, D: 0}
    for z in range(-reach, reach + 1):
        for c, r in pts:
            lo = c + z * D - r - T
            hi = c + z * D + r + T
            if hi <= lo or hi <= 0 or lo >= D:
                continue
            delta[lo] = delta.get(lo, 0) + 1
            delta[hi] = delta.get(hi, 0) - 1

    acc: Dict[int, int] = {}
    count = 0
    xs = sorted(delta)
    for a, b in zip(xs, xs[1:]):
        count += delta[a]
        lo, hi = max(a, 0), min(b, D)
        if hi > lo:
            acc[count] = acc.get(count, 0) + (hi - lo)
    return CoverageProfile(t, {k: Fraction(v, D) for k, v in sorted(acc.items())})


def sample_check(S: PeriodicSequence, f: PiecewiseLinear, k: int,
                 sample_points: Iterable[RationalLike]) -> List[Tuple[Fraction, Fraction, Fraction]]:
    """Compare a claimed ``psi_k`` with the oracle; returns ``(t, claimed, actual)`` mismatches."""
    bad = []
    for t in sample_points:
        t = as_fraction(t)
        claimed = evaluate(f, t)
        actual = coverage(S, t)[k]
        if claimed != actual:
            bad.append((t, claimed, actual))
    return bad
