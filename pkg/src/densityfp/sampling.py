"""Random weighted sequences with small rational coordinates."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, List

from .seqcore import PeriodicSequence, normalize


def _radii(pick: Callable[[int, int], int], centers: List[Fraction], den: int,
           touch: Callable[[], bool]) -> List[Fraction]:
    m = len(centers)
    if m == 1:
        cap = Fraction(1, 2)
        a_max = int(cap * den)
        return [Fraction(a_max if touch() else pick(0, a_max), den)]
    radii: List[Fraction | None] = [None] * m
    for i in range(m):
        prev_c = centers[i - 1] - 1 if i == 0 else centers[i - 1]
        next_c = centers[0] + 1 if i == m - 1 else centers[i + 1]
        cap = min(centers[i] - prev_c - (radii[i - 1] or 0),
                  next_c - centers[i] - (radii[(i + 1) % m] or 0))
        a_max = int(cap * den)  # floor, cap >= 0
        a = a_max if touch() else pick(0, a_max)
        radii[i] = Fraction(a, den)
    return radii


def random_sequence(rng: random.Random, max_m: int = 8, max_den: int = 64,
                    zero_radius_prob: float = 0.15, touch_prob: float = 0.1) -> PeriodicSequence:
    """Normalized sequence with ``m <= max_m`` and all denominators ``<= max_den``.

    Centers lie on a grid ``1/D``; radii use a second denominator, which is
    sometimes ``D`` itself so that touching intervals (zero gaps) occur.
    """
    m = rng.randint(1, max_m)
    D = rng.randint(m, max_den)
    centers = [Fraction(c, D) for c in sorted(rng.sample(range(D), m))]
    if rng.random() < zero_radius_prob:
        radii = [Fraction(0)] * m
    else:
        den = D if rng.random() < 0.5 else rng.randint(1, max_den)
        touchy = den == D and rng.random() < 0.5
        radii = _radii(rng.randint, centers, den,
                       lambda: touchy and rng.random() < touch_prob * 3)
    return normalize(PeriodicSequence.from_lists(centers, radii))


def random_rational(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int = 64) -> Fraction:
    den = rng.randint(1, max_den)
    a = rng.randint(int(lo * den), int(hi * den))
    return min(max(Fraction(a, den), lo), hi)
