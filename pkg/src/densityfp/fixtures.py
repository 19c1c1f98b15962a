"""Built-in corpus of sequences used by the CLI ``demo`` command and the tests."""

from __future__ import annotations

from fractions import Fraction as F
from typing import Callable, Dict

from .seqcore import PeriodicSequence


def example4() -> PeriodicSequence:
    return PeriodicSequence.from_lists([0, F(1, 3), F(1, 2)], [F(1, 12), 0, F(1, 12)])


def example4_mirror() -> PeriodicSequence:
    return PeriodicSequence.from_lists([0, F(1, 2), F(2, 3)], [F(1, 12), F(1, 12), 0])


def s15() -> PeriodicSequence:
    return PeriodicSequence.from_lists([0, 1, 3, 4, 5, 7, 9, 10, 12], period=15)


def q15() -> PeriodicSequence:
    return PeriodicSequence.from_lists([0, 1, 3, 4, 6, 8, 9, 12, 14], period=15)


def multimax2() -> PeriodicSequence:
    return PeriodicSequence.from_lists([0, F(1, 8), F(1, 4), F(3, 4)])


def multimax3() -> PeriodicSequence:
    return PeriodicSequence.from_lists([0, F(1, 81), F(1, 27), F(1, 9), F(1, 3)])


def multimax5() -> PeriodicSequence:
    return PeriodicSequence.from_lists([0, F(1, 64), F(1, 16), F(1, 8), F(1, 4), F(3, 4)])


def smi() -> PeriodicSequence:
    # S_{6,1} before scaling: {0, 2, 3, 5, 6, 7} + 8Z
    return PeriodicSequence.from_lists([0, 2, 3, 5, 6, 7], period=8)


FIXTURES: Dict[str, Callable[[], PeriodicSequence]] = {
    "example4": example4,
    "example4-mirror": example4_mirror,
    "s15": s15,
    "q15": q15,
    "multimax2": multimax2,
    "multimax3": multimax3,
    "multimax5": multimax5,
    "smi": smi,
}
