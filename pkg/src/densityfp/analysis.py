"""Fingerprint comparison and exact isometry tests."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import pwl
from .densities import psi
from .errors import IndexOutOfRange
from .seqcore import PeriodicSequence, format_rational, normalize, reflect, translate

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComparisonReport:
    equal: bool
    depth: int
    first_differing_k: Optional[int] = None
    witness_t: Optional[Fraction] = None
    value_s: Optional[Fraction] = None
    value_q: Optional[Fraction] = None

    def to_text(self) -> str:
        if self.equal:
            return f"fingerprints equal (psi_0 .. psi_{self.depth} compared)\n"
        return (
            "fingerprints differ\n"
            f"  first differing k: {self.first_differing_k}\n"
            f"  witness t: {format_rational(self.witness_t)}\n"
            f"  psi_k[S](t) = {format_rational(self.value_s)}\n"
            f"  psi_k[Q](t) = {format_rational(self.value_q)}\n"
        )

    def to_csv(self) -> str:
        out = "k,witnessT,valueS,valueQ\n"
        if not self.equal:
            out += ",".join([str(self.first_differing_k), format_rational(self.witness_t),
                             format_rational(self.value_s), format_rational(self.value_q)]) + "\n"
        return out


def _witness(f: pwl.PiecewiseLinear, g: pwl.PiecewiseLinear) -> Fraction:
    ts = pwl.union_abscissas([f, g])
    for t in ts + [ts[-1] + 1]:
        if f(t) != g(t):
            return t
    raise AssertionError("canonical forms differ but values agree everywhere")


def fingerprints_equal(S: PeriodicSequence, Q: PeriodicSequence) -> ComparisonReport:
    """Compare ``psi_k`` of both sequences exactly for ``k = 0 .. max(m_S, m_Q)``."""
    depth = max(S.m, Q.m)
    for k in range(depth + 1):
        f, g = psi(S, k), psi(Q, k)
        if pwl.equal(f, g):
            continue
        if k > depth // 2:
            log.info("fingerprints first differ at k=%d, above floor(m/2)=%d", k, depth // 2)
        t = _witness(f, g)
        return ComparisonReport(False, depth, k, t, f(t), g(t))
    return ComparisonReport(True, depth)


def isometric(S: PeriodicSequence, Q: PeriodicSequence) -> bool:
    """Whether ``Q`` is a translate of ``S`` or of its mirror image."""
    if S.m != Q.m:
        return False
    for base in (S, reflect(S)):
        p1 = base.centers[0]
        for q in Q.centers:
            if translate(base, q - p1).points == Q.points:
                return True
    return False


def smi_family(m: int, i: int) -> PeriodicSequence:
    """Zero-radius sequence ``{0, 2, .., i+2, i+4, .., m+2} + (m+2)Z`` scaled to period 1."""
    if not 1 <= i <= m - 3:
        raise IndexOutOfRange(f"need 1 <= i <= m-3, got m={m}, i={i}")
    period = m + 2
    motif = {0, *range(2, i + 3), *range(i + 4, m + 3)}
    centers = sorted({c % period for c in motif})
    return normalize(PeriodicSequence.from_lists(centers, period=period))
