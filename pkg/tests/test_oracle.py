import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import rationals, sequences
from densityfp.densities import psi, psi0
from densityfp.errors import NegativeArgument
from densityfp.oracle import coverage, sample_check
from densityfp.pwl import from_corners
from densityfp.seqcore import PeriodicSequence, normalize, reflect, translate


def test_coverage_example4_at_zero(ex4):
    assert coverage(ex4, 0).lengths == {0: F(2, 3), 1: F(1, 3)}


def test_coverage_example4_at_half(ex4):
    prof = coverage(ex4, F(1, 2))
    assert prof[3] == F(2, 3) and prof[4] == F(1, 3)
    assert prof.max_fold == 4


def test_coverage_single_point():
    S = normalize(PeriodicSequence.from_lists([0]))
    assert coverage(S, F(3, 4)).lengths == {1: F(1, 2), 2: F(1, 2)}


def test_coverage_rejects_negative_t(ex4):
    with pytest.raises(NegativeArgument):
        coverage(ex4, F(-1, 3))


def test_sample_check_psi0(ex4):
    f = psi0(ex4)
    ts = list(f.abscissas) + [F(1, 48), F(1, 12), F(7, 48), 1]
    assert sample_check(ex4, f, 0, ts) == []


def test_sample_check_psi2(ex4):
    ts = [F(1, 24), F(1, 6), F(7, 24), F(5, 12), 1]
    assert sample_check(ex4, psi(ex4, 2), 2, ts) == []


def test_sample_check_detects_error(ex4):
    f = psi0(ex4)
    wrong = from_corners(f.start, [(F(1, 24), F(5, 12) + F(1, 100))] + list(f.corners[1:]))
    bad = sample_check(ex4, wrong, 0, f.abscissas)
    assert bad == [(F(1, 24), F(5, 12) + F(1, 100), F(5, 12))]


@given(sequences(), rationals(0, 3))
def test_partition_and_fold_bound(S, t):
    prof = coverage(S, t)
    assert sum(prof.lengths.values()) == 1
    assert all(v >= 0 for v in prof.lengths.values())
    assert prof.max_fold <= S.m * (math.ceil(2 * t) + 1)


@given(sequences(), st.lists(rationals(0, 1), min_size=2, max_size=8))
def test_empty_space_shrinks(S, ts):
    ts = sorted(ts)
    vals = [coverage(S, t)[0] for t in ts]
    assert all(a >= b for a, b in zip(vals, vals[1:]))


@given(sequences(), rationals(-2, 2), rationals(0, 2))
def test_isometry_invariance(S, d, t):
    prof = coverage(S, t)
    assert coverage(translate(S, d), t) == prof
    assert coverage(reflect(S), t) == prof


def test_brute_force_agrees_with_pointwise_count(ex4):
    # crude cross-check of the sweep: count covering intervals at many sample points
    t = F(5, 24)
    prof = coverage(ex4, t)
    N = 480
    counts = {}
    for j in range(N):
        x = F(2 * j + 1, 2 * N)
        c = sum(1 for z in range(-3, 4) for p, r in ex4.points
                if p + z - r - t <= x <= p + z + r + t)
        counts[c] = counts.get(c, 0) + F(1, N)
    # every breakpoint of the profile is a multiple of 1/48, so midpoint sampling is exact
    assert counts == {k: v for k, v in prof.lengths.items() if v}
