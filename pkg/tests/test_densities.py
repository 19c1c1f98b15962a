import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import rationals, sequences
from densityfp import fixtures, pwl
from densityfp.densities import (densigram, fingerprint, psi, psi0, psi_via_periodicity,
                                 trapezoid1, trapezoid_k, trapezoids)
from densityfp.errors import IndexOutOfRange, IndexTooSmall, OverlapError
from densityfp.oracle import coverage
from densityfp.seqcore import PeriodicSequence, gaps, normalize, reflect, translate

HALF = F(1, 2)


def test_psi0_example(ex4):
    assert psi0(ex4).points == ((0, F(2, 3)), (F(1, 24), F(5, 12)), (F(1, 8), F(1, 12)), (F(1, 6), 0))


def test_psi0_trivial_cases():
    assert psi0(normalize(PeriodicSequence.from_lists([0]))).points == ((0, 1), (HALF, 0))
    full = normalize(PeriodicSequence.from_lists([0, HALF], [F(1, 4), F(1, 4)]))
    assert psi0(full) == pwl.zero()


def test_psi0_propagates_overlap():
    with pytest.raises(OverlapError):
        psi0(PeriodicSequence(F(1), ((F(0), F(1, 3)), (F(1, 2), F(1, 3)))))


def test_trapezoid1_red(ex4):
    tr = trapezoid1(ex4, 1)
    # formula order keeps the swapped middle pair
    assert tr.corners == ((0, F(1, 6)), (F(1, 6), F(5, 12)), (F(1, 8), F(5, 12)), (F(3, 8), 0))
    assert tr.as_pwl().points == ((0, F(1, 6)), (F(1, 8), F(5, 12)), (F(1, 6), F(5, 12)), (F(3, 8), 0))


def test_trapezoid1_green(ex4):
    assert trapezoid1(ex4, 2).as_pwl().points == (
        (0, 0), (F(1, 24), F(1, 12)), (F(1, 8), F(1, 12)), (F(1, 6), 0))


def test_trapezoid1_blue(ex4):
    tr = trapezoid1(ex4, 3)
    assert tr.corners == ((0, F(1, 6)), (F(1, 24), F(1, 4)), (F(1, 6), F(1, 4)), (F(7, 24), 0))
    assert tr.start == F(1, 6)


def test_trapezoid_index_errors(ex4):
    for bad in (0, 4):
        with pytest.raises(IndexOutOfRange):
            trapezoid1(ex4, bad)
        with pytest.raises(IndexOutOfRange):
            trapezoid_k(ex4, 2, bad)


@pytest.mark.parametrize("i,corners", [
    (2, [(F(1, 24), 0), (F(1, 6), F(1, 4)), (F(7, 24), F(1, 4)), (F(5, 12), 0)]),
    (3, [(F(1, 6), 0), (F(7, 24), F(1, 4)), (F(3, 8), F(1, 4)), (F(1, 2), 0)]),
    (1, [(F(1, 8), 0), (F(1, 6), F(1, 12)), (F(3, 8), F(1, 12)), (F(5, 12), 0)]),
])
def test_trapezoid_k2(ex4, i, corners):
    tr = trapezoid_k(ex4, 2, i)
    assert list(tr.corners) == corners
    assert tr.onset <= tr.rise_end <= tr.fall_start <= tr.end
    assert tr.height == 2 * (tr.rise_end - tr.onset) == 2 * (tr.end - tr.fall_start)


def test_trapezoid_k2_generating_tuples(ex4):
    assert trapezoid_k(ex4, 2, 2).key == (F(1, 4), F(1, 12), F(1, 2))
    assert trapezoid_k(ex4, 2, 3).key == (F(1, 4), F(1, 3), F(5, 12))
    assert trapezoid_k(ex4, 2, 1).key == (F(1, 12), F(1, 4), F(1, 2))


def test_psi2_is_sum_of_window_trapezoids(ex4):
    parts = [trapezoid_k(ex4, 2, i).as_pwl() for i in (2, 3, 1)]
    assert psi(ex4, 2) == pwl.pwl_sum(parts)


def test_psi_periodicity_values(ex4):
    assert psi(ex4, 3)(HALF) == F(2, 3) == psi0(ex4)(0)
    assert psi(ex4, 6)(1) == F(2, 3)
    assert psi(ex4, 4)(HALF) == F(1, 3) == psi(ex4, 1)(0)


def test_psi_via_periodicity(ex4):
    f = psi_via_periodicity(ex4, 3)
    assert f(HALF + F(1, 24)) == F(5, 12)
    assert f(HALF) == 1 - gaps(ex4).total_length
    assert psi_via_periodicity(ex4, 6)(1) == psi0(ex4)(0)
    assert f == psi(ex4, 3)
    with pytest.raises(IndexTooSmall):
        psi_via_periodicity(ex4, 2)


def test_fingerprint(ex4):
    fp = fingerprint(ex4, 9)
    assert len(fp.functions) == 10
    assert fp.functions[2] == psi(ex4, 2)
    assert fingerprint(ex4, 0).functions == (psi0(ex4),)
    assert fingerprint(ex4).depth == 3
    # values past the stored depth come from the half-shift rule
    short = fingerprint(ex4)
    assert short.value(7, F(3, 4)) == psi(ex4, 7)(F(3, 4))
    assert short.value(5, F(1, 4)) == psi(ex4, 5)(F(1, 4))


def test_fingerprint_s15_q15_zero_radii():
    S, Q = normalize(fixtures.s15()), normalize(fixtures.q15())
    assert fingerprint(S, 9).functions == fingerprint(Q, 9).functions


def test_densigram(ex4):
    fp = fingerprint(ex4, 5)
    sums = densigram(fp)
    assert sums[0] == fp.functions[1]
    assert len(sums) == 5
    prof = coverage(ex4, 0)
    assert sums[2](0) == F(1, 3) == 1 - prof[0] == prof[1]
    for t in pwl.union_abscissas(sums):
        vals = [f(t) for f in sums]
        assert vals == sorted(vals)
    with pytest.raises(ValueError):
        densigram(fingerprint(ex4, 0))


def test_radii_break_symmetry(ex4):
    f1, f2 = psi(ex4, 1), psi(ex4, 2)
    assert any(f1(t) != f2(HALF - t) for t in [F(j, 48) for j in range(25)])


# -- properties ----------------------------------------------------------------

def k_bound(m, t):
    return m * (math.ceil(2 * t) + 1)


@given(sequences(), rationals(0, 2))
def test_partition_of_unity(S, t):
    fp = fingerprint(S, k_bound(S.m, 2))
    ts = {t} | set(pwl.union_abscissas(fp.functions[:2 * S.m + 1]))
    for s in ts:
        if s > 2:
            continue
        assert sum(fp.psi(k)(s) for k in range(k_bound(S.m, s) + 1)) == 1


@given(sequences(), st.integers(0, 6))
def test_periodicity(S, k):
    f, g = psi(S, k), psi(S, k + S.m)
    for t in pwl.union_abscissas([f, g]) + [F(3)]:
        assert g(t + HALF) == f(t)


@given(sequences(), rationals(-3, 3))
def test_isometry_invariance(S, d):
    for T in (translate(S, d), reflect(S)):
        for k in range(S.m + 2):
            assert psi(T, k) == psi(S, k)


def _from_gaps(gs, radii):
    """Consecutive intervals with prescribed gaps (gap i sits before interval i)."""
    pts, x = [], F(0)
    for g, r in zip(gs, radii):
        x += g + r
        pts.append((x, r))
        x += r
    return normalize(PeriodicSequence(F(1), tuple(pts)))


@given(sequences(), st.randoms(use_true_random=False))
def test_psi0_depends_on_gap_multiset(S, rnd):
    gs = list(gaps(S).gaps)
    r = S.radii[0]
    base = _from_gaps(gs, [r] * S.m) if all(x == r for x in S.radii) else None
    rnd.shuffle(gs)
    # equal radii: any order of the gaps gives the same psi_0
    same_r = [F(1, 2) * gaps(S).total_length / S.m] * S.m
    shuffled = _from_gaps(gs, same_r)
    assert psi0(shuffled) == psi0(_from_gaps(list(gaps(S).gaps), same_r))
    if base is not None:
        assert psi0(base) == psi0(S)


@given(st.lists(sequences(max_m=5, max_den=12), min_size=2, max_size=4))
def test_eta1_determined_by_radius_and_gap_pair(seqs):
    by_key = {}
    for S in seqs:
        for tr in trapezoids(S, 1):
            gi, r, gn = tr.key
            by_key.setdefault((r, min(gi, gn), max(gi, gn)), set()).add(tr.as_pwl())
    assert all(len(v) == 1 for v in by_key.values())


@given(sequences(), st.integers(1, 12))
def test_corner_count_bounds(S, k):
    assert len(psi0(S).points) <= S.m + 1
    assert len(psi(S, k).corners) <= 4 * S.m


@given(sequences(), st.data())
def test_oracle_equivalence(S, data):
    k = data.draw(st.integers(0, 2 * S.m))
    t = data.draw(rationals(0, 2))
    f = psi(S, k)
    for s in [t] + [c for c in f.abscissas if c <= 3][:6]:
        assert f(s) == coverage(S, s)[k]


@given(sequences(zero_radii=True), rationals(0, HALF))
def test_zero_radius_symmetry(S, t):
    for k in range(S.m // 2 + 1):
        assert psi(S, S.m - k)(HALF - t) == psi(S, k)(t)


def test_large_k_wraps_period_many_times(ex4):
    # windows spanning several periods; checked against the sweep
    for k in (10, 17):
        f = psi(ex4, k)
        for t in f.abscissas:
            assert f(t) == coverage(ex4, t)[k]
