from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from densityfp import fixtures
from densityfp.sampling import _radii
from densityfp.seqcore import PeriodicSequence, normalize

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def sequences(draw, max_m=6, max_den=48, zero_radii=None):
    """Normalized weighted sequences with small denominators."""
    m = draw(st.integers(1, max_m))
    D = draw(st.integers(m, max_den))
    cs = draw(st.lists(st.integers(0, D - 1), min_size=m, max_size=m, unique=True))
    centers = [Fraction(c, D) for c in sorted(cs)]
    if zero_radii is None:
        zero_radii = draw(st.booleans()) and draw(st.booleans())
    if zero_radii:
        radii = [Fraction(0)] * m
    else:
        den = draw(st.sampled_from([D, 2 * D, 12, 64]))
        radii = _radii(lambda a, b: draw(st.integers(a, b)), centers, den,
                       lambda: draw(st.booleans()) and draw(st.booleans()))
    return normalize(PeriodicSequence.from_lists(centers, radii))


def rationals(lo=0, hi=2, max_den=64):
    return st.fractions(min_value=Fraction(lo), max_value=Fraction(hi), max_denominator=max_den)


@pytest.fixture
def ex4():
    return normalize(fixtures.example4())


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
