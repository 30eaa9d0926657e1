from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from midspec.core import (DegreeMismatch, Eigenvalue, Equal, FirstDifference, OddMultiplicity,
                          SpectrumError, SpectrumSegment, compare_segments, double_multiplicities,
                          eigenvalue_compare, halve_multiplicities, pi_interval, sort_eigenvalues)

small_fracs = st.fractions(min_value=-200, max_value=200, max_denominator=50)
nonneg_fracs = st.fractions(min_value=0, max_value=60, max_denominator=12)


@st.composite
def eigenvalues(draw):
    return Eigenvalue(draw(nonneg_fracs), draw(st.fractions(min_value=0, max_value=2, max_denominator=12)))


@st.composite
def segments(draw, degree=1):
    evs = draw(st.lists(eigenvalues(), max_size=8, unique=True))
    cutoff = Eigenvalue(Fraction(61), Fraction(2))
    counts = {e: draw(st.integers(1, 9)) for e in evs}
    return SpectrumSegment.from_counts(counts, cutoff, degree, "gen")


def test_pi_interval_brackets_pi():
    lo, hi = pi_interval(12)
    assert lo < Fraction(314159265358979, 10 ** 14) + Fraction(1, 10 ** 13)
    assert float(lo) <= 3.141592653589793 <= float(hi)
    assert hi - lo < Fraction(1, 10 ** 12)


def test_compare_examples():
    assert eigenvalue_compare(Eigenvalue(0, 1), Eigenvalue(39, 0)) == 1
    assert eigenvalue_compare(Eigenvalue(5, 0), Eigenvalue(5, 0)) == 0
    assert eigenvalue_compare(Eigenvalue(0, Fraction(1, 4)), Eigenvalue(0, 1)) == -1
    # 4 pi^2 = 39.478...; 40 is above it
    assert eigenvalue_compare(Eigenvalue(0, 1), Eigenvalue(40, 0)) == -1


def test_close_values_need_refinement():
    # 4 pi^2 vs 39.4784176 (agree to 7 digits)
    near = Eigenvalue(Fraction(394784176, 10 ** 7), 0)
    assert eigenvalue_compare(Eigenvalue(0, 1), near) == 1
    near2 = Eigenvalue(Fraction(394784177, 10 ** 7), 0)
    assert eigenvalue_compare(Eigenvalue(0, 1), near2) == -1


@given(small_fracs, small_fracs, small_fracs, small_fracs)
def test_compare_matches_float_order(p1, q1, p2, q2):
    a, b = Eigenvalue(p1, q1), Eigenvalue(p2, q2)
    c = eigenvalue_compare(a, b)
    assert c == -eigenvalue_compare(b, a)
    fa, fb = float(a), float(b)
    if abs(fa - fb) > 1e-6:
        assert c == (1 if fa > fb else -1)
    if (p1, q1) == (p2, q2):
        assert c == 0
    else:
        assert c != 0


@given(st.lists(st.tuples(small_fracs, small_fracs), min_size=3, max_size=3))
def test_compare_transitive(pairs):
    a, b, c = (Eigenvalue(*p) for p in pairs)
    if eigenvalue_compare(a, b) <= 0 and eigenvalue_compare(b, c) <= 0:
        assert eigenvalue_compare(a, c) <= 0


@given(st.lists(eigenvalues(), max_size=12))
def test_sort_is_consistent(evs):
    out = sort_eigenvalues(evs)
    assert all(eigenvalue_compare(x, y) <= 0 for x, y in zip(out, out[1:]))


def test_parse_and_str():
    assert Eigenvalue.parse("50xPI2") == Eigenvalue.flat(50)
    assert Eigenvalue.parse("1/4xPI2") == Eigenvalue.flat(Fraction(1, 4))
    assert Eigenvalue.parse("60") == Eigenvalue.rational(60)
    assert str(Eigenvalue.flat(2)) == "2*4pi^2"


def test_segment_validation():
    c = Eigenvalue.flat(2)
    with pytest.raises(SpectrumError):
        SpectrumSegment(((Eigenvalue.flat(1), 2), (Eigenvalue.flat(1), 2)), c, 1)
    with pytest.raises(SpectrumError):
        SpectrumSegment(((Eigenvalue.flat(3), 2),), c, 1)
    with pytest.raises(SpectrumError):
        SpectrumSegment(((Eigenvalue.flat(1), 0),), c, 1)


def test_halve_examples():
    c = Eigenvalue.flat(1)
    s = SpectrumSegment(((Eigenvalue(), 2), (Eigenvalue.flat(1), 8)), c, 1)
    h = halve_multiplicities(s)
    assert h.entries == ((Eigenvalue(), 1), (Eigenvalue.flat(1), 4))
    assert (h.cutoff, h.degree) == (c, 1)
    odd = SpectrumSegment(((Eigenvalue.flat(1), 7),), c, 1)
    with pytest.raises(OddMultiplicity) as err:
        halve_multiplicities(odd)
    assert err.value.eigenvalue == Eigenvalue.flat(1)


@given(segments())
def test_halve_inverts_double(s):
    assert halve_multiplicities(double_multiplicities(s)) == s


@given(segments())
def test_compare_reflexive(s):
    assert isinstance(compare_segments(s, s), Equal)


@given(segments(), segments())
def test_compare_symmetric(a, b):
    x, y = compare_segments(a, b), compare_segments(b, a)
    if isinstance(x, Equal):
        assert isinstance(y, Equal)
    else:
        assert isinstance(y, FirstDifference)
        assert (x.at, x.mult_left, x.mult_right) == (y.at, y.mult_right, y.mult_left)
        assert x.mult_left != x.mult_right


def test_compare_exclude_zero_and_degree():
    c = Eigenvalue.flat(1)
    a = SpectrumSegment(((Eigenvalue(), 1), (Eigenvalue.flat(1), 4)), c, 1)
    b = SpectrumSegment(((Eigenvalue.flat(1), 4),), c, 1)
    out = compare_segments(a, b)
    assert isinstance(out, FirstDifference) and out.at.is_zero()
    assert (out.mult_left, out.mult_right) == (1, 0)
    assert isinstance(compare_segments(a, b, exclude_zero=True), Equal)
    with pytest.raises(DegreeMismatch):
        compare_segments(a, SpectrumSegment((), c, 0))


def test_compare_uses_smaller_cutoff():
    a = SpectrumSegment(((Eigenvalue.flat(1), 4), (Eigenvalue.flat(2), 4)), Eigenvalue.flat(2), 1)
    b = SpectrumSegment(((Eigenvalue.flat(1), 4),), Eigenvalue.flat(1), 1)
    out = compare_segments(a, b)
    assert isinstance(out, Equal) and out.up_to == Eigenvalue.flat(1)


@given(segments())
@settings(max_examples=50)
def test_json_round_trip(s):
    d = s.to_json()
    assert d["complete"] is True
    assert all(set(r) == {"plain", "pi2", "mult"} for r in d["entries"])
    assert SpectrumSegment.from_json(d) == s
