import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from midspec.core import BadDegree, Eigenvalue, Equal, FirstDifference, SpectrumSegment
from midspec.flat import FlatQuotient, Lattice, p_spectrum, square_family
from midspec.heat import (NonPositiveTime, UnsupportedSpace, c_coefficient, heat_curve_csv,
                          sphere_volume, truncated_heat_trace, volume_term,
                          zero_spectrum_first_difference)
from midspec.sphere import RoundSphere, SphericalQuotient


def test_c_examples():
    assert c_coefficient(2, 1) == 0
    assert c_coefficient(3, 0) == 1
    assert all(c_coefficient(2 * m, m) == 0 for m in range(1, 51))
    with pytest.raises(BadDegree):
        c_coefficient(2, 3)


@pytest.mark.parametrize("n", range(1, 101))
def test_c_vanishes_only_in_middle_degree(n):
    for p in range(n + 1):
        assert (c_coefficient(n, p) == 0) == (n == 2 * p)


@pytest.mark.parametrize("n", range(2, 101))
def test_c_alternating_sum_telescopes(n):
    assert sum((-1) ** p * c_coefficient(n, p) for p in range(n + 1)) == 0


def test_flat_volume_terms():
    t2 = volume_term(FlatQuotient(Lattice.cubic(2), None), 0)
    assert float(t2.a0) == 1
    pillow = volume_term(square_family("pillow"), 0)
    assert float(pillow.volume) == 0.5 and pillow.boundary_volume is None
    cyl = volume_term(square_family("cylinder"), 1)
    assert float(cyl.volume) == 0.5
    assert float(cyl.boundary_volume) == pytest.approx(2.0)
    assert cyl.a_half_coeff == 0
    assert float(cyl.a0) == 1.0          # binom(2, 1) * 1/2
    mob = volume_term(square_family("mobius"), 1)
    assert float(mob.boundary_volume) == pytest.approx(math.sqrt(2))


@pytest.mark.parametrize("n", range(1, 9))
def test_sphere_volume_against_gamma(n):
    for r2 in (Fraction(1), Fraction(9, 4)):
        expected = 2 * math.pi ** ((n + 1) / 2) / math.gamma((n + 1) / 2) * float(r2) ** (n / 2)
        assert float(sphere_volume(n, r2)) == pytest.approx(expected, rel=1e-12)


def test_hemisphere_volume_terms():
    hemi = volume_term(SphericalQuotient(RoundSphere(2), (1, 1, -1)), 1)
    assert float(hemi.volume) == pytest.approx(2 * math.pi)
    assert float(hemi.boundary_volume) == pytest.approx(2 * math.pi)
    rp2 = volume_term(SphericalQuotient(RoundSphere(2), (-1, -1, -1)), 1)
    assert rp2.boundary_volume is None


def test_unsupported_space():
    with pytest.raises(UnsupportedSpace):
        volume_term("torus", 0)


def test_heat_trace_examples():
    c = Eigenvalue.flat(1)
    assert truncated_heat_trace(SpectrumSegment((), c, 0), 1.0)[0] == 0
    one = SpectrumSegment(((Eigenvalue(), 1),), c, 0)
    assert truncated_heat_trace(one, 0.3)[0] == 1
    spec0 = p_spectrum(FlatQuotient(Lattice.cubic(2), None), 0, Eigenvalue.flat(50))
    value, note = truncated_heat_trace(spec0, 1.0)
    assert value == pytest.approx(1 + 4 * math.exp(-4 * math.pi ** 2), rel=1e-15, abs=1e-15)
    # e^(-4 pi^2) is about 7e-18, so the partial sum rounds to 1 in binary64
    assert value == 1.0
    assert "exceeds" in note
    with pytest.raises(NonPositiveTime):
        truncated_heat_trace(one, 0.0)


@given(st.floats(0.001, 5.0), st.floats(0.001, 5.0))
def test_heat_trace_monotone_and_bounded(t1, t2):
    seg = p_spectrum(square_family("klein"), 1, Eigenvalue.flat(6))
    total = sum(m for _, m in seg.entries)
    a, _ = truncated_heat_trace(seg, min(t1, t2))
    b, _ = truncated_heat_trace(seg, max(t1, t2))
    assert b <= a <= total


def test_heat_curve_csv():
    seg = SpectrumSegment(((Eigenvalue(), 1),), Eigenvalue.flat(1), 0)
    assert heat_curve_csv(seg, [0.5, 1.0]).splitlines() == ["t,value", "0.5,1.0", "1.0,1.0"]


def test_zero_spectrum_examples():
    c = Eigenvalue.flat(2)
    out = zero_spectrum_first_difference(square_family("cylinder"), square_family("klein"), c)
    assert isinstance(out, FirstDifference)
    assert (out.at, out.mult_left, out.mult_right) == (Eigenvalue.flat(1), 3, 1)
    out = zero_spectrum_first_difference(square_family("mobius"), square_family("pillow"), c)
    assert (out.at, out.mult_left, out.mult_right) == (Eigenvalue.flat(2), 3, 2)
    assert isinstance(zero_spectrum_first_difference(square_family("klein"), square_family("klein"), c),
                      Equal)


def test_all_four_quotients_pairwise_distinguished():
    c = Eigenvalue.flat(2)
    kinds = ("cylinder", "klein", "mobius", "pillow")
    for a, b in itertools.combinations(kinds, 2):
        out = zero_spectrum_first_difference(square_family(a), square_family(b), c)
        assert isinstance(out, FirstDifference), (a, b)
