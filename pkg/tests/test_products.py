from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from midspec.core import Eigenvalue, Equal, compare_segments
from midspec.flat import (FlatQuotient, Lattice, p_spectrum, product_with_torus, square_family,
                          torus_p_spectrum)
from midspec.products import (IncompleteFactor, graded_flat, graded_product, graded_projective,
                              graded_sphere, kunneth_p_spectrum, product_shortest_length)
from midspec.sphere import Length, RoundSphere, shortest_closed_geodesic

F = Fraction


def torus(n, *diag):
    lat = Lattice.diagonal(*diag) if diag else Lattice.cubic(n)
    return FlatQuotient(lat, None, f"T{n}")


def test_torus_product_is_four_torus():
    c = Eigenvalue.flat(30)
    t2 = graded_flat(torus(2), c)
    for p in range(5):
        prod = kunneth_p_spectrum(t2, t2, p, c)
        direct = torus_p_spectrum(Lattice.cubic(4), p, c)
        assert prod.entries == direct.entries


def test_rectangular_tori_product():
    c = Eigenvalue.flat(12)
    a = graded_flat(torus(1, 4), c)
    b = graded_flat(torus(2, 1, F(9, 4)), c)
    for p in range(4):
        prod = kunneth_p_spectrum(a, b, p, c)
        direct = torus_p_spectrum(Lattice.diagonal(4, 1, F(9, 4)), p, c)
        assert prod.entries == direct.entries


def test_degree_zero_only_uses_functions():
    c = Eigenvalue.rational(30)
    s2 = graded_sphere(RoundSphere(2), c)
    prod = kunneth_p_spectrum(s2, s2, 0, c)
    expected: dict = {}
    for lam, a in s2.segments[0].entries:
        for mu, b in s2.segments[0].entries:
            if not c < lam + mu:
                expected[lam + mu] = expected.get(lam + mu, 0) + a * b
    assert dict(prod.entries) == expected


def test_klein_and_cylinder_times_torus():
    c = Eigenvalue.flat(10)
    t2 = graded_flat(torus(2), c)
    k = kunneth_p_spectrum(graded_flat(square_family("klein"), c), t2, 2, c)
    y = kunneth_p_spectrum(graded_flat(square_family("cylinder"), c), t2, 2, c)
    assert isinstance(compare_segments(k, y), Equal)
    # the Kunneth product agrees with the quotient of T^4 by the extended involution
    direct = p_spectrum(product_with_torus(square_family("klein"), 2), 2, c)
    assert direct.entries == k.entries


def test_commutativity_and_associativity():
    c = Eigenvalue.rational(40)
    s1, s2, p2 = (graded_sphere(RoundSphere(1), c), graded_sphere(RoundSphere(2), c),
                  graded_projective(RoundSphere(2), c))
    for p in range(4):
        assert kunneth_p_spectrum(s2, s1, p, c).entries == kunneth_p_spectrum(s1, s2, p, c).entries
    left = graded_product(graded_product(s1, s2, c), p2, c)
    right = graded_product(s1, graded_product(s2, p2, c), c)
    for p in range(6):
        assert left.segments[p].entries == right.segments[p].entries


def test_euler_characteristic():
    c = Eigenvalue.rational(10)
    s2, p2, s3 = (graded_sphere(RoundSphere(2), c), graded_projective(RoundSphere(2), c),
                  graded_sphere(RoundSphere(3), c))
    for a in (s2, p2, s3):
        for b in (s2, p2, s3):
            assert graded_product(a, b, c).euler_characteristic() == \
                a.euler_characteristic() * b.euler_characteristic()
    cf = Eigenvalue.flat(2)
    k = graded_flat(square_family("klein"), cf)
    assert graded_product(k, graded_flat(torus(2), cf), cf).euler_characteristic() == 0


@given(st.integers(0, 3), st.fractions(min_value=0, max_value=2, max_denominator=4),
       st.integers(0, 70))
@settings(max_examples=25, deadline=None)
def test_mixed_product_complete_below_cutoff(p, pi2, plain):
    cut = Eigenvalue(F(plain), pi2)
    big_flat = graded_flat(torus(1), Eigenvalue.flat(4))
    big_sphere = graded_sphere(RoundSphere(2), Eigenvalue.rational(200))
    if cut.pi2 > 4 or cut.plain > 200:
        return
    seg = kunneth_p_spectrum(big_flat, big_sphere, p, cut)
    assert all(not cut < ev for ev, _ in seg.entries)
    expected: dict = {}
    for i in range(max(0, p - 2), min(1, p) + 1):
        for lam, a in big_flat.segments[i].entries:
            for mu, b in big_sphere.segments[p - i].entries:
                if not cut < lam + mu:
                    expected[lam + mu] = expected.get(lam + mu, 0) + a * b
    assert dict(seg.entries) == expected


def test_incomplete_factor():
    t2 = graded_flat(torus(2), Eigenvalue.flat(1))
    with pytest.raises(IncompleteFactor):
        kunneth_p_spectrum(t2, t2, 2, Eigenvalue.flat(2))


def test_shortest_lengths():
    r2, s2 = F(1), F(9, 4)
    a = product_shortest_length([shortest_closed_geodesic("sphere", r2), shortest_closed_geodesic("projective", s2)])
    b = product_shortest_length([shortest_closed_geodesic("projective", r2), shortest_closed_geodesic("sphere", s2)])
    assert a != b
    one = shortest_closed_geodesic("sphere", 1)
    assert product_shortest_length([one]) == one
    same = [shortest_closed_geodesic("sphere", 1), shortest_closed_geodesic("projective", 1)]
    assert product_shortest_length(same) == product_shortest_length(same[::-1]) == Length(1, 1)
