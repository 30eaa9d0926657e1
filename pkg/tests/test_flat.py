import random
from fractions import Fraction

import pytest

from lattice_gen import random_quotient
from midspec import lattice as la
from midspec.core import Eigenvalue, Equal, compare_segments, halve_multiplicities
from midspec.eigenspace import eigenspace_dimension, invariant_dimension
from midspec.flat import (AffineInvolution, CutoffNotFlat, FlatQuotient, InvalidDescriptor,
                          Lattice, NoInvolution, diagonal_involution, displacement_length_spectrum,
                          eigenspace_traces, fixed_set, is_orientation_reversing, p_spectrum,
                          quotient_p_spectrum, representation_counts, shortest_displacement,
                          square_family, torus_p_spectrum)

F = Fraction


def entries(seg):
    return {(e.plain, e.pi2): m for e, m in seg.entries}


def test_unit_square_one_forms():
    s = torus_p_spectrum(Lattice.cubic(2), 1, Eigenvalue.flat(2))
    assert entries(s) == {(0, 0): 2, (0, 1): 8, (0, 2): 8}


def test_functions_zero_mode():
    s = torus_p_spectrum(Lattice.cubic(2), 0, Eigenvalue.flat(1))
    assert s.multiplicity(Eigenvalue()) == 1


def test_remark_lattice_smallest_eigenvalue():
    # quotient of Z x 2Z by (x + 1/2, y) is the torus with lattice (1/2)Z x 2Z
    s = torus_p_spectrum(Lattice.diagonal(F(1, 4), 4), 1, Eigenvalue.flat(1))
    nonzero = [e for e, _ in s.entries if not e.is_zero()]
    assert nonzero[0] == Eigenvalue.flat(F(1, 4))


def test_representation_counts_square():
    assert representation_counts(Lattice.cubic(2), 5) == {0: 1, 1: 4, 2: 4, 4: 4, 5: 8}


def test_named_quotients():
    c = Eigenvalue.flat(2)
    klein = p_spectrum(square_family("klein"), 1, c)
    assert klein.multiplicity(Eigenvalue()) == 1
    pillow = p_spectrum(square_family("pillow"), 1, c)
    assert pillow.multiplicity(Eigenvalue.flat(1)) == 4
    assert pillow.multiplicity(Eigenvalue()) == 0
    cyl0 = p_spectrum(square_family("cylinder"), 0, c)
    assert cyl0.multiplicity(Eigenvalue.flat(1)) == 3


def test_degree_zero_table():
    expected = {"klein": (1, 2), "cylinder": (3, 2), "mobius": (2, 3), "pillow": (2, 2)}
    for k, (m1, m2) in expected.items():
        s = p_spectrum(square_family(k), 0, Eigenvalue.flat(2))
        assert (s.multiplicity(Eigenvalue.flat(1)), s.multiplicity(Eigenvalue.flat(2))) == (m1, m2)


def test_orientation():
    assert is_orientation_reversing(diagonal_involution((1, -1)))
    assert not is_orientation_reversing(diagonal_involution((-1, -1)))
    for k in (1, 3):
        assert is_orientation_reversing(diagonal_involution([-1] * (6 - k) + [1] * k))


def test_fixed_sets():
    pil = fixed_set(square_family("pillow"))
    assert (pil.dimension, pil.isolated_point_count) == (0, 4)
    mob = fixed_set(square_family("mobius"))
    assert (mob.dimension, mob.component_count, mob.component_volume_squared) == (1, 1, 2)
    cyl = fixed_set(square_family("cylinder"))
    assert (cyl.dimension, cyl.component_count) == (1, 2)
    assert cyl.total_volume() == pytest.approx(2.0)
    klein = fixed_set(square_family("klein"))
    assert klein.dimension == -1 or klein.component_count == 0


def test_fixed_set_higher_dimension():
    q = FlatQuotient(Lattice.cubic(4), diagonal_involution((-1, -1, -1, 1)))
    fs = fixed_set(q)
    assert (fs.dimension, fs.component_count) == (1, 8)
    q = FlatQuotient(Lattice.cubic(4), diagonal_involution((-1, -1, -1, -1)))
    assert fixed_set(q).isolated_point_count == 16


def test_displacements():
    plain = displacement_length_spectrum(square_family("torus"), 1)
    assert plain[0] == (1, 4)
    klein = displacement_length_spectrum(square_family("klein"), 1)
    assert klein[0][0] == F(1, 4)
    assert shortest_displacement(square_family("torus"), 2) == 1


def test_cutoff_and_involution_errors():
    with pytest.raises(CutoffNotFlat):
        torus_p_spectrum(Lattice.cubic(2), 0, Eigenvalue.rational(5))
    with pytest.raises(NoInvolution):
        quotient_p_spectrum(square_family("torus"), 1, Eigenvalue.flat(1))
    with pytest.raises(InvalidDescriptor):
        AffineInvolution(((1, 1), (0, 1)), (0, 0))
    with pytest.raises(InvalidDescriptor):
        AffineInvolution(((1, 0), (0, 1)), (F(1, 4), 0))   # squares to a translation by 1/2
    with pytest.raises(InvalidDescriptor):
        FlatQuotient(Lattice.diagonal(1, 2), AffineInvolution(((0, 1), (1, 0)), (0, 0)))


def test_descriptor_round_trip():
    for k in ("torus", "klein", "cylinder", "mobius", "pillow"):
        q = square_family(k)
        assert FlatQuotient.from_json(q.to_json()) == q


def test_invariant_plus_anti_invariant():
    rng = random.Random(5)
    for n in (2, 2, 4):
        q = random_quotient(rng, n)
        for p in range(n + 1):
            tr = eigenspace_traces(q, p, 6)
            c = Eigenvalue.flat(6)
            plus = quotient_p_spectrum(q, p, c, parity="invariant")
            minus = quotient_p_spectrum(q, p, c, parity="anti_invariant")
            full = torus_p_spectrum(q.lattice, p, c)
            for ev, m in full.entries:
                assert plus.multiplicity(ev) + minus.multiplicity(ev) == m
            assert tr


def test_trace_formula_matches_direct_enumeration():
    rng = random.Random(11)
    quotients = [square_family(k) for k in ("klein", "cylinder", "mobius", "pillow")]
    quotients += [random_quotient(rng, 2) for _ in range(4)]
    quotients += [random_quotient(rng, 4) for _ in range(2)]
    for q in quotients:
        c = Eigenvalue.flat(3)
        for p in range(q.dim + 1):
            seg = p_spectrum(q, p, c)
            full = torus_p_spectrum(q.lattice, p, c)
            for ev, m in full.entries:
                assert eigenspace_dimension(q, p, ev.pi2) == m
                assert invariant_dimension(q, p, ev.pi2) == seg.multiplicity(ev), (q, p, ev)


def test_middle_degree_halving_random():
    rng = random.Random(3)
    for n in (2, 4):
        for _ in range(3):
            q = random_quotient(rng, n)
            c = Eigenvalue.flat(20)
            a = quotient_p_spectrum(q, n // 2, c)
            b = halve_multiplicities(torus_p_spectrum(q.lattice, n // 2, c))
            assert isinstance(compare_segments(a, b), Equal)


def test_enumeration_complete_against_box():
    g = ((F(2), F(1, 3)), (F(1, 3), F(1)))
    found = {x for x, _ in la.enumerate_short(g, F(7))}
    box = {(a, b) for a in range(-5, 6) for b in range(-5, 6)
           if la.quad(g, (a, b)) <= 7}
    assert found == box
