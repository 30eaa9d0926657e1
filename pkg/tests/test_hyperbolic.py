import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from midspec import hyperbolic as hyp

FREE_REVERSING = ("tau1", "tau2", "tau3", "tau4")


@pytest.fixture(scope="module", params=[1, 2, 3])
def surface(request):
    s = hyp.build_surface(request.param)
    return request.param, s, hyp.named_automorphisms(s)


def test_equilateral_hexagon():
    h = hyp.solve_hexagon(0.8, 0.8)
    ap, bp, cp = h.opposites
    assert ap == pytest.approx(bp) == pytest.approx(cp)
    ch = math.cosh(0.8)
    assert cp == pytest.approx(math.acosh(ch / (ch - 1)), abs=1e-12)
    assert cp == pytest.approx(2.0540, abs=1e-4)
    assert h.max_residual() <= 1e-9


@given(st.floats(0.05, 3.0), st.floats(0.05, 3.0))
def test_hexagon_identities(alpha, gamma):
    assert hyp.solve_hexagon(alpha, gamma).max_residual() <= 1e-9


def test_hexagon_monotone_in_gamma():
    for alpha in (0.3, 0.6, 0.8, 1.2):
        grid = [hyp.solve_hexagon(alpha, 0.1 * k) for k in range(1, 25)]
        opp_gamma = [h.opposites[2] for h in grid]
        opp_alpha = [h.opposites[0] for h in grid]
        assert all(x < y for x, y in zip(opp_gamma, opp_gamma[1:]))
        assert all(x > y for x, y in zip(opp_alpha, opp_alpha[1:]))


def test_nonpositive_side():
    with pytest.raises(hyp.NonPositiveSide):
        hyp.solve_hexagon(0.0, 0.5)
    with pytest.raises(hyp.NonPositiveSide):
        hyp.solve_hexagon(0.5, -1.0)


def test_surface_counts(surface):
    t, s, _ = surface
    assert s.orientable
    assert s.euler_characteristic() == -4 * t
    assert s.genus() == 2 * t + 1
    assert len(s.polygons()) == 8 * t
    lengths = Counter(round(hyp.cuff_length(s, e), 12) for e, _ in s.cuffs())
    assert lengths == {1.4: 2 * t, 1.6: 4 * t}
    assert len(s.gluing_pairs()) > 0


def test_classifications(surface):
    _, s, auts = surface
    for name in FREE_REVERSING:
        c = hyp.classify_automorphism(s, auts[name])
        assert (c.involutive, c.orientation_reversing, c.fixed_point_free) == (True, True, True), name
    rho = hyp.classify_automorphism(s, auts["rho"])
    assert rho.fixed_point_free and not rho.orientation_reversing
    tp = hyp.classify_automorphism(s, auts["tauP"])
    assert tp.involutive and tp.orientation_reversing and tp.fixed_circle_count > 0


def test_squares_are_identity(surface):
    _, s, auts = surface
    ident = hyp.identity_automorphism(s)
    for a in auts.values():
        assert a.compose(a).same_as(ident), a.name


def test_composition_identities(surface):
    _, s, _ = surface
    assert all(hyp.composition_identities(s).values())


def test_quotients(surface):
    t, s, auts = surface
    g = t + 1
    for name in FREE_REVERSING:
        q = hyp.quotient_topology(s, auts[name])
        assert not q.orientable and q.boundary_components == 0
        assert q.genus == g and q.crosscap_number == 2 * g
    counts = {n: hyp.quotient_topology(s, auts[n]).boundary_components
              for n in ("tauP", "tauH", "tauV1", "tauV2")}
    assert counts == {"tauP": 2 * g, "tauH": 2 * g - 2, "tauV1": 4, "tauV2": 2}
    for name, a in auts.items():
        if name == "rho":
            continue
        assert hyp.quotient_topology(s, a).orbifold_euler == Fraction(s.euler_characteristic(), 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ladder_reflections(n):
    s = hyp.ladder_surface(n)
    assert s.genus() == 2 * n
    counts = sorted(hyp.quotient_topology(s, a).boundary_components
                    for a in hyp.ladder_reflections(s).values())
    assert counts == [1, 2 * n + 1, 2 * n + 1]


def test_automorphism_errors():
    s = hyp.build_surface(1)
    with pytest.raises(hyp.AutomorphismGluingMismatch):
        hyp.strip_automorphism(s, "half shift", hyp.StripMap(1, Fraction(1, 2), 1, False))
    other = hyp.named_automorphisms(hyp.build_surface(2))["rho"]
    with pytest.raises(hyp.AutomorphismGluingMismatch):
        hyp.classify_automorphism(s, other)


def test_parameter_constraints():
    rep = hyp.short_geodesic_report(hyp.build_surface(1, 0.8, 0.7))
    assert rep["bound_3g_minus_3"] == 6 and rep["saturated"]
    assert rep["short_cuff_count"] == 6
    with pytest.raises(hyp.ParameterConstraintViolated) as err:
        hyp.check_parameters(0.4, 0.8)
    assert err.value.which == "gamma < 2 alpha"
    with pytest.raises(hyp.ParameterConstraintViolated) as err:
        hyp.check_parameters(1.0, 0.5)
    assert err.value.which == "alpha < arcsinh(1)"


@pytest.mark.parametrize("t", [1, 2, 3])
def test_short_geodesic_saturation(t):
    rep = hyp.short_geodesic_report(hyp.build_surface(t))
    assert len(rep["cuffs"]) == 6 * t == rep["bound_3g_minus_3"]


def test_injectivity_comparison():
    rep = hyp.injectivity_radius_comparison(1, 0.8, 0.7)
    assert rep["S4_new_geodesic"] == pytest.approx(0.7)
    assert rep["S4_strictly_shortest"]
    for i in (1, 2, 3):
        assert rep["quotients"][f"S{i}"]["shortest_lower_bound"] == pytest.approx(1.4)
    margins = [hyp.injectivity_radius_comparison(1, 0.42, g)["margin"] for g in (0.5, 0.7, 0.83)]
    assert margins[0] > margins[1] > margins[2] > 0


def test_dot_output():
    dot = hyp.build_surface(1).to_dot()
    assert dot.startswith("graph gluing {") and dot.rstrip().endswith("}")
    assert "cuff:w0" in dot


def test_report_is_deterministic():
    assert hyp.dumps(hyp.surface_report(2)) == hyp.dumps(hyp.surface_report(2))
