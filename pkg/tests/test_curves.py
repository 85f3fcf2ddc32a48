"""Tests for plane-curve models: curvature, normals, inflections, infinity."""

from fractions import Fraction

import pytest

from evonorm.curves import (
    AtInfinityReport,
    CurvatureProbe,
    PlaneCurve,
    RationalParam,
    at_infinity,
    curvature_asymptotics,
    curvature_center,
    curvature_center_param,
    inflection_locus,
    normal_line,
)
from evonorm.errors import (
    ChartFailure,
    DomainViolation,
    LineComponent,
    ParamSingular,
    SingularPoint,
    UnknownVariable,
    ZeroCurvature,
    ZeroPolynomial,
)
from evonorm.poly import parse_poly
from evonorm.points import sign_at

F = Fraction

CIRCLE = PlaneCurve("x^2 + y^2 - 1")
PARABOLA = PlaneCurve("y - x^2")
ELLIPSE = PlaneCurve("x^2 + 4*y^2 - 4")
CISSOID = PlaneCurve("(x^2 + y^2)*x - 4*y^2")
WEIERSTRASS = PlaneCurve("y^2 + x*(x - 2)*(x + 1)")
NODAL_CUBIC = PlaneCurve("5*(x^2 - y^2)*(x - 1) + (x^2 + y^2)")
AMPERSAND = PlaneCurve(
    "(x - 1)*(2*x - 3)*(1/2*y^2 - x^2) - 4*(x^2 - 2*x + 1/2*y^2)^2"
)

CISSOID_PARAM = RationalParam("4*t^2", "4*t^3", "1 + t^2")


# -- PlaneCurve basics ------------------------------------------------


def test_curve_normalizes_to_squarefree():
    c = PlaneCurve("(x^2 + y^2 - 1)^2")
    assert c.d == 2
    assert c == CIRCLE
    assert c.F.partial_eval("z", 1).drop_vars({"z"}) == c.f


def test_curve_rejects_bad_input():
    with pytest.raises(ZeroPolynomial):
        PlaneCurve("3")
    with pytest.raises(UnknownVariable):
        PlaneCurve("x + w")


def test_param_reduces_common_factor():
    p = RationalParam("t^2 + t", "t^3 + t^2", "t + 1")
    assert p.xn == parse_poly("t")
    assert p.yn == parse_poly("t^2")
    assert p.den.is_constant()
    with pytest.raises(ZeroPolynomial):
        RationalParam("t", "t", 0)
    with pytest.raises(ParamSingular):
        RationalParam("1", "t", "t - 1").value(1)


# -- curvature centers ------------------------------------------------


def test_center_circle():
    assert curvature_center(CIRCLE, (1, 0)) == (0, 0)
    assert curvature_center(CIRCLE, (F(3, 5), F(-4, 5))) == (0, 0)


def test_center_parabola():
    x, y = curvature_center(PARABOLA, (1, 1))
    assert (x, y) == (-4, F(7, 2))
    assert isinstance(x, Fraction) and isinstance(y, Fraction)


def test_center_ellipse():
    assert curvature_center(ELLIPSE, (2, 0)) == (F(3, 2), 0)


def test_center_errors():
    with pytest.raises(ValueError):
        curvature_center(CIRCLE, (2, 0))
    with pytest.raises(SingularPoint):
        curvature_center(NODAL_CUBIC, (0, 0))
    with pytest.raises(ZeroCurvature):
        curvature_center(PlaneCurve("y - x^3"), (0, 0))


def test_center_param_parabola():
    par = RationalParam("t", "t^2")
    assert curvature_center_param(par, 0) == (0, F(1, 2))
    assert curvature_center_param(par, 1) == curvature_center(PARABOLA, (1, 1))


def test_center_param_circle():
    par = RationalParam("1 - t^2", "2*t", "1 + t^2")
    assert curvature_center_param(par, 0) == (0, 0)
    assert curvature_center_param(par, F(1, 3)) == (0, 0)


def test_center_param_degenerate():
    with pytest.raises(ZeroCurvature):
        curvature_center_param(RationalParam("t", "2*t + 1"), 5)
    with pytest.raises(ParamSingular):
        curvature_center_param(CISSOID_PARAM, 0)


def test_cissoid_cross_model():
    """Implicit and parametric centers agree at 20 rational points."""
    ts = [F(n, d) for n in (1, -1, 2, -2, 3, -3, 5, -5) for d in (1, 3)] + [
        F(1, 2),
        F(-1, 2),
        F(3, 2),
        F(-3, 2),
    ]
    assert len(ts) == 20
    for t in ts:
        pt = CISSOID_PARAM.value(t)
        assert CISSOID.contains(pt)
        assert curvature_center(CISSOID, pt) == curvature_center_param(CISSOID_PARAM, t)


def test_center_lies_on_normal():
    cases = [
        (ELLIPSE, (0, 1)),
        (PARABOLA, (2, 4)),
        (CISSOID, (2, 2)),
        (CIRCLE, (F(3, 5), F(4, 5))),
    ]
    for curve, pt in cases:
        cx, cy = curvature_center(curve, pt)
        try:
            u, v = normal_line(curve, pt)
            assert cy + u * cx + v == 0
        except ChartFailure:
            u, v = normal_line(curve, pt, swapped=True)
            assert cx + u * cy + v == 0


# -- normal lines -----------------------------------------------------


def test_normal_parabola_param():
    u, v = normal_line(RationalParam("t", "t^2"), 1)
    assert (u, v) == (F(1, 2), F(-3, 2))
    # incidence at (1, 1) and orthogonality to the tangent (1, 2)
    assert 1 + u * 1 + v == 0
    assert 1 * 1 + 2 * (-u) == 0


def test_normal_vertical_chart():
    with pytest.raises(ChartFailure):
        normal_line(CIRCLE, (0, 1))
    assert normal_line(CIRCLE, (0, 1), swapped=True) == (0, 0)
    with pytest.raises(ChartFailure):
        normal_line(ELLIPSE, (0, 1))
    assert normal_line(ELLIPSE, (0, 1), swapped=True) == (0, 0)


def test_normal_matches_implicit_param():
    t = F(2)
    pt = CISSOID_PARAM.value(t)
    assert normal_line(CISSOID_PARAM, t) == normal_line(CISSOID, pt)


def test_normal_singular_point():
    with pytest.raises(SingularPoint):
        normal_line(CISSOID, (0, 0))
    with pytest.raises(ValueError):
        normal_line(CIRCLE, (5, 5))


# -- inflection locus -------------------------------------------------


def test_inflection_conic():
    assert inflection_locus(ELLIPSE) == (None, 0, [])


def test_inflection_weierstrass():
    hess, count, real = inflection_locus(WEIERSTRASS)
    assert count == 9
    assert hess.d == 3
    assert len(real) == 2
    # the third real flex is at (0:1:0): curve and Hessian both vanish
    from evonorm.curves import hessian_det

    H = hessian_det(WEIERSTRASS.F, ("x", "y", "z"))
    at = {"x": F(0), "y": F(1), "z": F(0)}
    assert WEIERSTRASS.F.eval_at(at) == 0 and H.eval_at(at) == 0


def test_inflection_smooth_quartic():
    hess, count, real = inflection_locus(PlaneCurve("x^4 + y^4 + x*y - 1"))
    assert count == 24
    assert hess.d == 6


def test_inflection_singular_adjustment():
    assert inflection_locus(CISSOID)[1] == 1
    assert inflection_locus(NODAL_CUBIC)[1] == 3
    hess, count, real = inflection_locus(AMPERSAND)
    assert count == 6
    assert len(real) == 2


def test_inflection_real_points_are_flexes():
    _, _, real = inflection_locus(WEIERSTRASS)
    fx = WEIERSTRASS.f.derivative("x")
    fy = WEIERSTRASS.f.derivative("y")
    for p in real:
        assert sign_at(WEIERSTRASS.f, p) == 0
        assert sign_at(fx, p) != 0 or sign_at(fy, p) != 0


def test_inflection_line_component():
    with pytest.raises(LineComponent):
        inflection_locus(PlaneCurve("x*y"))
    with pytest.raises(LineComponent):
        inflection_locus(PlaneCurve("(x + y)*(x^2 + y^2 - 1)"))


# -- at infinity ------------------------------------------------------


def test_at_infinity_trifolium():
    rep = at_infinity(PlaneCurve("(x^2 + y^2)^2 - x^3 + 3*x*y^2"))
    assert rep.circular.on_curve
    assert rep.circular.i == 2
    assert rep.circular.m == 1
    assert rep.total_intersection() == 4
    assert len(rep.points) == 1


def test_at_infinity_ellipse_sample():
    rep = at_infinity(PlaneCurve("x^2 + 2*y^2 - 1"))
    assert not rep.circular.on_curve
    (pt,) = rep.points
    assert pt.kind == "complex"
    assert pt.count == 2 and pt.ip == 1 and pt.mp == 1
    assert rep.total_intersection() == 2


def test_at_infinity_nephroid():
    rep = at_infinity(PlaneCurve("(x^2 + y^2 - 4)^3 - 108*y^2"))
    assert rep.circular.on_curve
    assert rep.circular.i == 3
    assert rep.circular.m == 3
    assert rep.total_intersection() == 6


def test_at_infinity_transversal_and_tangent():
    rep = at_infinity(PARABOLA)
    (pt,) = rep.points
    assert pt.kind == "rational" and pt.alpha == 0 and pt.ip == 2 and pt.mp == 1

    rep = at_infinity(CISSOID)
    kinds = sorted((p.kind, p.ip, p.mp) for p in rep.points)
    assert kinds == [("circular", 1, 1), ("rational", 1, 1)]
    assert rep.total_intersection() == 3


def test_at_infinity_lines_and_axis():
    rep = at_infinity(PlaneCurve("x - 3"))
    (pt,) = rep.points
    assert pt.kind == "rational" and pt.alpha == 0 and pt.ip == 1

    rep = at_infinity(PlaneCurve("y - 3"))
    (pt,) = rep.points
    assert pt.kind == "axis" and pt.ip == 1 and pt.mp == 1


def test_at_infinity_real_irrational():
    # top form x^2 - 2y^2 meets z=0 at (±sqrt2 : 1 : 0)
    rep = at_infinity(PlaneCurve("x^2 - 2*y^2 - 1"))
    assert rep.total_intersection() == 2
    assert sorted(p.kind for p in rep.points) == ["real", "real"]
    assert all(p.ip == 1 and p.mp == 1 for p in rep.points)


def test_at_infinity_sum_invariant():
    for eq in (
        "y^2 - x^3 + x",
        "x^4 + y^4 + x*y - 1",
        "(x^2 + y^2)^2 + x^2 - y",
        "x^3 + y^3 - 3*x*y + 1",
        "y^4 - 2*x*y + x^2 - 7",
    ):
        c = PlaneCurve(eq)
        assert at_infinity(c).total_intersection() == c.d


def test_nodal_cubic_at_infinity():
    rep = at_infinity(NODAL_CUBIC)
    vals = sorted((p.kind, p.alpha) for p in rep.points)
    assert vals == [("rational", -1), ("rational", 0), ("rational", 1)]
    assert all(p.ip == 1 and p.mp == 1 for p in rep.points)


# -- curvature asymptotics --------------------------------------------


def test_probe_psi_exact():
    probe = CurvatureProbe("x^4 - x^6")
    assert probe.psi == parse_poly("1 + 3*x^4 - 10*x^6")
    assert probe.psi.partial_eval("x", 0).constant_value() == 1


def test_probe_psi_zero_perturbation():
    assert CurvatureProbe(0).psi.constant_value() == 1


def test_probe_psi_at_zero_invariant():
    for o, a in (("x^2", 1), ("x*eps", 2), ("x^3 - eps^2*x", F(1, 2))):
        probe = CurvatureProbe(o, a=a)
        assert probe.psi.partial_eval("x", 0).constant_value() == 1


def test_probe_rejects_bad_input():
    with pytest.raises(DomainViolation):
        CurvatureProbe("1 + x")
    with pytest.raises(ValueError):
        CurvatureProbe("x^2", a=0)


def test_asymptotics_exact_hyperbola():
    rows = curvature_asymptotics(CurvatureProbe(0), F(1, 4), [F(-1, 2), 0, F(1, 3)])
    for x, ratio, psi in rows:
        assert ratio == 1 and psi == 1


def test_asymptotics_convergence_sweep():
    """Deviation from the limit profile shrinks monotonically in eps."""
    probe = CurvatureProbe("x^4 - x^6")
    grid = [F(j, 8) for j in range(-4, 5)]
    devs = []
    for eps in (F(1, 4), F(1, 16), F(1, 64)):
        rows = curvature_asymptotics(probe, eps, grid)
        devs.append(max(abs(r - psi) for _, r, psi in rows))
    assert devs[0] > devs[1] > devs[2]
    assert devs[2] < F(5, 100)


def test_asymptotics_domain_violation():
    with pytest.raises(DomainViolation):
        curvature_asymptotics(CurvatureProbe("x^2 - 2*x^2"), 1, [F(3)])
    with pytest.raises(DomainViolation):
        curvature_asymptotics(CurvatureProbe(0), 0, [F(1)])
