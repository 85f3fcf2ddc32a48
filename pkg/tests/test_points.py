"""Tests for certified bivariate solving and sign evaluation at algebraic points."""

from fractions import Fraction

import mpmath as mp
import pytest

from evonorm.errors import CommonComponent, RefinementBudgetExceeded, ZeroPolynomial
from evonorm.poly import MultiPoly, parse_poly, resultant
from evonorm.points import AlgebraicPoint, sign_at, solve_bivariate
from evonorm.prng import SplitMix64
from evonorm.realroots import refine

XY = ("x", "y")


def P(text):
    return parse_poly(text, vars=XY)


def rand_poly(rng, deg, density=7):
    terms = {}
    for i in range(deg + 1):
        for j in range(deg + 1 - i):
            if rng.randint(0, 9) < density:
                c = rng.randint(-4, 4)
                if c:
                    terms[(i, j)] = Fraction(c)
    return MultiPoly(XY, terms)


def center(coord):
    if isinstance(coord, Fraction):
        return mp.mpf(coord.numerator) / coord.denominator
    mid = (coord.lo + coord.hi) / 2
    return mp.mpf(mid.numerator) / mid.denominator


def mp_eval(f, xv, yv):
    acc = mp.mpf(0)
    for mono, c in f.terms.items():
        acc += mp.mpf(c.numerator) / c.denominator * xv ** mono[0] * yv ** mono[1]
    return acc


def narrowed(pt, width):
    if not isinstance(pt.x, Fraction):
        pt.x = refine(pt.x, width)
    if not isinstance(pt.y, Fraction):
        pt.y = refine(pt.y, width)
    return pt


# -- solve_bivariate --------------------------------------------------


def test_circle_and_line():
    pts, cc = solve_bivariate(P("x^2 + y^2 - 1"), P("y"))
    assert [(p.x, p.y) for p in pts] == [(-1, 0), (1, 0)]
    assert all(isinstance(p.x, Fraction) and isinstance(p.y, Fraction) for p in pts)
    assert cc == 2


def test_concentric_circles():
    pts, cc = solve_bivariate(P("x^2 + y^2 - 1"), P("x^2 + y^2 - 4"))
    assert pts == []
    assert cc == 4


def test_nodal_cubic_singular_point():
    f = P("5*(x^2 - y^2)*(x - 1) + (x^2 + y^2)")
    pts, _ = solve_bivariate(f, f.derivative("x"))
    sing = [p for p in pts if sign_at(f.derivative("y"), p) == 0]
    assert len(sing) == 1
    assert sing[0].x == 0 and sing[0].y == 0


def test_irrational_coordinates_certified():
    # parabola against circle: x = (sqrt(17) - 1)/2, y = +-sqrt(x)
    p = P("y^2 - x")
    q = P("x^2 + y^2 - 4")
    pts, cc = solve_bivariate(p, q)
    assert len(pts) == 2
    for pt in pts:
        assert sign_at(p, pt) == 0
        assert sign_at(q, pt) == 0
        assert not isinstance(pt.x, Fraction)
        narrowed(pt, Fraction(1, 10**6))
        assert abs(center(pt.x) - (mp.sqrt(17) - 1) / 2) < mp.mpf("1e-5")
    assert center(pts[0].y) < 0 < center(pts[1].y)


def test_degree_two_fiber():
    # above x = sqrt(3) both y = +-3^(1/4) solve the pair
    p = P("y^2 - x")
    q = P("y^4 - 3")
    pts, _ = solve_bivariate(p, q)
    assert len(pts) == 2
    for pt in pts:
        narrowed(pt, Fraction(1, 10**6))
        assert abs(center(pt.x) - mp.sqrt(3)) < mp.mpf("1e-5")
        assert sign_at(p, pt) == 0 and sign_at(q, pt) == 0
    assert center(pts[0].y) < 0 < center(pts[1].y)


def test_shear_fallback_exact_solution():
    # both orientations share leading-coefficient factors, forcing a shear
    pts, _ = solve_bivariate(P("x*y - 1"), P("x*y^2 - 2"))
    assert len(pts) == 1
    assert pts[0].x == Fraction(1, 2) and pts[0].y == 2


def test_common_component_rejected():
    with pytest.raises(CommonComponent):
        solve_bivariate(P("x^2 - 1"), P("x*y - y"))


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomial):
        solve_bivariate(MultiPoly.zero(XY), P("x"))


def test_determinism():
    p = P("-4*x^3 + 3*x*y^2 - 3*x*y - 3*x")
    q = P("4*x^2*y + 2*y^3 - 4*x^2 - 4*y^2 - 2*y - 1")
    a = solve_bivariate(p, q)
    b = solve_bivariate(p, q)
    assert repr(a) == repr(b)
    assert a[1] == b[1]


def test_solutions_straddle_at_refined_width():
    p = P("x^2 + y^2 - 1")
    q = P("x - y")
    pts, _ = solve_bivariate(p, q)
    assert len(pts) == 2
    w = Fraction(1, 10**12)
    for pt in pts:
        narrowed(pt, w)
        xs = (pt.x, pt.x) if isinstance(pt.x, Fraction) else (pt.x.lo, pt.x.hi)
        ys = (pt.y, pt.y) if isinstance(pt.y, Fraction) else (pt.y.lo, pt.y.hi)
        for f in (p, q):
            corners = [
                f.eval_at({"x": a, "y": b}) for a in xs for b in ys
            ]
            assert min(corners) <= 0 <= max(corners)


# -- sign_at ----------------------------------------------------------


def test_sign_at_exact_zero_on_circle():
    pts, _ = solve_bivariate(P("x^2 + y^2 - 1"), P("y"))
    pt = next(p for p in pts if p.x > 0)
    assert sign_at(P("x^2 + y^2 - 1"), pt) == 0


def test_sign_at_sqrt2_point():
    pts, _ = solve_bivariate(P("x^2 - 2"), P("y - 1"))
    pt = next(p for p in pts if (p.x if isinstance(p.x, Fraction) else p.x.hi) > 0)
    assert sign_at(P("x - y"), pt) == 1
    assert sign_at(P("y - x"), pt) == -1
    assert sign_at(P("x^2 - 2"), pt) == 0


def test_sign_at_budget_exhaustion_raises():
    pts, _ = solve_bivariate(P("x^2 - 2"), P("y - 1"))
    pt = next(p for p in pts if (p.x if isinstance(p.x, Fraction) else p.x.hi) > 0)
    # rational within 1e-30 of sqrt(2): undecidable in 3 halvings
    near = Fraction(
        665857 * 10**24 + 1, 470832 * 10**24
    )
    probe = MultiPoly(XY, {(1, 0): Fraction(1), (0, 0): -near})
    with pytest.raises(RefinementBudgetExceeded) as ei:
        sign_at(probe, pt, budget=3)
    assert ei.value.budget == 3


def test_sign_at_vanishing_combinations():
    rng = SplitMix64(808)
    mp.mp.dps = 50
    done = 0
    while done < 12:
        p = rand_poly(rng, rng.randint(1, 3))
        q = rand_poly(rng, rng.randint(1, 3))
        if p.is_zero() or q.is_zero() or p.is_constant() or q.is_constant():
            continue
        try:
            pts, _ = solve_bivariate(p, q)
        except CommonComponent:
            continue
        if not pts:
            continue
        done += 1
        comb = p * rand_poly(rng, 1, density=10) + q * rand_poly(rng, 1, density=10)
        probe = rand_poly(rng, 2, density=9)
        if probe.is_zero():
            probe = P("x + y - 1")
        for pt in pts:
            if not comb.is_zero():
                assert sign_at(comb, pt) == 0
            s = sign_at(probe, pt)
            narrowed(pt, Fraction(1, 10**20))
            val = mp_eval(probe, center(pt.x), center(pt.y))
            if abs(val) > mp.mpf("1e-12"):
                assert s == (1 if val > 0 else -1)
            else:
                assert s == 0


# -- oracle cross-check ----------------------------------------------


def numeric_solutions(p, q):
    R = resultant(p, q, "y")
    dcs = {}
    for mono, c in R.terms.items():
        dcs[mono[0]] = c
    if not dcs:
        return None
    dmax = max(dcs)
    coeffs = []
    for k in range(dmax, -1, -1):
        c = dcs.get(k, Fraction(0))
        coeffs.append(mp.mpf(c.numerator) / c.denominator)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if not coeffs or len(coeffs) == 1:
        return None
    try:
        xroots = mp.polyroots(coeffs, maxsteps=200, extraprec=300)
    except Exception:
        return None
    sols = []
    for xr in xroots:
        if abs(mp.im(xr)) > mp.mpf("1e-25"):
            continue
        x0 = mp.re(xr)
        py = {}
        for mono, c in p.terms.items():
            py[mono[1]] = py.get(mono[1], mp.mpf(0)) + mp.mpf(c.numerator) / c.denominator * x0 ** mono[0]
        dy = max(py)
        cl = [py.get(k, mp.mpf(0)) for k in range(dy, -1, -1)]
        while cl and abs(cl[0]) < mp.mpf("1e-30"):
            cl.pop(0)
        if not cl:
            return None
        if len(cl) == 1:
            continue
        try:
            yroots = mp.polyroots(cl, maxsteps=200, extraprec=300)
        except Exception:
            return None
        for yr in yroots:
            if abs(mp.im(yr)) > mp.mpf("1e-20"):
                continue
            y0 = mp.re(yr)
            if abs(mp_eval(q, x0, y0)) < mp.mpf("1e-18"):
                sols.append((x0, y0))
    ded = []
    for s in sols:
        if not any(abs(s[0] - t[0]) < mp.mpf("1e-15") and abs(s[1] - t[1]) < mp.mpf("1e-15") for t in ded):
            ded.append(s)
    return ded


def test_solver_matches_numeric_oracle():
    rng = SplitMix64(0xE70)
    mp.mp.dps = 60
    w = Fraction(1, 10**13)
    done = 0
    trials = 0
    while done < 12 and trials < 200:
        trials += 1
        p = rand_poly(rng, rng.randint(1, 3))
        q = rand_poly(rng, rng.randint(1, 3))
        if p.is_zero() or q.is_zero() or p.is_constant() or q.is_constant():
            continue
        try:
            pts, _ = solve_bivariate(p, q)
        except CommonComponent:
            continue
        orc = numeric_solutions(p, q)
        if orc is None:
            continue
        done += 1
        mine = []
        for pt in pts:
            assert sign_at(p, pt) == 0 and sign_at(q, pt) == 0
            narrowed(pt, w)
            mine.append((center(pt.x), center(pt.y)))
        assert len(mine) == len(orc)
        for a, b in mine:
            assert any(
                abs(a - c) < mp.mpf("1e-9") and abs(b - d) < mp.mpf("1e-9")
                for c, d in orc
            )
    assert done == 12
