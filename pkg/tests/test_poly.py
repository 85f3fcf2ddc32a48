"""Tests for exact multivariate polynomial arithmetic and elimination."""

from fractions import Fraction

import pytest

from evonorm.errors import UnknownVariable, ZeroPolynomial
from evonorm.poly import (
    MultiPoly,
    dehomogenize,
    discriminant,
    homogenize,
    mp_gcd,
    parse_poly,
    resultant,
    squarefree_factor,
    squarefree_part,
)
from evonorm.prng import SplitMix64

XY = ("x", "y")


def P(text, vars=XY):
    return parse_poly(text, vars=vars)


def rand_poly(rng, vars, deg, lo=-9, hi=9, density=7):
    terms = {}
    n = len(vars)
    for _ in range(3 * (deg + 1)):
        e = [0] * n
        left = deg
        for i in range(n):
            e[i] = rng.randint(0, left)
            left -= e[i]
        if rng.randint(0, 9) < density:
            c = rng.randint(lo, hi)
            if c:
                terms[tuple(e)] = Fraction(c)
    return MultiPoly(vars, terms)


def sylvester_resultant(p, q, name):
    """Dense Sylvester determinant over Fraction, oracle only."""
    pc = p.coeffs_in(name)
    qc = q.coeffs_in(name)
    dp, dq = len(pc) - 1, len(qc) - 1
    rest = tuple(v for v in p.vars if v != name)
    if dp == 0 and dq == 0:
        return MultiPoly.const(rest or ("_c",), Fraction(1))
    n = dp + dq
    zero = MultiPoly.zero(rest)
    grid = [[zero] * n for _ in range(n)]
    for i in range(dq):
        for j, c in enumerate(reversed(pc)):
            grid[i][i + j] = c.drop_vars((name,))
    for i in range(dp):
        for j, c in enumerate(reversed(qc)):
            grid[dq + i][i + j] = c.drop_vars((name,))
    # fraction-free expansion is too slow; do Gaussian elimination over
    # the rational function field via exact MultiPoly quotients is not
    # available, so expand by minors on the first column (sizes <= 10)
    def det(mat):
        m = len(mat)
        if m == 1:
            return mat[0][0]
        acc = MultiPoly.zero(mat[0][0].vars)
        sign = 1
        for r in range(m):
            if not mat[r][0].is_zero():
                minor = [row[1:] for k, row in enumerate(mat) if k != r]
                term = mat[r][0] * det(minor)
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        return acc
    return det(grid)


# -- parsing ----------------------------------------------------------


def test_parse_circle():
    f = P("x^2+y^2-1")
    assert len(f.terms) == 3
    assert f.terms[(2, 0)] == 1 and f.terms[(0, 2)] == 1 and f.terms[(0, 0)] == -1


def test_parse_cissoid():
    f = P("(x^2+y^2)*x - 4*y^2")
    assert f == P("x^3 + x*y^2 - 4*y^2")


def test_parse_double_caret_rejected():
    with pytest.raises(SyntaxError) as ei:
        P("x^^2")
    assert ei.value.offset == 2


def test_parse_unknown_variable():
    with pytest.raises(UnknownVariable):
        P("x + w")


def test_parse_no_juxtaposition():
    with pytest.raises(SyntaxError):
        P("2x")
    with pytest.raises(SyntaxError):
        P("x y")


def test_parse_rationals_and_whitespace():
    f = P(" 1/2 * x ^ 2 - 3/4 ")
    assert f.terms[(2, 0)] == Fraction(1, 2)
    assert f.terms[(0, 0)] == Fraction(-3, 4)


def test_parse_render_round_trip():
    rng = SplitMix64(5)
    for _ in range(30):
        f = rand_poly(rng, XY, 4)
        if f.is_zero():
            continue
        assert parse_poly(str(f), vars=XY) == f


def test_variable_order_inferred_by_first_appearance():
    f = parse_poly("y - x^2")
    assert f.vars == ("y", "x")


# -- resultants -------------------------------------------------------


def test_resultant_linear_eval():
    assert resultant(P("y^2 - x"), P("y - 1"), "y") == P("1 - x")
    one = parse_poly("x^2 + 1", vars=("x",))
    two = parse_poly("x - 2", vars=("x",))
    r = resultant(one, two, "x")
    assert r.is_constant() and r.constant_value() == 5


def test_resultant_rejects_zero():
    with pytest.raises(ZeroPolynomial):
        resultant(MultiPoly.zero(XY), P("x"), "x")


def test_resultant_prs_vs_sylvester_corpus():
    rng = SplitMix64(404)
    done = 0
    while done < 50:
        p = rand_poly(rng, XY, rng.randint(1, 3), density=9)
        q = rand_poly(rng, XY, rng.randint(1, 3), density=9)
        if p.degree_in("y") < 1 or q.degree_in("y") < 1:
            continue
        done += 1
        assert resultant(p, q, "y", method="prs") == sylvester_resultant(p, q, "y")


def test_resultant_interp_matches_prs():
    rng = SplitMix64(405)
    done = 0
    while done < 20:
        p = rand_poly(rng, XY, rng.randint(1, 4), density=8)
        q = rand_poly(rng, XY, rng.randint(1, 4), density=8)
        if p.degree_in("y") < 1 or q.degree_in("y") < 1:
            continue
        done += 1
        assert resultant(p, q, "y", method="interp") == resultant(p, q, "y", method="prs")


def test_resultant_multiplicative():
    rng = SplitMix64(77)
    done = 0
    while done < 10:
        p = rand_poly(rng, XY, 2, density=9)
        q = rand_poly(rng, XY, 2, density=9)
        r = rand_poly(rng, XY, 2, density=9)
        if min(p.degree_in("y"), q.degree_in("y"), r.degree_in("y")) < 1:
            continue
        done += 1
        assert resultant(p * q, r, "y") == resultant(p, r, "y") * resultant(q, r, "y")


def test_resultant_antisymmetry_sign():
    rng = SplitMix64(78)
    done = 0
    while done < 10:
        p = rand_poly(rng, XY, 3, density=9)
        q = rand_poly(rng, XY, 3, density=9)
        dp, dq = p.degree_in("y"), q.degree_in("y")
        if dp < 1 or dq < 1:
            continue
        done += 1
        rpq = resultant(p, q, "y")
        rqp = resultant(q, p, "y")
        assert rpq == (rqp if (dp * dq) % 2 == 0 else -rqp)


def test_resultant_monic_linear_is_evaluation():
    # Res(p, y - a) = (-1)^deg_y(p) * p(a); equivalently Res(y - a, p) = p(a)
    rng = SplitMix64(79)
    for _ in range(10):
        p = rand_poly(rng, XY, 3, density=9)
        if p.degree_in("y") < 1:
            continue
        a = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        lin = MultiPoly.var(XY, "y") - MultiPoly.const(XY, a)
        assert resultant(lin, p, "y") == p.partial_eval("y", a)
        want = p.partial_eval("y", a)
        if p.degree_in("y") % 2 == 1:
            want = -want
        assert resultant(p, lin, "y") == want


# -- discriminant -----------------------------------------------------


def test_discriminant_quadratic():
    assert discriminant(P("y^2 - x"), "y") == P("4*x")
    f = parse_poly("x^2 + b*x + c", vars=("x", "b", "c"))
    assert discriminant(f, "x") == parse_poly("b^2 - 4*c", vars=("b", "c"))


def test_discriminant_detects_double_roots():
    rng = SplitMix64(31)
    y = "y"
    for _ in range(20):
        a = Fraction(rng.randint(-5, 5))
        b = Fraction(rng.randint(-5, 5))
        c = Fraction(rng.randint(-5, 5))
        vy = MultiPoly.var(("y",), "y")
        fa = vy - MultiPoly.const(("y",), a)
        fb = vy - MultiPoly.const(("y",), b)
        fc = vy - MultiPoly.const(("y",), c)
        dbl = fa * fa * fb
        d = discriminant(dbl, y)
        assert d.is_zero() or (d.is_constant() and d.constant_value() == 0)
        if len({a, b, c}) == 3:
            d2 = discriminant(fa * fb * fc, y)
            assert not (d2.is_zero() or (d2.is_constant() and d2.constant_value() == 0))


# -- gcd / squarefree -------------------------------------------------


def test_gcd_known():
    g = mp_gcd(P("x^2 - 1"), P("x - 1"))
    assert g == P("x - 1")


def test_squarefree_part_known():
    f = P("(x + y)*(x + y)*(x + y)*(x - y)")
    assert squarefree_part(f) == P("(x + y)*(x - y)")


def test_squarefree_factor_reconstructs():
    rng = SplitMix64(606)
    done = 0
    while done < 25:
        nfac = rng.randint(1, 3)
        f = MultiPoly.const(XY, Fraction(1))
        built = []
        for _ in range(nfac):
            base = rand_poly(rng, XY, 1, lo=-3, hi=3, density=10)
            if base.is_zero() or base.is_constant():
                continue
            mult = rng.randint(1, 3)
            built.append((base, mult))
            for _ in range(mult):
                f = f * base
        if not built or f.is_constant():
            continue
        done += 1
        fl = squarefree_factor(f)
        assert fl.expand(f.vars).same_up_to_scalar(f)
        # coprime squarefree split: distinct multiplicities, coprime parts
        mults = [m for _, m in fl.factors]
        assert len(set(mults)) == len(mults)
        for i, (fi, _) in enumerate(fl.factors):
            for fj, _ in fl.factors[i + 1:]:
                assert mp_gcd(fi, fj).is_constant()
        # every constructed base must sit inside the part with the
        # aggregated multiplicity it was given
        want = {}
        for base, mult in built:
            key = frozenset(base.canonical().terms.items())
            want.setdefault(key, [base.canonical(), 0])[1] += mult
        for base, mult in want.values():
            part = next((fi for fi, m in fl.factors if m == mult), None)
            assert part is not None
            assert mp_gcd(part, base).same_up_to_scalar(base)


def test_gcd_both_zero_raises():
    with pytest.raises(ZeroPolynomial):
        mp_gcd(MultiPoly.zero(XY), MultiPoly.zero(XY))


# -- homogenization ---------------------------------------------------


def test_homogenize_circle():
    F = homogenize(P("x^2 + y^2 - 1"), "z")
    assert F == parse_poly("x^2 + y^2 - z^2", vars=("x", "y", "z"))


def test_homogenize_cissoid():
    F = homogenize(P("x^3 + x*y^2 - 4*y^2"), "z")
    assert F == parse_poly("x^3 + x*y^2 - 4*y^2*z", vars=("x", "y", "z"))


def test_dehomogenize_chart_x():
    F = parse_poly("x^3 + x*y^2 - 4*y^2*z", vars=("x", "y", "z"))
    g = dehomogenize(F, "x")
    assert g == parse_poly("1 + y^2 - 4*y^2*z", vars=("y", "z")).reorder(g.vars)


def test_homogenize_idempotent_through_dehomogenize():
    rng = SplitMix64(42)
    for _ in range(10):
        f = rand_poly(rng, XY, 3)
        if f.is_zero():
            continue
        F = homogenize(f, "z")
        assert homogenize(dehomogenize(F, "z"), "z") == F
