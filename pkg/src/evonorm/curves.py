"""Plane-curve models.

Implicit and rationally parametrized plane curves with exact curvature
and normal-line evaluation, inflection loci, intersections with the
line at infinity (including the circular points), and a certified
curvature-asymptotics probe for hyperbola-like branches.
"""

import math
from fractions import Fraction

from .errors import (
    CertificateFailure,
    ChartFailure,
    DomainViolation,
    LineComponent,
    ParamSingular,
    SingularPoint,
    UnknownVariable,
    ZeroCurvature,
    ZeroPolynomial,
)
from .poly import (
    MultiPoly,
    dehomogenize,
    homogenize,
    mp_divexact,
    mp_gcd,
    mp_prem,
    parse_poly,
    resultant,
    squarefree_factor,
    squarefree_part,
)
from .points import sign_at, solve_bivariate
from .realroots import isolate_real_roots, sturm_count

Rat = Fraction


def _as_mp(p):
    if isinstance(p, MultiPoly):
        return p
    if isinstance(p, str):
        return parse_poly(p)
    return None


def _eval1(p, name, value):
    """Evaluate a polynomial that depends on `name` only."""
    assignment = {v: Fraction(0) for v in p.vars}
    assignment[name] = Fraction(value)
    return p.eval_at(assignment)


class PlaneCurve:
    """Affine plane curve cut out by a squarefree bivariate polynomial.

    The stored equation is reduced: primitive, squarefree and in
    canonical scale, so repeated factors of the input are dropped
    (the zero set is unchanged) and equal curves compare equal.  The
    projective closure is cached as the homogenization F of f.
    """

    __slots__ = ("f", "F", "d", "xname", "yname", "zname")

    def __init__(self, f, xname="x", yname="y", zname="z"):
        p = _as_mp(f)
        if p is None:
            raise TypeError("curve equation must be a polynomial or string")
        if p.is_zero() or p.is_constant():
            raise ZeroPolynomial("curve equation must be nonconstant")
        extra = set(p.vars) - {xname, yname}
        if extra:
            used = {v for e in p.terms for v, k in zip(p.vars, e) if k}
            bad = extra & used
            if bad:
                raise UnknownVariable(sorted(bad)[0])
            p = p.drop_vars(extra)
        p = p.reorder((xname, yname))
        self.f = squarefree_part(p)
        self.d = self.f.total_degree()
        self.F = homogenize(self.f, zname)
        self.xname = xname
        self.yname = yname
        self.zname = zname

    def eval(self, pt):
        return self.f.eval_at({self.xname: Fraction(pt[0]), self.yname: Fraction(pt[1])})

    def contains(self, pt):
        return self.eval(pt) == 0

    def gradient_at(self, pt):
        a = {self.xname: Fraction(pt[0]), self.yname: Fraction(pt[1])}
        return (
            self.f.derivative(self.xname).eval_at(a),
            self.f.derivative(self.yname).eval_at(a),
        )

    def __eq__(self, other):
        if not isinstance(other, PlaneCurve):
            return NotImplemented
        return self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return f"PlaneCurve({self.f})"


class _RatFun:
    """Univariate rational function num/den with exact evaluation."""

    __slots__ = ("num", "den", "tname")

    def __init__(self, num, den, tname):
        g = mp_gcd(num, den) if not num.is_zero() else None
        if g is not None and not g.is_constant():
            num = mp_divexact(num, g)
            den = mp_divexact(den, g)
        self.num = num
        self.den = den
        self.tname = tname

    def deriv(self):
        t = self.tname
        num = self.num.derivative(t) * self.den - self.num * self.den.derivative(t)
        return _RatFun(num, self.den * self.den, t)

    def eval(self, t0):
        dv = _eval1(self.den, self.tname, t0)
        if dv == 0:
            raise ParamSingular(f"denominator vanishes at t = {t0}")
        return _eval1(self.num, self.tname, t0) / dv


class RationalParam:
    """Rational parametrization t -> (xn(t)/den(t), yn(t)/den(t)).

    The three polynomials are stored with their common factor removed
    and the denominator's leading coefficient positive.  `proper`
    records whether the map is generically one-to-one onto its image.
    """

    __slots__ = ("xn", "yn", "den", "tname", "proper")

    def __init__(self, xn, yn, den=1, proper=True, tname="t"):
        polys = []
        for q in (xn, yn, den):
            p = _as_mp(q)
            if p is None:
                p = MultiPoly.const((tname,), Fraction(q))
            p = p.reorder((tname,))
            polys.append(p)
        xn, yn, den = polys
        if den.is_zero():
            raise ZeroPolynomial("denominator must be nonzero")
        g = den
        for p in (xn, yn):
            if not p.is_zero():
                g = mp_gcd(g, p)
        if not g.is_constant():
            xn, yn, den = mp_divexact(xn, g), mp_divexact(yn, g), mp_divexact(den, g)
        lead = den.lead_coeff_in(tname).constant_value()
        if lead < 0:
            xn, yn, den = -xn, -yn, -den
        self.xn = xn
        self.yn = yn
        self.den = den
        self.tname = tname
        self.proper = bool(proper)

    def x(self):
        return _RatFun(self.xn, self.den, self.tname)

    def y(self):
        return _RatFun(self.yn, self.den, self.tname)

    def value(self, t0):
        return (self.x().eval(t0), self.y().eval(t0))

    def jets(self, t0, order=2):
        """Values of (x, y) and their first `order` derivatives at t0."""
        xs, ys = [], []
        fx, fy = self.x(), self.y()
        for _ in range(order + 1):
            xs.append(fx.eval(t0))
            ys.append(fy.eval(t0))
            fx, fy = fx.deriv(), fy.deriv()
        return xs, ys

    def __repr__(self):
        return f"RationalParam(({self.xn})/({self.den}), ({self.yn})/({self.den}))"


# ---------------------------------------------------------------------
# curvature centers
# ---------------------------------------------------------------------


def curvature_center(curve, pt):
    """Exact center of the osculating circle at a smooth rational point.

    Uses the implicit formulas X = x + f_x(f_x^2+f_y^2)/M and
    Y = y + f_y(f_x^2+f_y^2)/M with the curvature denominator
    M = 2 f_x f_y f_xy - f_y^2 f_xx - f_x^2 f_yy.
    """
    x0, y0 = Fraction(pt[0]), Fraction(pt[1])
    if curve.eval((x0, y0)) != 0:
        raise ValueError("point is not on the curve")
    xn, yn = curve.xname, curve.yname
    a = {xn: x0, yn: y0}
    fx = curve.f.derivative(xn)
    fy = curve.f.derivative(yn)
    gx, gy = fx.eval_at(a), fy.eval_at(a)
    if gx == 0 and gy == 0:
        raise SingularPoint(f"gradient vanishes at {(x0, y0)}")
    gxx = fx.derivative(xn).eval_at(a)
    gxy = fx.derivative(yn).eval_at(a)
    gyy = fy.derivative(yn).eval_at(a)
    m = 2 * gx * gy * gxy - gy * gy * gxx - gx * gx * gyy
    if m == 0:
        raise ZeroCurvature(f"curvature vanishes at {(x0, y0)}")
    g = gx * gx + gy * gy
    return (x0 + gx * g / m, y0 + gy * g / m)


def curvature_center_param(param, t0):
    """Curvature center along a parametrization, at a rational parameter.

    X = x - y'(x'^2+y'^2)/W and Y = y + x'(x'^2+y'^2)/W with the Wronskian
    W = x'y'' - x''y'.
    """
    t0 = Fraction(t0)
    xs, ys = param.jets(t0, 2)
    x0, x1, x2 = xs
    y0, y1, y2 = ys
    if x1 == 0 and y1 == 0:
        raise ParamSingular(f"stationary point at t = {t0}")
    w = x1 * y2 - x2 * y1
    if w == 0:
        raise ZeroCurvature(f"curvature vanishes at t = {t0}")
    s = x1 * x1 + y1 * y1
    return (x0 - y1 * s / w, y0 + x1 * s / w)


def normal_line(obj, at, swapped=False):
    """Normal line at a smooth point, as the pair (u, v) of y + ux + v = 0.

    With swapped=True the line is reported in the other affine chart of
    the dual plane, as x + uy + v = 0; ChartFailure signals that the
    requested chart misses the line (vertical normal in the standard
    chart, horizontal one in the swapped chart).

    Accepts a PlaneCurve with a rational point, or a RationalParam with
    a rational parameter value.
    """
    if isinstance(obj, RationalParam):
        t0 = Fraction(at)
        xs, ys = obj.jets(t0, 1)
        x0, x1 = xs
        y0, y1 = ys
        if x1 == 0 and y1 == 0:
            raise ParamSingular(f"stationary point at t = {t0}")
        if not swapped:
            if y1 == 0:
                raise ChartFailure("vertical normal: y' = 0")
            return (x1 / y1, -(x0 * x1 + y0 * y1) / y1)
        if x1 == 0:
            raise ChartFailure("horizontal normal: x' = 0")
        return (y1 / x1, -(x0 * x1 + y0 * y1) / x1)
    x0, y0 = Fraction(at[0]), Fraction(at[1])
    if obj.eval((x0, y0)) != 0:
        raise ValueError("point is not on the curve")
    gx, gy = obj.gradient_at((x0, y0))
    if gx == 0 and gy == 0:
        raise SingularPoint(f"gradient vanishes at {(x0, y0)}")
    if not swapped:
        if gx == 0:
            raise ChartFailure("vertical normal: f_x = 0")
        return (-gy / gx, (x0 * gy - y0 * gx) / gx)
    if gy == 0:
        raise ChartFailure("horizontal normal: f_y = 0")
    return (-gx / gy, (y0 * gx - x0 * gy) / gy)


# ---------------------------------------------------------------------
# inflection locus
# ---------------------------------------------------------------------


def hessian_det(F, names):
    """Determinant of the 3x3 matrix of second partials of F."""
    a, b, c = names
    fa, fb, fc = (F.derivative(v) for v in (a, b, c))
    maa, mab, mac = fa.derivative(a), fa.derivative(b), fa.derivative(c)
    mbb, mbc = fb.derivative(b), fb.derivative(c)
    mcc = fc.derivative(c)
    return (
        maa * (mbb * mcc - mbc * mbc)
        - mab * (mab * mcc - mbc * mac)
        + mac * (mab * mbc - mbb * mac)
    )


def _shared_root_count(a, b, name):
    """Number of common roots of two squarefree univariate polynomials."""
    g = mp_gcd(a, b)
    return g.degree_in(name) if not g.is_constant() else 0


def _intersections_off_singular(curve, H):
    """Intersection count with multiplicity of F and the form H, omitting
    the contributions at singular points of the curve.

    Moves every intersection into the affine chart with a certified
    projective change, then reads local multiplicities off resultant
    root multiplicities.  A bad shear can only merge fibers and inflate
    the singular contribution, so the count is the maximum over shears,
    accepted once two shears agree on it.
    """
    xn, yn, zn = curve.xname, curve.yname, curve.zname
    d = curve.d
    degh = H.total_degree()
    bezout = d * degh
    frame = (xn, yn, zn)
    zvar = MultiPoly.var(frame, zn)
    xvar = MultiPoly.var(frame, xn)
    yvar = MultiPoly.var(frame, yn)
    ft = ht = None
    for al, be in ((0, 0), (1, 2), (-1, 3), (2, 5), (-3, -7), (5, 11)):
        repl = zvar - al * xvar - be * yvar
        cf = curve.F.reorder(frame).subs_poly(zn, repl)
        ch = H.reorder(frame).subs_poly(zn, repl)
        if mp_gcd(cf.partial_eval(zn, 0), ch.partial_eval(zn, 0)).is_constant():
            ft, ht = cf, ch
            break
    if ft is None:
        raise CertificateFailure("no admissible chart keeps all intersections affine")
    g0 = dehomogenize(ft, zn).reorder((xn, yn))
    h0 = dehomogenize(ht, zn).reorder((xn, yn))
    xv = MultiPoly.var((xn, yn), xn)
    yv = MultiPoly.var((xn, yn), yn)
    seen = []
    for lam in (0, 1, -1, 2, -3, 5, -7, 3, 4, 6):
        g = g0.subs_poly(xn, xv + lam * yv)
        h = h0.subs_poly(xn, xv + lam * yv)
        if g.degree_in(yn) != d or not g.lead_coeff_in(yn).is_constant():
            continue
        if h.degree_in(yn) != degh or not h.lead_coeff_in(yn).is_constant():
            continue
        r = resultant(g, h, yn)
        if r.degree_in(xn) != bezout:
            continue
        c1 = resultant(g, g.derivative(xn), yn)
        c2 = resultant(g, g.derivative(yn), yn)
        if c1.is_zero() or c2.is_zero():
            continue
        w = mp_gcd(c1, c2)
        drop = 0
        if not w.is_constant():
            w = squarefree_part(w)
            for base, mult in squarefree_factor(r).factors:
                drop += mult * _shared_root_count(w, base, xn)
        val = bezout - drop
        if val in seen:
            return val
        seen.append(val)
    if seen:
        best = max(seen)
        raise CertificateFailure(f"shears disagree on the singular contribution: {sorted(seen)}")
    raise CertificateFailure("no shear kept the elimination nondegenerate")


def inflection_locus(curve):
    """Hessian curve, complex inflection count, and real affine inflections.

    Returns (hessian_curve, count, real_points).  The count is the
    intersection number of the curve with its Hessian away from singular
    points of the curve; for a conic the Hessian is a nonzero constant
    and the result is (None, 0, []).  Real inflections are the real
    affine smooth points of the curve lying on the Hessian.
    """
    if curve.d < 2:
        raise ValueError("inflection locus needs degree at least 2")
    xn, yn, zn = curve.xname, curve.yname, curve.zname
    H = hessian_det(curve.F, (xn, yn, zn))
    if H.is_zero():
        raise LineComponent("Hessian vanishes identically: the curve is a union of lines")
    h = dehomogenize(H, zn).reorder((xn, yn))
    if h.is_constant():
        return (None, 0, [])
    if not mp_gcd(curve.f, h).is_constant():
        raise LineComponent("curve and Hessian share a component")
    count = _intersections_off_singular(curve, H)
    pts, _ = solve_bivariate(curve.f, squarefree_part(h))
    fx = curve.f.derivative(xn)
    fy = curve.f.derivative(yn)
    real = [p for p in pts if sign_at(fx, p) != 0 or sign_at(fy, p) != 0]
    return (PlaneCurve(h, xn, yn, zn), count, real)


# ---------------------------------------------------------------------
# behavior at the line at infinity
# ---------------------------------------------------------------------


class InfinityPoint:
    """One conjugacy class of points where the closure meets z = 0.

    kind is "axis" for (1:0:0), "rational" or "real" for a single real
    point (alpha:1:0), "complex" for a class of non-real conjugate
    points, or "circular" for the pair (1:i:0), (1:-i:0).  `count` is
    the number of points covered, `ip` the intersection multiplicity
    with the line at infinity at each of them, `mp` the multiplicity of
    the curve there.
    """

    __slots__ = ("kind", "alpha", "defining", "count", "ip", "mp")

    def __init__(self, kind, alpha, defining, count, ip, mp):
        self.kind = kind
        self.alpha = alpha
        self.defining = defining
        self.count = count
        self.ip = ip
        self.mp = mp

    def __repr__(self):
        tag = self.alpha if self.alpha is not None else self.kind
        return f"InfinityPoint({tag}, i={self.ip}, m={self.mp}, n={self.count})"


class CircularInfo:
    """Membership and multiplicities at the circular points (1:±i:0)."""

    __slots__ = ("on_curve", "i", "m")

    def __init__(self, on_curve, i, m):
        self.on_curve = on_curve
        self.i = i
        self.m = m

    def __repr__(self):
        return f"CircularInfo(on_curve={self.on_curve}, i={self.i}, m={self.m})"


class AtInfinityReport:
    """All intersections of the projective closure with the line z = 0."""

    __slots__ = ("curve", "points", "circular")

    def __init__(self, curve, points, circular):
        self.curve = curve
        self.points = points
        self.circular = circular

    def total_intersection(self):
        return sum(p.count * p.ip for p in self.points)

    def __repr__(self):
        return f"AtInfinityReport({self.points}, {self.circular})"


def _root_multiplicity(p, alpha, defining, name):
    """Multiplicity of a real algebraic number as a root of p.

    alpha is a Fraction, or an IsolatingInterval whose root is isolated
    for the squarefree polynomial `defining`.
    """
    if p.is_zero():
        return None
    for base, mult in squarefree_factor(p).factors:
        if base.degree_in(name) <= 0:
            continue
        if isinstance(alpha, Fraction):
            if _eval1(base, name, alpha) == 0:
                return mult
        else:
            g = mp_gcd(base, defining)
            if not g.is_constant() and sturm_count(g, alpha.lo, alpha.hi) == 1:
                return mult
    return 0


def _class_valuation(p, base):
    """Largest k with base^k dividing p (p nonzero)."""
    k = 0
    name = next(v for v in base.vars if base.degree_in(v) > 0)
    while p.degree_in(name) >= base.degree_in(name):
        if not mp_prem(p, base, name).is_zero():
            return k
        p = mp_divexact(p, base)
        k += 1
    return k


def _trailing_order(p, name):
    """Lowest exponent of `name` among the terms of p (p nonzero)."""
    i = p.vars.index(name)
    return min(e[i] for e in p.terms)


def at_infinity(curve):
    """Intersections of the curve's closure with the line at infinity.

    Intersection multiplicities i_p are root multiplicities of the top
    form; curve multiplicities m_p are jet orders in the corresponding
    affine chart, computed per conjugacy class by exact divisibility.
    """
    xn, yn, zn = curve.xname, curve.yname, curve.zname
    d = curve.d
    frame = curve.F.vars
    top = curve.F.partial_eval(zn, 0)
    # chart y=1 for points (alpha:1:0): coefficient polys in z
    ychart = curve.F.partial_eval(yn, 1)
    gz = [c.drop_vars({yn, zn}) for c in ychart.coeffs_in(zn)]
    t = top.partial_eval(yn, 1).drop_vars({yn, zn})
    points = []
    dt = t.degree_in(xn)
    if dt < d:
        # the point (1:0:0), in the chart x=1
        xchart = curve.F.partial_eval(xn, 1)
        hz = [c.drop_vars({xn, zn}) for c in xchart.coeffs_in(zn)]
        m = min(
            j + _trailing_order(hj, yn) for j, hj in enumerate(hz) if not hj.is_zero()
        )
        points.append(InfinityPoint("axis", None, None, 1, d - dt, m))
    circ = None
    xunit = MultiPoly.from_int_list((xn,), xn, [1, 0, 1])
    for base, mult in squarefree_factor(t).factors:
        if base.degree_in(xn) <= 0:
            continue
        work = base
        if work.degree_in(xn) >= 2 and mp_prem(work, xunit, xn).is_zero():
            # the circular pair (1:±i:0), handled over Q(i) as x^2+1
            work = mp_divexact(work, xunit)
            xchart = curve.F.partial_eval(xn, 1)
            yunit = MultiPoly.from_int_list((yn,), yn, [1, 0, 1])
            hz = [c.drop_vars({xn, zn}) for c in xchart.coeffs_in(zn)]
            m = min(
                j + _class_valuation(hj, yunit)
                for j, hj in enumerate(hz)
                if not hj.is_zero()
            )
            circ = CircularInfo(True, mult, m)
            points.append(InfinityPoint("circular", None, xunit, 2, mult, m))
        roots = isolate_real_roots(work) if work.degree_in(xn) > 0 else []
        nreal = len(roots)
        for iv in roots:
            if iv.lo == iv.hi:
                alpha = iv.lo
                kind = "rational"
            else:
                alpha = iv
                kind = "real"
            m = min(
                j + _root_multiplicity(gj, alpha, work, xn)
                for j, gj in enumerate(gz)
                if not gj.is_zero()
            )
            points.append(InfinityPoint(kind, alpha, work, 1, mult, m))
        npairs = (work.degree_in(xn) - nreal) // 2
        if npairs > 0:
            # non-real classes: class-level jet order by divisibility
            m = min(
                j + _class_valuation(gj, work)
                for j, gj in enumerate(gz)
                if not gj.is_zero()
            )
            points.append(
                InfinityPoint("complex", None, work, 2 * npairs, mult, m)
            )
    if circ is None:
        circ = CircularInfo(False, 0, 0)
    report = AtInfinityReport(curve, points, circ)
    if report.total_intersection() != d:
        raise CertificateFailure("intersection multiplicities at infinity do not sum to d")
    return report


# ---------------------------------------------------------------------
# curvature asymptotics near a smoothed corner
# ---------------------------------------------------------------------


class CurvatureProbe:
    """Hyperbola-like branch y = a*sqrt(x^2 + eps^2*(1 + O(x, eps))).

    Carries the perturbation O (vanishing at the origin) and the slope
    a > 0, together with the derived limit profile
    Psi(x) = 1 + O(x,0) - x*O'(x,0) + x^2*O''(x,0)/2,
    which the normalized curvature ratio approaches as eps -> 0.
    """

    __slots__ = ("O", "a", "psi", "xname", "ename")

    def __init__(self, O, a=1, xname="x", ename="eps"):
        p = _as_mp(O)
        if p is None:
            p = MultiPoly.const((xname, ename), Fraction(O))
        extra = set(p.vars) - {xname, ename}
        if extra:
            raise UnknownVariable(sorted(extra)[0])
        p = p.reorder((xname, ename))
        if p.eval_at({xname: Fraction(0), ename: Fraction(0)}) != 0:
            raise DomainViolation("O must vanish at the origin")
        a = Fraction(a)
        if a <= 0:
            raise ValueError("slope a must be positive")
        o0 = p.partial_eval(ename, 0).drop_vars({ename})
        x = MultiPoly.var((xname,), xname)
        o1 = o0.derivative(xname)
        o2 = o1.derivative(xname)
        self.O = p
        self.a = a
        self.psi = 1 + o0 - x * o1 + Fraction(1, 2) * x * x * o2
        self.xname = xname
        self.ename = ename

    def __repr__(self):
        return f"CurvatureProbe(O={self.O}, a={self.a})"


def _sqrt_enclosure(q, bits):
    """Certified [lo, hi] around sqrt(q) for a nonnegative rational q."""
    n = q.numerator * q.denominator
    s = 1 << bits
    r = math.isqrt(n * s * s)
    den = q.denominator * s
    if r * r == n * s * s:
        v = Fraction(r, den)
        return v, v
    return Fraction(r, den), Fraction(r + 1, den)


_RATIO_TOL = Fraction(1, 10**6)


def curvature_asymptotics(probe, eps, grid, bits=256):
    """Ratio of true to model curvature along the branch, with Psi.

    For each grid point x returns (x, K/k, Psi(x)) where K is the signed
    curvature of y = a*sqrt(x^2 + eps^2*(1+O(x,eps))) and
    k = a*eps^2/(eps^2 + (1+a^2)x^2)^(3/2) is the model curvature of the
    exact hyperbola.  The ratio is certified to within 10^-6 by interval
    arithmetic (precision starts at `bits` and doubles as needed); Psi
    is exact.
    """
    eps = Fraction(eps)
    if eps == 0:
        raise DomainViolation("eps must be nonzero")
    xn, en = probe.xname, probe.ename
    oe = probe.O.partial_eval(en, eps).drop_vars({en})
    x = MultiPoly.var((xn,), xn)
    a2 = probe.a * probe.a
    s = a2 * (x * x + eps * eps * (1 + oe))
    s1 = s.derivative(xn)
    s2 = s1.derivative(xn)
    out = []
    for g in grid:
        g = Fraction(g)
        dom = 1 + _eval1(oe, xn, g)
        if dom <= 0:
            raise DomainViolation(f"1 + O(x, eps) = {dom} at x = {g}")
        s0v = _eval1(s, xn, g)
        s1v = _eval1(s1, xn, g)
        s2v = _eval1(s2, xn, g)
        amp = 2 * (2 * s2v * s0v - s1v * s1v) / (probe.a * eps * eps)
        rad = (eps * eps + (1 + a2) * g * g) / (4 * s0v + s1v * s1v)
        c = amp * rad
        if c == 0:
            ratio = Fraction(0)
        else:
            b = bits
            while True:
                lo, hi = _sqrt_enclosure(rad, b)
                if abs(c) * (hi - lo) <= _RATIO_TOL:
                    break
                b *= 2
            ratio = c * (lo + hi) / 2
        out.append((g, ratio, _eval1(probe.psi, xn, g)))
    return out
