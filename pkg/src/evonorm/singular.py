"""Singular points of plane curves: location, classification, tallies.

Real singular points are located by the exact bivariate solver and
classified through certified sign tests on jet coefficients; points at
infinity go through the standard charts of the projective closure.
Vertex and diameter counts follow the cusp/crunode dictionary on the
evolute and the curve of normals.
"""

from fractions import Fraction
from math import factorial

from .errors import (
    CertificateFailure,
    CommonComponent,
    NotSingular,
)
from .poly import MultiPoly, mp_gcd, squarefree_part
from .realroots import DEFAULT_BUDGET, isolate_real_roots
from .points import (
    AlgebraicPoint,
    _Alg1,
    _clear_int,
    _fr_list,
    sign_at,
    solve_bivariate,
)
from .curves import PlaneCurve
from .evolute import evolute_implicit, normals_implicit, _curvature_parts

A1_CRUNODE = "A1_crunode"
A1_ACNODE = "A1_acnode"
A2_CUSP = "A2_cusp"
ORDINARY = "ordinary_m_uple"
UNCLASSIFIED = "unclassified"


class SingularityRecord:
    """One singular point: location, multiplicity, branches, type.

    delta and kappa may be given explicitly (profiles of singularities
    the classifier does not resolve, complex points, tagged types like
    E6); otherwise they follow from the type.  kappa is this point's
    contribution to the class deficit, m minus the number of complex
    branches.
    """

    __slots__ = ("location", "m", "r", "type", "at_infinity",
                 "_delta", "_kappa")

    def __init__(self, location, m, r, type, at_infinity=False,
                 delta=None, kappa=None):
        self.location = location
        self.m = m
        self.r = r
        self.type = type
        self.at_infinity = at_infinity
        self._delta = delta
        self._kappa = kappa

    @property
    def delta(self):
        """Local delta invariant where the type determines it."""
        if self._delta is not None:
            return self._delta
        if self.type in (A1_CRUNODE, A1_ACNODE, A2_CUSP):
            return 1
        if self.type == ORDINARY:
            return self.m * (self.m - 1) // 2
        return None

    @property
    def kappa(self):
        """Class deficit m minus complex branch count, when known."""
        if self._kappa is not None:
            return self._kappa
        if self.type == A2_CUSP:
            return 1
        if self.type in (A1_CRUNODE, A1_ACNODE, ORDINARY):
            return 0
        return None

    def __repr__(self):
        where = "inf" if self.at_infinity else "aff"
        return (f"SingularityRecord({self.type}, m={self.m}, r={self.r}, "
                f"{where}, at {self.location})")


class SingularProfile:
    """All singularity records of a curve plus the complex tally.

    complex_count is the multiplicity-weighted number of affine complex
    solutions of the critical system {f_x, f_y} (from resultant
    degrees); None when that system has a one-dimensional component.
    """

    __slots__ = ("records", "complex_count", "source")

    def __init__(self, records, complex_count, source="computed"):
        self.records = list(records)
        self.complex_count = complex_count
        self.source = source

    def affine(self):
        return [r for r in self.records if not r.at_infinity]

    def at_infinity(self):
        return [r for r in self.records if r.at_infinity]

    def __repr__(self):
        return f"SingularProfile({len(self.records)} records, {self.source})"


# ---------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------


def _classify_rational(f, xn, yn, a, b, location, at_inf):
    """Classification by exact Taylor shift to the origin."""
    vx = MultiPoly.var(f.vars, xn) + MultiPoly.const(f.vars, a)
    vy = MultiPoly.var(f.vars, yn) + MultiPoly.const(f.vars, b)
    sh = f.subs_poly(xn, vx).subs_poly(yn, vy)
    ix, iy = sh.vars.index(xn), sh.vars.index(yn)
    levels = {}
    for e, c in sh.terms.items():
        levels.setdefault(e[ix] + e[iy], {})[(e[ix], e[iy])] = c
    if 0 in levels:
        raise NotSingular("point is not on the curve")
    m = min(levels)
    if m < 2:
        raise NotSingular("smooth point")
    if m == 2:
        q = levels[2]
        A = q.get((2, 0), Fraction(0))
        B = q.get((1, 1), Fraction(0))
        C = q.get((0, 2), Fraction(0))
        disc = B * B - 4 * A * C
        if disc > 0:
            return SingularityRecord(location, 2, 2, A1_CRUNODE, at_inf)
        if disc < 0:
            return SingularityRecord(location, 2, 0, A1_ACNODE, at_inf)
        cub = levels.get(3, {})
        if A != 0:
            u0, v0 = -B, 2 * A
        else:
            u0, v0 = Fraction(1), Fraction(0)
        t = sum(
            c * u0**i * v0**j for (i, j), c in cub.items()
        )
        if t != 0:
            return SingularityRecord(location, 2, 1, A2_CUSP, at_inf)
        return SingularityRecord(location, 2, None, UNCLASSIFIED, at_inf)
    # m >= 3: tangent-cone analysis of the degree-m binary form
    q = levels[m]
    pmult = min(i for (i, _) in q)
    uni = MultiPoly(
        ("@t",), {(j,): c for (i, j), c in q.items()}
    )
    sqfree = pmult <= 1 and mp_gcd(uni, uni.derivative("@t")).is_constant()
    if not sqfree:
        return SingularityRecord(location, m, None, UNCLASSIFIED, at_inf)
    r = len(isolate_real_roots(uni)) + (1 if pmult == 1 else 0)
    return SingularityRecord(location, m, r, ORDINARY, at_inf)


def _classify_signs(f, xn, yn, signf, location, at_inf, budget):
    """Classification at a point known only through a sign oracle."""
    if signf(f, budget) != 0:
        raise NotSingular("point is not on the curve")
    derivs = {(0, 0): f}

    def d(i, j):
        if (i, j) not in derivs:
            if i:
                derivs[(i, j)] = d(i - 1, j).derivative(xn)
            else:
                derivs[(i, j)] = d(i, j - 1).derivative(yn)
        return derivs[(i, j)]

    m = None
    for k in range(1, f.total_degree() + 1):
        if any(signf(d(i, k - i), budget) != 0 for i in range(k + 1)):
            m = k
            break
    if m is None:
        raise CertificateFailure("vanishing jet of every order")
    if m < 2:
        raise NotSingular("smooth point")
    if m > 2:
        return SingularityRecord(location, m, None, UNCLASSIFIED, at_inf)
    fxx, fxy, fyy = d(2, 0), d(1, 1), d(0, 2)
    disc = fxy * fxy - fxx * fyy
    s = signf(disc, budget)
    if signf(disc, 2 * budget) != s:
        raise CertificateFailure("discriminant sign unstable under refinement")
    if s > 0:
        return SingularityRecord(location, 2, 2, A1_CRUNODE, at_inf)
    if s < 0:
        return SingularityRecord(location, 2, 0, A1_ACNODE, at_inf)
    if signf(fxx, budget) != 0:
        t = MultiPoly.zero(f.vars)
        for i in range(4):
            j = 3 - i
            coef = Fraction(1, factorial(i) * factorial(j))
            t = t + coef * d(i, j) * (-fxy) ** i * fxx**j
    else:
        t = d(3, 0)
    if signf(t, budget) != 0:
        return SingularityRecord(location, 2, 1, A2_CUSP, at_inf)
    return SingularityRecord(location, 2, None, UNCLASSIFIED, at_inf)


def classify_real_singularity(curve, pt, budget=DEFAULT_BUDGET):
    """Certified type of a singular point of the curve.

    pt is a rational pair or an AlgebraicPoint.  Multiplicity is the
    order of the lowest nonvanishing jet; double points split by the
    sign of the tangent-cone discriminant f_xy^2 - f_xx f_yy, with the
    degenerate case promoted to A2 exactly when the cubic term misses
    the double tangent direction.  Higher multiplicities are ordinary
    when the tangent cone is squarefree; classification at points with
    irrational coordinates stops there (unclassified otherwise).
    """
    xn, yn = curve.xname, curve.yname
    f = curve.f
    if isinstance(pt, AlgebraicPoint):
        if isinstance(pt.x, Fraction) and isinstance(pt.y, Fraction):
            return _classify_rational(f, xn, yn, pt.x, pt.y, pt, False)

        def signf(q, b):
            return sign_at(q, pt, b)

        return _classify_signs(f, xn, yn, signf, pt, False, budget)
    a, b = Fraction(pt[0]), Fraction(pt[1])
    return _classify_rational(f, xn, yn, a, b, (a, b), False)


# ---------------------------------------------------------------------
# locating singular points
# ---------------------------------------------------------------------


def _affine_singular_points(curve, budget):
    f = curve.f
    fx = f.derivative(curve.xname)
    fy = f.derivative(curve.yname)
    try:
        pts, cc = solve_bivariate(fx, fy, budget)
        on_curve = [p for p in pts if sign_at(f, p, budget) == 0]
        return on_curve, cc
    except CommonComponent:
        pass
    # the critical system has a one-dimensional part (off the curve,
    # since f is squarefree); intersect with the curve instead
    try:
        pts, _ = solve_bivariate(f, fx, budget)
        on_curve = [p for p in pts if sign_at(fy, p, budget) == 0]
    except CommonComponent:
        pts, _ = solve_bivariate(f, fy, budget)
        on_curve = [p for p in pts if sign_at(fx, p, budget) == 0]
    return on_curve, None


def _infinity_records(curve, budget):
    F = curve.F
    xn, yn, zn = curve.xname, curve.yname, curve.zname
    parts = [F.derivative(n) for n in (xn, yn, zn)]
    out = []
    # directions (1 : t : 0)
    restr = []
    for p in parts:
        r = p.partial_eval(zn, 0).partial_eval(xn, 1).drop_vars({xn, zn})
        if not r.is_zero():
            restr.append(r)
    if not restr:
        raise CertificateFailure("gradient vanishes identically on z=0")
    g = restr[0]
    for p in restr[1:]:
        g = mp_gcd(g, p)
    if not g.is_constant():
        chart = F.partial_eval(xn, 1).drop_vars({xn})
        for iv in isolate_real_roots(squarefree_part(g)):
            if iv.lo == iv.hi:
                rec = _classify_rational(
                    chart, yn, zn, iv.lo, Fraction(0), (1, iv.lo, 0), True
                )
            else:
                alg = _Alg1.from_interval(iv)

                def signf(q, b, alg=alg):
                    u = q.partial_eval(zn, 0).drop_vars({zn})
                    return alg.sign_of(_clear_int(_fr_list(u, yn)), b)

                rec = _classify_signs(
                    chart, yn, zn, signf, (1, iv, 0), True, budget
                )
            out.append(rec)
    at = {xn: 0, yn: 1, zn: 0}
    if all(p.eval_at(at) == 0 for p in parts):
        chart2 = F.partial_eval(yn, 1).drop_vars({yn})
        out.append(
            _classify_rational(
                chart2, xn, zn, Fraction(0), Fraction(0), (0, 1, 0), True
            )
        )
    return out


def singular_points(curve, budget=DEFAULT_BUDGET):
    """Locate and classify all real singular points, count complex ones.

    Affine points come from the certified solver on {f_x = f_y = 0}
    filtered by membership in f = 0; the two standard charts cover the
    line at infinity.  The complex tally is the multiplicity-weighted
    solution count of the critical system.
    """
    pts, cc = _affine_singular_points(curve, budget)
    records = [classify_real_singularity(curve, p, budget) for p in pts]
    records.extend(_infinity_records(curve, budget))
    return SingularProfile(records, cc, "computed")


# ---------------------------------------------------------------------
# vertices and diameters
# ---------------------------------------------------------------------


def count_vertices(curve, budget=DEFAULT_BUDGET):
    """Vertices via the evolute: real cusps of E, affine and infinite.

    Returns (affine_real_cusps, infinity_cusps); the headline count is
    the affine one.
    """
    e = evolute_implicit(curve).curve
    prof = singular_points(e, budget)
    affine = sum(
        1 for r in prof.records if r.type == A2_CUSP and not r.at_infinity
    )
    inf = sum(1 for r in prof.records if r.type == A2_CUSP and r.at_infinity)
    return affine, inf


def vertex_polynomial(curve):
    """Numerator of the tangential derivative of the signed curvature.

    With kappa = M / G^(3/2) and D_T = -f_y d/dx + f_x d/dy, critical
    points of curvature along the curve satisfy
    V = 2 D_T(M) G - 3 M D_T(G) = 0.
    """
    xn, yn = curve.xname, curve.yname
    fx, fy, m, g = _curvature_parts(curve)

    def dt(h):
        return -fy * h.derivative(xn) + fx * h.derivative(yn)

    return 2 * dt(m) * g - 3 * m * dt(g)


def count_vertices_direct(curve, budget=DEFAULT_BUDGET):
    """Vertices without the evolute: curvature-critical smooth points."""
    f = curve.f
    fx = f.derivative(curve.xname)
    fy = f.derivative(curve.yname)
    v = vertex_polynomial(curve)
    pts, _ = solve_bivariate(f, v, budget)
    count = 0
    for p in pts:
        if sign_at(fx, p, budget) != 0 or sign_at(fy, p, budget) != 0:
            count += 1
    return count


def count_diameters(curve, budget=DEFAULT_BUDGET, profile=None):
    """Diameters via the curve of normals: real branch pairs.

    Sums C(r_p, 2) over the real singular points of the projective
    closure of N, excluding the single point dual to the line at
    infinity (the (0:1:0) direction of the (u, v) chart).  A
    supplemental profile may supply branch counts for records the
    classifier leaves open.
    """
    n = normals_implicit(curve).curve
    prof = singular_points(n, budget)
    total = 0
    for rec in prof.records:
        if rec.at_infinity and rec.location == (0, 1, 0):
            continue
        r = rec.r
        if r is None and profile is not None:
            r = _lookup_branches(profile, rec)
        if r is None:
            if rec.type == UNCLASSIFIED:
                raise CertificateFailure(
                    f"unclassified singularity of N at {rec.location}; "
                    "supply a profile with branch counts"
                )
            continue
        total += r * (r - 1) // 2
    return total


def _lookup_branches(profile, rec):
    for sup in profile.records:
        if _same_location(sup.location, rec.location) and sup.r is not None:
            return sup.r
    return None


def _same_location(a, b):
    if isinstance(a, AlgebraicPoint) and isinstance(b, tuple) and len(b) == 2:
        a, b = b, a
    if isinstance(b, AlgebraicPoint) and isinstance(a, tuple) and len(a) == 2:
        if (isinstance(b.x, Fraction) and isinstance(b.y, Fraction)
                and all(isinstance(c, (int, Fraction)) for c in a)):
            return (Fraction(a[0]), Fraction(a[1])) == (b.x, b.y)
        return False
    return a == b


def supplement_profile(profile, extras):
    """Merge user-supplied singularity records into a computed profile.

    An extra at the location of an existing record fills in that
    record's open fields (r, type tag, delta, kappa); an extra at a new
    location is appended, which is how complex points and tagged
    singularities enter the invariant bookkeeping.
    """
    records = list(profile.records)
    for extra in extras:
        for i, rec in enumerate(records):
            if _same_location(rec.location, extra.location):
                records[i] = SingularityRecord(
                    rec.location,
                    rec.m,
                    extra.r if rec.r is None else rec.r,
                    extra.type if rec.type == UNCLASSIFIED else rec.type,
                    rec.at_infinity,
                    delta=extra._delta,
                    kappa=extra._kappa,
                )
                break
        else:
            records.append(extra)
    return SingularProfile(records, profile.complex_count, "supplemented")
