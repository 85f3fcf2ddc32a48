"""Evolutes, curves of normals, and projective duals by exact elimination.

Each implicit construction clears the defining rational maps into
polynomial systems, eliminates the curve variables with resultants, and
validates every factor of the eliminant against certified witness
samples of the curve, so extraneous elimination components are dropped
with recorded evidence.
"""

from fractions import Fraction

from .errors import (
    CertificateFailure,
    CircleComponent,
    DegenerateEvolute,
    EliminationMismatch,
    FlatCurve,
    LineComponent,
    LineInput,
    ZeroPolynomial,
)
from .poly import (
    MultiPoly,
    homogenize,
    mp_content_in,
    mp_divexact,
    mp_gcd,
    resultant,
    squarefree_factor,
    squarefree_part,
)
from .curves import PlaneCurve, RationalParam, _RatFun
from .realroots import isolate_real_roots, sturm_count

DEGREE_CAP = 400
_WITNESS_KEEP = 3
_FIBER_VALUES = [
    Fraction(v)
    for v in (0, 1, -1, 2, -2, 3, -3, Fraction(1, 2), Fraction(-1, 2), 4, -4,
              Fraction(3, 2), Fraction(-3, 2), 5, -5, Fraction(1, 3),
              Fraction(-1, 3), 6, -6, 7, -7, Fraction(5, 2), Fraction(-5, 2),
              8, -8, 9, -9, 10, -10)
]


class DroppedFactor:
    """A factor of the raw eliminant rejected by witness sampling."""

    __slots__ = ("factor", "multiplicity", "evidence")

    def __init__(self, factor, multiplicity, evidence):
        self.factor = factor
        self.multiplicity = multiplicity
        self.evidence = evidence

    def __repr__(self):
        return f"DroppedFactor({self.factor}, x{self.multiplicity}: {self.evidence})"


class EliminationResult:
    """Validated eliminant together with its removal audit trail.

    curve: the kept squarefree product, as a PlaneCurve in the output
    variables; raw_eliminant: the full resultant before filtering;
    dropped_factors: rejected factors with per-factor evidence;
    validation: notes about the witness checks that justified keeping
    the rest.
    """

    __slots__ = ("curve", "raw_eliminant", "dropped_factors", "validation")

    def __init__(self, curve, raw_eliminant, dropped_factors, validation):
        self.curve = curve
        self.raw_eliminant = raw_eliminant
        self.dropped_factors = dropped_factors
        self.validation = validation

    def __repr__(self):
        return f"EliminationResult({self.curve.f})"


# ---------------------------------------------------------------------
# modular arithmetic in the fiber ring Q[y]/(q)
# ---------------------------------------------------------------------


def _fr_coeffs(p, name):
    """Dense ascending Fraction coefficients of a univariate polynomial."""
    d = p.degree_in(name)
    out = [Fraction(0)] * (d + 1)
    i = p.vars.index(name)
    for e, c in p.terms.items():
        out[e[i]] = c
    return out


def _mod_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_reduce(a, q):
    a = list(a)
    dq = len(q) - 1
    lead = q[-1]
    while len(a) - 1 >= dq:
        f = a[-1] / lead
        if f:
            off = len(a) - 1 - dq
            for i in range(dq + 1):
                a[off + i] -= f * q[i]
        a.pop()
    return _mod_trim(a)

def _mod_mul(a, b, q):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                if bv:
                    out[i + j] += av * bv
    return _mod_reduce(out, q)


def _mod_pow_table(base, n, q):
    out = [[Fraction(1)]]
    cur = [Fraction(1)]
    for _ in range(n):
        cur = _mod_mul(cur, base, q)
        out.append(cur)
    return out


def _mod_to_poly(a, name):
    return MultiPoly((name,), {(i,): c for i, c in enumerate(a) if c})


def _vanishes_at(rpoly, defining, interval, name):
    """Does the residue polynomial vanish at the isolated root?"""
    if not rpoly:
        return True
    r = _mod_to_poly(rpoly, name)
    g = mp_gcd(r, defining)
    if g.is_constant():
        return False
    if interval.lo == interval.hi:
        return _fr_eval(g, name, interval.lo) == 0
    return sturm_count(g, interval.lo, interval.hi) == 1


def _fr_eval(p, name, v):
    acc = Fraction(0)
    for c in reversed(_fr_coeffs(p, name)):
        acc = acc * v + c
    return acc


class _Witness:
    """One certified fiber point of the curve with image data mod q."""

    __slots__ = ("label", "defining", "interval", "name", "powers", "den_pows")

    def __init__(self, label, defining, interval, name, powers, den_pows):
        self.label = label
        self.defining = defining
        self.interval = interval
        self.name = name
        self.powers = powers
        self.den_pows = den_pows


def _iter_witnesses(f, xname, yname, images, max_deg):
    """Certified curve samples with image numerator/denominator powers.

    images = (pnum, qnum, den): the map is (pnum/den, qnum/den).  Fibers
    are cut with x = c and y = c lines alternately; each real fiber root
    whose denominator does not vanish yields one witness carrying power
    tables of the three polynomials modulo the fiber polynomial.
    """
    pnum, qnum, den = images
    for c in _FIBER_VALUES:
        for fiber_var, free_var in ((xname, yname), (yname, xname)):
            slice_ = f.partial_eval(fiber_var, c)
            if slice_.degree_in(free_var) <= 0:
                continue
            q = squarefree_part(slice_.drop_vars({fiber_var}))
            if q.degree_in(free_var) <= 0:
                continue
            qc = _fr_coeffs(q, free_var)
            dvals = _fr_coeffs(
                den.partial_eval(fiber_var, c).drop_vars({fiber_var}), free_var
            )
            dmod = _mod_reduce(dvals, qc)
            pvals = _mod_reduce(
                _fr_coeffs(pnum.partial_eval(fiber_var, c).drop_vars({fiber_var}), free_var),
                qc,
            )
            qvals = _mod_reduce(
                _fr_coeffs(qnum.partial_eval(fiber_var, c).drop_vars({fiber_var}), free_var),
                qc,
            )
            roots = isolate_real_roots(q)
            if not roots:
                continue
            ppow = _mod_pow_table(pvals, max_deg, qc)
            qpow = _mod_pow_table(qvals, max_deg, qc)
            dpow = _mod_pow_table(dmod, max_deg, qc)
            for iv in roots:
                if _vanishes_at(dmod, q, iv, free_var):
                    continue
                yield _Witness(
                    (fiber_var, c, (iv.lo, iv.hi)), q, iv, free_var,
                    (ppow, qpow), dpow,
                )


def _factor_hits(base, outnames, wit, qc):
    """Does the factor vanish at the witness's image point?"""
    un, vn = outnames
    k = base.total_degree()
    iu = base.vars.index(un) if un in base.vars else None
    iv = base.vars.index(vn) if vn in base.vars else None
    acc = []
    ppow, qpow = wit.powers
    for e, c in base.terms.items():
        a = e[iu] if iu is not None else 0
        b = e[iv] if iv is not None else 0
        term = [c]
        term = _mod_mul(term, ppow[a], qc)
        term = _mod_mul(term, qpow[b], qc)
        term = _mod_mul(term, wit.den_pows[k - a - b], qc)
        if term:
            n = max(len(acc), len(term))
            acc += [Fraction(0)] * (n - len(acc))
            term += [Fraction(0)] * (n - len(term))
            acc = [x + y for x, y in zip(acc, term)]
    return _vanishes_at(_mod_trim(acc), wit.defining, wit.interval, wit.name)


def _filter_eliminant(raw, f, xname, yname, images, outnames, max_witness=9):
    """Keep the squarefree factors hit by at least 3 witness images."""
    fac = squarefree_factor(raw)
    cand = [(b, m) for b, m in fac.factors if b.total_degree() > 0]
    if not cand:
        return None, [], []
    max_deg = max(b.total_degree() for b, _ in cand)
    hits = [0] * len(cand)
    used = 0
    validation = []
    gen = _iter_witnesses(f, xname, yname, images, max_deg)
    cap = max_witness
    for wit in gen:
        qc = _fr_coeffs(wit.defining, wit.name)
        hit_list = []
        for i, (b, _) in enumerate(cand):
            if _factor_hits(b, outnames, wit, qc):
                hits[i] += 1
                hit_list.append(i)
        used += 1
        validation.append((wit.label, tuple(hit_list)))
        resolved = all(h >= _WITNESS_KEEP or h == 0 for h in hits)
        if used >= cap and not resolved:
            cap = 3 * max_witness
        if used >= cap or (used >= max_witness and resolved):
            break
    kept = []
    dropped = []
    for (b, m), h in zip(cand, hits):
        if h >= _WITNESS_KEEP:
            kept.append(b)
        else:
            dropped.append(
                DroppedFactor(b, m, f"{h} of {used} witness images vanished")
            )
    return kept, dropped, validation


# ---------------------------------------------------------------------
# component preconditions
# ---------------------------------------------------------------------


def _curvature_parts(curve):
    xn, yn = curve.xname, curve.yname
    f = curve.f
    fx = f.derivative(xn)
    fy = f.derivative(yn)
    m = (
        2 * fx * fy * fx.derivative(yn)
        - fy * fy * fx.derivative(xn)
        - fx * fx * fy.derivative(yn)
    )
    g = fx * fx + fy * fy
    return fx, fy, m, g


def _check_line_components(curve, m):
    """Lines are exactly the components on which M vanishes identically."""
    if m.is_zero() or not mp_gcd(curve.f, m).is_constant():
        raise LineComponent("curve contains a line component")


def _is_circle(f, xname, yname):
    if f.total_degree() != 2:
        return False
    cxx = Fraction(0)
    cyy = Fraction(0)
    cxy = Fraction(0)
    for e, c in f.terms.items():
        a = e[f.vars.index(xname)]
        b = e[f.vars.index(yname)]
        if a == 2 and b == 0:
            cxx = c
        elif a == 0 and b == 2:
            cyy = c
        elif a == 1 and b == 1:
            cxy = c
    return cxx != 0 and cxx == cyy and cxy == 0


def _tangential_const_locus(curve, fx, fy, m, g):
    """gcd of f with the tangential derivatives of both center coordinates.

    Components where the curvature-center map is locally constant are
    circles; after the line check this gcd is nonconstant exactly when a
    circle component is present.
    """
    xn, yn = curve.xname, curve.yname
    f = curve.f
    pnum = MultiPoly.var(f.vars, xn) * m + fx * g
    qnum = MultiPoly.var(f.vars, yn) * m + fy * g
    t = mp_gcd(f, _tangential_num(pnum, m, fx, fy, xn, yn))
    if t.is_constant():
        return t
    return mp_gcd(t, _tangential_num(qnum, m, fx, fy, xn, yn))


def _tangential_num(pnum, m, fx, fy, xn, yn):
    # numerator of D_T(pnum/m), tangent direction (-f_y, f_x)
    dp = pnum.derivative(xn) * -fy + pnum.derivative(yn) * fx
    dm = m.derivative(xn) * -fy + m.derivative(yn) * fx
    return dp * m - pnum * dm


# ---------------------------------------------------------------------
# implicit evolute
# ---------------------------------------------------------------------


def _eliminate_pair(f, g1, g2, innames, outnames):
    """Resultant elimination of the curve variables from {f, g1, g2}.

    g1 involves only the first output variable, g2 only the second.
    Splitting the elimination into Res(f, g1) and Res(f, g2) introduces
    phantom components that pair two different fiber points over the
    same eliminated value, so the elimination is run in both variable
    orders and the gcd of the two eliminants is taken: the true image
    divides both, while the phantoms of the two orders differ.

    Returns (raw, candidate): the first successful eliminant for the
    audit trail, and the cross-order gcd for factor filtering.
    """
    xn, yn = innames
    un, vn = outnames
    every = (xn, yn, un, vn)
    fw = f.reorder(every)
    g1w = g1.reorder(every)
    g2w = g2.reorder(every)
    raws = []
    for first, second in ((yn, xn), (xn, yn)):
        r1 = resultant(fw, g1w, first)
        r2 = resultant(fw, g2w, first)
        if r1.is_zero() or r2.is_zero():
            raise DegenerateEvolute("elimination collapsed to zero")
        if max(r1.degree_in(second), r2.degree_in(second)) > DEGREE_CAP:
            continue
        c1 = mp_content_in(r1, un)
        if not c1.is_constant():
            r1 = mp_divexact(r1, c1)
        c2 = mp_content_in(r2, vn)
        if not c2.is_constant():
            r2 = mp_divexact(r2, c2)
        raw = resultant(r1, r2, second)
        if raw.is_zero():
            raise DegenerateEvolute("elimination collapsed to zero")
        raws.append(raw.drop_vars({xn, yn}).canonical())
    if not raws:
        raise CertificateFailure(
            f"intermediate elimination degree exceeds {DEGREE_CAP}"
        )
    if len(raws) == 2:
        cand = mp_gcd(raws[0], raws[1]).canonical()
    else:
        cand = raws[0]
    if cand.is_constant():
        raise DegenerateEvolute("cross-order eliminants share no component")
    return raws[0], cand


def evolute_implicit(curve, outnames=("x", "y")):
    """Implicit equation of the evolute (locus of curvature centers).

    Eliminates the curve point from the center equations
    (X-x)M = f_x(f_x^2+f_y^2), (Y-y)M = f_y(f_x^2+f_y^2), then keeps the
    factors of the eliminant supported by witness samples.  The result
    is renamed to the requested output variables.
    """
    xn, yn = curve.xname, curve.yname
    fx, fy, m, g = _curvature_parts(curve)
    _check_line_components(curve, m)
    if _is_circle(curve.f, xn, yn):
        raise CircleComponent("the curve is a circle: its evolute is a point")
    if not _tangential_const_locus(curve, fx, fy, m, g).is_constant():
        raise CircleComponent("curve contains a circle component")
    un, vn = "@U", "@V"
    every = (xn, yn, un, vn)
    uvar = MultiPoly.var(every, un)
    vvar = MultiPoly.var(every, vn)
    xvar = MultiPoly.var(every, xn)
    yvar = MultiPoly.var(every, yn)
    mw = m.reorder(every)
    gw = g.reorder(every)
    g1 = (uvar - xvar) * mw - fx.reorder(every) * gw
    g2 = (vvar - yvar) * mw - fy.reorder(every) * gw
    raw, cand = _eliminate_pair(curve.f, g1, g2, (xn, yn), (un, vn))
    pnum = xvar.drop_vars({un, vn}) * m + fx * g
    qnum = yvar.drop_vars({un, vn}) * m + fy * g
    kept, dropped, validation = _filter_eliminant(
        cand, curve.f, xn, yn, (pnum, qnum, m), (un, vn)
    )
    if not kept:
        raise DegenerateEvolute("no factor of the eliminant is supported by the curve")
    prod = kept[0]
    for b in kept[1:]:
        prod = prod * b
    out = prod.rename({un: outnames[0], vn: outnames[1]}).canonical()
    raw_named = raw.rename({un: outnames[0], vn: outnames[1]})
    return EliminationResult(
        PlaneCurve(out, outnames[0], outnames[1]), raw_named,
        [DroppedFactor(d.factor.rename({un: outnames[0], vn: outnames[1]}),
                       d.multiplicity, d.evidence) for d in dropped],
        validation,
    )


# ---------------------------------------------------------------------
# implicit curve of normals
# ---------------------------------------------------------------------


def _normals_chart(curve, swapped):
    """Eliminant of the normal family in one dual chart, with audit."""
    xn, yn = curve.xname, curve.yname
    f = curve.f
    fx = f.derivative(xn)
    fy = f.derivative(yn)
    if swapped:
        fx, fy = fy, fx
        xn_, yn_ = yn, xn
    else:
        xn_, yn_ = xn, yn
    un, vn = "@U", "@V"
    every = (xn, yn, un, vn)
    uvar = MultiPoly.var(every, un)
    vvar = MultiPoly.var(every, vn)
    pvar = MultiPoly.var(every, xn_)
    qvar = MultiPoly.var(every, yn_)
    fxw = fx.reorder(every)
    fyw = fy.reorder(every)
    h1 = uvar * fxw + fyw
    h2 = vvar * fxw - (pvar * fyw - qvar * fxw)
    raw, cand = _eliminate_pair(f, h1, h2, (xn, yn), (un, vn))
    pvar2 = pvar.drop_vars({un, vn})
    qvar2 = qvar.drop_vars({un, vn})
    pnum = -fy
    qnum = pvar2 * fy - qvar2 * fx
    kept, dropped, validation = _filter_eliminant(
        cand, f, xn, yn, (pnum, qnum, fx), (un, vn)
    )
    if not kept:
        raise CertificateFailure("no supported factor in the normals eliminant")
    prod = kept[0]
    for b in kept[1:]:
        prod = prod * b
    return prod, raw, dropped, validation


def normals_implicit(curve, outnames=("u", "v")):
    """Implicit equation of the curve of normals in the (u, v) chart.

    The chart writes a normal as y + ux + v = 0.  Both dual charts are
    eliminated and glued projectively; disagreement is a hard error.
    Circle inputs are allowed: their normal pencil is a line in the
    dual plane, noted in the validation trail.
    """
    xn, yn = curve.xname, curve.yname
    _, _, m, g = _curvature_parts(curve)
    _check_line_components(curve, m)
    un, vn = outnames
    prod_a, raw, dropped, validation = _normals_chart(curve, swapped=False)
    prod_b = _normals_chart(curve, swapped=True)[0]
    wn = "@W"
    ha = homogenize(prod_a.rename({"@U": un, "@V": vn}).reorder((un, vn)), wn)
    hb_chart = homogenize(prod_b.rename({"@U": un, "@V": vn}).reorder((un, vn)), wn)
    # swapped chart (u', v') corresponds to (b/a, c/a): swap the first
    # two projective slots of (a:b:c) = (u:1:v) -> rename u<->w slot
    hb = hb_chart.rename({un: "@T"}).rename({wn: un}).rename({"@T": wn})
    if not ha.reorder((un, vn, wn)).same_up_to_scalar(hb.reorder((un, vn, wn))):
        raise EliminationMismatch("dual charts disagree on the curve of normals")
    validation = list(validation)
    validation.append(("charts glued", "ok"))
    fxy = curve.f
    if _is_circle(fxy, xn, yn):
        validation.append(("circle input", "normal family is a pencil"))
    out = prod_a.rename({"@U": un, "@V": vn}).canonical()
    return EliminationResult(
        PlaneCurve(out, un, vn),
        raw.rename({"@U": un, "@V": vn}),
        [DroppedFactor(d.factor.rename({"@U": un, "@V": vn}), d.multiplicity,
                       d.evidence) for d in dropped],
        validation,
    )


# ---------------------------------------------------------------------
# parametric paths
# ---------------------------------------------------------------------


def _param_ratfuns(param):
    t = param.tname
    x = _RatFun(param.xn, param.den, t)
    y = _RatFun(param.yn, param.den, t)
    return x, y, x.deriv(), y.deriv()


def _is_const_ratfun(rf):
    t = rf.tname
    return rf.num.is_zero() or (
        rf.num.degree_in(t) <= 0 and rf.den.degree_in(t) <= 0
    )


def evolute_parametric(param, implicitize=False):
    """Rational parametrization of the evolute of a parametrized curve.

    Returns (evolute_param, implicit, degenerate).  For circles the
    center map is constant: the parametrization degenerates to a point,
    reported with degenerate=True (FlatCurve is reserved for genuine
    line inputs).  The optional implicitization eliminates t and is
    validated by rational witness images.
    """
    t = param.tname
    x, y, x1, y1 = _param_ratfuns(param)
    x2, y2 = x1.deriv(), y1.deriv()

    def rsub(a, b):
        return _RatFun(a.num * b.den - b.num * a.den, a.den * b.den, t)

    def rmul(a, b):
        return _RatFun(a.num * b.num, a.den * b.den, t)

    def radd(a, b):
        return _RatFun(a.num * b.den + b.num * a.den, a.den * b.den, t)

    w = rsub(rmul(x1, y2), rmul(x2, y1))
    if w.num.is_zero():
        raise FlatCurve("x'y'' - x''y' vanishes identically: the image is a line")
    s = radd(rmul(x1, x1), rmul(y1, y1))
    shared = rmul(s, _RatFun(w.den, w.num, t))
    ex = rsub(x, rmul(y1, shared))
    ey = radd(y, rmul(x1, shared))
    degenerate = _is_const_ratfun(ex) and _is_const_ratfun(ey)
    exn, exd = ex.num, ex.den
    eyn, eyd = ey.num, ey.den
    common = exd * eyd
    ep = RationalParam(exn * eyd, eyn * exd, common, tname=t)
    implicit = None
    if implicitize and not degenerate:
        implicit = _implicitize_param(ep, ("x", "y"))
    return ep, implicit, degenerate


def _implicitize_param(param, outnames):
    """Eliminate the parameter; keep factors hit by rational images."""
    t = param.tname
    un, vn = "@U", "@V"
    every = (t, un, vn)
    p1 = MultiPoly.var(every, un) * param.den.reorder(every) - param.xn.reorder(every)
    p2 = MultiPoly.var(every, vn) * param.den.reorder(every) - param.yn.reorder(every)
    raw = resultant(p1, p2, t).drop_vars({t}).canonical()
    if raw.is_zero():
        raise DegenerateEvolute("parameter elimination collapsed to zero")
    fac = squarefree_factor(raw)
    samples = []
    for c in _FIBER_VALUES:
        if _fr_eval(param.den.reorder((t,)), t, c) == 0:
            continue
        samples.append(param.value(c))
        if len(samples) >= 7:
            break
    kept = []
    dropped = []
    for base, mult in fac.factors:
        if base.total_degree() <= 0:
            continue
        hits = sum(
            1
            for (sx, sy) in samples
            if base.eval_at({un: sx, vn: sy}) == 0
        )
        if hits >= _WITNESS_KEEP:
            kept.append(base)
        else:
            dropped.append(DroppedFactor(base, mult, f"{hits} of {len(samples)}"))
    if not kept:
        raise DegenerateEvolute("no supported factor after implicitization")
    prod = kept[0]
    for b in kept[1:]:
        prod = prod * b
    return PlaneCurve(prod.rename({un: outnames[0], vn: outnames[1]}),
                      outnames[0], outnames[1])


def normals_parametric(param):
    """Rational map t -> (u(t), v(t)) of the curve of normals.

    Returns (param, swapped).  The standard chart needs y' nonzero; if
    y' vanishes identically the swapped chart x + u'y + v' = 0 is used
    and swapped=True is returned.
    """
    t = param.tname
    x, y, x1, y1 = _param_ratfuns(param)

    swapped = False
    if y1.num.is_zero():
        swapped = True
        if x1.num.is_zero():
            raise FlatCurve("constant parametrization")
        x1, y1 = y1, x1
        x, y = y, x
    # u = x'/y', v = -(x x' + y y')/y'
    u = _RatFun(x1.num * y1.den, x1.den * y1.num, t)
    w = _RatFun(
        x.num * x1.num * y.den * y1.den + y.num * y1.num * x.den * x1.den,
        x.den * x1.den * y.den * y1.den,
        t,
    )
    v = _RatFun(-w.num * y1.den, w.den * y1.num, t)
    den = u.den * v.den
    return RationalParam(u.num * v.den, v.num * u.den, den, tname=t), swapped


# ---------------------------------------------------------------------
# projective duals
# ---------------------------------------------------------------------


def dual_curve(obj, outnames=None):
    """Projective dual: the curve of tangent lines.

    For a PlaneCurve in (x, y), tangent lines a:b:c with
    ax + by + cz = 0 are reported in the chart (u, v) = (a/b, c/b),
    i.e. the line ux + y + v = 0.  For a curve already written in dual
    variables the output defaults back to (x, y), so the involution
    composes cleanly.  Parametric input uses the wedge of the
    homogenized parametrization with its derivative.
    """
    if isinstance(obj, RationalParam):
        t = obj.tname
        r = (obj.xn, obj.yn, obj.den)
        rp = tuple(p.derivative(t) for p in r)
        s = (
            r[1] * rp[2] - r[2] * rp[1],
            r[2] * rp[0] - r[0] * rp[2],
            r[0] * rp[1] - r[1] * rp[0],
        )
        g = None
        for comp in s:
            if not comp.is_zero():
                g = comp if g is None else mp_gcd(g, comp)
        if g is None:
            raise LineInput("constant parametrization")
        s = tuple(mp_divexact(c, g) if not c.is_zero() else c for c in s)
        if all(c.is_constant() for c in s):
            raise LineInput("parametrization traces a line")
        return RationalParam(s[0], s[2], s[1], tname=t)
    curve = obj
    if curve.d < 2:
        raise LineInput("dual of a line is a point")
    if outnames is None:
        outnames = ("x", "y") if curve.xname == "u" else ("u", "v")
    xn, yn = curve.xname, curve.yname
    f = curve.f
    fx = f.derivative(xn)
    fy = f.derivative(yn)
    un, vn = "@U", "@V"
    every = (xn, yn, un, vn)
    uvar = MultiPoly.var(every, un)
    vvar = MultiPoly.var(every, vn)
    xvar = MultiPoly.var(every, xn)
    yvar = MultiPoly.var(every, yn)
    fxw = fx.reorder(every)
    fyw = fy.reorder(every)
    d1 = uvar * fyw - fxw
    d2 = vvar * fyw + (xvar * fxw + yvar * fyw)
    raw, cand = _eliminate_pair(f, d1, d2, (xn, yn), (un, vn))
    pnum = fx
    qnum = -(xvar.drop_vars({un, vn}) * fx + yvar.drop_vars({un, vn}) * fy)
    kept, dropped, validation = _filter_eliminant(
        cand, f, xn, yn, (pnum, qnum, fy), (un, vn)
    )
    if not kept:
        raise CertificateFailure("no supported factor in the dual eliminant")
    prod = kept[0]
    for b in kept[1:]:
        prod = prod * b
    out = prod.rename({un: outnames[0], vn: outnames[1]}).canonical()
    return EliminationResult(
        PlaneCurve(out, outnames[0], outnames[1]),
        raw.rename({un: outnames[0], vn: outnames[1]}),
        [DroppedFactor(d.factor.rename({un: outnames[0], vn: outnames[1]}),
                       d.multiplicity, d.evidence) for d in dropped],
        validation,
    )
