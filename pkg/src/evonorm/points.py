"""Certified real solutions of bivariate systems and sign queries at them.

A solution is an AlgebraicPoint whose coordinates are exact rationals or
isolating intervals. Sign queries are certified: a reported zero is backed
by a gcd/subresultant membership certificate, a reported nonzero sign by
interval evaluation refined until zero is excluded.

Solving follows the elimination layout: resultant in the fiber variable,
isolation of the base roots, then for each base root the gcd-cleaned
fiber polynomial. Above a rational base root the fiber is an exact
univariate gcd; above an irrational one it is read off the subresultant
chain of the pair, whose determinant definition commutes with
specializing the base variable (degenerate leading coefficients included,
provided not both leading coefficients vanish there, which the
orientation/shear selection rules out).
"""

import math
from fractions import Fraction

from . import kernels as K
from .bivar import SubresSystem, _clear_dens
from .errors import CommonComponent, RefinementBudgetExceeded, ZeroPolynomial
from .poly import MultiPoly, mp_gcd, resultant
from .realroots import DEFAULT_BUDGET, IsolatingInterval, isolate_real_roots


# ------------------------------------------------------------ intervals

def _iv_mul(a, b):
    v = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(v), max(v))


def _iv_div(a, b):
    v = (a[0] / b[0], a[0] / b[1], a[1] / b[0], a[1] / b[1])
    return (min(v), max(v))


def _iv_sign(a):
    """+1/-1 when the interval excludes zero, 0 for the point zero,
    None when undecided."""
    if a[0] > 0:
        return 1
    if a[1] < 0:
        return -1
    if a[0] == 0 and a[1] == 0:
        return 0
    return None


def _iv_horner(coeffs, x):
    """Range of a polynomial (Fraction coefficients, ascending) on x."""
    if not coeffs:
        return (Fraction(0), Fraction(0))
    val = (Fraction(coeffs[-1]), Fraction(coeffs[-1]))
    for c in reversed(coeffs[:-1]):
        val = _iv_mul(val, x)
        val = (val[0] + c, val[1] + c)
    return val


def _iv_horner_iv(coeff_ivs, y):
    """Same, with interval coefficients."""
    if not coeff_ivs:
        return (Fraction(0), Fraction(0))
    val = coeff_ivs[-1]
    for c in reversed(coeff_ivs[:-1]):
        val = _iv_mul(val, y)
        val = (val[0] + c[0], val[1] + c[1])
    return val


def _fr_list(p, name):
    """Dense Fraction coefficient list of p, which may use only `name`."""
    i = p.vars.index(name)
    d = p.degree_in(name)
    if d < 0:
        return []
    out = [Fraction(0)] * (d + 1)
    for e, c in p.terms.items():
        for j, k in enumerate(e):
            if k and j != i:
                raise ValueError("unexpected variable in coefficient")
        out[e[i]] = c
    return out


def _clear_int(fr):
    """Integer coefficient list with the same signs (positive rescale)."""
    fr = list(fr)
    while fr and not fr[-1]:
        fr.pop()
    if not fr:
        return []
    l = math.lcm(*(c.denominator for c in fr))
    ints = [int(c * l) for c in fr]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


# ------------------------------------------------------------ one real
# algebraic number

class _Alg1:
    """A real algebraic number: exact rational, or isolating interval."""

    __slots__ = ("rat", "iv")

    def __init__(self, rat=None, iv=None):
        self.rat = rat
        self.iv = iv

    @classmethod
    def from_interval(cls, iv):
        p = iv.as_point()
        if p is not None:
            return cls(rat=p)
        return cls(iv=iv)

    @classmethod
    def from_rational(cls, r):
        return cls(rat=Fraction(r))

    def is_rational(self):
        return self.rat is not None

    def bounds(self):
        if self.rat is not None:
            return (self.rat, self.rat)
        return (self.iv.lo, self.iv.hi)

    def halve(self):
        if self.iv is not None and self.iv.lo < self.iv.hi:
            self.iv = self.iv.refined(self.iv.width() / 2)

    def sign_of(self, coeffs, budget=DEFAULT_BUDGET):
        """Certified sign of h(alpha), h an integer coefficient list.

        Zero is decided by a gcd certificate against the defining
        polynomial; otherwise the isolating interval is refined until
        interval evaluation excludes zero.
        """
        coeffs = K.zx_trim(list(coeffs))
        if not coeffs:
            return 0
        if self.rat is not None:
            return K.zx_sign_at(coeffs, self.rat.numerator, self.rat.denominator)
        iv = self.iv
        pt = iv.as_point()
        if pt is not None:
            return K.zx_sign_at(coeffs, pt.numerator, pt.denominator)
        if len(coeffs) > 1:
            g = K.zx_gcd(coeffs, iv._coeffs)
            if len(g) > 1:
                ch = K.zx_sturm_chain(g)
                if K.zx_count_roots(ch, iv.lo.numerator, iv.lo.denominator,
                                    iv.hi.numerator, iv.hi.denominator) == 1:
                    return 0
        fr = [Fraction(c) for c in coeffs]
        steps = 0
        while True:
            s = _iv_sign(_iv_horner(fr, (iv.lo, iv.hi)))
            if s is not None:
                self.iv = iv
                return s
            if steps >= budget:
                raise RefinementBudgetExceeded(
                    f"sign undecided after {budget} refinements",
                    budget=budget)
            steps += 1
            iv = iv.refined(iv.width() / 2)
            pt = iv.as_point()
            if pt is not None:
                self.iv = iv
                return K.zx_sign_at(coeffs, pt.numerator, pt.denominator)


# ------------------------------------------------------------ dynamic
# remainder chains for fiber polynomials above an irrational base root

def _red_mod(c, dco):
    """Remainder of the Fraction list c modulo the integer list dco."""
    r = list(c)
    dd = len(dco) - 1
    lead = Fraction(dco[-1])
    while len(r) > dd:
        top = r.pop()
        if top:
            f = top / lead
            k = len(r) - dd
            for i in range(dd):
                r[i + k] -= f * dco[i]
    while r and not r[-1]:
        r.pop()
    return r


def _mul_fr(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _sub_fr(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while out and not out[-1]:
        out.pop()
    return out


def _add_scaled_fr(a, b, f):
    """a + f*b for Fraction lists."""
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += f * y
    while out and not out[-1]:
        out.pop()
    return out


def _strip_pos(rows):
    """Divide all entries by a common positive rational, integerizing."""
    num = 0
    den = 1
    for row in rows:
        for c in row:
            if c:
                num = math.gcd(num, abs(c.numerator))
                den = math.lcm(den, c.denominator)
    if num == 0 or (num == 1 and den == 1):
        return rows
    f = Fraction(den, num)
    return [[c * f for c in row] for row in rows]


class _FiberChain:
    """Sign-correct remainder chain for G(alpha, t), alpha a real root of
    a squarefree integer polynomial.

    Coefficients live in Q[s] reduced modulo the defining polynomial of
    alpha; pseudo-division uses even powers of leading coefficients, so
    at alpha every element is the classical signed remainder up to a
    positive factor. Leading coefficients vanishing at alpha are dropped
    before each division (their values at alpha are zero), and the chain
    is rebuilt on the squarefree part when a nontrivial gcd stage
    appears, so root counts are valid at root endpoints too.
    """

    def __init__(self, G, sname, tname, alpha):
        if alpha.iv is None:
            raise ValueError("chain requires an interval-backed base root")
        self.alpha = alpha
        self.G = G
        self.sname = sname
        self.tname = tname
        self.dco = alpha.iv._coeffs
        rows = [_red_mod(_fr_list(c, sname), self.dco)
                for c in _clear_dens(G).coeffs_in(tname)]
        A = self._trunc(rows)
        if A is None:
            raise ZeroPolynomial("fiber polynomial vanishes at the base root")
        chain = self._build(A)
        last = chain[-1]
        if len(last) > 1:
            # nontrivial gcd stage: replace A by its squarefree part
            A = self._trunc(self._pquo(A, last))
            chain = self._build(A)
            if len(chain[-1]) > 1:
                raise ArithmeticError("fiber squarefree reduction failed")
        self.A = A
        self._elems = chain

    # -- construction helpers

    def _sign_c(self, c):
        return self.alpha.sign_of(_clear_int(c)) if c else 0

    def _trunc(self, rows):
        rows = list(rows)
        while rows and self._sign_c(rows[-1]) == 0:
            rows.pop()
        return rows or None

    def _build(self, A):
        if len(A) == 1:
            return [A]
        B = [[c * i for c in A[i]] for i in range(1, len(A))]
        chain = [A, B]
        while len(chain[-1]) > 1:
            r = self._prem_even(chain[-2], chain[-1])
            r = self._trunc(r)
            if r is None:
                break
            chain.append(r)
        return chain

    def _prem_even(self, A, B):
        """-prem(A, B) with an even leading-coefficient power, reduced."""
        da, db = len(A) - 1, len(B) - 1
        lb = B[-1]
        r = [list(c) for c in A]
        for k in range(da - db, -1, -1):
            top = r[db + k]
            for i in range(db + k):
                r[i] = _red_mod(_mul_fr(r[i], lb), self.dco)
            for i in range(db):
                r[i + k] = _red_mod(
                    _sub_fr(r[i + k], _mul_fr(B[i], top)), self.dco)
            r[db + k] = []
        r = r[:db]
        if (da - db + 1) % 2:
            r = [_red_mod(_mul_fr(c, lb), self.dco) for c in r]
        r = _strip_pos(r)
        return [[-c for c in row] for row in r]

    def _pquo(self, A, B):
        """Pseudo-quotient of A by B; exact at alpha when B | A there."""
        da, db = len(A) - 1, len(B) - 1
        lb = B[-1]
        r = [list(c) for c in A]
        q = [[] for _ in range(da - db + 1)]
        for k in range(da - db, -1, -1):
            top = r[db + k]
            for i in range(da - db, k, -1):
                q[i] = _red_mod(_mul_fr(q[i], lb), self.dco)
            q[k] = top
            for i in range(db + k):
                r[i] = _red_mod(_mul_fr(r[i], lb), self.dco)
            for i in range(db):
                r[i + k] = _red_mod(
                    _sub_fr(r[i + k], _mul_fr(B[i], top)), self.dco)
            r[db + k] = []
        return _strip_pos(q)

    # -- sign and variation queries

    def _elem_sign_at(self, elem, t):
        acc = []
        pw = Fraction(1)
        for c in elem:
            if c:
                acc = _add_scaled_fr(acc, c, pw)
            pw *= t
        return self._sign_c(acc)

    def sign_A_at(self, t):
        """Certified sign of the (squarefree) fiber polynomial at t."""
        return self._elem_sign_at(self.A, t)

    def _var_at(self, t):
        prev = 0
        var = 0
        for elem in self._elems:
            s = self._elem_sign_at(elem, t)
            if s == 0:
                continue
            if prev and s != prev:
                var += 1
            prev = s
        return var

    def _var_at_inf(self, dirn):
        prev = 0
        var = 0
        for elem in self._elems:
            s = self._sign_c(elem[-1])
            if dirn < 0 and (len(elem) - 1) % 2:
                s = -s
            if prev and s != prev:
                var += 1
            prev = s
        return var

    def count(self, a, b):
        """Distinct real roots of the fiber polynomial in (a, b]."""
        return self._var_at(a) - self._var_at(b)

    def count_all(self):
        return self._var_at_inf(-1) - self._var_at_inf(1)

    def bound(self):
        """Power of two B with all fiber roots inside (-B, B)."""
        while True:
            x = self.alpha.bounds()
            lcv = _iv_horner(self.A[-1], x)
            if _iv_sign(lcv):
                break
            self.alpha.halve()
        x = self.alpha.bounds()
        lo = min(abs(lcv[0]), abs(lcv[1]))
        m = Fraction(0)
        for c in self.A[:-1]:
            v = _iv_horner(c, x)
            m = max(m, abs(v[0]), abs(v[1]))
        target = 1 + m / lo
        b = Fraction(1)
        while b < target:
            b *= 2
        return b

    def isolate(self):
        """Disjoint (lo, hi] intervals, or exact [t, t], one per root."""
        if len(self.A) == 1:
            return []
        B = self.bound()
        total = self.count(-B, B)
        out = []
        stack = [(Fraction(-B), Fraction(B), total)]
        while stack:
            lo, hi, cnt = stack.pop()
            if cnt == 0:
                continue
            if cnt == 1:
                if self.sign_A_at(hi) == 0:
                    out.append((hi, hi))
                else:
                    out.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            left = self.count(lo, mid)
            stack.append((mid, hi, cnt - left))
            stack.append((lo, mid, left))
        out.sort(key=lambda ab: ab[0])
        return out

    def halve_interval(self, ab):
        """One bisection step on an isolating interval of this chain."""
        lo, hi = ab
        if lo == hi:
            return ab
        mid = (lo + hi) / 2
        if self.sign_A_at(mid) == 0:
            return (mid, mid)
        if self.count(lo, mid) == 1:
            return (lo, mid)
        return (mid, hi)

    def root_in(self, ab, a, b):
        """Whether the root isolated by ab lies in (a, b]."""
        lo, hi = ab
        if lo == hi:
            return a < lo <= b
        lo2, hi2 = max(lo, a), min(hi, b)
        if lo2 >= hi2:
            return False
        return self.count(lo2, hi2) == 1


# ------------------------------------------------------------ points

class AlgebraicPoint:
    """One certified real solution of a pair of bivariate polynomials.

    x and y are exact Fractions or IsolatingIntervals; the box they span
    contains exactly one solution of `system`.
    """

    __slots__ = ("x", "y", "system", "_impl")

    def __init__(self, x, y, system, impl):
        self.x = x
        self.y = y
        self.system = system
        self._impl = impl

    def __repr__(self):
        def fmt(v):
            if isinstance(v, Fraction):
                return str(v)
            return f"({v.lo}, {v.hi}]"
        return f"AlgebraicPoint({fmt(self.x)}, {fmt(self.y)})"


def _coord_key(v):
    if isinstance(v, Fraction):
        return (v, v)
    return (v.lo, v.hi)


class _CorePoint:
    """Solver-frame solution: base root xalg, fiber description."""

    __slots__ = ("xalg", "ymode", "ydata")

    def __init__(self, xalg, ymode, ydata):
        self.xalg = xalg
        self.ymode = ymode
        self.ydata = ydata


def _guard_ok(A, B, tname):
    """True when specializing the base never kills both leading
    coefficients in the fiber variable."""
    if A.degree_in(tname) <= 0 or B.degree_in(tname) <= 0:
        return True
    return mp_gcd(A.lead_coeff_in(tname), B.lead_coeff_in(tname)).is_constant()


def _core_solve(A, B, sname, tname):
    """Solve {A = 0, B = 0} with base sname, fiber tname."""
    R = resultant(A, B, tname)
    if R.is_zero():
        raise CommonComponent("resultant vanished identically")
    if R.is_constant():
        return []
    out = []
    S = None
    for iv in isolate_real_roots(R):
        xa = _Alg1.from_interval(iv)
        if xa.is_rational():
            r = xa.rat
            ia = _clear_int(_fr_list(A.partial_eval(sname, r), tname))
            ib = _clear_int(_fr_list(B.partial_eval(sname, r), tname))
            if not ia:
                fib = ib
            elif not ib:
                fib = ia
            else:
                fib = K.zx_gcd(ia, ib)
            if len(fib) <= 1:
                continue
            fpoly = MultiPoly.from_int_list((tname,), tname, fib)
            for yiv in isolate_real_roots(fpoly):
                ya = _Alg1.from_interval(yiv)
                if ya.is_rational():
                    out.append(_CorePoint(xa, "rat", ya.rat))
                else:
                    out.append(_CorePoint(xa, "alg1", ya))
            continue
        da, db = A.degree_in(tname), B.degree_in(tname)
        if da <= 0 or db <= 0:
            G = B if da <= 0 else A
            _emit_fiber(out, xa, _FiberChain(G, sname, tname, xa))
            continue
        if S is None:
            P1, Q1 = (A, B) if da >= db else (B, A)
            S = SubresSystem(P1, Q1, sname, tname)
        k = None
        for j in range(1, S.q):
            if xa.sign_of(S.psc(j)) != 0:
                k = j
                break
        if k == 1:
            s1 = S.sres(1)
            c0, c1 = _joint_int_pair(
                _fr_list(s1.coeffs_in(tname)[0], sname),
                _fr_list(s1.lead_coeff_in(tname), sname),
            )
            out.append(_CorePoint(xa, "ratfun", ([-v for v in c0], c1)))
            continue
        G = S.Q if k is None else S.sres(k)
        _emit_fiber(out, xa, _FiberChain(G, sname, tname, xa))
    return out


def _joint_int_pair(fa, fb):
    """Rescale two Fraction lists by one shared positive factor.

    Both lists are multiplied by the same rational, so ratios between
    entries of the pair are preserved.  Returns integer lists with the
    common content removed.
    """
    den = 1
    for v in fa + fb:
        den = math.lcm(den, v.denominator)
    ia = [int(v * den) for v in fa]
    ib = [int(v * den) for v in fb]
    g = 0
    for v in ia + ib:
        g = math.gcd(g, v)
    if g > 1:
        ia = [v // g for v in ia]
        ib = [v // g for v in ib]
    return ia, ib


def _emit_fiber(out, xa, chain):
    for lo, hi in chain.isolate():
        if lo == hi:
            out.append(_CorePoint(xa, "rat", lo))
        else:
            out.append(_CorePoint(xa, "fiber", [chain, (lo, hi)]))


def _complex_count(p, q, yname):
    """Degree of the resultant in y of the homogenized pair (integer
    content removed): the Bezout count minus intersections at the point
    where vertical lines meet."""
    m, n = max(p.total_degree(), 0), max(q.total_degree(), 0)
    m1 = max(p.degree_in(yname), 0)
    n1 = max(q.degree_in(yname), 0)
    return m * n - (m - m1) * (n - n1)


# -- matching fiber coordinates against a global defining polynomial

def _fiber_member(cpt, sname, tname, a, b):
    """Whether the fiber coordinate of cpt lies in (a, b]."""
    if cpt.ymode == "ratfun":
        ncl, dcl = cpt.ydata
        sd = cpt.xalg.sign_of(dcl)

        def cmp(c):
            # sign of (n(x)/d(x) - c) at the base root
            num = _sub_fr([Fraction(v) for v in ncl],
                          [Fraction(c) * Fraction(v) for v in dcl])
            return cpt.xalg.sign_of(_clear_int(num)) * sd

        return cmp(a) > 0 >= cmp(b)
    chain, ab = cpt.ydata
    return chain.root_in(ab, a, b)


def _match_public(cpt, sname, tname, divs):
    """Public value of the fiber coordinate: the matching isolating
    interval of the global defining polynomial, or an exact rational."""
    for J in divs:
        if J.lo == J.hi:
            if cpt.ymode == "ratfun":
                ncl, dcl = cpt.ydata
                num = _sub_fr([Fraction(v) for v in ncl],
                              [Fraction(J.lo) * Fraction(v) for v in dcl])
                if cpt.xalg.sign_of(_clear_int(num)) == 0:
                    return J.lo
            else:
                chain, ab = cpt.ydata
                lo, hi = ab
                if lo < J.lo <= hi and chain.sign_A_at(J.lo) == 0:
                    return J.lo
            continue
        if _fiber_member(cpt, sname, tname, J.lo, J.hi):
            return J.as_point() if J.is_exact() else J
    raise AssertionError("fiber coordinate failed to match a defining root")


def _public_base(xa):
    return xa.rat if xa.is_rational() else xa.iv


def _wrap_plain(core, sname, tname, base_is_x, system, fiber_res):
    """Build public AlgebraicPoints from solver-frame core points.

    fiber_res: lazily computed resultant eliminating the base variable,
    used as the defining polynomial for matched fiber coordinates.
    """
    pts = []
    divs = None
    for cpt in core:
        bval = _public_base(cpt.xalg)
        if cpt.ymode == "rat":
            fval = cpt.ydata
        elif cpt.ymode == "alg1":
            fval = _public_base(cpt.ydata)
        else:
            if divs is None:
                divs = isolate_real_roots(fiber_res())
            fval = _match_public(cpt, sname, tname, divs)
            if isinstance(fval, Fraction):
                # collapse to the exact value for later sign queries
                cpt.ymode = "rat"
                cpt.ydata = fval
        if base_is_x:
            x, y = bval, fval
        else:
            x, y = fval, bval
        impl = ("plain", sname, tname, cpt)
        pts.append(AlgebraicPoint(x, y, system, impl))
    pts.sort(key=lambda p: (_coord_key(p.x), _coord_key(p.y)))
    return pts


def solve_bivariate(p, q, budget=DEFAULT_BUDGET):
    """Real solutions of {p = 0, q = 0} plus the complex solution count
    with multiplicity (from the resultant degree; counted, not located).
    """
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("zero polynomial in system")
    seen = list(p.vars)
    for v in q.vars:
        if v not in seen:
            seen.append(v)
    used = [v for v in seen
            if (v in p.vars and p.degree_in(v) > 0) or
               (v in q.vars and q.degree_in(v) > 0)]
    if len(used) > 2:
        raise ValueError("system is not bivariate")
    pad = [v for v in seen if v not in used]
    vars2 = (used + pad)[:2]
    while len(vars2) < 2:
        vars2.append("y" if "y" not in vars2 else "_t")
    vars2 = tuple(vars2)
    p2 = p.reorder(vars2)
    q2 = q.reorder(vars2)
    g = mp_gcd(p2, q2)
    if not g.is_constant():
        raise CommonComponent(f"common factor: {g}")
    xn, yn = vars2
    cc = _complex_count(p2, q2, yn)
    system = (p2, q2)
    if _guard_ok(p2, q2, yn):
        core = _core_solve(p2, q2, xn, yn)
        pts = _wrap_plain(core, xn, yn, True, system,
                          lambda: resultant(p2, q2, xn))
        return pts, cc
    if _guard_ok(p2, q2, xn):
        core = _core_solve(p2.reorder((yn, xn)), q2.reorder((yn, xn)), yn, xn)
        pts = _wrap_plain(core, yn, xn, False, system,
                          lambda: resultant(p2, q2, yn))
        return pts, cc
    # shear x -> x + lam*y until both leading forms are constant in y
    vx = MultiPoly.var(vars2, xn)
    vy = MultiPoly.var(vars2, yn)
    lam = 0
    while True:
        lam += 1
        ps = p2.subs_poly(xn, vx + vy * Fraction(lam))
        qs = q2.subs_poly(xn, vx + vy * Fraction(lam))
        if ps.degree_in(yn) == p2.total_degree() and \
                qs.degree_in(yn) == q2.total_degree():
            break
        if lam > 4 * (p2.total_degree() + q2.total_degree() + 1):
            raise ArithmeticError("no shear parameter found")
    core = _core_solve(ps, qs, xn, yn)
    inner_pts = _wrap_plain(core, xn, yn, True, (ps, qs),
                            lambda: resultant(ps, qs, xn))
    divs = isolate_real_roots(resultant(p2, q2, yn))
    pts = []
    for ipt in inner_pts:
        xval = _match_shear_x(ipt, lam, vx, vy, divs)
        pts.append(AlgebraicPoint(xval, ipt.y, system, ("shear", lam, ipt)))
    pts.sort(key=lambda r: (_coord_key(r.x), _coord_key(r.y)))
    return pts, cc


def _match_shear_x(ipt, lam, vx, vy, divs):
    """Match x = x' + lam*y' of a sheared solution against the isolating
    intervals of the unsheared x-resultant."""
    shift = vx + vy * Fraction(lam)
    for J in divs:
        if J.lo == J.hi:
            if sign_at(shift - MultiPoly.const(vx.vars, J.lo), ipt) == 0:
                return J.lo
            continue
        slo = sign_at(shift - MultiPoly.const(vx.vars, J.lo), ipt)
        shi = sign_at(shift - MultiPoly.const(vx.vars, J.hi), ipt)
        if slo > 0 >= shi:
            return J.as_point() if J.is_exact() else J
    raise AssertionError("sheared x-coordinate failed to match")


# ------------------------------------------------------------ sign_at

def sign_at(qpoly, pt, budget=DEFAULT_BUDGET):
    """Certified sign of qpoly at the point: -1, 0, or +1."""
    impl = pt._impl
    if impl[0] == "shear":
        lam, inner = impl[1], impl[2]
        vars2 = inner.system[0].vars
        qq = qpoly.reorder(vars2)
        vx = MultiPoly.var(vars2, vars2[0])
        vy = MultiPoly.var(vars2, vars2[1])
        return sign_at(qq.subs_poly(vars2[0], vx + vy * Fraction(lam)),
                       inner, budget)
    _, sname, tname, cpt = impl
    qq = qpoly.reorder((sname, tname))
    if qq.is_zero():
        return 0
    xa = cpt.xalg
    mode = cpt.ymode
    if mode == "rat":
        return xa.sign_of(_clear_int(
            _fr_list(qq.partial_eval(tname, cpt.ydata), sname)), budget)
    if mode == "alg1":
        return cpt.ydata.sign_of(_clear_int(
            _fr_list(qq.partial_eval(sname, xa.rat), tname)), budget)
    dq = qq.degree_in(tname)
    if dq <= 0:
        return xa.sign_of(_clear_int(_fr_list(qq, sname)), budget)
    if mode == "ratfun":
        ncl, dcl = cpt.ydata
        vars2 = (sname, tname)
        nmp = MultiPoly.from_int_list(vars2, sname, ncl)
        dmp = MultiPoly.from_int_list(vars2, sname, dcl)
        num = MultiPoly.zero(vars2)
        for j, c in enumerate(qq.coeffs_in(tname)):
            if not c.is_zero():
                num = num + c * nmp ** j * dmp ** (dq - j)
        s = xa.sign_of(_clear_int(_fr_list(num, sname)), budget)
        if s == 0:
            return 0
        if dq % 2:
            s *= xa.sign_of(dcl, budget)
        return s
    # fiber mode
    chain, ab = cpt.ydata
    qi = _clear_dens(qq)
    # exact-zero certificate via the subresultants of (fiber, query)
    zero = _fiber_zero_certificate(chain, qi, sname, tname, xa, ab)
    if zero:
        return 0
    fr_rows = [_fr_list(c, sname) for c in qq.coeffs_in(tname)]
    steps = 0
    while True:
        xiv = xa.bounds()
        coeff_ivs = [_iv_horner(row, xiv) for row in fr_rows]
        v = _iv_horner_iv(coeff_ivs, ab)
        s = _iv_sign(v)
        if s is not None and s != 0:
            cpt.ydata[1] = ab
            return s
        if steps >= budget:
            raise RefinementBudgetExceeded(
                f"sign undecided after {budget} refinements", budget=budget)
        steps += 1
        xa.halve()
        ab = chain.halve_interval(ab)
        if ab[0] == ab[1]:
            cpt.ydata[1] = ab
            return xa.sign_of(_clear_int(
                _fr_list(qq.partial_eval(tname, ab[0]), sname)))


def _fiber_zero_certificate(chain, qi, sname, tname, xa, ab):
    """Whether the query vanishes at the fiber root isolated by ab.

    The query vanishes iff the gcd of the fiber polynomial and the query
    above the base root has a root in ab; the gcd is read off the first
    nonvanishing principal subresultant coefficient.
    """
    G = chain.G
    dg, dq = G.degree_in(tname), qi.degree_in(tname)
    P2, Q2 = (G, qi) if dg >= dq else (qi, G)
    S2 = SubresSystem(P2, Q2, sname, tname)
    jstar = None
    for j in range(S2.q):
        if xa.sign_of(S2.psc(j)) != 0:
            jstar = j
            break
    if jstar == 0:
        return False
    if jstar is None:
        gcd_t = S2.Q
    else:
        gcd_t = S2.sres(jstar)
    try:
        ch2 = _FiberChain(gcd_t, sname, tname, xa)
    except ZeroPolynomial:
        # gcd vanishes identically at the base root: query contains the
        # whole fiber there
        return True
    lo, hi = ab
    if lo == hi:
        return ch2.sign_A_at(lo) == 0
    return ch2.count(lo, hi) >= 1
