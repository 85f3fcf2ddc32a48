"""Certified real-root counting, isolation, and refinement for univariate
polynomials over Q.

Counting convention: sturm_count(p, a, b) counts distinct real roots in
the half-open interval (a, b]. Isolating intervals carry their squarefree
primitive defining polynomial; every isolation result is cross-checked
against the Descartes bound (count <= bound, same parity).
"""

from fractions import Fraction

from . import kernels as K
from .errors import RefinementBudgetExceeded, ZeroPolynomial
from .poly import MultiPoly

DEFAULT_BUDGET = 4096


class IsolatingInterval:
    """Isolating interval for one real root of its defining polynomial.

    `defining` is squarefree with exactly one root in [lo, hi]. Either
    lo < hi with the defining polynomial nonzero at lo (the root lies in
    the half-open interval (lo, hi]), or lo == hi and the root is the
    exact rational lo.
    """

    __slots__ = ("lo", "hi", "defining", "_coeffs", "_chain")

    def __init__(self, lo, hi, defining, coeffs=None, chain=None):
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self.defining = defining
        if coeffs is None:
            _, coeffs = defining.to_int_list(_only_var(defining))
        self._coeffs = coeffs
        self._chain = chain if chain is not None else K.zx_sturm_chain(coeffs)

    def width(self):
        return self.hi - self.lo

    def midpoint(self):
        return (self.lo + self.hi) / 2

    def count(self):
        if self.lo == self.hi:
            return 1
        a, b = self.lo, self.hi
        return K.zx_count_roots(self._chain, a.numerator, a.denominator,
                                b.numerator, b.denominator)

    def is_exact(self):
        """True when hi is itself the root."""
        return K.zx_sign_at(self._coeffs, self.hi.numerator, self.hi.denominator) == 0

    def as_point(self):
        """Exact rational value when the root is known exactly, else None."""
        if self.lo == self.hi or self.is_exact():
            return self.hi
        return None

    def refined(self, max_width=None, budget=DEFAULT_BUDGET):
        """A narrower copy; bisection until width <= max_width.

        Collapses to a zero-width interval whenever the root is found to
        be an endpoint or bisection midpoint; exact roots stay exact.
        """
        if self.lo == self.hi:
            return self
        if self.is_exact():
            return IsolatingInterval(self.hi, self.hi, self.defining,
                                     self._coeffs, self._chain)
        if max_width is None:
            max_width = self.width() / 2
        lo, hi = self.lo, self.hi
        steps = 0
        while hi - lo > max_width:
            if steps >= budget:
                raise RefinementBudgetExceeded(
                    f"exceeded {budget} bisections refining to width {max_width}",
                    budget=budget)
            steps += 1
            mid = (lo + hi) / 2
            if K.zx_sign_at(self._coeffs, mid.numerator, mid.denominator) == 0:
                return IsolatingInterval(mid, mid, self.defining,
                                         self._coeffs, self._chain)
            if K.zx_count_roots(self._chain, lo.numerator, lo.denominator,
                                mid.numerator, mid.denominator) == 1:
                hi = mid
            else:
                lo = mid
        return IsolatingInterval(lo, hi, self.defining, self._coeffs, self._chain)

    def __repr__(self):
        return f"IsolatingInterval({self.lo}, {self.hi}; {self.defining})"


def _only_var(p):
    used = [v for v in p.vars if p.degree_in(v) > 0]
    if len(used) > 1:
        raise ValueError("polynomial is not univariate")
    return used[0] if used else p.vars[0]


def _to_coeffs(p):
    """Integer coefficient list of a univariate MultiPoly (any scalar)."""
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial")
    name = _only_var(p)
    _, coeffs = p.to_int_list(name)
    return name, coeffs


def _is_neg_inf(v):
    return isinstance(v, float) and v == float("-inf")


def _is_pos_inf(v):
    return isinstance(v, float) and v == float("inf")


def sturm_count(p, a, b):
    """Distinct real roots of p in (a, b]; endpoints may be +-inf."""
    _, coeffs = _to_coeffs(p)
    if len(coeffs) == 1:
        return 0
    chain = K.zx_sturm_chain(coeffs)
    if _is_neg_inf(a):
        va = K.zx_var_at_inf(chain, -1)
    else:
        a = Fraction(a)
        va = K.zx_var_at(chain, a.numerator, a.denominator)
    if _is_pos_inf(b):
        vb = K.zx_var_at_inf(chain, 1)
    else:
        b = Fraction(b)
        vb = K.zx_var_at(chain, b.numerator, b.denominator)
    return va - vb


def _fr_shift_scale(coeffs, a, s):
    """Coefficients of p(a + s*u) over Fraction, from integer `coeffs`."""
    out = [Fraction(coeffs[-1])]
    for c in reversed(coeffs[:-1]):
        # out = out*(a + s*u) + c
        nxt = [Fraction(0)] * (len(out) + 1)
        for i, v in enumerate(out):
            nxt[i] += v * a
            nxt[i + 1] += v * s
        nxt[0] += c
        out = nxt
    while out and out[-1] == 0:
        out.pop()
    return out


def descartes_bound(coeffs, a, b):
    """Descartes bound for the number of roots in the open interval (a, b)."""
    q = _fr_shift_scale(coeffs, Fraction(a), Fraction(b) - Fraction(a))
    # roots in (0,1): reverse then shift by 1, count sign variations
    q = list(reversed(q))
    n = len(q)
    for i in range(1, n):
        for j in range(n - 1 - i, n - 1):
            q[j] += q[j + 1]
    prev = 0
    var = 0
    for v in q:
        if v:
            s = 1 if v > 0 else -1
            if prev and s != prev:
                var += 1
            prev = s
    return var


def isolate_real_roots(p, check_descartes=True):
    """Disjoint isolating intervals, in increasing order, one per distinct
    real root of p. The defining polynomial is the squarefree primitive
    part of p."""
    name, coeffs = _to_coeffs(p)
    if len(coeffs) == 1:
        return []
    prim = K.zx_primitive(coeffs)[1]
    der = K.zx_trim(K.zx_derivative(prim))
    g = K.zx_gcd(prim, der) if der else []
    sqfree = _zx_divexact(prim, g) if len(g) > 1 else prim
    defining = MultiPoly.from_int_list((name,), name, sqfree).canonical()
    _, dcoeffs = defining.to_int_list(name)
    dchain = K.zx_sturm_chain(dcoeffs)
    bound = K.zx_cauchy_bound(dcoeffs)
    total = K.zx_count_roots(dchain, -bound, 1, bound, 1)
    out = []
    stack = [(Fraction(-bound), Fraction(bound), total)]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append(IsolatingInterval(lo, hi, defining, dcoeffs, dchain))
            continue
        mid = (lo + hi) / 2
        left = K.zx_count_roots(dchain, lo.numerator, lo.denominator,
                                mid.numerator, mid.denominator)
        stack.append((mid, hi, cnt - left))
        stack.append((lo, mid, left))
    out.sort(key=lambda iv: iv.lo)
    if check_descartes:
        for iv in out:
            open_cnt = 1 - (1 if iv.is_exact() else 0)
            db = descartes_bound(dcoeffs, iv.lo, iv.hi)
            if not (open_cnt <= db and (db - open_cnt) % 2 == 0):
                raise AssertionError(
                    f"Descartes bound {db} inconsistent with Sturm count on "
                    f"({iv.lo}, {iv.hi}]")
    # collapse rational roots to zero-width intervals
    cands = None
    res = []
    for iv in out:
        pt = iv.as_point()
        if pt is None:
            if cands is None:
                cands = _rational_root_candidates(dcoeffs)
            for r in cands:
                if iv.lo < r <= iv.hi and K.zx_sign_at(
                        dcoeffs, r.numerator, r.denominator) == 0:
                    pt = r
                    break
        if pt is not None:
            res.append(IsolatingInterval(pt, pt, defining, dcoeffs, dchain))
        else:
            res.append(iv)
    return res


_RAT_SCAN_CAP = 10 ** 12
_RAT_CAND_CAP = 2000


def _divisors(n):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def _rational_root_candidates(coeffs):
    """Candidate rational roots p/q (q | lc, p | trailing coefficient).

    Returns the empty list of nonzero candidates when the coefficients are
    too large to factor quickly; zero is always reported when x divides."""
    k = 0
    while coeffs[k] == 0:
        k += 1
    cands = [Fraction(0)] if k else []
    a0, lc = abs(coeffs[k]), abs(coeffs[-1])
    if a0 > _RAT_SCAN_CAP or lc > _RAT_SCAN_CAP:
        return cands
    nums = _divisors(a0)
    dens = _divisors(lc)
    if len(nums) * len(dens) > _RAT_CAND_CAP:
        return cands
    seen = set()
    for n in nums:
        for d in dens:
            f = Fraction(n, d)
            if f not in seen:
                seen.add(f)
                cands.append(f)
                cands.append(-f)
    return cands


def _zx_divexact(a, b):
    """Exact division in Z[x] (b | a known)."""
    out = [0] * (len(a) - len(b) + 1)
    r = list(a)
    for k in range(len(a) - len(b), -1, -1):
        c = r[len(b) - 1 + k]
        if c % b[-1] != 0:
            raise ArithmeticError("inexact division")
        q = c // b[-1]
        out[k] = q
        if q:
            for i, bv in enumerate(b):
                r[i + k] -= q * bv
    if any(r):
        raise ArithmeticError("inexact division")
    return K.zx_trim(out)


def refine(interval, max_width, budget=DEFAULT_BUDGET):
    """Public refinement wrapper."""
    return interval.refined(Fraction(max_width), budget)
