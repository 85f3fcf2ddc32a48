"""Subresultant data for bivariate integer polynomials.

Principal subresultant coefficients (psc) and subresultant polynomials of
a pair in Z[x][y] are obtained from their determinant definition by
integer evaluation and exact Newton interpolation. The determinant
definition commutes with substituting any value of x, so no genericity
conditions on evaluation nodes are needed; the formal y-degrees are those
of the input pair.
"""

import math
from fractions import Fraction

from . import kernels as K
from .poly import MultiPoly


def _clear_dens(P):
    """Scale by the lcm of coefficient denominators (integer result)."""
    d = math.lcm(*(c.denominator for c in P.terms.values())) if P.terms else 1
    return P * Fraction(d) if d != 1 else P


def _ycoeff_lists(P, xname, yname):
    """Coefficients of P in y as dense integer x-lists (ascending y)."""
    out = []
    for c in P.coeffs_in(yname):
        if c.is_zero():
            out.append([])
        else:
            s, lst = c.to_int_list(xname)
            if s != 1:
                raise ArithmeticError("non-integer coefficients")
            out.append(lst)
    return out


def _eval_x(ylists, a):
    return [K.zx_eval_int(c, a) if c else 0 for c in ylists]


def _subres_coeff_det(pc, qc, p, q, j, ell):
    """Coefficient of y^ell in the j-th subresultant of integer univariate
    polynomials with formal degrees p and q (pc, qc padded to p+1, q+1)."""
    m = p + q - 2 * j
    if m <= 0:
        raise ValueError("subresultant index out of range")
    width = p + q - j
    rows = []
    # rows: y^(q-j-1-i) * P for i in 0..q-j-1, then y^(p-j-1-i) * Q
    for i in range(q - j):
        row = [0] * width
        # y^(q-j-1-i) * P has coefficients P_k at degree k + q-j-1-i;
        # columns indexed by degree descending from p+q-j-1
        shift = q - j - 1 - i
        for k in range(p + 1):
            deg = k + shift
            row[width - 1 - deg] = pc[k]
        rows.append(row)
    for i in range(p - j):
        row = [0] * width
        shift = p - j - 1 - i
        for k in range(q + 1):
            deg = k + shift
            row[width - 1 - deg] = qc[k]
        rows.append(row)
    # square matrix: first m-1 columns plus the column of degree ell
    col_ell = width - 1 - ell
    mat = [r[: m - 1] + [r[col_ell]] for r in rows]
    return K.int_det_bareiss(mat)


def uv_subres_coeff(pc, qc, j, ell):
    """Coefficient of y^ell in S_j for integer coefficient lists."""
    p, q = len(pc) - 1, len(qc) - 1
    return _subres_coeff_det(pc, qc, p, q, j, ell)


def _newton_int(nodes, values):
    """Exact integer-coefficient polynomial through the given points."""
    n = len(nodes)
    coef = [Fraction(v) for v in values]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (nodes[i] - nodes[i - level])
    out = [Fraction(0)] * n
    out[0] = coef[n - 1]
    deg = 0
    for i in range(n - 2, -1, -1):
        # out = out*(x - nodes[i]) + coef[i]
        nxt = [Fraction(0)] * n
        for d in range(deg + 1):
            nxt[d + 1] += out[d]
            nxt[d] -= out[d] * nodes[i]
        nxt[0] += coef[i]
        out = nxt
        deg += 1
    res = []
    for v in out:
        if v.denominator != 1:
            raise ArithmeticError("non-integer interpolation result")
        res.append(int(v))
    return K.zx_trim(res)


def _nodes(n):
    out = [0]
    k = 1
    while len(out) < n:
        out.append(k)
        if len(out) < n:
            out.append(-k)
        k += 1
    return out[:n]


class SubresSystem:
    """Cached subresultant data for one ordered pair (P, Q) in Z[x][y]."""

    def __init__(self, P, Q, xname, yname):
        if P.degree_in(yname) < Q.degree_in(yname):
            raise ValueError("require deg_y P >= deg_y Q")
        self.xname = xname
        self.yname = yname
        P = _clear_dens(P)
        Q = _clear_dens(Q)
        self.P = P
        self.Q = Q
        self.p = P.degree_in(yname)
        self.q = Q.degree_in(yname)
        self.dxp = max(P.degree_in(xname), 0)
        self.dxq = max(Q.degree_in(xname), 0)
        self._pl = _ycoeff_lists(P, xname, yname)
        self._ql = _ycoeff_lists(Q, xname, yname)
        self._psc = {}
        self._sres = {}

    def _bound(self, j):
        return (self.q - j) * self.dxp + (self.p - j) * self.dxq

    def psc(self, j):
        """psc_j as a dense integer x-list (j in 1..q-1)."""
        if j in self._psc:
            return self._psc[j]
        n = self._bound(j) + 1
        nodes = _nodes(n)
        vals = []
        for a in nodes:
            pa = _eval_x(self._pl, a)
            qa = _eval_x(self._ql, a)
            vals.append(_subres_coeff_det(pa, qa, self.p, self.q, j, j))
        out = _newton_int(nodes, vals)
        self._psc[j] = out
        return out

    def sres(self, j):
        """S_j as a MultiPoly in (xname, yname), integer coefficients."""
        if j in self._sres:
            return self._sres[j]
        n = self._bound(j) + 1
        nodes = _nodes(n)
        evals = []
        for a in nodes:
            pa = _eval_x(self._pl, a)
            qa = _eval_x(self._ql, a)
            evals.append([
                _subres_coeff_det(pa, qa, self.p, self.q, j, ell)
                for ell in range(j + 1)
            ])
        vars = (self.xname, self.yname)
        out = MultiPoly.zero(vars)
        for ell in range(j + 1):
            cl = _newton_int(nodes, [e[ell] for e in evals])
            xpoly = MultiPoly.from_int_list(vars, self.xname, cl)
            out = out + xpoly * MultiPoly.var(vars, self.yname) ** ell
        self._sres[j] = out
        return out
