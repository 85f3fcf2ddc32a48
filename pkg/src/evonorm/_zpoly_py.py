"""Dense univariate integer-polynomial kernels (pure-Python reference).

Polynomials are lists of Python ints in ascending degree order with no
trailing zeros; the zero polynomial is the empty list. These functions are
the hot loops of the package; `_zpoly.pyx` is the compiled twin and must
stay bit-identical in behavior.
"""

from math import gcd as _gcd

IMPL = "python"


def zx_trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


def zx_deg(c):
    return len(c) - 1


def zx_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return zx_trim(out)


def zx_neg(a):
    return [-v for v in a]


def zx_sub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return zx_trim(out)


def zx_scale(a, k):
    if k == 0:
        return []
    return [v * k for v in a]


def zx_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return out


def zx_mul_xk(a, k):
    if not a:
        return []
    return [0] * k + list(a)


def zx_derivative(a):
    return [i * v for i, v in enumerate(a)][1:]


def zx_content(a):
    g = 0
    for v in a:
        g = _gcd(g, v)
        if g == 1:
            return 1
    return g


def zx_primitive(a):
    """Return (content, primitive part); content carries the sign of lc."""
    if not a:
        return 0, []
    g = zx_content(a)
    if a[-1] < 0:
        g = -g
    return g, [v // g for v in a]


def zx_eval_int(a, x):
    r = 0
    for v in reversed(a):
        r = r * x + v
    return r


def zx_eval_num_den(a, num, den):
    """den^deg(a) * a(num/den), exact integer (den != 0)."""
    if not a:
        return 0
    r = 0
    p = 1
    for v in reversed(a):
        r = r * num + v * p
        p *= den
    return r


def zx_sign_at(a, num, den):
    """Sign of a(num/den) with den > 0."""
    v = zx_eval_num_den(a, num, den)
    return (v > 0) - (v < 0)


def zx_prem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b."""
    da, db = len(a) - 1, len(b) - 1
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    if da < db:
        return list(a)
    lb = b[-1]
    r = list(a)
    for k in range(da - db, -1, -1):
        coef = r[db + k]
        for i in range(db + k):
            r[i] *= lb
        for i in range(db):
            r[i + k] -= coef * b[i]
        r[db + k] = 0
    return zx_trim(r[:db])


def zx_shift_int(p, k):
    """p(x + k) for integer k."""
    out = list(p)
    n = len(out)
    for i in range(1, n):
        for j in range(n - 1 - i, n - 1):
            out[j] += k * out[j + 1]
    return out


def zx_gcd(a, b):
    """Positive-lc gcd in Z[x] (content gcd times primitive-PRS gcd)."""
    if not a and not b:
        return []
    if not a:
        a, b = b, a
    if not b:
        c, p = zx_primitive(a)
        return zx_scale(p, abs(c)) if abs(c) != 1 else p
    ca, pa = zx_primitive(a)
    cb, pb = zx_primitive(b)
    cg = _gcd(abs(ca), abs(cb))
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while pb:
        r = zx_prem(pa, pb)
        _, r = zx_primitive(r)
        pa, pb = pb, r
    return zx_scale(pa, cg) if cg != 1 else pa


def zx_resultant(a, b):
    """Exact resultant (Sylvester-determinant convention, Res(a, b))."""
    if not a or not b:
        return 0
    return _res(a, b)


def _res(p, q):
    dp, dq = len(p) - 1, len(q) - 1
    if dp < dq:
        s = -1 if (dp & 1) and (dq & 1) else 1
        return s * _res(q, p)
    if dq == 0:
        return q[0] ** dp
    r = zx_prem(p, q)
    if not r:
        return 0
    c, rt = zx_primitive(r)
    dr = len(rt) - 1
    sub = _res(q, rt)
    if sub == 0:
        return 0
    sgn = -1 if (dp & 1) and (dq & 1) else 1
    lq = q[-1]
    e = dp - dr - (dp - dq + 1) * dq
    num = sgn * (c**dq) * sub
    if e >= 0:
        return num * lq**e
    den = lq ** (-e)
    quo, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("inexact division in resultant recursion")
    return quo


def zx_sturm_chain(p):
    """Sign-correct pseudo-remainder chain of (p, p').

    Each step divides out positive content; the chain ends at (a positive
    multiple of) gcd(p, p'), so variation differences count distinct roots.
    """
    _, s0 = zx_primitive(p)
    chain = [s0]
    d = zx_trim(zx_derivative(s0))
    if not d:
        return chain
    _, s1 = zx_primitive(d)
    chain.append(s1)
    while len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r = zx_prem(a, b)
        if not r:
            break
        # implied multiplier is lc(b)^(delta+1); keep the overall factor
        # positive so the Sturm sign relation survives
        if b[-1] < 0 and ((len(a) - len(b) + 1) & 1):
            nxt = r
        else:
            nxt = zx_neg(r)
        g = zx_content(nxt)
        chain.append([v // g for v in nxt])
    return chain


def zx_var_at(chain, num, den):
    """Sign variations of the chain at num/den (den > 0), zeros skipped."""
    prev = 0
    var = 0
    for p in chain:
        s = zx_sign_at(p, num, den)
        if s:
            if prev and s != prev:
                var += 1
            prev = s
    return var


def zx_var_at_inf(chain, direction):
    """Sign variations at +infinity (direction=1) or -infinity (-1)."""
    prev = 0
    var = 0
    for p in chain:
        if not p:
            continue
        s = 1 if p[-1] > 0 else -1
        if direction < 0 and ((len(p) - 1) & 1):
            s = -s
        if prev and s != prev:
            var += 1
        prev = s
    return var


def zx_count_roots(chain, an, ad, bn, bd):
    """Distinct real roots of chain[0] in (a, b], a=an/ad < b=bn/bd."""
    return zx_var_at(chain, an, ad) - zx_var_at(chain, bn, bd)


def zx_count_all(chain):
    return zx_var_at_inf(chain, -1) - zx_var_at_inf(chain, 1)


def zx_cauchy_bound(p):
    """Power-of-two integer K with every real root in (-K, K)."""
    lc = abs(p[-1])
    m = 0
    for v in p[:-1]:
        if abs(v) > m:
            m = abs(v)
    k = 1
    while k * lc <= m + lc:
        k <<= 1
    return k


def zx_variations(c):
    prev = 0
    var = 0
    for v in c:
        if v:
            s = 1 if v > 0 else -1
            if prev and s != prev:
                var += 1
            prev = s
    return var


def zx_shift1(p):
    """p(x+1) by repeated Pascal accumulation."""
    out = list(p)
    n = len(out)
    for i in range(1, n):
        for j in range(n - 1 - i, n - 1):
            out[j] += out[j + 1]
    return out


def zx_scale_var(p, num, den):
    """den^deg * p(num*x/den), integer output."""
    n = len(p)
    out = list(p)
    pw_num = 1
    for i in range(n):
        out[i] *= pw_num * den ** (n - 1 - i)
        pw_num *= num
    return zx_trim(out)


def zx_descartes_01(p):
    """Descartes variation bound for roots in the open interval (0, 1)."""
    q = list(reversed(p))
    return zx_variations(zx_shift1(q))


def zx_divexact(a, b):
    """Exact division in Z[x]; raises if b does not divide a."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    out = [0] * (len(a) - len(b) + 1)
    r = list(a)
    lb = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = r[len(b) - 1 + k]
        if c % lb != 0:
            raise ArithmeticError("inexact polynomial division")
        q = c // lb
        out[k] = q
        if q:
            for i in range(len(b)):
                r[i + k] -= q * b[i]
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return zx_trim(out)


def int_det_bareiss(rows):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = -1
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    piv = r
                    break
            if piv < 0:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]
