# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _zpoly_py: dense univariate integer-polynomial kernels.

Coefficients stay arbitrary-precision Python ints; Cython removes the
interpreter overhead of the inner loops. Behavior must be bit-identical
to the pure module.
"""

from math import gcd as _gcd

IMPL = "cython"


cpdef list zx_trim(list c):
    cdef Py_ssize_t n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


cpdef Py_ssize_t zx_deg(list c):
    return len(c) - 1


cpdef list zx_add(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return zx_trim(out)


cpdef list zx_neg(list a):
    return [-v for v in a]


cpdef list zx_sub(list a, list b):
    cdef Py_ssize_t i
    cdef list out = list(a) + [0] * (len(b) - len(a))
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return zx_trim(out)


cpdef list zx_scale(list a, k):
    if k == 0:
        return []
    return [v * k for v in a]


cpdef list zx_mul(list a, list b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        u = a[i]
        if u != 0:
            for j in range(nb):
                out[i + j] = out[i + j] + u * b[j]
    return out


cpdef list zx_mul_xk(list a, Py_ssize_t k):
    if not a:
        return []
    return [0] * k + list(a)


cpdef list zx_derivative(list a):
    cdef Py_ssize_t i
    return [i * a[i] for i in range(1, len(a))]


cpdef zx_content(list a):
    g = 0
    for v in a:
        g = _gcd(g, v)
        if g == 1:
            return 1
    return g


cpdef tuple zx_primitive(list a):
    if not a:
        return 0, []
    g = zx_content(a)
    if a[len(a) - 1] < 0:
        g = -g
    return g, [v // g for v in a]


cpdef zx_eval_int(list a, x):
    r = 0
    for v in reversed(a):
        r = r * x + v
    return r


cpdef zx_eval_num_den(list a, num, den):
    if not a:
        return 0
    r = 0
    p = 1
    for v in reversed(a):
        r = r * num + v * p
        p = p * den
    return r


cpdef int zx_sign_at(list a, num, den):
    v = zx_eval_num_den(a, num, den)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


cpdef list zx_prem(list a, list b):
    cdef Py_ssize_t da = len(a) - 1, db = len(b) - 1, i, k
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    if da < db:
        return list(a)
    lb = b[db]
    cdef list r = list(a)
    for k in range(da - db, -1, -1):
        coef = r[db + k]
        for i in range(db + k):
            r[i] = r[i] * lb
        for i in range(db):
            r[i + k] = r[i + k] - coef * b[i]
        r[db + k] = 0
    return zx_trim(r[:db])


cpdef list zx_shift_int(list p, k):
    cdef Py_ssize_t i, j, n = len(p)
    cdef list out = list(p)
    for i in range(1, n):
        for j in range(n - 1 - i, n - 1):
            out[j] = out[j] + k * out[j + 1]
    return out


cpdef list zx_gcd(list a, list b):
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


cpdef zx_resultant(list a, list b):
    if not a or not b:
        return 0
    return _res(a, b)


cdef _res(list p, list q):
    cdef Py_ssize_t dp = len(p) - 1, dq = len(q) - 1, dr, e
    cdef int sgn
    if dp < dq:
        sgn = -1 if (dp & 1) and (dq & 1) else 1
        return sgn * _res(q, p)
    if dq == 0:
        return q[0] ** dp
    cdef list r = zx_prem(p, q)
    if not r:
        return 0
    c, rt = zx_primitive(r)
    dr = len(rt) - 1
    sub = _res(q, rt)
    if sub == 0:
        return 0
    sgn = -1 if (dp & 1) and (dq & 1) else 1
    lq = q[dq]
    e = dp - dr - (dp - dq + 1) * dq
    num = sgn * (c**dq) * sub
    if e >= 0:
        return num * lq**e
    den = lq ** (-e)
    quo, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("inexact division in resultant recursion")
    return quo


cpdef list zx_sturm_chain(list p):
    _, s0 = zx_primitive(p)
    cdef list chain = [s0]
    cdef list d = zx_trim(zx_derivative(s0))
    if not d:
        return chain
    _, s1 = zx_primitive(d)
    chain.append(s1)
    cdef list a, b, r, nxt
    while len(chain[len(chain) - 1]) > 1:
        a = chain[len(chain) - 2]
        b = chain[len(chain) - 1]
        r = zx_prem(a, b)
        if not r:
            break
        if b[len(b) - 1] < 0 and ((len(a) - len(b) + 1) & 1):
            nxt = r
        else:
            nxt = zx_neg(r)
        g = zx_content(nxt)
        chain.append([v // g for v in nxt])
    return chain


cpdef int zx_var_at(list chain, num, den):
    cdef int prev = 0, var = 0, s
    for p in chain:
        s = zx_sign_at(p, num, den)
        if s:
            if prev and s != prev:
                var += 1
            prev = s
    return var


cpdef int zx_var_at_inf(list chain, int direction):
    cdef int prev = 0, var = 0, s
    for p in chain:
        if not p:
            continue
        s = 1 if p[len(p) - 1] > 0 else -1
        if direction < 0 and ((len(p) - 1) & 1):
            s = -s
        if prev and s != prev:
            var += 1
        prev = s
    return var


cpdef int zx_count_roots(list chain, an, ad, bn, bd):
    return zx_var_at(chain, an, ad) - zx_var_at(chain, bn, bd)


cpdef int zx_count_all(list chain):
    return zx_var_at_inf(chain, -1) - zx_var_at_inf(chain, 1)


cpdef zx_cauchy_bound(list p):
    lc = abs(p[len(p) - 1])
    m = 0
    for v in p[: len(p) - 1]:
        if abs(v) > m:
            m = abs(v)
    k = 1
    while k * lc <= m + lc:
        k = k << 1
    return k


cpdef int zx_variations(list c):
    cdef int prev = 0, var = 0, s
    for v in c:
        if v != 0:
            s = 1 if v > 0 else -1
            if prev and s != prev:
                var += 1
            prev = s
    return var


cpdef list zx_shift1(list p):
    cdef Py_ssize_t i, j, n = len(p)
    cdef list out = list(p)
    for i in range(1, n):
        for j in range(n - 1 - i, n - 1):
            out[j] = out[j] + out[j + 1]
    return out


cpdef list zx_scale_var(list p, num, den):
    cdef Py_ssize_t i, n = len(p)
    cdef list out = list(p)
    pw = 1
    for i in range(n):
        out[i] = out[i] * pw * den ** (n - 1 - i)
        pw = pw * num
    return zx_trim(out)


cpdef int zx_descartes_01(list p):
    cdef list q = list(p)
    q.reverse()
    return zx_variations(zx_shift1(q))


cpdef list zx_divexact(list a, list b):
    cdef Py_ssize_t i, k, nb = len(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    cdef list out = [0] * (len(a) - nb + 1)
    cdef list r = list(a)
    lb = b[nb - 1]
    for k in range(len(a) - nb, -1, -1):
        c = r[nb - 1 + k]
        if c % lb != 0:
            raise ArithmeticError("inexact polynomial division")
        q = c // lb
        out[k] = q
        if q != 0:
            for i in range(nb):
                r[i + k] = r[i + k] - q * b[i]
    for v in r:
        if v != 0:
            raise ArithmeticError("inexact polynomial division")
    return zx_trim(out)


cpdef int_det_bareiss(rows):
    cdef Py_ssize_t n = len(rows), i, j, k, piv
    if n == 0:
        return 1
    cdef list m = [list(r) for r in rows]
    cdef int sign = 1
    prev = 1
    cdef list row_i, row_k
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = -1
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    piv = i
                    break
            if piv < 0:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        row_k = m[k]
        pkk = row_k[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]
