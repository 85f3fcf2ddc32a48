"""Tests for the dense integer univariate kernels.

The compiled extension and the pure Python twin must agree bit for bit;
resultants are checked against a naive Sylvester determinant over Fraction.
"""

from fractions import Fraction

import pytest

from evonorm import _zpoly_py as pure
from evonorm import kernels as K
from evonorm.prng import SplitMix64

try:
    from evonorm import _zpoly as compiled
except ImportError:
    compiled = None


def rand_zx(rng, max_deg, lo=-9, hi=9):
    deg = rng.randint(0, max_deg)
    c = [rng.randint(lo, hi) for _ in range(deg + 1)]
    return K.zx_trim(c)


def sylvester_resultant(a, b):
    """Naive Sylvester determinant over Fraction, used only as an oracle."""
    da, db = len(a) - 1, len(b) - 1
    if da < 0 or db < 0:
        return 0
    if da == 0 and db == 0:
        return 1
    n = da + db
    rows = []
    for i in range(db):
        row = [Fraction(0)] * n
        for j, c in enumerate(reversed(a)):
            row[i + j] = Fraction(c)
        rows.append(row)
    for i in range(da):
        row = [Fraction(0)] * n
        for j, c in enumerate(reversed(b)):
            row[i + j] = Fraction(c)
        rows.append(row)
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col]:
                f = rows[r][col] * inv
                for cidx in range(col, n):
                    rows[r][cidx] -= f * rows[col][cidx]
    assert det.denominator == 1
    return det.numerator


def test_trim_and_degree():
    assert K.zx_trim([1, 2, 0, 0]) == [1, 2]
    assert K.zx_trim([0, 0]) == []
    assert K.zx_deg([]) == -1
    assert K.zx_deg([5]) == 0
    assert K.zx_deg([0, 0, 3]) == 2


def test_arithmetic_basics():
    a = [1, 2, 3]          # 3x^2 + 2x + 1
    b = [-1, 1]            # x - 1
    assert K.zx_add(a, b) == [0, 3, 3]
    assert K.zx_sub(a, b) == [2, 1, 3]
    assert K.zx_mul(a, b) == [-1, -1, -1, 3]
    assert K.zx_mul_xk(b, 2) == [0, 0, -1, 1]
    assert K.zx_scale(b, -2) == [2, -2]
    assert K.zx_neg(b) == [1, -1]
    assert K.zx_derivative([1, 2, 3]) == [2, 6]


def test_content_primitive():
    assert K.zx_content([6, -9, 12]) == 3
    assert K.zx_primitive([6, -9, 12]) == (3, [2, -3, 4])
    assert K.zx_primitive([-4, -8]) == (-4, [1, 2])


def test_eval_and_sign():
    p = [-2, 0, 1]  # x^2 - 2
    assert K.zx_eval_int(p, 2) == 2
    assert K.zx_sign_at(p, 1, 1) == -1
    assert K.zx_sign_at(p, 3, 2) == 1
    assert K.zx_sign_at([0, 1], 0, 1) == 0
    # den^deg * p(num/den)
    assert Fraction(K.zx_eval_num_den(p, 3, 2), 2 ** 2) == Fraction(9, 4) - 2


def test_prem_degree_drop():
    a = [-2, 0, 0, 1]  # x^3 - 2
    b = [-1, 1]        # x - 1
    r = K.zx_prem(a, b)
    assert K.zx_deg(r) < K.zx_deg(b) or r == []
    # remainder of x^3-2 by x-1 is -1 up to the lc power (lc=1)
    assert r == [-1]


def test_gcd_known():
    a = K.zx_mul([-1, 1], [-1, 1])        # (x-1)^2
    a = K.zx_mul(a, [2, 1])               # (x-1)^2 (x+2)
    b = K.zx_mul([-1, 1], [5, 1])         # (x-1)(x+5)
    assert K.zx_gcd(a, b) == [-1, 1]
    assert K.zx_gcd([4, 2], [6, 3]) == [2, 1]
    assert K.zx_gcd([], [3, 6]) == [3, 6]
    assert K.zx_gcd([], [-3, -6]) == [3, 6]


def test_divexact():
    a = K.zx_mul([-3, 1, 7], [2, 0, 5])
    assert K.zx_divexact(a, [2, 0, 5]) == [-3, 1, 7]
    assert K.zx_divexact(a, [-3, 1, 7]) == [2, 0, 5]


def test_resultant_small_cases():
    # Res(x^2+1, x-2) = 5
    assert K.zx_resultant([1, 0, 1], [-2, 1]) == 5
    # Res(x^2-2, x^2-2) = 0
    assert K.zx_resultant([-2, 0, 1], [-2, 0, 1]) == 0
    # disc-style pair: Res(x^2-2, 2x) = -8
    assert K.zx_resultant([-2, 0, 1], [0, 2]) == sylvester_resultant([-2, 0, 1], [0, 2])


def test_resultant_vs_sylvester_corpus():
    rng = SplitMix64(101)
    done = 0
    while done < 50:
        a = rand_zx(rng, 5)
        b = rand_zx(rng, 5)
        if K.zx_deg(a) < 1 or K.zx_deg(b) < 1:
            continue
        done += 1
        assert K.zx_resultant(a, b) == sylvester_resultant(a, b)


def test_det_bareiss_oracle():
    rng = SplitMix64(73)
    for _ in range(20):
        n = rng.randint(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        det = K.int_det_bareiss([row[:] for row in m])
        # Fraction Gaussian elimination oracle
        rows = [[Fraction(v) for v in row] for row in m]
        ref = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r][col]), None)
            if piv is None:
                ref = Fraction(0)
                break
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                ref = -ref
            ref *= rows[col][col]
            for r in range(col + 1, n):
                if rows[r][col]:
                    f = rows[r][col] / rows[col][col]
                    for c in range(col, n):
                        rows[r][c] -= f * rows[col][c]
        assert det == ref


def test_sturm_counts_known():
    p = [-2, 0, 1]  # x^2 - 2
    ch = K.zx_sturm_chain(p)
    assert K.zx_count_all(ch) == 2
    assert K.zx_count_roots(ch, 0, 1, 2, 1) == 1
    p = [0, -3, 0, 1]  # x^3 - 3x
    ch = K.zx_sturm_chain(p)
    assert K.zx_count_all(ch) == 3
    assert K.zx_count_roots(ch, -2, 1, 2, 1) == 3
    # non-squarefree input still counts distinct roots
    p = K.zx_mul([-1, 1], [-1, 1])
    ch = K.zx_sturm_chain(p)
    assert K.zx_count_all(ch) == 1


def test_var_at_inf_matches_large_argument():
    rng = SplitMix64(7)
    for _ in range(20):
        p = rand_zx(rng, 6)
        if K.zx_deg(p) < 1:
            continue
        ch = K.zx_sturm_chain(p)
        big = K.zx_cauchy_bound(p) + 1
        assert K.zx_var_at_inf(ch, 1) == K.zx_var_at(ch, big, 1)
        assert K.zx_var_at_inf(ch, -1) == K.zx_var_at(ch, -big, 1)


def test_cauchy_bound_contains_all_roots():
    rng = SplitMix64(11)
    for _ in range(20):
        p = rand_zx(rng, 6)
        if K.zx_deg(p) < 1:
            continue
        b = K.zx_cauchy_bound(p)
        assert b >= 1 and (b & (b - 1)) == 0  # power of two
        ch = K.zx_sturm_chain(p)
        assert K.zx_count_roots(ch, -b, 1, b, 1) == K.zx_count_all(ch)


def test_descartes_01():
    # x^2 - 3x + 1 has one root in (0,1), and the bound is >= the count
    assert K.zx_descartes_01([1, -3, 1]) >= 1
    # x^2 + 1 has no real roots at all
    assert K.zx_descartes_01([1, 0, 1]) == 0


@pytest.mark.skipif(compiled is None, reason="compiled extension not built")
def test_compiled_and_pure_twins_agree():
    rng = SplitMix64(2024)
    for _ in range(30):
        a = rand_zx(rng, 6)
        b = rand_zx(rng, 6)
        assert pure.zx_mul(a, b) == compiled.zx_mul(a, b)
        assert pure.zx_gcd(a, b) == compiled.zx_gcd(a, b)
        if K.zx_deg(a) >= 1 and K.zx_deg(b) >= 1:
            assert pure.zx_resultant(a, b) == compiled.zx_resultant(a, b)
            assert pure.zx_prem(a, b) == compiled.zx_prem(a, b)
        if K.zx_deg(a) >= 1:
            ca = pure.zx_sturm_chain(a)
            cb = compiled.zx_sturm_chain(a)
            assert ca == cb
            assert pure.zx_count_all(ca) == compiled.zx_count_all(cb)
