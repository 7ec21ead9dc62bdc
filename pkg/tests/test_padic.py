import random
from fractions import Fraction

import pytest

from padicheights.padic import (
    DomainError,
    PadicMatrix,
    PadicNumber,
    PadicSeries,
    PrecisionError,
    formal_antiderivative,
    hensel_sqrt,
    log_iwasawa,
    solve_linear,
    teichmuller,
)


def Zp(n, prec=12, p=7):
    return PadicNumber.from_int(p, n, prec)


# ---------------------------------------------------------------- PadicNumber


def test_normalization_and_digits():
    x = Zp(3 * 49, prec=6)
    assert x.val == 2 and x.unit == 3 and x.prec == 6
    assert x.digits() == [3, 0, 0, 0]
    assert str(Zp(0, prec=5)) == "O(7^5)"
    assert str(Zp(5 * 7 + 4 * 343, prec=5)) == "5*7 + 4*7^3 + O(7^5)"


def test_arithmetic_precision_rules():
    a = PadicNumber.from_int(7, 3, 10)
    b = PadicNumber.from_int(7, 4, 6)
    assert (a + b).prec == 6
    c = PadicNumber(7, 2, 1, 9)  # 49 known mod 7^9, rel prec 7
    d = PadicNumber(7, 1, 3, 4)  # 21 known mod 7^4, rel prec 3
    assert (c * d).val == 3 and (c * d).prec == 3 + 3
    # zero times something: O(7^6) * 7^2 = O(7^8)
    z = PadicNumber.zero(7, 6)
    assert (z * c).prec == 8 and (z * c).is_zero


def test_rational_and_json_roundtrip():
    x = PadicNumber.from_rational(7, Fraction(3, 5), 8)
    assert (x * 5 - 3).is_zero
    y = PadicNumber.from_json(7, x.to_json())
    assert (x - y).is_zero and y.prec == x.prec
    z = PadicNumber.zero(7, 4)
    assert PadicNumber.from_json(7, z.to_json()).is_zero


def test_negative_valuation():
    x = PadicNumber.from_rational(7, Fraction(1, 7), 5)
    assert x.val == -1
    assert (x * 7 - 1).is_zero
    assert x.as_fraction() == Fraction(1, 7)


def test_division_and_inverse():
    a = Zp(10)
    b = Zp(3)
    assert ((a / b) * b - a).is_zero
    with pytest.raises(PrecisionError):
        a / PadicNumber.zero(7, 5)


# oracle: truncated series sum over exact rationals, reduced mod 7^10
def _log_series_oracle(z, p, n):
    total = Fraction(0)
    for k in range(1, 60):
        term = Fraction((-1) ** (k + 1) * z ** k, k)
        total += term
    num, den = total.numerator, total.denominator
    e = 0
    while den % p == 0:
        den //= p
        e += 1
    assert e == 0  # truncated sum of p-integral terms stays p-integral
    mod = p ** n
    return num * pow(den, -1, mod) % mod


def test_log_iwasawa_examples():
    p, n = 7, 10
    assert log_iwasawa(PadicNumber.from_int(p, p, n)).is_zero
    assert log_iwasawa(PadicNumber.one(p, n)).is_zero
    got = log_iwasawa(PadicNumber.from_int(p, 1 + 7, n))
    want = _log_series_oracle(7, p, n)
    assert got.prec >= n
    assert (got - PadicNumber.from_int(p, want, n)).is_zero
    with pytest.raises(DomainError):
        log_iwasawa(PadicNumber.zero(p, n))


def test_log_multiplicativity():
    rng = random.Random(1)
    p, n = 7, 9
    for _ in range(20):
        x = PadicNumber.from_int(p, rng.randrange(1, 7 ** 6), n)
        y = PadicNumber.from_int(p, rng.randrange(1, 7 ** 6), n)
        if x.is_zero or y.is_zero or x.val or y.val:
            continue
        lhs = log_iwasawa(x * y)
        rhs = log_iwasawa(x) + log_iwasawa(y)
        assert (lhs - rhs).is_zero


def test_log_handles_p_power_and_teichmuller_parts():
    p, n = 7, 9
    x = PadicNumber.from_int(p, 3 * 7 ** 2 * (1 + 7), n + 3)
    want = log_iwasawa(PadicNumber.from_int(p, 3, n + 3)) + log_iwasawa(
        PadicNumber.from_int(p, 1 + 7, n + 3)
    )
    assert (log_iwasawa(x) - want).is_zero
    # a pure p-power times a root of unity has log 0
    zeta = teichmuller(PadicNumber.from_int(p, 3, n))
    assert log_iwasawa(zeta.shift(4)).is_zero


# oracle: iterate x -> x^7 mod 7^6 to a fixed point
def _teich_oracle(x, p, n):
    mod = p ** n
    z = x % mod
    for _ in range(n + 2):
        z = pow(z, p, mod)
    return z


def test_teichmuller():
    p, n = 7, 6
    assert teichmuller(PadicNumber.one(p, n)).lift() == 1
    t = teichmuller(PadicNumber.from_int(p, p - 1, n))
    assert t.lift() == p ** n - 1  # the root -1
    got = teichmuller(PadicNumber.from_int(p, 3, n))
    assert got.lift() == _teich_oracle(3, p, n)
    assert (got ** (p - 1) - 1).is_zero
    with pytest.raises(DomainError):
        teichmuller(PadicNumber.from_int(p, 7, n))


def test_teichmuller_multiplicative():
    rng = random.Random(2)
    p, n = 11, 7
    for _ in range(15):
        a = rng.randrange(1, p)
        b = rng.randrange(1, p)
        ta = teichmuller(PadicNumber.from_int(p, a, n))
        tb = teichmuller(PadicNumber.from_int(p, b, n))
        tab = teichmuller(PadicNumber.from_int(p, a * b, n))
        assert (ta * tb - tab).is_zero


# oracle: Newton iteration on integers mod 7^5 starting from 3
def _newton_sqrt_oracle(a, start, p, n):
    mod = p ** n
    s = start
    for _ in range(8):
        s = (s + a * pow(s, -1, mod)) * pow(2, -1, mod) % mod
    return s


def test_hensel_sqrt():
    p, n = 7, 5
    assert hensel_sqrt(PadicNumber.one(p, n), 1).lift() == 1
    got = hensel_sqrt(PadicNumber.from_int(p, 2, n), 3)
    assert got.lift() == _newton_sqrt_oracle(2, 3, p, n)
    assert (got * got - 2).is_zero
    with pytest.raises(DomainError):
        hensel_sqrt(PadicNumber.from_int(p, 3, n))  # 3 is a non-residue mod 7
    with pytest.raises(DomainError):
        hensel_sqrt(PadicNumber.from_int(p, 7, n))  # odd valuation


def test_hensel_sqrt_random_squares():
    rng = random.Random(3)
    p, n = 7, 10
    for _ in range(25):
        s = rng.randrange(1, 7 ** 5)
        if s % p == 0:
            continue
        a = PadicNumber.from_int(p, s * s, n)
        r = hensel_sqrt(a, s % p)
        assert (r * r - a).is_zero
        assert (r - PadicNumber.from_int(p, s, n)).is_zero


def test_hensel_sqrt_even_valuation():
    p, n = 7, 8
    a = PadicNumber.from_int(p, 2 * 49, n)
    r = hensel_sqrt(a, 3)
    assert r.val == 1
    assert (r * r - a).is_zero


# ------------------------------------------------------------------ matrices


def _fraction_solve(A, b):
    # exact rational Gaussian elimination
    n = len(A)
    M = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if M[i][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        M[c] = [x / M[c][c] for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]


def _mat(p, rows, prec):
    return PadicMatrix(p, [[PadicNumber.from_rational(p, v, prec) for v in r] for r in rows])


def test_solve_identity_no_loss():
    p, n = 7, 9
    A = PadicMatrix.identity(p, 3, n)
    b = _mat(p, [[5], [2], [3]], n)
    x = solve_linear(A, b)
    assert all(x[(i, 0)].prec >= n for i in range(3))
    assert (x[(0, 0)] - 5).is_zero


def test_solve_diag_p_loses_one_digit():
    # each solution entry keeps n-1 known digits; absolute precision drops
    # by the per-pivot valuation
    p, n = 7, 9
    A = _mat(p, [[7, 0], [0, 7]], n)
    b = _mat(p, [[1], [2]], n)
    x = solve_linear(A, b)
    assert x[(0, 0)].relprec == n - 1
    assert x[(0, 0)].val == -1


def test_solve_vs_fraction_oracle():
    rng = random.Random(4)
    p, n = 7, 10
    for _ in range(50):
        A = [[rng.randrange(-20, 20) for _ in range(2)] for _ in range(2)]
        det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
        if det == 0 or det % p == 0:
            continue
        b = [rng.randrange(-20, 20) for _ in range(2)]
        want = _fraction_solve(A, b)
        x = solve_linear(_mat(p, A, n), _mat(p, [[b[0]], [b[1]]], n))
        for i in range(2):
            assert (x[(i, 0)] - PadicNumber.from_rational(p, want[i], n)).is_zero


def test_solve_residual_many_random_systems():
    rng = random.Random(5)
    p, n = 11, 8
    count = 0
    trials = 0
    while count < 1000 and trials < 4000:
        trials += 1
        A = [[rng.randrange(-50, 50) for _ in range(3)] for _ in range(3)]
        b = [[rng.randrange(-50, 50)] for _ in range(3)]
        Am = _mat(p, A, n)
        if Am.det().is_zero:
            continue
        bm = _mat(p, b, n)
        x = solve_linear(Am, bm)
        r = Am * x - bm
        assert all(r[(i, 0)].is_zero for i in range(3))
        count += 1
    assert count == 1000


def test_singular_matrix_raises():
    p, n = 7, 6
    A = _mat(p, [[1, 2], [2, 4]], n)
    with pytest.raises(PrecisionError):
        solve_linear(A, _mat(p, [[1], [0]], n))


def test_charpoly_berkowitz():
    p, n = 7, 10
    A = _mat(p, [[1, 2], [3, 4]], n)
    c = A.charpoly()  # x^2 - 5x - 2
    assert (c[2] - 1).is_zero and (c[1] + 5).is_zero and (c[0] + 2).is_zero
    B = _mat(p, [[2, 0, 1], [1, 1, 0], [0, 3, 1]], n)
    cb = B.charpoly()
    # det = -charpoly(0) * (-1)^n for monic x^3 + ...: det(B) = -cb[0]
    assert (B.det() + cb[0]).is_zero


def test_matrix_inverse_and_pow():
    p, n = 7, 9
    A = _mat(p, [[1, 1], [2, 3]], n)
    I2 = A * A.inverse()
    assert (I2[(0, 0)] - 1).is_zero and I2[(0, 1)].is_zero
    A2 = A ** 2
    assert (A2[(0, 0)] - 3).is_zero  # [[3,4],[8,11]]


# -------------------------------------------------------------------- series


def _series(p, pairs, order, prec=12):
    return PadicSeries.from_coeffs("t", p, [(e, PadicNumber.from_rational(p, c, prec)) for e, c in pairs], order)


def test_antiderivative_basics():
    p = 7
    s = _series(p, [(0, 1)], 10)
    i = formal_antiderivative(s)
    assert (i.coefficient(1) - 1).is_zero and i.coefficient(0).is_zero
    s2 = _series(p, [(6, 1)], 10, prec=8)  # t^(p-1)
    i2 = formal_antiderivative(s2)
    c = i2.coefficient(7)
    assert c.val == -1 and c.prec == 8 - 1


def test_antiderivative_residue_error():
    p = 7
    s = _series(p, [(-1, 2)], 5)
    with pytest.raises(DomainError):
        formal_antiderivative(s)


def test_antiderivative_vs_rational_oracle():
    rng = random.Random(6)
    p, n = 7, 10
    coeffs = [Fraction(rng.randrange(-30, 30)) for _ in range(6)]
    s = _series(p, list(enumerate(coeffs)), 12, prec=n)
    i = formal_antiderivative(s)
    for e, c in enumerate(coeffs):
        want = c / (e + 1)  # exact rational antiderivative
        got = i.coefficient(e + 1)
        assert (got - PadicNumber.from_rational(p, want, n)).is_zero


def test_derivative_roundtrip():
    rng = random.Random(7)
    p = 7
    pairs = [(e, rng.randrange(-10, 10)) for e in range(0, 8)]
    s = _series(p, pairs, 9)
    back = formal_antiderivative(s).derivative()
    for e in range(0, 8):
        assert (back.coefficient(e) - s.coefficient(e)).is_zero


def test_series_mul_inverse_sqrt():
    p = 7
    s = _series(p, [(0, 1), (1, 3), (2, 5)], 8)
    inv = s.inverse()
    prod = s * inv
    assert (prod.coefficient(0) - 1).is_zero
    for e in range(1, 6):
        assert prod.coefficient(e).is_zero
    sq = s * s
    r = sq.sqrt(PadicNumber.one(p, 12))
    for e in range(0, 3):
        assert (r.coefficient(e) - s.coefficient(e)).is_zero


def test_series_evaluate_horner():
    p = 7
    s = _series(p, [(0, 2), (1, 1), (3, 4)], 10)
    t = PadicNumber.from_int(p, 7, 10)
    got = s.evaluate(t)
    want = PadicNumber.from_int(p, 2 + 7 + 4 * 343, 10)
    assert (got - want).is_zero
    with pytest.raises(DomainError):
        s.evaluate(PadicNumber.from_int(p, 3, 10))


def test_laurent_shift_and_residue():
    p = 7
    s = _series(p, [(0, 5), (1, 2)], 6)
    ls = s.shift(-1)
    assert (ls.residue() - 5).is_zero
    assert ls.low == -1
