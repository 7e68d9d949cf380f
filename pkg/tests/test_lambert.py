from fractions import Fraction

import mpmath
import pytest
from mpmath import mp, mpf

from zetalab.errors import InvalidArgument
from zetalab.lambert import (LambertSpec, Phase, coth_series, eichler_series, g_poly, g_poly_coeffs,
                             herglotz, lambert_sum, log_lambert_sum, omega_rho, sech_series,
                             sigma_lambert_sum, v_series)
from zetalab.special import bernoulli_number, divisor_count, divisor_sigma


def close(a, b, tol):
    return abs(a - b) <= tol * max(1, abs(b))


def brute(term, n, dps):
    with mp.workdps(dps):
        return mpmath.fsum(term(k) for k in range(1, n + 1))


def test_lerch_lambert_part(ctx):
    v = lambert_sum(LambertSpec(-3, 2 * mp.pi), ctx).value
    assert close(v, (7 * mp.pi**3 / 180 - mpmath.zeta(3)) / 2, ctx.tolerance())


def test_weight_zero_brute_force(ctx):
    v = lambert_sum(LambertSpec(0, 1), ctx).value
    assert close(v, brute(lambda n: 1 / mpmath.expm1(n), 500, 2 * ctx.dps), mpf(10) ** -ctx.digits)


def test_spec_validation():
    with pytest.raises(InvalidArgument):
        LambertSpec(1, -1)
    with pytest.raises(InvalidArgument):
        LambertSpec(1, mpmath.mpc(0, 2))
    with pytest.raises(InvalidArgument):
        LambertSpec(1, 1, twist=Phase(Fraction(1, 3)), shift=Fraction(1, 2))
    with pytest.raises(InvalidArgument):
        LambertSpec(1, 1, shift=1)


def test_twists(ctx):
    chi = lambert_sum(LambertSpec(-2, mpf("1.3"), twist="chi4"), ctx).value
    ref = brute(lambda n: [0, 1, 0, -1][n % 4] * mpf(n) ** -2 / mpmath.expm1(n * mpf("1.3")), 200, 2 * ctx.dps)
    assert close(chi, ref, mpf(10) ** -ctx.digits)
    a = Fraction(1, 3)
    ph = lambert_sum(LambertSpec(2, 2, twist=Phase(a, -1)), ctx).value
    ref = brute(lambda n: mpf(n) ** 2 / (mpmath.exp(2 * n + 2j * mp.pi / 3) - 1), 200, 2 * ctx.dps)
    assert close(ph, ref, mpf(10) ** -ctx.digits)
    sh = lambert_sum(LambertSpec(1, 2, shift=Fraction(1, 4)), ctx).value
    ref = brute(lambda n: (n - mpf(1) / 4) / mpmath.expm1(2 * (n - mpf(1) / 4)), 200, 2 * ctx.dps)
    assert close(sh, ref, mpf(10) ** -ctx.digits)


def test_sigma_routes(ctx):
    a = sigma_lambert_sum(1, 10, ctx).value
    b = sigma_lambert_sum(1, 10, ctx, route="lambert").value
    assert close(a, b, mpf(10) ** -ctx.digits)
    s = mpmath.mpc("0.4", "1.3")
    assert close(sigma_lambert_sum(s, 2, ctx).value, sigma_lambert_sum(s, 2, ctx, route="lambert").value,
                 mpf(10) ** -ctx.digits)
    d = sigma_lambert_sum(0, 1, ctx).value
    assert close(d, brute(lambda n: divisor_count(n) * mpmath.exp(-n), 200, 2 * ctx.dps), mpf(10) ** -ctx.digits)


def test_sigma_leading_asymptotics(ctx):
    y = mpf("0.05")
    v = sigma_lambert_sum(2, y, ctx, route="lambert").value
    lead = 2 * mpmath.zeta(3) / y**3
    assert abs(v / lead - 1) < mpf("0.05")


def test_log_lambert(ctx):
    v1 = log_lambert_sum(1, ctx).value
    assert close(v1, brute(lambda n: mpmath.log(n) / mpmath.expm1(n), 200, 2 * ctx.dps), mpf(10) ** -ctx.digits)
    assert v1 > log_lambert_sum(2, ctx).value


def test_eichler(ctx):
    f = eichler_series(3, 1j, ctx).value
    ref = brute(lambda n: divisor_sigma(-3, n) * mpmath.exp(-2 * mp.pi * n), 60, 2 * ctx.dps)
    assert close(f, ref, mpf(10) ** -ctx.digits)
    z = mpmath.mpc("0.3", "0.4")
    bound = brute(lambda n: divisor_sigma(3, n) * mpf(n) ** -3 * mpmath.exp(-2 * mp.pi * n * mpf("0.4")), 400, ctx.dps)
    assert abs(eichler_series(3, z, ctx).value) <= bound


def test_herglotz(ctx):
    f = herglotz(3, 1, ctx).value
    assert close(f, herglotz(3, 1, ctx, cutoff=200).value, mpf(10) ** -ctx.digits)
    x = mpmath.mpc(0, mpf(1) / 2)
    a = herglotz(3, x, ctx).value
    b = herglotz(3, mpmath.conj(x), ctx).value
    assert abs(a - mpmath.conj(b)) < mpf(10) ** -(ctx.dps - 5)
    pair = herglotz(3, 1j, ctx).value + herglotz(3, -1j, ctx).value
    assert abs(mpmath.im(pair)) < mpf(10) ** -(ctx.dps - 5)
    # first terms against the digamma definition
    head = mpmath.fsum(mpmath.digamma(n) / mpf(n) ** 3 for n in range(1, 2001))
    assert abs(f - head) < mpf(10) ** -5


def test_herglotz_domain(ctx):
    with pytest.raises(InvalidArgument):
        herglotz(3, -2, ctx)
    with pytest.raises(InvalidArgument):
        herglotz(1, 2, ctx)


def test_omega_rho(ctx):
    v = omega_rho(mp.pi, 1, ctx).value
    assert isinstance(v, mpf)
    e = mpmath.expjpi(mpf(1) / 4)
    with mp.workdps(2 * ctx.dps):
        ref = mpmath.fsum(2 * divisor_count(j) * 2 * mpmath.re(mpmath.besselk(0, 4 * mp.pi * mpmath.sqrt(j) * e))
                          for j in range(1, 201))
    assert close(v, ref, mpf(10) ** -ctx.digits)
    assert omega_rho(2, 1, ctx).value > omega_rho(3, 1, ctx).value


def test_v_series(ctx):
    assert v_series(2, mpmath.mpc(0.3, 0.8), ctx).value == 0
    v0 = v_series(0, 1j, ctx).value
    ref = brute(lambda n: divisor_sigma(-1, n) * mpmath.exp(-2 * mp.pi * n), 60, 2 * ctx.dps)
    assert close(v0, ref, mpf(10) ** -ctx.digits)
    v2 = v_series(-2, 1j, ctx).value
    ref = brute(lambda n: divisor_sigma(-3, n) * mpmath.exp(-2 * mp.pi * n)
                * (1 + 4 * mp.pi * n + (4 * mp.pi * n) ** 2 / 2), 60, 2 * ctx.dps)
    assert close(v2, ref, mpf(10) ** -ctx.digits)


def test_coth_and_g(ctx):
    for al in (mpf("0.3"), mpf(1), mpf(4)):
        assert coth_series(3, al, ctx).value > mpmath.zeta(5) / (2 * mp.pi) ** 5
    c = g_poly_coeffs(2)
    B = bernoulli_number
    assert c == [-B(0) * B(4) / 24, B(2) ** 2 / 4, -B(4) * B(0) / 24]
    assert g_poly(2, 1, ctx) == mpf(sum(c).numerator) / sum(c).denominator
    m, al = 3, mpf("1.7")
    res = (g_poly(m, al, ctx) - al ** (m - 1) * coth_series(m, 1 / al, ctx).value
           + (-al) ** (1 - m) * coth_series(m, al, ctx).value)
    assert abs(res) < mpf(10) ** -(ctx.dps - 5)


def test_sech_series(ctx):
    tol = ctx.tolerance()
    assert close(sech_series("chi4", ctx).value, mp.pi / 8, tol)
    assert close(sech_series("multidim", ctx, r=1).value, mp.pi / 4, tol)
    assert close(sech_series("multidim", ctx, r=2).value, mp.pi**2 / 12, tol)
    with pytest.raises(InvalidArgument):
        sech_series("other", ctx)
