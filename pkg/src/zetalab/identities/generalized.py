"""Transformations for sum sigma_s(n) e^{-ny} and their limiting cases.

Right-hand sides are sums over n of sigma_s(n) times a bracket that is tiny
compared with its ingredients.  The first few brackets are evaluated exactly
at raised precision; for larger n the bracket is replaced by its asymptotic
series in 1/n, whose sums over n reduce to Hurwitz zeta values (see
:func:`divisor_tail`).  The switch index is chosen so the exponentially
small remainder of the asymptotic series is below the working epsilon.
"""
from __future__ import annotations

import math
from math import factorial

import mpmath
from mpmath import mp, mpf

from ..errors import CancellationBudgetExceeded, NoConvergence
from ..lambert import LambertSpec, lambert_sum, log_lambert_sum, sigma_lambert_sum
from ..mpcore import PrecisionContext, tally
from ..special import (a_m_poly, bernoulli_mpf, bernoulli_number, digamma, divisor_sigma,
                       gen_bessel_K, harmonic, hurwitz_zeta, hyp1f2, psi_k, riemann_zeta,
                       shi_chi, to_mpf)
from ..special.zeta import _as_integer
from .params import require

LN10 = math.log(10)


def divisor_tail(s, w, N: int, ctx: PrecisionContext):
    """sum_{n>N} sigma_s(n) n^-w without forming zeta(w) zeta(w-s) minus a partial sum."""
    acc = mpmath.fsum(mpmath.power(d, s - w) * hurwitz_zeta(w, N // d + 1, ctx) for d in range(1, N + 1))
    return acc + riemann_zeta(w, ctx) * hurwitz_zeta(w - s, N + 1, ctx)


def exact_count(y, ctx: PrecisionContext) -> int:
    """Number of brackets evaluated exactly before the asymptotic tail takes over."""
    r = float(mpmath.re(1 / y))
    return max(1, math.ceil((ctx.dps * LN10 + 10) / (4 * math.pi**2 * r)))


def bracket_ctx(y, n: int, ctx: PrecisionContext, factor: int = 1) -> PrecisionContext:
    z = 4 * math.pi**2 * n / complex(y)
    extra = math.ceil(factor * max(z.real, abs(z)) / LN10) + 10
    if extra > 20 * ctx.digits:
        raise CancellationBudgetExceeded(f"bracket at n={n} needs {extra} extra digits")
    return ctx.escalate(extra)


def _asymptotic_sum(terms, ctx, scale):
    """Add terms of an asymptotic series until they drop below epsilon * scale."""
    eps = ctx.eps()
    total = mpf(0)
    prev = None
    for k, t in enumerate(terms):
        total += t
        a = abs(t)
        if a <= eps * max(1, abs(scale), abs(total)):
            tally(k + 1)
            return total
        if prev is not None and a > prev and k > 4:
            raise NoConvergence("asymptotic tail diverged before reaching the working epsilon")
        prev = a
    raise NoConvergence("asymptotic tail did not converge")


# -- sum sigma_s(n) e^{-ny}, 1F2 form ------------------------------------------

def sigma_lhs(s, y, ctx):
    # shared left-hand side of the two sigma_s transformations
    lam = lambert_sum(LambertSpec(s, y), ctx).value
    pole = (mpmath.power(2 * mp.pi / y, 1 + s) / mpmath.sin(mp.pi * s / 2) + 1) / 2
    return lam + pole * riemann_zeta(-s, ctx) - riemann_zeta(1 - s, ctx) / y


def _odd_positive(s) -> bool:
    n = _as_integer(s)
    return n is not None and n > 0 and n % 2 == 1


def check_befac(p):
    s = p["s"]
    require(mpmath.re(p["y"]) > 0, "y must have positive real part")
    require(mpmath.re(s) > -1, "s must have real part > -1")
    n = _as_integer(s)
    require(n is None or n % 2, "s must not be an even integer")
    require(not _odd_positive(s), "s must not be a positive odd integer (1F2 parameter pole)")


def befac_lhs(p, ctx):
    return sigma_lhs(p["s"], p["y"], ctx)


def _befac_bracket(s, y, n, ctx):
    work = bracket_ctx(y, n, ctx)
    with work.workprec():
        z = 4 * mp.pi**2 * n / y
        h = hyp1f2(1, (1 - s) / 2, 1 - s / 2, z * z / 4, work)
        v = (mpmath.power(2 * mp.pi * n, -s) * mpmath.rgamma(1 - s) * h
             - mpmath.power(2 * mp.pi / y, s) * mpmath.cosh(z))
    return +v


def befac_rhs(p, ctx):
    s, y = p["s"], p["y"]
    N = exact_count(y, ctx)
    head = mpmath.fsum(divisor_sigma(s, n) * _befac_bracket(s, y, n, ctx) for n in range(1, N + 1))
    c = 4 * mp.pi**2 / y
    pre = -mpmath.power(2 * mp.pi / y, s)

    def terms():
        j = 1
        while True:
            yield (pre * mpmath.power(c, -s - 2 * j) * mpmath.rgamma(1 - s - 2 * j)
                   * divisor_tail(s, s + 2 * j, N, ctx))
            j += 1

    tot = head + _asymptotic_sum(terms(), ctx, head)
    return 2 * mp.pi / (y * mpmath.sin(mp.pi * s / 2)) * tot


# -- generalized modified Bessel form, valid further left -------------------------

def check_extended(p):
    m, s = p["m"], p["s"]
    require(m >= 0, "m must be a non-negative integer")
    require(mpmath.re(p["y"]) > 0, "y must have positive real part")
    require(mpmath.re(s) > -2 * m - 3, "s must have real part > -2m-3")
    n = _as_integer(s)
    require(n is None or n % 2, "s must not be an even integer")
    require(n is None or n > 0, "s must not be a negative odd integer (zeta pole)")
    require(not _odd_positive(s), "s must not be a positive odd integer (1F2 parameter pole)")


def _extended_bracket(m, s, y, n, ctx):
    work = bracket_ctx(y, n, ctx)
    with work.workprec():
        z = 4 * mp.pi**2 * n / y
        half = mpf(1) / 2
        P = mp.pi * mpmath.power(2, mpf(3) / 2 + s) / mpmath.sin(mp.pi * s / 2)
        v = (gen_bessel_K(half, s / 2, 0, z, work)
             - P * mpmath.power(z, -s / 2 - 2) * a_m_poly(m, half, s / 2, 0, z, work))
    return +v


def extended_rhs(p, ctx):
    m, s, y = p["m"], p["s"], p["y"]
    N = exact_count(y, ctx)
    head = mpmath.fsum(divisor_sigma(s, n) * mpmath.power(n, -s / 2) * _extended_bracket(m, s, y, n, ctx)
                       for n in range(1, N + 1))
    c = 4 * mp.pi**2 / y
    P = mp.pi * mpmath.power(2, mpf(3) / 2 + s) / mpmath.sin(mp.pi * s / 2)

    def terms():
        k = m + 1
        while True:
            a = -mpmath.rgamma(-s / 2 - mpf(1) / 2 - k) * mpmath.rgamma(-s / 2 - k) * 4**k
            yield P * a * mpmath.power(c, -s / 2 - 2 - 2 * k) * divisor_tail(s, s + 2 + 2 * k, N, ctx)
            k += 1

    tot = head + _asymptotic_sum(terms(), ctx, head)
    finite = mpmath.fsum(riemann_zeta(s + 2 * k + 2, ctx) * riemann_zeta(2 * k + 2, ctx)
                         * mpmath.rgamma(-s - 1 - 2 * k) * mpmath.power(c, -2 * k) for k in range(m + 1))
    finite *= y * mpmath.power(2 * mp.pi, -s - 3) / mpmath.sin(mp.pi * s / 2)
    return 2 * mpmath.sqrt(2 * mp.pi) / mpmath.power(y, 1 + s / 2) * tot - finite


# -- even s = 2m: Shi/Chi form --------------------------------------------------

def check_shi_chi(p):
    require(p["m"] >= 1, "m must be a positive integer")
    require(mpmath.re(p["y"]) > 0, "y must have positive real part")


def shi_chi_lhs(p, ctx):
    m, y = p["m"], p["y"]
    lam = lambert_sum(LambertSpec(2 * m, y), ctx).value
    return (lam - factorial(2 * m) * riemann_zeta(2 * m + 1, ctx) / mpmath.power(y, 2 * m + 1)
            + to_mpf(bernoulli_number(2 * m)) / (2 * m * y))


def _shi_chi_bracket(m, y, n, ctx):
    work = bracket_ctx(y, n, ctx, factor=2)
    with work.workprec():
        z = 4 * mp.pi**2 * n / y
        S, C = shi_chi(z, work)
        v = (mpmath.sinh(z) * S - mpmath.cosh(z) * C
             + mpmath.fsum(factorial(2 * j - 1) * mpmath.power(z, -2 * j) for j in range(1, m + 1)))
    return +v


def shi_chi_rhs(p, ctx):
    m, y = p["m"], p["y"]
    N = exact_count(y, ctx)
    head = mpmath.fsum(divisor_sigma(2 * m, n) * _shi_chi_bracket(m, y, n, ctx) for n in range(1, N + 1))
    c = 4 * mp.pi**2 / y

    def terms():
        j = m + 1
        while True:
            yield -factorial(2 * j - 1) * mpmath.power(c, -2 * j) * divisor_tail(2 * m, 2 * j, N, ctx)
            j += 1

    tot = head + _asymptotic_sum(terms(), ctx, head)
    return (-1) ** m * 2 / mp.pi * mpmath.power(2 * mp.pi / y, 2 * m + 1) * tot


# -- digamma pairs ----------------------------------------------------------------

def psi_pair_cutoff(c, ctx) -> int:
    """Direct-sum length for sums over psi(+-i n c) before their asymptotic tail."""
    r = min(abs(complex(c)), float(mpmath.re(c)))
    return max(2, math.ceil((ctx.dps * LN10 + 10) / (2 * math.pi * r)))


def check_companion(p):
    require(p["m"] >= 1, "m must be a positive integer")
    require(mpmath.re(p["alpha"]) > 0 and mpmath.re(p["beta"]) > 0,
            "alpha and beta must have positive real part")


def companion_lhs(p, ctx):
    m, a = p["m"], p["alpha"]
    lam = lambert_sum(LambertSpec(-2 * m, 2 * a), ctx).value
    head = mpmath.power(a, -(m - mpf(1) / 2)) * (riemann_zeta(2 * m, ctx) / 2 + lam)
    corr = mpmath.fsum(2 ** (2 * k - 1) * to_mpf(bernoulli_number(2 * k)) / factorial(2 * k)
                       * riemann_zeta(2 * m - 2 * k + 1, ctx) * mpmath.power(a, 2 * k - m - mpf(1) / 2)
                       for k in range(m))
    return head - corr


def companion_rhs(p, ctx):
    m, b = p["m"], p["beta"]
    c = b / mp.pi
    N = psi_pair_cutoff(c, ctx)
    S = mpmath.fsum(mpf(n) ** (-2 * m) * (digamma(1j * n * c, ctx) + digamma(-1j * n * c, ctx))
                    for n in range(1, N + 1))
    # psi(ix) + psi(-ix) ~ 2 log x - sum_k B_2k/k (-1)^k x^-2k
    S += -2 * hurwitz_zeta(2 * m, N + 1, ctx, 1) + 2 * mpmath.log(c) * hurwitz_zeta(2 * m, N + 1, ctx)

    def terms():
        k = 1
        while True:
            yield (-bernoulli_mpf(2 * k) / k * (-1) ** k * mpmath.power(c, -2 * k)
                   * hurwitz_zeta(2 * m + 2 * k, N + 1, ctx))
            k += 1

    S += _asymptotic_sum(terms(), ctx, S)
    return ((-1) ** (m + 1) * mpmath.power(b, -(m - mpf(1) / 2))
            * (mp.euler * riemann_zeta(2 * m, ctx) / mp.pi + S / (2 * mp.pi)))


def check_log_lambert(p):
    require(mpmath.re(p["y"]) > 0, "y must have positive real part")


def log_lambert_lhs(p, ctx):
    return log_lambert_sum(p["y"], ctx).value


def log_lambert_rhs(p, ctx):
    y = p["y"]
    c = 2 * mp.pi / y
    N = psi_pair_cutoff(c, ctx)
    logc = mpmath.log(c)
    S1 = mpmath.fsum(mpmath.log(c * n) - (digamma(1j * c * n, ctx) + digamma(-1j * c * n, ctx)) / 2
                     for n in range(1, N + 1))
    S1 += _asymptotic_sum((bernoulli_mpf(2 * k) / (2 * k) * (-1) ** k * mpmath.power(c, -2 * k)
                           * hurwitz_zeta(2 * k, N + 1, ctx) for k in range(1, 10**4)), ctx, S1)
    S2 = mpf(0)
    for n in range(1, N + 1):
        u, v = 1j * c * n, -1j * c * n
        S2 += (psi_k(1, u, ctx) + psi_k(1, v, ctx)
               - (mpmath.log(u) ** 2 + mpmath.log(v) ** 2) / 2 + y / (4 * n))

    def terms():
        k = 1
        while True:
            H = to_mpf(harmonic(2 * k - 1))
            yield (bernoulli_mpf(2 * k) / k * (-1) ** k * mpmath.power(c, -2 * k)
                   * ((H - logc) * hurwitz_zeta(2 * k, N + 1, ctx) + hurwitz_zeta(2 * k, N + 1, ctx, 1)))
            k += 1

    S2 += _asymptotic_sum(terms(), ctx, S2)
    g = mp.euler
    ly = mpmath.log(y)
    return (-mpmath.log(2 * mp.pi) / 4 + ly**2 / (2 * y) - g**2 / (2 * y) + mp.pi**2 / (12 * y)
            - 2 / y * (g + ly) * S1 + S2 / y)


# -- small-y behaviour ---------------------------------------------------------------

def asymptotic_expansion(m: int, r: int, y, ctx: PrecisionContext):
    """Leading terms of sum sigma_2m(n) e^{-ny} as y -> 0, through y^(2r+1)."""
    with ctx.workprec():
        y = mpmath.mpmathify(y)
        v = (factorial(2 * m) * riemann_zeta(2 * m + 1, ctx) / mpmath.power(y, 2 * m + 1)
             - to_mpf(bernoulli_number(2 * m)) / (2 * m * y))
        pre = -2 * (-1) ** m / (mp.pi * mpmath.power(2 * mp.pi, 2 * m - 1))
        for j in range(1, r + 2):
            v += (pre * factorial(2 * m + 2 * j - 1) * riemann_zeta(2 * m + 2 * j, ctx)
                  * riemann_zeta(2 * j, ctx) / mpmath.power(2 * mp.pi, 4 * j) * mpmath.power(y, 2 * j - 1))
        return v


def asymptotic_check(m: int, r: int, y, ctx: PrecisionContext):
    """(residual at y, residual at y/2, log2 of their ratio) for the r-term expansion."""
    from ..errors import InvalidArgument, PrecisionFloor

    if m < 1 or r < 0:
        raise InvalidArgument("need m >= 1 and r >= 0")
    with ctx.workprec():
        y = mpmath.mpmathify(y)
        if not y > 0:
            raise InvalidArgument("y must be a positive real")
        res = []
        for h in (y, y / 2):
            series = sigma_lambert_sum(2 * m, h, ctx, route="lambert").value
            expansion = asymptotic_expansion(m, r, h, ctx)
            last = expansion - asymptotic_expansion(m, r - 1, h, ctx)
            floor = ctx.tolerance() * max(1, abs(series))
            if abs(last) < floor:
                raise PrecisionFloor("last retained term is below the working tolerance")
            d = abs(series - expansion)
            if d < floor:
                raise PrecisionFloor("residual is below the working tolerance; raise digits")
            res.append(d)
        return res[0], res[1], mpmath.log(res[0] / res[1], 2)
