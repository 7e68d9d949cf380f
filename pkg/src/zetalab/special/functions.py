"""Shi/Chi, 1F2, K_0 and the generalized modified Bessel function."""
from __future__ import annotations

import math
from typing import Iterator

import mpmath
from mpmath import mp, mpf

from ..errors import InvalidArgument, NoConvergence, TermBudgetExceeded
from ..mpcore import PrecisionContext, tally
from .zeta import _as_integer, _is_nonpositive_integer

LN10 = math.log(10)


def _eps():
    return mpf(2) ** (-mp.prec)


def shi_chi(z, ctx: PrecisionContext):
    """(Shi(z), Chi(z)) from their Taylor series.

    The working precision is raised by about |z|/ln 10 digits so the
    alternating or growing terms do not eat into the requested accuracy.
    """
    z = mpmath.mpmathify(z)
    extra = int(abs(complex(z)) / LN10) + 5
    with ctx.escalate(extra).workprec():
        eps = _eps()
        z2 = z * z
        shi = z
        t = z
        chi_sum = mpf(0)
        tc = mpf(1)
        k = 0
        while True:
            k += 1
            if k > ctx.max_terms:
                raise TermBudgetExceeded("Shi/Chi series too long")
            t *= z2 / ((2 * k) * (2 * k + 1))
            tc *= z2 / ((2 * k - 1) * (2 * k))
            shi += t / (2 * k + 1)
            chi_sum += tc / (2 * k)
            if abs(t) <= eps * abs(shi) and abs(tc) <= eps * max(abs(chi_sum), eps) and k > abs(z):
                break
        tally(k)
        chi = None
        if z != 0:
            chi = mp.euler + mpmath.log(z) + chi_sum
    with ctx.workprec():
        return +shi, (None if chi is None else +chi)


def hyp1f2_terms(a, b, c, z) -> Iterator:
    """Successive terms (a)_n z^n / ((b)_n (c)_n n!); exact for Fraction inputs."""
    t = 1 + 0 * z
    n = 0
    while True:
        yield t
        t = t * (a + n) * z / ((b + n) * (c + n) * (n + 1))
        n += 1


def hyp1f2(a, b, c, z, ctx: PrecisionContext):
    """1F2(a; b, c; z) by its power series, at the caller's precision."""
    with ctx.workprec():
        a, b, c, z = (mpmath.mpmathify(v) for v in (a, b, c, z))
        if _is_nonpositive_integer(b) or _is_nonpositive_integer(c):
            raise InvalidArgument("lower parameters must not be non-positive integers")
        eps = _eps()
        s = mpf(0)
        small = 0
        az = abs(z)
        for n, t in enumerate(hyp1f2_terms(a, b, c, z)):
            if n > ctx.max_terms:
                raise TermBudgetExceeded("1F2 series too long")
            s += t
            past_peak = n ** 3 > az or n > ctx.max_terms
            small = small + 1 if abs(t) <= eps * abs(s) else 0
            if (small >= 2 and past_peak) or t == 0:
                break
        tally(n + 1)
        return s


def _k0_series(z):
    eps = _eps()
    q = z * z / 4
    t = mpf(1)
    i0 = mpf(1)
    rest = mpf(0)
    H = mpf(0)
    k = 0
    while True:
        k += 1
        t *= q / (k * k)
        H += mpf(1) / k
        i0 += t
        rest += t * H
        if abs(t) * H <= eps * abs(i0) and k > abs(z):
            break
    return -(mpmath.log(z / 2) + mp.euler) * i0 + rest, k


def _k0_asymptotic(z):
    eps = _eps()
    s = mpf(1)
    a = mpf(1)
    zi = 1 / z
    p = mpf(1)
    prev = mpf(1)
    k = 0
    while True:
        k += 1
        a = -a * (2 * k - 1) ** 2 / (8 * k)
        p *= zi
        t = a * p
        if abs(t) > prev:
            raise NoConvergence("K0 asymptotic series reached its smallest term early")
        s += t
        prev = abs(t)
        if prev <= eps * abs(s):
            break
    return mpmath.sqrt(mp.pi / (2 * z)) * mpmath.exp(-z) * s, k


def k0_switch_radius(ctx: PrecisionContext) -> float:
    """|z| beyond which the asymptotic series reaches the working epsilon."""
    return (ctx.dps * LN10 + 10) / 2


def bessel_k0(z, ctx: PrecisionContext, regime: str | None = None):
    """K_0(z) for Re z > 0.

    Power series (with precision raised to absorb the I_0 cancellation) for
    |z| below :func:`k0_switch_radius`, asymptotic series above it.
    """
    z = mpmath.mpmathify(z)
    if mpmath.re(z) <= 0:
        raise InvalidArgument("K0 needs Re(z) > 0")
    if regime is None:
        regime = "asymptotic" if abs(complex(z)) > k0_switch_radius(ctx) else "series"
    if regime == "asymptotic":
        with ctx.workprec():
            v, k = _k0_asymptotic(z)
    elif regime == "series":
        extra = int((abs(complex(z)) + float(mpmath.re(z))) / LN10) + 5
        with ctx.escalate(extra).workprec():
            v, k = _k0_series(z)
    else:
        raise InvalidArgument(f"unknown regime {regime!r}")
    tally(k)
    with ctx.workprec():
        return +v


def _genk_direct(mu, nu, w, z, ctx):
    half = mpf(1) / 2
    pre = mp.pi * mpmath.power(z, w) * mpmath.power(2, mu + nu - 1) / mpmath.sin(nu * mp.pi)
    t1 = (mpmath.power(z / 2, -nu) * mpmath.gamma(mu + w + half) * mpmath.rgamma(1 - nu)
          * mpmath.rgamma(w + half - nu) * hyp1f2(mu + w + half, w + half - nu, 1 - nu, z * z / 4, ctx))
    t2 = (mpmath.power(z / 2, nu) * mpmath.gamma(mu + nu + w + half) * mpmath.rgamma(1 + nu)
          * mpmath.rgamma(w + half) * hyp1f2(mu + nu + w + half, w + half, 1 + nu, z * z / 4, ctx))
    return pre * (t1 - t2)


def gen_bessel_K(mu, nu, w, z, ctx: PrecisionContext):
    """The two-term 1F2 combination defining _mu K_nu(z, w); nu = 0 by limit."""
    with ctx.workprec():
        mu, nu, w, z = (mpmath.mpmathify(v) for v in (mu, nu, w, z))
    n = _as_integer(nu)
    if n is not None and n != 0:
        raise InvalidArgument("nu must not be a non-zero integer")
    if _is_nonpositive_integer(mu + w + mpf(1) / 2):
        raise InvalidArgument("mu + w must avoid -1/2, -3/2, ...")
    extra = int(abs(complex(z)) / LN10) + 10
    if n is None:
        work = ctx.escalate(extra)
        with work.workprec():
            v = _genk_direct(mu, nu, w, z, work)
        with ctx.workprec():
            return +v
    # two-level Richardson on the even part in nu
    hdig = max(3, ctx.dps // 3)
    work = ctx.escalate(extra + hdig + 5)
    with work.workprec():
        h = mpf(10) ** (-hdig)
        f = lambda e: (_genk_direct(mu, e, w, z, work) + _genk_direct(mu, -e, w, z, work)) / 2
        v = (4 * f(h / 2) - f(h)) / 3
    with ctx.workprec():
        return +v


def a_m_poly(m: int, mu, nu, w, z, ctx: PrecisionContext):
    """A_m(mu, nu, w; z): the finite Gamma-ratio sum in powers of (z/2)^-2."""
    if m < 0:
        raise InvalidArgument("m must be non-negative")
    with ctx.workprec():
        mu, nu, w, z = (mpmath.mpmathify(v) for v in (mu, nu, w, z))
        if z == 0:
            raise InvalidArgument("z must be non-zero")
        half = mpf(1) / 2
        sign = mpmath.power(-1, -mu - w - half)
        q = mpmath.power(z / 2, -2)
        total = mpf(0)
        p = mpf(1)
        for k in range(m + 1):
            top = mu + w + half + k
            if _is_nonpositive_integer(top):
                raise InvalidArgument("Gamma pole in A_m")
            total += (sign * mpmath.gamma(top) / mpmath.factorial(k) * mpmath.rgamma(-nu - mu - k)
                      * mpmath.rgamma(half - nu - mu - w - k) * p)
            p *= q
        return total
