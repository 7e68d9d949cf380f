"""Odd-N generalizations and the chi_{-4} analogue."""
from __future__ import annotations

import math
from fractions import Fraction
from math import factorial

import mpmath
from mpmath import mp, mpf

from ..lambert import LambertSpec, lambert_sum, sech_series
from ..mpcore import sum_series
from ..special import (L_chi4, bernoulli_number, bernoulli_poly, euler_number, hurwitz_zeta,
                       riemann_zeta, to_mpf)
from ..special.zeta import _digamma
from .params import require


def odd_beta(p):
    N = p["N"]
    return {"beta": mpmath.power(mp.pi ** (N + 1) / p["alpha"], mpf(1) / N)}


def _rays(N):
    return range(-(N - 1) // 2, (N - 1) // 2 + 1)


def check_odd(p):
    N = p["N"]
    require(N >= 1 and N % 2 == 1, "N must be an odd positive integer")
    require(p["m"] != 0, "m must be a non-zero integer")
    require(mpmath.re(p["alpha"]) > 0, "alpha must have positive real part")
    b = odd_beta(p)["beta"]
    for j in _rays(N):
        require(mpmath.re(b * mpmath.expjpi(mpf(j) / N)) > 0,
                "every rotated beta must have positive real part")


def _finite_part(N, m, al, b, bern):
    """Shared Bernoulli sum; ``bern(2j)`` supplies B_2j or B_2j(a)."""
    top = math.floor(Fraction(N + 1, 2 * N) + m)  # exact floor
    e = (N + 3) // 2
    acc = mpf(0)
    for j in range(0, top + 1):
        k = N + 1 + 2 * N * (m - j)
        c = bern(2 * j) * bernoulli_number(k) / (factorial(2 * j) * factorial(k))
        acc += ((-1) ** j * to_mpf(c) * mpmath.power(al, mpf(2 * j) / (N + 1))
                * mpmath.power(b, N + mpf(2 * N * N * (m - j)) / (N + 1)))
    return (-1) ** (m + e) * mpf(2) ** (2 * N * m) * acc


def _prefactor(N, m, b):
    return mpmath.power(-mpmath.power(b, mpf(2 * N) / (N + 1)), -m) * mpf(2) ** (2 * m * (N - 1)) / N


def odd_lhs(p, ctx):
    N, m, al = p["N"], p["m"], p["alpha"]
    k = 2 * N * m + 1
    lam = sum_series(lambda n: mpf(n) ** (-k) / mpmath.expm1((2 * n) ** N * al), "geometric-decay", ctx)
    return mpmath.power(al, -mpf(2 * N * m) / (N + 1)) * (riemann_zeta(k, ctx) / 2 + lam.value)


def odd_rhs(p, ctx):
    N, m, al, b = p["N"], p["m"], p["alpha"], p["beta"]
    e = (N + 3) // 2
    inner = mpf(0)
    for j in _rays(N):
        c = b * mpmath.expjpi(mpf(j) / N)
        f = lambda t, c=c: mpmath.power(t, -2 * m - 1) / mpmath.expm1(mpmath.root(2 * t, N) * c)
        policy = "geometric-decay" if N == 1 else "euler-maclaurin-tail"
        inner += (-1) ** j * sum_series(f, policy, ctx).value
    head = _prefactor(N, m, b) * (riemann_zeta(2 * m + 1, ctx) / 2 + (-1) ** e * inner)
    return head + _finite_part(N, m, al, b, bernoulli_number)


# -- with a shift parameter a ------------------------------------------------------

def check_odd_a(p):
    N = p["N"]
    require(N >= 1 and N % 2 == 1, "N must be an odd positive integer")
    require(p["m"] >= 1, "m must be a positive integer")
    require(0 < p["a"] <= 1, "a must satisfy 0 < a <= 1")
    require(mpmath.im(p["alpha"]) == 0 and p["alpha"] > 0, "alpha must be a positive real")


def odd_a_lhs(p, ctx):
    N, m, al, a = p["N"], p["m"], p["alpha"], p["a"]
    av = to_mpf(a)
    k = 2 * N * m + 1

    def term(n):
        x = (2 * n) ** N * al
        return mpf(n) ** (-k) * mpmath.exp(-av * x) / -mpmath.expm1(-x)

    lam = sum_series(term, "geometric-decay", ctx).value
    poly = mpmath.fsum(to_mpf(bernoulli_poly(2 * j + 1, a) / factorial(2 * j + 1))
                       * riemann_zeta(k - 2 * j * N, ctx) * mpmath.power(2**N * al, 2 * j)
                       for j in range(1, m))
    return mpmath.power(al, -mpf(2 * N * m) / (N + 1)) * ((av - mpf(1) / 2) * riemann_zeta(k, ctx) + poly + lam)


def _class_sum(f, r: int, q: int, ctx):
    """sum_{k>=0} f(qk + r), with an Euler-Maclaurin tail."""
    return sum_series(lambda k: f(q * k + r), "euler-maclaurin-tail", ctx, start=0).value


def odd_a_rhs(p, ctx):
    N, m, al, b, a = p["N"], p["m"], p["alpha"], p["beta"], p["a"]
    q = a.denominator
    av = to_mpf(a)
    e = (N + 3) // 2
    inner = mpf(0)
    # alpha > 0 makes beta real, so rays j and -j are complex conjugates
    for j in range(0, (N - 1) // 2 + 1):
        c = b * mpmath.expjpi(mpf(j) / N)
        f = lambda t, c=c: mpmath.power(t, -2 * m - 1) / mpmath.expm1(mpmath.root(2 * t, N) * c)

        def h(t, c=c):
            x = c / (2 * mp.pi) * mpmath.root(2 * t, N)
            return mpmath.power(t, -2 * m - 1) * (_digamma(1j * x, ctx.dps) + _digamma(-1j * x, ctx.dps))

        S1 = mpf(0)
        S2 = mpf(0)
        for r in range(1, q + 1):
            S1 += mpmath.cospi(2 * r * av) * _class_sum(f, r, q, ctx)
            sn = mpmath.sinpi(2 * r * av)
            if sn != 0:
                S2 += sn * _class_sum(h, r, q, ctx)
        v = (-1) ** j * (S1 + (-1) ** (j + e) / (2 * mp.pi) * S2)
        inner += v if j == 0 else 2 * mpmath.re(v)
    cs = mpmath.fsum(mpmath.cospi(2 * r * av) * hurwitz_zeta(2 * m + 1, mpf(r) / q, ctx)
                     for r in range(1, q + 1)) / mpf(q) ** (2 * m + 1)
    gamma_term = ((-1) ** (m + 1) * (2 * mp.pi) ** (2 * m) * to_mpf(bernoulli_poly(2 * m + 1, a))
                  * N * mp.euler / factorial(2 * m + 1))
    head = _prefactor(N, m, b) * (gamma_term + cs / 2 + (-1) ** e * inner)
    return head + _finite_part(N, m, al, b, lambda k: bernoulli_poly(k, a))


# -- chi_{-4} ------------------------------------------------------------------------

def check_entry21(p):
    require(p["m"] >= 1, "m must be a positive integer")
    require(mpmath.re(p["alpha"]) > 0 and mpmath.re(p["beta"]) > 0,
            "alpha and beta must have positive real part")


def entry21_lhs(p, ctx):
    m, a = p["m"], p["alpha"]
    lam = lambert_sum(LambertSpec(-2 * m, a, twist="chi4"), ctx).value
    return mpmath.power(a, -m + mpf(1) / 2) * (L_chi4(2 * m, ctx) / 2 + lam)


def entry21_rhs(p, ctx):
    m, a, b = p["m"], p["alpha"], p["beta"]
    sech = sech_series("entry21", ctx, m=m, beta=b).value
    head = (-1) ** m * mpmath.power(b, -m + mpf(1) / 2) / mpf(2) ** (2 * m + 1) * sech
    acc = mpf(0)
    for n in range(m + 1):
        c = (Fraction((-1) ** n * euler_number(2 * n), 2 ** (2 * n) * factorial(2 * n))
             * bernoulli_number(2 * m - 2 * n) / factorial(2 * m - 2 * n))
        acc += to_mpf(c) * mpmath.power(a, m - n) * mpmath.power(b, n + mpf(1) / 2)
    return head + acc / 4
