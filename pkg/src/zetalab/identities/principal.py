"""Transformations whose right-hand side carries a cotangent principal-value integral."""
from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath import mp

from ..lambert import LambertSpec, Phase, lambert_sum
from ..mpcore import integrate_pv_cot
from ..special import hurwitz_zeta, riemann_zeta
from .params import require


def pv_beta(p):
    return {"beta": 4 * mp.pi**2 / p["alpha"]}


def check_pv(p):
    require(mpmath.re(p["s"]) > 2, "s must have real part > 2")
    a = p["alpha"]
    require(mpmath.im(a) == 0 and a > 0, "alpha must be a positive real")


def _gamma_zeta(s, ctx):
    return mpmath.gamma(s) * riemann_zeta(s, ctx) / (2 * mp.pi) ** s


def pv_lhs(p, ctx):
    s, a = p["s"], p["alpha"]
    lam = lambert_sum(LambertSpec(s - 1, a), ctx).value
    return mpmath.power(a, s / 2) * (_gamma_zeta(s, ctx) + mpmath.cos(mp.pi * s / 2) * lam)


def pv_rhs(p, ctx):
    s, b = p["s"], p["beta"]
    g = lambda x: mpmath.power(x, s - 1) / mpmath.expm1(2 * mp.pi * x)
    pv = integrate_pv_cot(g, b, ctx).value
    lam = lambert_sum(LambertSpec(s - 1, b), ctx).value
    return mpmath.power(b, s / 2) * (mpmath.cos(mp.pi * s / 2) * _gamma_zeta(s, ctx) + lam
                                     - mpmath.sin(mp.pi * s / 2) * pv)


def check_pv_a(p):
    require(mpmath.re(p["s"]) > 2, "s must have real part > 2")
    require(mpmath.re(p["alpha"]) > 0, "alpha must have positive real part")
    require(0 <= p["a"] < 1, "a must satisfy 0 <= a < 1")


def pv_a_lhs(p, ctx):
    s, al, a = p["s"], p["alpha"], p["a"]
    e = mpmath.expjpi(s / 2)
    plus = lambert_sum(LambertSpec(s - 1, al, Phase(a, 1)), ctx).value
    minus = lambert_sum(LambertSpec(s - 1, al, Phase(a, -1)), ctx).value
    return mpmath.power(al, s / 2) * (_gamma_zeta(s, ctx) + (e * plus + minus / e) / 2)


def pv_a_rhs(p, ctx):
    s, b, a = p["s"], p["beta"], Fraction(p["a"])
    q = a.denominator
    av = mpmath.mpf(a.numerator) / q
    # sum_n cos(pi s/2 + 2 pi a n) n^-s, split into residue classes mod q
    cs = mpmath.fsum(mpmath.cos(mp.pi * s / 2 + 2 * mp.pi * av * r) * hurwitz_zeta(s, mpmath.mpf(r) / q, ctx)
                     for r in range(1, q + 1)) / mpmath.power(q, s)
    e = mpmath.expjpi(s / 2)
    ph = 2j * mp.pi * av

    def g(x):
        w = mpmath.power(x, s - 1)
        return w * (e / mpmath.expm1(2 * mp.pi * x - ph) - 1 / (e * mpmath.expm1(2 * mp.pi * x + ph))) / 2j

    pv = integrate_pv_cot(g, b, ctx).value
    lam = lambert_sum(LambertSpec(s - 1, b, shift=a), ctx).value
    return mpmath.power(b, s / 2) * (mpmath.gamma(s) / (2 * mp.pi) ** s * cs + lam - pv)
