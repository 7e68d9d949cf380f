"""Odd zeta values from a Lambert-series transformation and its classical relatives."""
from __future__ import annotations

from fractions import Fraction
from math import factorial

import mpmath
from mpmath import mp

from ..lambert import LambertSpec, lambert_sum
from ..special import bernoulli_number, riemann_zeta, to_mpf
from .params import require


def bernoulli_pair(m: int, k: int) -> Fraction:
    """B_{2k} B_{2m+2-2k} / ((2k)! (2m+2-2k)!)."""
    j = 2 * m + 2 - 2 * k
    return bernoulli_number(2 * k) * bernoulli_number(j) / (factorial(2 * k) * factorial(j))


def modular_beta(p: dict) -> dict:
    return {"beta": mp.pi**2 / p["alpha"]}


def check_half_plane(p: dict, *names: str) -> None:
    for n in names:
        require(mpmath.re(p[n]) > 0, f"{n} must have positive real part")


# -- odd zeta values ---------------------------------------------------------

def check_ram(p):
    require(p["m"] != 0, "m must be a non-zero integer")
    check_half_plane(p, "alpha")


def _ram_side(x, m, ctx):
    return riemann_zeta(2 * m + 1, ctx) / 2 + lambert_sum(LambertSpec(-2 * m - 1, 2 * x), ctx).value


def ram_lhs(p, ctx):
    return mpmath.power(p["alpha"], -p["m"]) * _ram_side(p["alpha"], p["m"], ctx)


def ram_rhs(p, ctx):
    a, b, m = p["alpha"], p["beta"], p["m"]
    poly = mpmath.fsum((-1) ** k * to_mpf(bernoulli_pair(m, k)) * mpmath.power(a, m + 1 - k)
                       * mpmath.power(b, k) for k in range(m + 2))
    return mpmath.power(-b, -m) * _ram_side(b, m, ctx) - 2 ** (2 * m) * poly


def lerch_rational(m: int) -> Fraction:
    """q with zeta(2m+1) + 2 sum n^(-2m-1)/(e^(2 pi n)-1) = q pi^(2m+1), m odd."""
    return 2 ** (2 * m) * sum((-(-1) ** j * bernoulli_pair(m, j) for j in range(m + 2)), Fraction(0))


def check_lerch(p):
    require(p["m"] > 0 and p["m"] % 2 == 1, "m must be an odd positive integer")


def lerch_lhs(p, ctx):
    m = p["m"]
    return riemann_zeta(2 * m + 1, ctx) + 2 * lambert_sum(LambertSpec(-2 * m - 1, 2 * mp.pi), ctx).value


def lerch_rhs(p, ctx):
    m = p["m"]
    return to_mpf(lerch_rational(m)) * mp.pi ** (2 * m + 1)


# -- weight 2l, weight 2 and weight 0 --------------------------------------------

def check_eisenstein(p):
    require(p["l"] > 1, "l must be an integer greater than 1")
    check_half_plane(p, "alpha")


def eisenstein_lhs(p, ctx):
    a, b, l = p["alpha"], p["beta"], p["l"]
    sa = lambert_sum(LambertSpec(2 * l - 1, 2 * a), ctx).value
    sb = lambert_sum(LambertSpec(2 * l - 1, 2 * b), ctx).value
    return mpmath.power(a, l) * sa - mpmath.power(-b, l) * sb


def eisenstein_rhs(p, ctx):
    a, b, l = p["alpha"], p["beta"], p["l"]
    return (mpmath.power(a, l) - mpmath.power(-b, l)) * to_mpf(bernoulli_number(2 * l)) / (4 * l)


def check_positive_alpha(p):
    require(mpmath.im(p["alpha"]) == 0 and p["alpha"] > 0, "alpha must be a positive real")


def quasi_e2_lhs(p, ctx):
    a, b = p["alpha"], p["beta"]
    return (a * lambert_sum(LambertSpec(1, 2 * a), ctx).value
            + b * lambert_sum(LambertSpec(1, 2 * b), ctx).value)


def quasi_e2_rhs(p, ctx):
    return (p["alpha"] + p["beta"]) / 24 - mpmath.mpf(1) / 4


def eta_lhs(p, ctx):
    a, b = p["alpha"], p["beta"]
    return (lambert_sum(LambertSpec(-1, 2 * a), ctx).value
            - lambert_sum(LambertSpec(-1, 2 * b), ctx).value)


def eta_rhs(p, ctx):
    a, b = p["alpha"], p["beta"]
    return (b - a) / 12 + mpmath.log(a / b) / 4


def lerch_zeta(m: int, ctx):
    """zeta(2m+1) for odd m from the rational multiple of pi^(2m+1)."""
    with ctx.workprec():
        lam = lambert_sum(LambertSpec(-2 * m - 1, 2 * mp.pi), ctx).value
        return to_mpf(lerch_rational(m)) * mp.pi ** (2 * m + 1) - 2 * lam
