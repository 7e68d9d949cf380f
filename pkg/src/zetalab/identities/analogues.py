"""Non-holomorphic, Herglotz, zeta-squared, sech-lattice and cotangent analogues."""
from __future__ import annotations

from math import factorial

import mpmath
from mpmath import mp, mpf

from ..lambert import coth_series, g_poly, herglotz, omega_dirichlet, sech_series, v_series
from ..special import bernoulli_number, riemann_zeta, to_mpf, zeta_derivative
from .params import require


# -- V_k transformation ------------------------------------------------------------

def check_nonholo(p):
    require(p["k"] % 2 == 0, "k must be even")
    require(mpmath.im(p["z"]) > 0, "z must lie in the upper half-plane")


def nonholo_lhs(p, ctx):
    k, z = p["k"], p["z"]
    return 2 * (mpmath.power(z, k) * v_series(k, z, ctx).value - v_series(k, -1 / z, ctx).value)


def nonholo_rhs(p, ctx):
    k, z = p["k"], p["z"]
    y = mpmath.im(z)
    tpi = 2j * mp.pi
    zk = mpmath.power(z, k)
    v = (2 * riemann_zeta(2 - k, ctx) / mpmath.power(tpi, k) * mpmath.power(y / mp.pi, 1 - k)
         * (mpmath.power(abs(z), 2 * k - 2) - zk))
    top = 1 - k // 2
    poly = mpf(0)
    for u in range(0, top + 1):
        w = top - u
        c = bernoulli_number(2 * u) * bernoulli_number(2 * w) / (factorial(2 * u) * factorial(2 * w))
        poly += to_mpf(c) * mpmath.power(z, 1 - 2 * w)
    v -= mpmath.power(tpi, 1 - k) * poly
    if k == 0:
        v += 1j * mp.pi / 2 + mpmath.conj(mpmath.log(z))
    elif k < 0:
        v += (1 - zk) * riemann_zeta(1 - k, ctx)
    return v


# -- higher Herglotz function -------------------------------------------------------

def check_herglotz(p):
    require(p["m"] >= 1, "m must be a positive integer")
    require(mpmath.re(p["alpha"]) > 0, "alpha must have positive real part")


def _herglotz_pair(m, x, scale, ctx):
    k = 2 * m + 1
    u = 1j * x / scale
    return (2 * mp.euler * riemann_zeta(k, ctx) + herglotz(k, u, ctx).value
            + herglotz(k, -u, ctx).value)


def herglotz_lhs(p, ctx):
    m, a = p["m"], p["alpha"]
    return mpmath.power(a, -m) * _herglotz_pair(m, a, p.get("scale", mp.pi), ctx)


def herglotz_rhs(p, ctx):
    m, a, b = p["m"], p["alpha"], p["beta"]
    head = -mpmath.power(-b, -m) * _herglotz_pair(m, b, p.get("scale", mp.pi), ctx)
    cross = mpmath.fsum((-1) ** j * riemann_zeta(2 * m - 2 * j + 1, ctx) * riemann_zeta(2 * j + 1, ctx)
                        * mpmath.power(a, j - m) * mpmath.power(b, -j) for j in range(1, m))
    return head - 2 * cross


def herglotz_m1_derive(p):
    scale = mp.pi if p["variant"] == "pi" else 2 * mp.pi
    return {"m": 1, "beta": mp.pi**2 / p["alpha"], "scale": scale}


# -- zeta squared ----------------------------------------------------------------------

def check_zeta_squared(p):
    require(p["m"] != 0, "m must be a non-zero integer")
    require(mpmath.im(p["alpha"]) == 0 and p["alpha"] > 0, "alpha must be a positive real")


def zeta_squared_F(m: int, rho, ctx):
    z = riemann_zeta(2 * m + 1, ctx)
    dz = zeta_derivative(2 * m + 1, ctx)
    tot = omega_dirichlet(rho, 2 * m + 1, ctx).value
    return mpmath.power(rho, -2 * m) * (z * z * (mp.euler + mpmath.log(rho / mp.pi)) - z * dz + tot)


def zeta_squared_poly(m: int, a, b):
    acc = mpf(0)
    for j in range(m + 2):
        c = (bernoulli_number(2 * j) * bernoulli_number(2 * m + 2 - 2 * j)
             / (factorial(2 * j) * factorial(2 * m + 2 - 2 * j))) ** 2
        acc += (-1) ** j * to_mpf(c) * mpmath.power(a, 2 * j) * mpmath.power(b, 2 * m + 2 - 2 * j)
    return -mp.pi * mpf(2) ** (4 * m) * acc


def zeta_squared_lhs(p, ctx):
    m = p["m"]
    return zeta_squared_F(m, p["alpha"], ctx) - (-1) ** m * zeta_squared_F(m, p["beta"], ctx)


def zeta_squared_rhs(p, ctx):
    return zeta_squared_poly(p["m"], p["alpha"], p["beta"])


# -- sech sums -----------------------------------------------------------------------------

def sech_chi4_lhs(p, ctx):
    return sech_series("chi4", ctx).value


def sech_chi4_rhs(p, ctx):
    return mp.pi / 8


def check_multidim(p):
    require(p["r"] in (1, 2, 3), "r must be 1, 2 or 3")


def multidim_lhs(p, ctx):
    return sech_series("multidim", ctx, r=p["r"]).value


def multidim_rhs(p, ctx):
    r = p["r"]
    return (mp.pi / 2) ** r / (r + 1)


# -- cotangent sums ----------------------------------------------------------------------

def check_cot(p):
    require(p["m"] >= 2, "m must be at least 2")
    a = p["alpha"]
    require(mpmath.im(a) == 0 and a > 0, "alpha must be a positive real")


def cot_lhs(p, ctx):
    return g_poly(p["m"], p["alpha"], ctx)


def cot_rhs(p, ctx):
    m, a = p["m"], p["alpha"]
    return (mpmath.power(a, m - 1) * coth_series(m, 1 / a, ctx).value
            - mpmath.power(-a, 1 - m) * coth_series(m, a, ctx).value)


def check_triangle(p):
    require(p["m"] >= 2, "m must be at least 2")
    a = p["alpha"]
    require(a != 0 and a != 1j and a * 1j != 1, "alpha must avoid 0 and the poles of the shifted terms")


def triangle_lhs(p, ctx):
    return g_poly(p["m"], p["alpha"], ctx)


def triangle_rhs(p, ctx):
    m, a = p["m"], p["alpha"]
    return (mpmath.power(1j / a + 1, m - 1) * g_poly(m, a + 1j, ctx)
            - mpmath.power(1j * a - 1, m - 1) * g_poly(m, 1 / a - 1j, ctx))
