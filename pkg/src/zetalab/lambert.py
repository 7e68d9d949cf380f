"""Evaluators for the Lambert-type and related series entering the identities."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath
from mpmath import mp, mpf

from .errors import InvalidArgument
from .mpcore import PrecisionContext, SeriesSum, sum_series, tally
from .special import (bernoulli_number, bessel_k0, chi4, digamma, divisor_count, divisor_sigma,
                      divisors, hurwitz_zeta, riemann_zeta, to_mpf)

LN10 = math.log(10)


@dataclass(frozen=True)
class Phase:
    """Twist replacing e^{n scale} - 1 by e^{n scale - 2 pi i a sign} - 1."""

    a: object
    sign: int = 1


@dataclass(frozen=True)
class LambertSpec:
    weight: object
    scale: object
    twist: object = None  # None, "chi4" or Phase
    shift: object = None

    def __post_init__(self) -> None:
        if mpmath.re(mpmath.mpmathify(self.scale)) <= 0:
            raise InvalidArgument("Lambert series need Re(scale) > 0")
        if self.twist is not None and self.twist != "chi4" and not isinstance(self.twist, Phase):
            raise InvalidArgument(f"unknown twist {self.twist!r}")
        if isinstance(self.twist, Phase) and self.shift is not None:
            raise InvalidArgument("shift and phase twists are mutually exclusive")
        if self.shift is not None and not 0 <= self.shift < 1:
            raise InvalidArgument("shift must lie in [0, 1)")


def _inv_expm1(x):
    return 1 / mpmath.expm1(x)


def sech(x):
    e = mpmath.exp(-x)
    return 2 * e / (1 + e * e)


def lambert_sum(spec: LambertSpec, ctx: PrecisionContext) -> SeriesSum:
    with ctx.workprec():
        w = mpmath.mpmathify(spec.weight)
        sc = mpmath.mpmathify(spec.scale)
        tw = spec.twist
        if isinstance(tw, Phase):
            ph = 2 * mp.pi * 1j * mpmath.mpmathify(tw.a) * tw.sign

            def term(n):
                return mpmath.power(n, w) * _inv_expm1(n * sc - ph)
        else:
            sh = mpmath.mpmathify(spec.shift or 0)

            def term(n):
                if tw == "chi4":
                    c = chi4(n)
                    if c == 0:
                        return mpf(0)
                else:
                    c = 1
                u = n - sh
                return c * mpmath.power(u, w) * _inv_expm1(u * sc)
    return sum_series(term, "geometric-decay", ctx)


def sigma_lambert_sum(s, y, ctx: PrecisionContext, route: str = "divisor") -> SeriesSum:
    """sum sigma_s(n) e^{-ny}, either over divisor sums or as sum n^s/(e^{ny}-1)."""
    if route == "lambert":
        return lambert_sum(LambertSpec(s, y), ctx)
    if route != "divisor":
        raise InvalidArgument(f"unknown route {route!r}")
    with ctx.workprec():
        s = mpmath.mpmathify(s)
        y = mpmath.mpmathify(y)
        if mpmath.re(y) <= 0:
            raise InvalidArgument("need Re(y) > 0")
    return sum_series(lambda n: divisor_sigma(s, n) * mpmath.exp(-n * y), "geometric-decay", ctx)


def log_lambert_sum(y, ctx: PrecisionContext) -> SeriesSum:
    with ctx.workprec():
        y = mpmath.mpmathify(y)
        if mpmath.re(y) <= 0:
            raise InvalidArgument("need Re(y) > 0")
    return sum_series(lambda n: mpmath.log(n) * _inv_expm1(n * y), "geometric-decay", ctx, start=2)


def eichler_series(k: int, z, ctx: PrecisionContext) -> SeriesSum:
    """F_k(z) = sum sigma_k(n) n^{-k} e^{2 pi i n z}."""
    with ctx.workprec():
        z = mpmath.mpmathify(z)
        if mpmath.im(z) <= 0:
            raise InvalidArgument("z must lie in the upper half-plane")
        q = mpmath.exp(2j * mp.pi * z)
    return sum_series(lambda n: divisor_sigma(-k, n) * q**n, "geometric-decay", ctx)


def _herglotz_cutoff(x, dps) -> int:
    r = abs(complex(x))
    if mpmath.re(x) < 0:
        r = min(r, abs(float(mpmath.im(x))))
    return int(math.ceil((dps * LN10 + 10) / (2 * math.pi * r))) + 2


def herglotz(k: int, x, ctx: PrecisionContext, cutoff: int | None = None) -> SeriesSum:
    """F_k(x) = sum psi(nx)/n^k.

    Terms n < N are summed directly; for n >= N psi(nx) is replaced by its
    Stirling series, whose sums over n are Hurwitz zeta values at N.
    """
    if k < 2:
        raise InvalidArgument("k must be at least 2")
    with ctx.workprec():
        x = mpmath.mpmathify(x)
        if mpmath.im(x) == 0 and mpmath.re(x) <= 0:
            raise InvalidArgument("x must be off (-inf, 0]")
        eps = ctx.eps()
        N = cutoff or _herglotz_cutoff(x, ctx.dps)
        direct = mpmath.fsum(digamma(n * x, ctx) / mpf(n) ** k for n in range(1, N))
        logx = mpmath.log(x)
        tail = logx * hurwitz_zeta(k, N, ctx) - hurwitz_zeta(k, N, ctx, 1)
        tail -= hurwitz_zeta(k + 1, N, ctx) / (2 * x)
        xi2 = 1 / (x * x)
        p = xi2
        last = mpmath.inf
        for j in range(1, 400):
            t = to_mpf(bernoulli_number(2 * j)) / (2 * j) * p * hurwitz_zeta(k + 2 * j, N, ctx)
            if abs(t) > last:
                break  # past the smallest term of the asymptotic series; cutoff too small
            tail -= t
            last = abs(t)
            if last <= eps * max(1, abs(tail)):
                break
            p *= xi2
        total = direct + tail
    tally(N + j)
    return SeriesSum(total, last, N + j)


def omega_rho(rho, x, ctx: PrecisionContext) -> SeriesSum:
    """Omega_rho(x) = 2 sum d(j) (K0(4 rho e^{i pi/4} sqrt(jx)) + K0(conjugate argument))."""
    with ctx.workprec():
        rho = mpmath.mpmathify(rho)
        x = mpmath.mpmathify(x)
        if rho <= 0 or x <= 0:
            raise InvalidArgument("rho and x must be positive")
        e = mpmath.expjpi(mpf(1) / 4)

    def term(j):
        arg = 4 * rho * mpmath.sqrt(j * x)
        return 2 * divisor_count(j) * (bessel_k0(arg * e, ctx) + bessel_k0(arg * mpmath.conj(e), ctx))

    res = sum_series(term, "plateau-stop", ctx)
    with ctx.workprec():
        return SeriesSum(mpmath.re(res.value), res.tail_bound, res.terms_used)


def omega_dirichlet(rho, w, ctx: PrecisionContext) -> SeriesSum:
    """sum_n d(n) Omega_rho(n) n^{-w}, grouped by the product M = j n.

    The double sum over (j, n) only involves K0 at 4 rho e^{+-i pi/4} sqrt(M),
    so one Bessel pair per M suffices, weighted by sum_{n | M} d(n) d(M/n) n^{-w}.
    """
    with ctx.workprec():
        rho = mpmath.mpmathify(rho)
        w = mpmath.mpmathify(w)
        if rho <= 0:
            raise InvalidArgument("rho must be positive")
        e = mpmath.expjpi(mpf(1) / 4)

    def term(M):
        c = mpmath.fsum(divisor_count(n) * divisor_count(M // n) * mpmath.power(n, -w)
                        for n in divisors(M))
        k = bessel_k0(4 * rho * mpmath.sqrt(M) * e, ctx)
        return 2 * c * (k + mpmath.conj(k))

    res = sum_series(term, "plateau-stop", ctx)
    with ctx.workprec():
        v = res.value
        if mpmath.im(w) == 0:
            v = mpmath.re(v)
        return SeriesSum(v, res.tail_bound, res.terms_used)


def v_series(k: int, z, ctx: PrecisionContext) -> SeriesSum:
    """V_k(z); identically zero for k > 0 (empty inner sum)."""
    if k % 2:
        raise InvalidArgument("k must be even")
    with ctx.workprec():
        z = mpmath.mpmathify(z)
        y = mpmath.im(z)
        if y <= 0:
            raise InvalidArgument("z must lie in the upper half-plane")
        if k > 0:
            return SeriesSum(mpf(0), mpf(0), 0)
        q = mpmath.exp(-2j * mp.pi * mpmath.conj(z))

    def term(n):
        a = 4 * mp.pi * n * y
        inner = mpmath.fsum(a**u / factorial(u) for u in range(-k + 1))
        return divisor_sigma(k - 1, n) * q**n * inner

    return sum_series(term, "geometric-decay", ctx)


def coth_series(m: int, alpha, ctx: PrecisionContext) -> SeriesSum:
    """C_m(alpha) = sum coth(pi n alpha)/(2 pi n)^(2m-1), split as 1 + 2/(e^{2x}-1)."""
    if m < 2:
        raise InvalidArgument("m must be at least 2")
    with ctx.workprec():
        alpha = mpmath.mpmathify(alpha)
        if mpmath.re(alpha) <= 0:
            raise InvalidArgument("alpha must have positive real part")
        p = 2 * m - 1
        const = riemann_zeta(p, ctx) / (2 * mp.pi) ** p
    res = sum_series(lambda n: 2 * _inv_expm1(2 * mp.pi * n * alpha) / (2 * mp.pi * n) ** p,
                     "geometric-decay", ctx)
    with ctx.workprec():
        return SeriesSum(const + res.value, res.tail_bound, res.terms_used)


def g_poly_coeffs(m: int) -> list[Fraction]:
    """c_n with G_m(alpha) = sum_n c_n alpha^(2n-m)."""
    return [-(-1) ** n * bernoulli_number(2 * n) * bernoulli_number(2 * m - 2 * n)
            / (factorial(2 * n) * factorial(2 * m - 2 * n)) for n in range(m + 1)]


def g_poly(m: int, alpha, ctx: PrecisionContext):
    with ctx.workprec():
        alpha = mpmath.mpmathify(alpha)
        return mpmath.fsum(to_mpf(c) * mpmath.power(alpha, 2 * n - m)
                           for n, c in enumerate(g_poly_coeffs(m)))


def sech_series(variant: str, ctx: PrecisionContext, *, m: int | None = None, beta=None,
                r: int | None = None) -> SeriesSum:
    """The three sech series: ``chi4``, ``entry21`` and ``multidim``."""
    if variant == "chi4":
        with ctx.workprec():
            h = mp.pi / 2
        return sum_series(lambda n: chi4(n) * sech(h * n) / n if n % 2 else mpf(0),
                          "geometric-decay", ctx)
    if variant == "entry21":
        if m is None or m < 1:
            raise InvalidArgument("entry21 needs m >= 1")
        with ctx.workprec():
            beta = mpmath.mpmathify(beta)
            if mpmath.re(beta) <= 0:
                raise InvalidArgument("beta must have positive real part")
        return sum_series(lambda n: sech(n * beta) / mpf(n) ** (2 * m), "geometric-decay", ctx)
    if variant == "multidim":
        if r not in (1, 2, 3):
            raise InvalidArgument("r must be 1, 2 or 3")
        return _multidim(r, ctx)
    raise InvalidArgument(f"unknown variant {variant!r}")


def _multidim(r: int, ctx: PrecisionContext) -> SeriesSum:
    # L-infinity shells; each orbit under coordinate permutations is summed once
    with ctx.workprec():
        eps = ctx.eps()
        half = mpf(1) / 2
        total = mpf(0)
        count = 0
        R = 0
        while True:
            shell = mpf(0)
            for head in itertools.combinations_with_replacement(range(R + 1), r - 1):
                ns = head + (R,)
                mult = math.factorial(r)
                for v in set(ns):
                    mult //= math.factorial(ns.count(v))
                hs = [n + half for n in ns]
                x = mp.pi * mpmath.sqrt(mpmath.fsum(h * h for h in hs))
                sign = -1 if sum(ns) % 2 else 1
                shell += sign * mult * sech(x) / mpmath.fprod(hs)
                count += mult
            total += shell
            hs = [R + half] + [half] * (r - 1)
            peak = sech(mp.pi * mpmath.sqrt(mpmath.fsum(h * h for h in hs))) / mpmath.fprod(hs)
            npts = (R + 1) ** r - R**r
            if peak * npts < eps * max(1, abs(total)):
                break
            R += 1
            if count > ctx.max_terms:
                from .errors import TermBudgetExceeded
                raise TermBudgetExceeded("multidimensional lattice sum exceeded the term budget")
    tally(count)
    return SeriesSum(total, peak * npts, count)
