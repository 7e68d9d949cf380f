"""Ramanujan polynomials, their unimodular zeros and two odd-zeta representations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

from ..errors import DegenerateZ, InvalidArgument, NoKappa, RootFindingFailure
from ..lambert import eichler_series, v_series
from ..mpcore import BigComplex, PrecisionContext
from ..special import riemann_zeta, to_mpf
from .classical import bernoulli_pair


@dataclass(frozen=True)
class RamanujanPolynomial:
    """R(z) = sum_k coeffs[k] z^(2k), k = 0..m+1."""

    m: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.coeffs != self.coeffs[::-1]:
            raise ValueError("coefficients are not reciprocal")

    @property
    def degree(self) -> int:
        return 2 * self.m + 2

    def dense(self) -> list[Fraction]:
        """All coefficients, constant term first."""
        out = [Fraction(0)] * (self.degree + 1)
        out[::2] = self.coeffs
        return out

    def at_one(self, reverse: bool = False) -> Fraction:
        seq = self.coeffs[::-1] if reverse else self.coeffs
        return sum(seq, Fraction(0))

    def __call__(self, z):
        return _horner([to_mpf(c) for c in self.dense()], z)[0]


def ramanujan_poly(m: int) -> RamanujanPolynomial:
    if m < 1:
        raise InvalidArgument("m must be a positive integer")
    return RamanujanPolynomial(m, tuple(bernoulli_pair(m, k) for k in range(m + 2)))


def _horner(c, z):
    """(p(z), p'(z)) for coefficients c, constant term first."""
    p, d = mpf(0), mpf(0)
    for a in reversed(c):
        d = d * z + p
        p = p * z + a
    return p, d


def _aberth(c, n, radius, offset, sweeps=500):
    z = [radius * mpmath.expjpi(2 * (mpf(k) + offset) / n) for k in range(n)]
    tol = mpmath.ldexp(1, -mp.prec // 2)
    for _ in range(sweeps):
        moved = mpf(0)
        for i in range(n):
            p, d = _horner(c, z[i])
            if p == 0:
                continue
            r = p / d
            s = mpmath.fsum(1 / (z[i] - z[j]) for j in range(n) if j != i)
            w = r / (1 - r * s)
            z[i] -= w
            moved = max(moved, abs(w) / max(1, abs(z[i])))
        if moved < tol:
            break
    return z


def _newton(c, z, cap=200):
    tol = mpmath.ldexp(1, -mp.prec + 8)
    for _ in range(cap):
        p, d = _horner(c, z)
        if d == 0:
            break
        step = p / d
        z -= step
        if abs(step) <= tol * max(1, abs(z)):
            return z
    raise RootFindingFailure(f"Newton did not converge near {mpmath.nstr(z, 8)}")


@dataclass(frozen=True)
class UnimodularZero:
    kappa: BigComplex
    modulus_gap: mpf
    residual: mpf


def rp_unimodular_zeros(m: int, ctx: PrecisionContext) -> list[UnimodularZero]:
    rp = ramanujan_poly(m)
    n = rp.degree
    with mp.workdps(ctx.dps + 10):
        c = [to_mpf(q) for q in rp.dense()]
        lead = c[-1]
        c = [a / lead for a in c]
        approx = _aberth(c, n, 1 + mpf(1) / (2 * m + 2), mpf(1) / (4 * m))
        roots = [_newton(c, z) for z in approx]
        out = []
        for z in sorted(roots, key=lambda r: (float(mpmath.arg(r)), float(abs(r)))):
            gap = abs(abs(z) - 1)
            if gap >= mpf(10) ** (-ctx.digits / 2) or mpmath.im(z) <= 0:
                continue
            if abs(z ** (2 * m) - 1) <= mpf(10) ** (-ctx.digits / 4):
                continue
            out.append(UnimodularZero(BigComplex.make(z, ctx.dps), +gap, abs(rp(z))))
    return out


def zeta_via_kappa(m: int, ctx: PrecisionContext) -> BigComplex:
    if m < 4:
        raise InvalidArgument("m must be at least 4")
    zeros = rp_unimodular_zeros(m, ctx)
    if not zeros:
        raise NoKappa(f"no certified unimodular zero for m={m}")
    with ctx.workprec():
        pick = max(zeros, key=lambda u: (abs(u.kappa.value ** (2 * m) - 1), -mpmath.arg(u.kappa.value)))
        return kappa_zeta(m, pick.kappa.value, ctx)


def kappa_zeta(m: int, kappa, ctx: PrecisionContext) -> BigComplex:
    """zeta(2m+1) from one unimodular zero of the Ramanujan polynomial."""
    with ctx.workprec():
        k2 = kappa ** (2 * m)
        f = eichler_series(2 * m + 1, kappa, ctx).value
        g = eichler_series(2 * m + 1, -1 / kappa, ctx).value
        return BigComplex.make(2 / (k2 - 1) * (f - k2 * g), ctx.dps)


def osullivan_zeta_repr(m: int, z, ctx: PrecisionContext) -> BigComplex:
    if m < 1:
        raise InvalidArgument("m must be a positive integer")
    with ctx.workprec():
        z = mpmath.mpmathify(z.value if isinstance(z, BigComplex) else z)
        y = mpmath.im(z)
        if y <= 0:
            raise InvalidArgument("z must lie in the upper half-plane")
        z2m = z ** (2 * m)
        if abs(z2m - 1) < mpf(10) ** (-ctx.digits / 2):
            raise DegenerateZ("z^(2m) = 1")
        tpi = 2j * mp.pi
        rz = ramanujan_poly(m)(z)
        v = v_series(-2 * m, z, ctx).value - z2m * v_series(-2 * m, -1 / z, ctx).value
        corr = (2 * riemann_zeta(2 * m + 2, ctx) * tpi ** (2 * m) * (y / mp.pi) ** (2 * m + 1)
                * (z2m * abs(z) ** (-4 * m - 2) - 1))
        num = tpi ** (2 * m + 1) * rz / z + 2 * v - corr
        return BigComplex.make(num / (z2m - 1), ctx.dps)
