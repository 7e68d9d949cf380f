"""Zeta-type functions by Euler-Maclaurin summation, digamma, Stieltjes constants."""
from __future__ import annotations

import math
import threading

import mpmath
from mpmath import mp, mpc, mpf

from ..errors import InvalidArgument, NoConvergence, PoleAtOne
from ..mpcore import PrecisionContext, sum_series
from .numbers import bernoulli_mpf, bernoulli_number, to_mpf


def _is_nonpositive_integer(z) -> bool:
    z = mpmath.mpmathify(z)
    if isinstance(z, mpc):
        if z.imag != 0:
            return False
        z = z.real
    return z <= 0 and z == mpmath.floor(z)


def _as_integer(s):
    s = mpmath.mpmathify(s)
    if isinstance(s, mpc):
        if s.imag != 0:
            return None
        s = s.real
    if s == mpmath.floor(s):
        return int(s)
    return None


def _hurwitz_em(s, a, deriv: int, dps: int):
    """zeta(s, a) or its s-derivative; caller sets the working precision."""
    eps = mpf(2) ** (-mp.prec)
    N = max(0, int(math.ceil(max(dps, 1.5 * abs(complex(s))) + 10 - float(mpmath.re(a)))))
    for _ in range(6):
        w = N + a
        logw = mpmath.log(w)
        direct = mpf(0)
        for n in range(N):
            u = n + a
            t = mpmath.power(u, -s)
            direct += t if deriv == 0 else -mpmath.log(u) * t
        ws = mpmath.power(w, -s)
        w1s = ws * w
        if deriv == 0:
            head = w1s / (s - 1) + ws / 2
        else:
            head = -logw * w1s / (s - 1) - w1s / (s - 1) ** 2 - logw * ws / 2
        total = direct + head
        poch, dpoch = s, mpf(1)
        W = ws / w  # w^(-s-2j+1) at j = 1
        prev = None
        done = False
        for j in range(1, 4 * N + 40):
            c = bernoulli_mpf(2 * j) / mpmath.factorial(2 * j)
            if deriv == 0:
                t = c * poch * W
            else:
                t = c * (dpoch - poch * logw) * W
            total += t
            at = abs(t)
            # relative to the value; w^-s keeps the test finite near zeros of zeta
            if at <= eps * max(abs(total), abs(ws)):
                done = True
                break
            if prev is not None and at > prev and j > 3:
                break
            prev = at
            x1, x2 = s + 2 * j - 1, s + 2 * j
            dpoch = dpoch * x1 * x2 + poch * (x1 + x2)
            poch = poch * x1 * x2
            W = W / (w * w)
        if done:
            return total
        N = 2 * N + 20
    raise NoConvergence("Euler-Maclaurin zeta summation did not converge")


def hurwitz_zeta(s, z, ctx: PrecisionContext, derivative: int = 0):
    """zeta(s, z) = sum_{n>=0} (n+z)^(-s), continued in s; derivative in {0, 1}."""
    if derivative not in (0, 1):
        raise InvalidArgument("derivative must be 0 or 1")
    with ctx.workprec():
        s = mpmath.mpmathify(s)
        z = mpmath.mpmathify(z)
        if s == 1:
            raise PoleAtOne("zeta has a pole at s = 1")
        if _is_nonpositive_integer(z):
            raise InvalidArgument("z must not be a non-positive integer")
        return _hurwitz_em(s, z, derivative, ctx.dps)


def riemann_zeta(s, ctx: PrecisionContext):
    with ctx.workprec():
        s = mpmath.mpmathify(s)
        if s == 1:
            raise PoleAtOne("zeta has a pole at s = 1")
        n = _as_integer(s)
        if n is not None and n <= 0:
            # zeta(-n) = (-1)^n B_{n+1} / (n+1)
            return (-1) ** n * to_mpf(bernoulli_number(-n + 1)) / (-n + 1)
        if mpmath.re(s) < 0.5:
            t = 1 - s
            return (mpmath.power(2, s) * mpmath.power(mp.pi, s - 1) * mpmath.sin(mp.pi * s / 2)
                    * mpmath.gamma(t) * _hurwitz_em(t, mpf(1), 0, ctx.dps))
        return _hurwitz_em(s, mpf(1), 0, ctx.dps)


def zeta_derivative(s, ctx: PrecisionContext):
    return hurwitz_zeta(s, 1, ctx, derivative=1)


def digamma(z, ctx: PrecisionContext):
    """psi(z) by upward recurrence and the Bernoulli asymptotic series."""
    with ctx.workprec():
        z = mpmath.mpmathify(z)
        if _is_nonpositive_integer(z):
            raise InvalidArgument("digamma has poles at the non-positive integers")
        return _digamma(z, ctx.dps)


def _digamma(z, dps):
    if mpmath.re(z) < 0.5:
        return _digamma(1 - z, dps) - mp.pi * mpmath.cot(mp.pi * z)
    eps = mpf(2) ** (-mp.prec)
    # numerical differentiation may raise the precision above dps
    R = 0.5 * max(dps, mp.dps) + 10
    y = abs(float(mpmath.im(z)))
    n = 0 if y >= R else max(0, int(math.ceil(math.sqrt(R * R - y * y) - float(mpmath.re(z)))))
    acc = mpf(0)
    for k in range(n):
        acc += 1 / (z + k)
    w = z + n
    res = mpmath.log(w) - 1 / (2 * w)
    w2 = 1 / (w * w)
    p = w2
    for j in range(1, 400):
        t = bernoulli_mpf(2 * j) / (2 * j) * p
        res -= t
        if abs(t) <= eps * abs(res):
            break
        p *= w2
    return res - acc


def _log_derivative_polys(k: int, order: int) -> list[list[int]]:
    """Integer coefficient lists of P_j with d^j/du^j [log^k u / u] = u^(-1-j) P_j(log u)."""
    polys = [[0] * k + [1]]
    for j in range(order):
        p = polys[-1]
        q = [-(1 + j) * c for c in p]
        for i in range(1, len(p)):
            q[i - 1] += i * p[i]
        polys.append(q)
    return polys


def _g_deriv(polys, j, u):
    L = mpmath.log(u)
    return mpmath.power(u, -1 - j) * mpmath.polyval(polys[j][::-1], L)


_stieltjes_memo: dict[tuple[int, int], mpf] = {}
_stieltjes_lock = threading.Lock()


def stieltjes(k: int, ctx: PrecisionContext, cutoff: int | None = None):
    """Generalized Stieltjes constant gamma_k from its defining limit."""
    if k < 0:
        raise InvalidArgument("k must be non-negative")
    key = (k, ctx.dps)
    if cutoff is None and key in _stieltjes_memo:
        return _stieltjes_memo[key]
    with ctx.workprec():
        N = cutoff or max(30, ctx.dps)
        eps = mpf(2) ** (-mp.prec)
        g = lambda u: mpmath.log(u) ** k / u
        total = mpmath.fsum(g(mpf(j)) for j in range(1, N))
        Nf = mpf(N)
        total += -mpmath.log(Nf) ** (k + 1) / (k + 1) + g(Nf) / 2
        jmax = int(3 * N)
        polys = _log_derivative_polys(k, 2 * jmax)
        for j in range(1, jmax):
            t = bernoulli_mpf(2 * j) / mpmath.factorial(2 * j) * _g_deriv(polys, 2 * j - 1, Nf)
            total -= t
            if abs(t) <= eps * max(1, abs(total)):
                break
        else:
            raise NoConvergence("Stieltjes constant tail did not converge")
    if cutoff is None:
        with _stieltjes_lock:
            _stieltjes_memo[key] = total
    return total


def psi_k(k: int, z, ctx: PrecisionContext, cutoff: int | None = None):
    """psi_k(z) = -gamma_k - log^k(z)/z - sum_{n>=1} (log^k(n+z)/(n+z) - log^k(n)/n).

    The series is summed directly up to a cut-off N and completed with an
    Euler-Maclaurin tail; the number of correction terms is chosen adaptively.
    """
    if k < 0:
        raise InvalidArgument("k must be non-negative")
    gk = stieltjes(k, ctx)
    with ctx.workprec():
        z = mpmath.mpmathify(z)
        if mpmath.im(z) == 0 and mpmath.re(z) <= 0:
            raise InvalidArgument("psi_k is cut along (-inf, 0]")
        N = cutoff or (10 * ctx.digits + int(2 * abs(complex(z))))
        eps = mpf(2) ** (-mp.prec)
        g = lambda u: mpmath.log(u) ** k / u
        s = -gk - g(z)
        direct = mpf(0)
        for n in range(1, N):
            direct += g(n + z) - g(mpf(n))
        s -= direct
        Nf = mpf(N)
        wz = Nf + z
        tail = -(mpmath.log(wz) ** (k + 1) - mpmath.log(Nf) ** (k + 1)) / (k + 1)
        tail += (g(wz) - g(Nf)) / 2
        jmax = 200
        polys = _log_derivative_polys(k, 2 * jmax)
        for j in range(1, jmax):
            d = _g_deriv(polys, 2 * j - 1, wz) - _g_deriv(polys, 2 * j - 1, Nf)
            t = bernoulli_mpf(2 * j) / mpmath.factorial(2 * j) * d
            tail -= t
            if abs(t) <= eps * max(1, abs(s)):
                break
        else:
            raise NoConvergence("psi_k tail did not converge")
        return s - tail


def L_chi4(k, ctx: PrecisionContext):
    """L(chi_{-4}, k) = sum over odd n of (-1)^((n-1)/2) n^(-k)."""
    k = mpmath.mpmathify(k)
    if mpmath.re(k) <= 0:
        raise InvalidArgument("k must have positive real part")
    return sum_series(lambda j: (-1) ** j * mpmath.power(2 * j + 1, -k),
                      "alternating", ctx, start=0).value
