"""Precision contexts, certified series summation and quadrature.

Every evaluator in the package receives a :class:`PrecisionContext` and runs
its arithmetic at ``digits + guard`` decimal digits.  Internally values are
plain mpmath numbers; :class:`BigComplex` is the tagged boundary type used
where a caller wants the trusted precision carried along with the value.
"""
from __future__ import annotations

import contextvars
import math
from contextlib import contextmanager
from dataclasses import dataclass, replace
from typing import Callable, Iterator, Sequence

import mpmath
from mpmath import mp, mpc, mpf

from .errors import InvalidArgument, NoConvergence, NonFinite, TermBudgetExceeded

POLICIES = ("geometric-decay", "alternating", "euler-maclaurin-tail", "plateau-stop")


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision and truncation policy for one evaluation."""

    digits: int = 30
    guard: int = 10
    max_terms: int = 10**6
    quad_depth: int = 60

    def __post_init__(self) -> None:
        if self.digits < 10:
            raise InvalidArgument(f"digits must be >= 10, got {self.digits}")
        if self.guard < 0:
            raise InvalidArgument("guard must be non-negative")
        if self.max_terms < 1 or self.quad_depth < 1:
            raise InvalidArgument("max_terms and quad_depth must be positive")

    @property
    def dps(self) -> int:
        return self.digits + self.guard

    @property
    def prec(self) -> int:
        return math.ceil(self.dps * math.log2(10))

    def workprec(self):
        return mp.workprec(self.prec)

    def eps(self) -> mpf:
        return mpf(2) ** (-self.prec)

    def tolerance(self) -> mpf:
        """Pass threshold for relative residuals."""
        return mpf(10) ** (-(self.digits - self.guard))

    def escalate(self, extra_digits: int) -> "PrecisionContext":
        return replace(self, digits=self.digits + max(0, int(extra_digits)))


_TERMS: contextvars.ContextVar = contextvars.ContextVar("zetalab_terms", default=None)


@contextmanager
def count_terms() -> Iterator[list]:
    """Collect the number of series terms summed inside the block."""
    cell = [0]
    token = _TERMS.set(cell)
    try:
        yield cell
    finally:
        _TERMS.reset(token)


def tally(n: int) -> None:
    cell = _TERMS.get()
    if cell is not None:
        cell[0] += int(n)


def _finite(x) -> None:
    if not mpmath.isfinite(x):
        raise NonFinite(f"non-finite value {x}")


@dataclass(frozen=True)
class BigComplex:
    """Complex scalar tagged with the number of decimal digits it is trusted to."""

    re: mpf
    im: mpf
    prec: int

    @classmethod
    def make(cls, value, prec: int) -> "BigComplex":
        with mp.workdps(prec):
            v = mpmath.mpmathify(value)
            if isinstance(v, mpc):
                return cls(+v.real, +v.imag, prec)
            return cls(+v, mpf(0), prec)

    @property
    def value(self) -> mpc:
        return mpc(self.re, self.im)

    def _binary(self, other, op, reflected=False) -> "BigComplex":
        if isinstance(other, BigComplex):
            p, b = min(self.prec, other.prec), other.value
        else:
            p, b = self.prec, mpmath.mpmathify(other)
        with mp.workdps(p):
            r = op(b, self.value) if reflected else op(self.value, b)
        return BigComplex.make(r, p)

    def __add__(self, o): return self._binary(o, lambda a, b: a + b)
    def __radd__(self, o): return self._binary(o, lambda a, b: a + b, True)
    def __sub__(self, o): return self._binary(o, lambda a, b: a - b)
    def __rsub__(self, o): return self._binary(o, lambda a, b: a - b, True)
    def __mul__(self, o): return self._binary(o, lambda a, b: a * b)
    def __rmul__(self, o): return self._binary(o, lambda a, b: a * b, True)
    def __truediv__(self, o): return self._binary(o, lambda a, b: a / b)
    def __rtruediv__(self, o): return self._binary(o, lambda a, b: a / b, True)

    def __pow__(self, o):
        return self._binary(o, mpmath.power)

    def __neg__(self) -> "BigComplex":
        return BigComplex(-self.re, -self.im, self.prec)

    def __abs__(self) -> mpf:
        with mp.workdps(self.prec):
            return abs(self.value)

    def conjugate(self) -> "BigComplex":
        return BigComplex(self.re, -self.im, self.prec)

    def _unary(self, fn, at_zero_fails=False) -> "BigComplex":
        if at_zero_fails and self.re == 0 and self.im == 0:
            raise InvalidArgument("branch point at zero")
        with mp.workdps(self.prec):
            return BigComplex.make(fn(self.value), self.prec)

    def exp(self): return self._unary(mpmath.exp)
    def log(self): return self._unary(mpmath.log, True)
    def sqrt(self): return self._unary(mpmath.sqrt, True)
    def sin(self): return self._unary(mpmath.sin)
    def cos(self): return self._unary(mpmath.cos)
    def sinh(self): return self._unary(mpmath.sinh)
    def cosh(self): return self._unary(mpmath.cosh)

    def __repr__(self) -> str:
        with mp.workdps(self.prec):
            return f"BigComplex({mpmath.nstr(self.value, self.prec)}, prec={self.prec})"


@dataclass(frozen=True)
class SeriesSum:
    """A truncated sum or integral with a heuristic bound on what was omitted."""

    value: object
    tail_bound: mpf
    terms_used: int

    def big(self, prec: int) -> BigComplex:
        return BigComplex.make(self.value, prec)


# -- series ---------------------------------------------------------------

def sum_series(term: Callable, policy: str, ctx: PrecisionContext, *,
               start: int = 1, cutoff: int | None = None) -> SeriesSum:
    """Sum ``term(n)`` for ``n >= start`` under the given tail policy.

    ``euler-maclaurin-tail`` needs ``term`` analytic on the disc of radius
    cutoff/2 about the cut-off, since derivatives come from a contour there.
    """
    if policy not in POLICIES:
        raise InvalidArgument(f"unknown policy {policy!r}")
    with ctx.workprec():
        if policy == "geometric-decay":
            res = _sum_until_small(term, ctx, start, 3)
        elif policy == "plateau-stop":
            res = _sum_until_small(term, ctx, start, 5)
        elif policy == "alternating":
            res = _sum_alternating(term, ctx, start)
        else:
            res = _sum_em(term, ctx, start, cutoff)
    tally(res.terms_used)
    return res


def _sum_until_small(term, ctx, start, run) -> SeriesSum:
    eps = ctx.eps()
    partial = mpf(0)
    small = 0
    prev = None
    n = start
    while True:
        if n - start >= ctx.max_terms:
            raise TermBudgetExceeded(f"no convergence within {ctx.max_terms} terms")
        t = term(n)
        _finite(t)
        partial += t
        a = abs(t)
        small = small + 1 if a <= eps * max(1, abs(partial)) else 0
        if small >= run:
            if prev:
                r = min(mpf(0.9), a / prev)
            else:
                r = mpf(0.9)
            return SeriesSum(partial, a / (1 - r), n - start + 1)
        prev = a
        n += 1


def _sum_alternating(term, ctx, start) -> SeriesSum:
    # Cohen, Rodriguez Villegas and Zagier acceleration; error ~ 5.83^-n
    n = math.ceil(1.31 * ctx.dps) + 4
    if n > ctx.max_terms:
        raise TermBudgetExceeded("alternating acceleration needs more terms")
    a = []
    for k in range(n):
        t = term(start + k)
        _finite(t)
        a.append(t if k % 2 == 0 else -t)
    root = (3 + mpmath.sqrt(8)) ** n
    d = (root + 1 / root) / 2
    b = mpf(-1)
    c = -d
    s = mpf(0)
    for k in range(n):
        c = b - c
        s += c * a[k]
        b = (k + n) * (k - n) * b / ((k + mpf(1) / 2) * (k + 1))
    return SeriesSum(s / d, 2 * abs(a[0]) / root, n)


def _em_order(M: int, dps: int) -> int:
    L = math.log(2 * math.pi * M)
    target = dps * math.log(10) + 5
    P = 1
    while math.lgamma(2 * P + 1) - 2 * P * L > -target:
        P += 1
        if 2 * P > math.e * 2 * math.pi * M:
            raise NoConvergence("Euler-Maclaurin cut-off too small for the target precision")
    return P


def _taylor_circle(f, x0, n: int, radius) -> list:
    """Taylor coefficients of f at x0 by the trapezoid rule on a circle.

    Aliasing error is about (radius/R)^K for the nearest singularity at R.
    """
    K = mp.prec + n + 30
    with mp.extraprec(20):
        vals = [f(x0 + radius * mpmath.expjpi(mpf(2 * j) / K)) for j in range(K)]
        real = all(mpmath.im(v) == 0 for v in vals[:1]) and mpmath.im(f(x0)) == 0
        out = []
        for k in range(n + 1):
            a = mpmath.fsum(v * mpmath.expjpi(mpf(-2 * j * k) / K) for j, v in enumerate(vals)) / K
            a /= radius**k
            out.append(mpmath.re(a) if real else a)
    return [+a for a in out]


def _sum_em(term, ctx, start, cutoff) -> SeriesSum:
    from .special.numbers import bernoulli_mpf

    M = cutoff if cutoff is not None else max(start + 10, 2 * ctx.dps)
    if M - start > ctx.max_terms:
        raise TermBudgetExceeded("Euler-Maclaurin cut-off exceeds the term budget")
    P = _em_order(M, ctx.dps)
    direct = mpf(0)
    for n in range(start, M):
        t = term(n)
        _finite(t)
        direct += t
    Mf = mpf(M)
    # t = M e^s turns algebraic decay into exponential decay; fixed panels in s
    # avoid tanh-sinh misjudging its error on slowly decaying tails
    g = lambda s: term(Mf * mpmath.exp(s)) * Mf * mpmath.exp(s)
    eps = ctx.eps()
    floor = eps * abs(g(mpf(0)))
    smax = mpf(8)
    while smax < 2048 and max(abs(g(smax)), abs(g(3 * smax / 4))) > floor:
        smax *= 2
    pts = [8 * k for k in range(int(smax) // 8 + 1)]
    integral, qerr = mpmath.quad(g, pts, method="gauss-legendre", error=True)
    coeffs = _taylor_circle(term, Mf, 2 * P - 1, (Mf - start) / 2)
    corr = coeffs[0] / 2
    last = abs(corr)
    for j in range(1, P + 1):
        c = bernoulli_mpf(2 * j) / (2 * j) * coeffs[2 * j - 1]
        corr -= c
        last = abs(c)
    value = direct + integral + corr
    _finite(value)
    return SeriesSum(value, last + abs(qerr), M - start + 2 * P)


# -- quadrature -----------------------------------------------------------

def _quad_panel(f, lo, hi):
    v, e = mpmath.quad(f, [lo, hi], error=True)
    _finite(v)
    return v, abs(e)


def _refine(f, lo, hi, v, e, tol, depth, maxdepth):
    if e <= tol:
        return v, e
    if depth >= maxdepth:
        raise NoConvergence(f"quadrature did not converge on [{lo}, {hi}]")
    mid = (lo + hi) / 2
    v1, e1 = _quad_panel(f, lo, mid)
    v2, e2 = _quad_panel(f, mid, hi)
    if e1 + e2 <= tol or abs(v1 + v2 - v) <= tol:
        return v1 + v2, min(e1 + e2, abs(v1 + v2 - v))
    a, ea = _refine(f, lo, mid, v1, e1, tol / 2, depth + 1, maxdepth)
    b, eb = _refine(f, mid, hi, v2, e2, tol / 2, depth + 1, maxdepth)
    return a + b, ea + eb


def _integrate_pieces(pieces: Sequence, ctx: PrecisionContext) -> SeriesSum:
    """Sum of integrals of (f, lo, hi) pieces refined against one common scale."""
    raw = [_quad_panel(f, lo, hi) for f, lo, hi in pieces]
    scale = max([abs(sum(v for v, _ in raw))] + [abs(v) for v, _ in raw] + [ctx.eps()])
    tol = 1000 * ctx.eps() * scale / len(pieces)
    total = mpf(0)
    err = mpf(0)
    for (f, lo, hi), (v, e) in zip(pieces, raw):
        v, e = _refine(f, lo, hi, v, e, tol, 0, ctx.quad_depth)
        total += v
        err += e
    return SeriesSum(total, err, 0)


def _integrate_panels(f, pts: Sequence, ctx: PrecisionContext) -> SeriesSum:
    return _integrate_pieces([(f, lo, hi) for lo, hi in zip(pts[:-1], pts[1:])], ctx)


def truncation_point(f: Callable, a, ctx: PrecisionContext, scale=1):
    """First geometric checkpoint a+1, a+2, a+4, ... where ``f`` is negligible."""
    eps = ctx.eps()
    step = mpf(1)
    for _ in range(200):
        X = a + step
        if abs(f(X)) * max(1, X) < eps * scale and abs(f(X * 1.5)) * X < eps * scale:
            return X
        step *= 2
    raise NoConvergence("integrand does not decay")


def integrate_adaptive(f: Callable, a, b, ctx: PrecisionContext, *,
                       points: Sequence | None = None) -> SeriesSum:
    """Integrate ``f`` over [a, b]; ``b`` may be ``mpmath.inf``.

    For an infinite upper limit the range is cut where sampled values of
    the integrand drop below the working epsilon, and the panels follow the
    geometric checkpoints.
    """
    with ctx.workprec():
        a = mpmath.mpmathify(a)
        if b == mpmath.inf:
            X = truncation_point(f, a, ctx)
            pts = [a]
            step = mpf(1)
            while a + step < X:
                pts.append(a + step)
                step *= 2
            pts.append(X)
        else:
            pts = [a, mpmath.mpmathify(b)]
        if points:
            lo, hi = pts[0], pts[-1]
            pts = sorted(set(pts) | {mpf(p) for p in points if lo < p < hi})
        res = _integrate_panels(f, pts, ctx)
    tally(len(pts))
    return res


def integrate_pv_cot(g: Callable, beta, ctx: PrecisionContext, *,
                     delta_scale=1) -> SeriesSum:
    """Principal value of the integral of g(x) cot(beta x / 2) over (0, inf).

    For real beta each pole x_k = 2 pi k / beta is excised by a symmetric
    window whose two halves are combined into a regular integrand.  For
    non-real beta the poles leave the real axis; the result is the analytic
    continuation in beta of the real-beta principal value, namely the plain
    integral minus pi i sgn(Im x_1) times the sum of residues at the x_k.
    ``g`` must then be analytic near those points.
    """
    with ctx.workprec():
        beta = mpmath.mpmathify(beta)
        if isinstance(beta, mpc) and beta.imag == 0:
            beta = beta.real
        if isinstance(beta, mpc):
            return _cot_continued(g, beta, ctx)
        if beta <= 0:
            raise InvalidArgument("beta must be positive")
        gap = 2 * mp.pi / beta
        delta = gap / 4 * delta_scale
        X = truncation_point(g, mpf(0), ctx)
        K = int(mpmath.floor(X / gap))
        if X - K * gap < delta or (K + 1) * gap - X < delta:
            X += gap / 2
            K = int(mpmath.floor(X / gap))
        f = lambda x: g(x) * mpmath.cot(beta * x / 2)
        pieces = []
        lo = mpf(0)
        for k in range(1, K + 1):
            xk = k * gap
            pieces.append((f, lo, xk - delta))
            pieces.append((lambda t, xk=xk: _window(g, beta, xk, t), mpf(0), delta))
            lo = xk + delta
        pieces.append((f, lo, X))
        res = _integrate_pieces(pieces, ctx)
    tally(2 * K + 1)
    return SeriesSum(res.value, res.tail_bound, 2 * K + 1)


def _window(g, beta, xk, t):
    # g(xk + t) - g(xk - t) cancels for small t; carry -log2(t) extra bits
    extra = min(4 * mp.prec, max(0, -mpmath.mag(t))) + 20
    with mp.workprec(mp.prec + extra):
        v = (g(xk + t) - g(xk - t)) * mpmath.cot(beta * t / 2)
    return +v


def _cot_continued(g, beta, ctx) -> SeriesSum:
    eps = ctx.eps()
    X = truncation_point(g, mpf(0), ctx)
    step = 2 * mp.pi / beta
    f = lambda x: g(x) * mpmath.cot(beta * x / 2)
    breaks = [mpf(0)]
    k = 1
    while (k * step).real < X:
        breaks.append((k * step).real)
        k += 1
    breaks.append(X)
    straight = _integrate_panels(f, breaks, ctx)
    res = mpf(0)
    k = 1
    while True:
        term = g(k * step) * 2 / beta
        res += term
        if abs(term) < eps * max(1, abs(res)) and (k * step).real > X:
            break
        k += 1
        if k > ctx.max_terms:
            raise TermBudgetExceeded("residue sum did not converge")
    sign = 1 if step.imag > 0 else -1
    value = straight.value - sign * mp.pi * 1j * res
    return SeriesSum(value, straight.tail_bound, len(breaks) + k)
