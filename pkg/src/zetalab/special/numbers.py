"""Exact number sequences: Bernoulli and Euler numbers, divisor sums, chi_{-4}."""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import mpmath
from mpmath import mp, mpf

from ..errors import FactorizationBudgetExceeded, InvalidArgument

_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1)]
_euler: list[int] = [1]
_bern_mpf: dict[tuple[int, int], mpf] = {}

FACTOR_LIMIT = 10**9


def bernoulli_number(m: int) -> Fraction:
    """B_m with B_1 = -1/2, from sum_{j<=m} C(m+1, j) B_j = 0."""
    if m < 0:
        raise InvalidArgument("Bernoulli index must be non-negative")
    if m >= 3 and m % 2:
        return Fraction(0)
    if m < len(_bern):
        return _bern[m]
    with _lock:
        for n in range(len(_bern), m + 1):
            if n >= 3 and n % 2:
                _bern.append(Fraction(0))
                continue
            acc = sum((comb(n + 1, j) * _bern[j] for j in range(n)), Fraction(0))
            _bern.append(-acc / (n + 1))
    return _bern[m]


def bernoulli_mpf(m: int) -> mpf:
    """B_m rounded at the current working precision (cached per precision)."""
    key = (m, mp.prec)
    v = _bern_mpf.get(key)
    if v is None:
        b = bernoulli_number(m)
        v = mpf(b.numerator) / b.denominator
        _bern_mpf[key] = v
    return v


def bernoulli_poly(n: int, a):
    """B_n(a) = sum_k C(n, k) B_k a^(n-k); exact when ``a`` is a Fraction or int."""
    if n < 0:
        raise InvalidArgument("degree must be non-negative")
    if isinstance(a, (int, Fraction)):
        return sum((comb(n, k) * bernoulli_number(k) * Fraction(a) ** (n - k)
                    for k in range(n + 1)), Fraction(0))
    a = mpmath.mpmathify(a)
    return mpmath.fsum(comb(n, k) * to_mpf(bernoulli_number(k)) * a ** (n - k)
                       for k in range(n + 1))


def euler_number(n: int) -> int:
    """E_n from sech(x) = sum E_n x^n / n!; zero for odd n."""
    if n < 0:
        raise InvalidArgument("index must be non-negative")
    if n % 2:
        return 0
    k = n // 2
    if k < len(_euler):
        return _euler[k]
    with _lock:
        for j in range(len(_euler), k + 1):
            _euler.append(-sum(comb(2 * j, 2 * i) * _euler[i] for i in range(j)))
    return _euler[k]


def zeta_even_exact(m: int) -> Fraction:
    """q with zeta(2m) = q * pi^(2m)."""
    if m < 1:
        raise InvalidArgument("m must be positive")
    return (-1) ** (m + 1) * Fraction(2) ** (2 * m) * bernoulli_number(2 * m) / (2 * factorial(2 * m))


def to_mpf(q) -> mpf:
    q = Fraction(q)
    return mpf(q.numerator) / q.denominator


@lru_cache(maxsize=200000)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    if n < 1:
        raise InvalidArgument("n must be positive")
    if n > FACTOR_LIMIT:
        raise FactorizationBudgetExceeded(f"{n} exceeds the trial-division budget")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=200000)
def divisors(n: int) -> tuple[int, ...]:
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return tuple(sorted(ds))


def divisor_sigma(s, n: int):
    """sigma_s(n) = sum of d^s over the divisors of n."""
    s = mpmath.mpmathify(s)
    return mpmath.fsum(mpmath.power(d, s) for d in divisors(n))


def divisor_count(n: int) -> int:
    c = 1
    for _, e in factorize(n):
        c *= e + 1
    return c


def chi4(n: int) -> int:
    """The non-principal character modulo 4."""
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 1 else -1


def harmonic(k: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, k + 1)), Fraction(0))
