"""Catalog entry and verification record types."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Mapping

import mpmath
from mpmath import mpc

from ..errors import DomainError
from ..mpcore import PrecisionContext, count_terms
from .params import Param


def fmt(x, digits: int) -> str:
    """Decimal string for a real or complex value, ``a+bj`` style for complex."""
    x = mpmath.mpmathify(x)
    if isinstance(x, mpc):
        if x.imag == 0:
            x = x.real
        else:
            re = mpmath.nstr(x.real, digits, min_fixed=-4, max_fixed=digits)
            im = mpmath.nstr(abs(x.imag), digits, min_fixed=-4, max_fixed=digits)
            return f"{re}{'-' if x.imag < 0 else '+'}{im}j"
    return mpmath.nstr(x, digits, min_fixed=-4, max_fixed=digits)


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    anchor: str
    constraint: str
    params: tuple[Param, ...]
    lhs: Callable
    rhs: Callable
    grid: tuple[Mapping[str, str], ...]
    check: Callable = lambda p: None
    derive: Callable = lambda p: {}

    def param(self, name: str) -> Param:
        for q in self.params:
            if q.name == name:
                return q
        raise DomainError(f"{self.id} has no parameter {name!r}")

    def resolve(self, overrides: Mapping[str, str] | None, ctx: PrecisionContext):
        """Parse defaults plus overrides, check the domain and add derived values.

        Returns (values, strings) where strings holds the canonical text of
        each user-facing parameter.
        """
        overrides = dict(overrides or {})
        for k in overrides:
            self.param(k)
        strings = {q.name: str(overrides.get(q.name, q.default)).strip() for q in self.params}
        with ctx.workprec():
            values = {q.name: q.parse(strings[q.name]) for q in self.params}
            derived = self.derive(values)
            values.update(derived)
            self.check(values)
            for k, v in derived.items():
                strings[k] = fmt(v, ctx.digits)
        return values, strings

    def schema(self) -> str:
        return " ".join(q.describe() for q in self.params) or "-"


@dataclass(frozen=True)
class VerificationRecord:
    id: str
    params: dict
    lhs: str
    rhs: str
    abs_residual: str
    rel_residual: str
    passed: bool
    terms_used: int
    wall_ms: int
    digits: int
    guard: int
    rel: object = field(default=None, repr=False, compare=False)
    values: tuple = field(default=(), repr=False, compare=False)

    def to_dict(self) -> dict:
        return {"id": self.id, "params": dict(self.params), "lhs": self.lhs, "rhs": self.rhs,
                "abs_residual": self.abs_residual, "rel_residual": self.rel_residual,
                "pass": self.passed, "terms_used": self.terms_used, "wall_ms": self.wall_ms}


def run_check(desc: IdentityDescriptor, overrides, ctx: PrecisionContext) -> VerificationRecord:
    if ctx.guard < 5:
        raise DomainError("identity checks need guard >= 5")
    values, strings = desc.resolve(overrides, ctx)
    t0 = time.perf_counter()
    with count_terms() as cell, ctx.workprec():
        lhs = desc.lhs(values, ctx)
        rhs = desc.rhs(values, ctx)
        diff = abs(lhs - rhs)
        rel = diff / max(abs(lhs), abs(rhs), 1)
        ok = bool(rel < ctx.tolerance())
        out = VerificationRecord(
            id=desc.id, params=strings, lhs=fmt(lhs, ctx.digits), rhs=fmt(rhs, ctx.digits),
            abs_residual=mpmath.nstr(diff, 6), rel_residual=mpmath.nstr(rel, 6), passed=ok,
            terms_used=cell[0], wall_ms=int(round((time.perf_counter() - t0) * 1000)),
            digits=ctx.digits, guard=ctx.guard, rel=rel, values=(lhs, rhs))
    return out
