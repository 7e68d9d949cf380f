"""The identity catalog: one descriptor per checked transformation."""
from __future__ import annotations

import fnmatch
from functools import lru_cache

from ..errors import DomainError
from ..mpcore import PrecisionContext
from . import analogues as an
from . import classical as cl
from . import generalized as ge
from . import oddn as od
from . import principal as pv
from .base import IdentityDescriptor, VerificationRecord, run_check
from .params import Param


def _g(*rows: dict) -> tuple[dict, ...]:
    return tuple(rows)


def _build() -> tuple[IdentityDescriptor, ...]:
    M = Param("m", "int", "1")
    ALPHA = Param("alpha", "complex", "pi")
    return (
        IdentityDescriptor(
            "ram_odd_zeta", "odd zeta values, modular form of the Lambert series",
            "m nonzero integer, Re(alpha) > 0, beta = pi^2/alpha",
            (M, ALPHA), cl.ram_lhs, cl.ram_rhs,
            _g({"m": "1", "alpha": "pi"}, {"m": "2", "alpha": "1.3"}, {"m": "3", "alpha": "0.7+0.4j"},
               {"m": "-1", "alpha": "2"}, {"m": "-2", "alpha": "1.3"}, {"m": "5", "alpha": "2.1"}),
            cl.check_ram, cl.modular_beta),
        IdentityDescriptor(
            "lerch", "self-dual point alpha = beta = pi", "m odd positive",
            (M,), cl.lerch_lhs, cl.lerch_rhs,
            _g({"m": "1"}, {"m": "3"}, {"m": "5"}, {"m": "7"}),
            cl.check_lerch),
        IdentityDescriptor(
            "eisenstein", "weight 2l Eisenstein transformation",
            "l > 1, Re(alpha) > 0, beta = pi^2/alpha",
            (Param("l", "int", "2"), ALPHA), cl.eisenstein_lhs, cl.eisenstein_rhs,
            _g({"l": "2", "alpha": "1.3"}, {"l": "3", "alpha": "0.8"}, {"l": "4", "alpha": "1.1+0.5j"},
               {"l": "6", "alpha": "2"}),
            cl.check_eisenstein, cl.modular_beta),
        IdentityDescriptor(
            "quasi_e2", "weight 2 quasi-modular transformation", "alpha > 0, beta = pi^2/alpha",
            (Param("alpha", "real", "1.3"),), cl.quasi_e2_lhs, cl.quasi_e2_rhs,
            _g({"alpha": "1.3"}, {"alpha": "pi"}, {"alpha": "0.6"}),
            cl.check_positive_alpha, cl.modular_beta),
        IdentityDescriptor(
            "eta_equiv", "logarithm of the eta transformation", "alpha > 0, beta = pi^2/alpha",
            (Param("alpha", "real", "pi"),), cl.eta_lhs, cl.eta_rhs,
            _g({"alpha": "pi"}, {"alpha": "1.3"}, {"alpha": "0.5"}),
            cl.check_positive_alpha, cl.modular_beta),
        IdentityDescriptor(
            "befac", "divisor Lambert series via 1F2 brackets", "Re(s) > -1, s not an even integer",
            (Param("s", "complex", "0.5"), Param("y", "complex", "1")), ge.befac_lhs, ge.befac_rhs,
            _g({"s": "0.5", "y": "1"}, {"s": "-0.5", "y": "2"}, {"s": "2.5", "y": "1.5"},
               {"s": "1.2+0.7j", "y": "1"}, {"s": "0.5", "y": "1+0.5j"}),
            ge.check_befac),
        IdentityDescriptor(
            "extended", "divisor Lambert series via generalized Bessel brackets",
            "m >= 0, Re(s) > -2m-3, s not an even integer",
            (Param("m", "int", "0"), Param("s", "complex", "0.5"), Param("y", "complex", "1")),
            ge.befac_lhs, ge.extended_rhs,
            _g({"m": "0", "s": "0.5", "y": "1"}, {"m": "1", "s": "-2.5", "y": "1"},
               {"m": "2", "s": "-4.3+0.5j", "y": "1.5"}, {"m": "1", "s": "-1.5", "y": "2"},
               {"m": "0", "s": "2.5", "y": "1"}),
            ge.check_extended),
        IdentityDescriptor(
            "shi_chi_even", "even s through hyperbolic sine and cosine integrals",
            "m >= 1, Re(y) > 0",
            (M, Param("y", "complex", "1")), ge.shi_chi_lhs, ge.shi_chi_rhs,
            _g({"m": "1", "y": "1"}, {"m": "2", "y": "1.5"}, {"m": "1", "y": "2+0.5j"}, {"m": "3", "y": "0.8"}),
            ge.check_shi_chi),
        IdentityDescriptor(
            "companion", "digamma companion of the odd zeta formula",
            "m >= 1, Re(alpha) > 0, Re(beta) > 0, beta = pi^2/alpha",
            (M, ALPHA), ge.companion_lhs, ge.companion_rhs,
            _g({"m": "1", "alpha": "pi"}, {"m": "2", "alpha": "1.3"}, {"m": "1", "alpha": "2+0.5j"},
               {"m": "3", "alpha": "2.5"}),
            ge.check_companion, cl.modular_beta),
        IdentityDescriptor(
            "log_lambert", "logarithmic Lambert series", "Re(y) > 0",
            (Param("y", "complex", "1"),), ge.log_lambert_lhs, ge.log_lambert_rhs,
            _g({"y": "1"}, {"y": "2.5"}, {"y": "0.7+0.3j"}),
            ge.check_log_lambert),
        IdentityDescriptor(
            "pv_transform", "cotangent principal value transformation",
            "Re(s) > 2, alpha > 0, beta = 4 pi^2/alpha",
            (Param("s", "complex", "3.5"), Param("alpha", "real", "2*pi")), pv.pv_lhs, pv.pv_rhs,
            _g({"s": "3.5", "alpha": "2*pi"}, {"s": "5.3", "alpha": "3"}, {"s": "3.5+1j", "alpha": "5"}),
            pv.check_pv, pv.pv_beta),
        IdentityDescriptor(
            "pv_transform_a", "twisted cotangent principal value transformation",
            "Re(s) > 2, Re(alpha) > 0, 0 <= a < 1, beta = 4 pi^2/alpha",
            (Param("s", "complex", "3.5"), Param("alpha", "complex", "2*pi"), Param("a", "rational", "1/3")),
            pv.pv_a_lhs, pv.pv_a_rhs,
            _g({"s": "3.5", "alpha": "2*pi", "a": "1/3"}, {"s": "3", "alpha": "5", "a": "1/4"},
               {"s": "4.5", "alpha": "5+2j", "a": "1/3"}, {"s": "3.5", "alpha": "2*pi", "a": "0"}),
            pv.check_pv_a, pv.pv_beta),
        IdentityDescriptor(
            "odd_N", "odd N generalization", "N odd positive, m nonzero, alpha beta^N = pi^(N+1)",
            (Param("N", "int", "3"), M, Param("alpha", "complex", "0.5")), od.odd_lhs, od.odd_rhs,
            _g({"N": "1", "m": "1", "alpha": "1.3"}, {"N": "3", "m": "1", "alpha": "0.5"},
               {"N": "3", "m": "2", "alpha": "0.5"}, {"N": "5", "m": "1", "alpha": "0.3"},
               {"N": "3", "m": "-1", "alpha": "0.5"}, {"N": "3", "m": "-2", "alpha": "0.4"}),
            od.check_odd, od.odd_beta),
        IdentityDescriptor(
            "odd_N_a", "odd N generalization with a shift",
            "N odd positive, m >= 1, 0 < a <= 1, alpha > 0, alpha beta^N = pi^(N+1)",
            (Param("N", "int", "3"), M, Param("alpha", "real", "0.5"), Param("a", "rational", "1/3")),
            od.odd_a_lhs, od.odd_a_rhs,
            _g({"N": "1", "m": "1", "alpha": "1.3", "a": "1"}, {"N": "1", "m": "1", "alpha": "1.3", "a": "1/3"},
               {"N": "3", "m": "1", "alpha": "0.5", "a": "1/3"}, {"N": "3", "m": "2", "alpha": "0.5", "a": "1/4"},
               {"N": "1", "m": "2", "alpha": "0.7", "a": "2/5"}),
            od.check_odd_a, od.odd_beta),
        IdentityDescriptor(
            "entry21iii", "chi_-4 analogue with Euler numbers",
            "m >= 1, Re(alpha) > 0, Re(beta) > 0, beta = pi^2/alpha",
            (M, ALPHA), od.entry21_lhs, od.entry21_rhs,
            _g({"m": "1", "alpha": "pi"}, {"m": "2", "alpha": "1.3"}, {"m": "3", "alpha": "2.2"},
               {"m": "1", "alpha": "1.5+0.6j"}),
            od.check_entry21, cl.modular_beta),
        IdentityDescriptor(
            "nonholo", "non-holomorphic analogue", "k even, Im(z) > 0",
            (Param("k", "int", "-2"), Param("z", "complex", "0.3+1.1j")), an.nonholo_lhs, an.nonholo_rhs,
            _g({"k": "-2", "z": "0.3+1.1j"}, {"k": "0", "z": "0.3+1.1j"}, {"k": "-4", "z": "-0.2+0.9j"},
               {"k": "2", "z": "0.5+0.8j"}, {"k": "-6", "z": "1.3j"}),
            an.check_nonholo),
        IdentityDescriptor(
            "herglotz_ram", "higher Herglotz analogue of the odd zeta formula",
            "m >= 1, Re(alpha) > 0, beta = pi^2/alpha",
            (M, ALPHA), an.herglotz_lhs, an.herglotz_rhs,
            _g({"m": "1", "alpha": "1.3"}, {"m": "2", "alpha": "1.3"}, {"m": "3", "alpha": "0.8+0.3j"},
               {"m": "2", "alpha": "pi"}),
            an.check_herglotz, cl.modular_beta),
        IdentityDescriptor(
            "herglotz_m1", "Herglotz modular relation at m = 1",
            "Re(alpha) > 0, beta = pi^2/alpha, variant scales the argument by pi or 2 pi",
            (Param("alpha", "complex", "1.3"), Param("variant", "choice", "pi", ("pi", "2pi"))),
            an.herglotz_lhs, an.herglotz_rhs,
            _g({"alpha": "1.3", "variant": "pi"}, {"alpha": "2.4+0.7j", "variant": "pi"}),
            lambda p: an.check_herglotz({"m": 1, **p}), an.herglotz_m1_derive),
        IdentityDescriptor(
            "zeta_squared", "formula for the squared odd zeta value",
            "m nonzero, alpha > 0, beta = pi^2/alpha",
            (M, Param("alpha", "real", "pi")), an.zeta_squared_lhs, an.zeta_squared_rhs,
            _g({"m": "1", "alpha": "pi"}, {"m": "1", "alpha": "2.5"}, {"m": "2", "alpha": "2.5"},
               {"m": "-1", "alpha": "2.5"}, {"m": "-2", "alpha": "pi"}),
            an.check_zeta_squared, cl.modular_beta),
        IdentityDescriptor(
            "sech_chi4", "sech series closed value", "no parameters",
            (), an.sech_chi4_lhs, an.sech_chi4_rhs, _g({})),
        IdentityDescriptor(
            "multidim_sech", "lattice sech sum", "r in {1, 2, 3}",
            (Param("r", "int", "1"),), an.multidim_lhs, an.multidim_rhs,
            _g({"r": "1"}, {"r": "2"}, {"r": "3"}),
            an.check_multidim),
        IdentityDescriptor(
            "cot_reform", "hyperbolic cotangent reformulation", "m >= 2, alpha > 0",
            (Param("m", "int", "2"), Param("alpha", "real", "1.3")), an.cot_lhs, an.cot_rhs,
            _g({"m": "2", "alpha": "1.3"}, {"m": "3", "alpha": "0.7"}, {"m": "4", "alpha": "2"},
               {"m": "5", "alpha": "1"}),
            an.check_cot),
        IdentityDescriptor(
            "triangle", "three-term relation for the cotangent polynomial", "m >= 2",
            (Param("m", "int", "2"), Param("alpha", "complex", "0.7+0.2j")), an.triangle_lhs, an.triangle_rhs,
            _g({"m": "2", "alpha": "0.7+0.2j"}, {"m": "3", "alpha": "1.5"}, {"m": "6", "alpha": "-0.4+1.1j"},
               {"m": "9", "alpha": "2.3"}),
            an.check_triangle),
    )


@lru_cache(maxsize=1)
def _entries() -> tuple[IdentityDescriptor, ...]:
    return _build()


def catalog() -> list[IdentityDescriptor]:
    return list(_entries())


def lookup(ident: str) -> IdentityDescriptor:
    for d in _entries():
        if d.id == ident:
            return d
    raise DomainError(f"unknown identity {ident!r}")


def select(pattern: str | None) -> list[IdentityDescriptor]:
    """Entries whose id matches a shell-style pattern, in catalog order."""
    if not pattern:
        return catalog()
    return [d for d in _entries() if fnmatch.fnmatchcase(d.id, pattern)]


def evaluate_identity(ident: str, params: dict | None, ctx: PrecisionContext) -> VerificationRecord:
    return run_check(lookup(ident), params, ctx)
