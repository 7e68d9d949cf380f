"""Identity catalog, verification records and the Ramanujan polynomial tools."""
from .base import IdentityDescriptor, VerificationRecord
from .catalog import catalog, evaluate_identity, lookup, select
from .generalized import asymptotic_check, asymptotic_expansion
from .params import Param
from .rpoly import (RamanujanPolynomial, UnimodularZero, kappa_zeta, osullivan_zeta_repr,
                    ramanujan_poly, rp_unimodular_zeros, zeta_via_kappa)

__all__ = [
    "IdentityDescriptor", "VerificationRecord", "Param", "catalog", "evaluate_identity", "lookup",
    "select", "asymptotic_check", "asymptotic_expansion", "RamanujanPolynomial", "UnimodularZero",
    "kappa_zeta", "osullivan_zeta_repr", "ramanujan_poly", "rp_unimodular_zeros", "zeta_via_kappa",
]
