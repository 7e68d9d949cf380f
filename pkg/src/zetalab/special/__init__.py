"""Special functions and number sequences used by the identity catalog."""
from .functions import a_m_poly, bessel_k0, gen_bessel_K, hyp1f2, hyp1f2_terms, k0_switch_radius, shi_chi
from .numbers import (bernoulli_mpf, bernoulli_number, bernoulli_poly, chi4, divisor_count,
                      divisor_sigma, divisors, euler_number, factorize, harmonic, to_mpf,
                      zeta_even_exact)
from .zeta import L_chi4, digamma, hurwitz_zeta, psi_k, riemann_zeta, stieltjes, zeta_derivative

__all__ = [
    "a_m_poly", "bessel_k0", "gen_bessel_K", "hyp1f2", "hyp1f2_terms", "k0_switch_radius",
    "shi_chi", "bernoulli_mpf", "bernoulli_number", "bernoulli_poly", "chi4", "divisor_count",
    "divisor_sigma", "divisors", "euler_number", "factorize", "harmonic", "to_mpf",
    "zeta_even_exact", "L_chi4", "digamma", "hurwitz_zeta", "psi_k", "riemann_zeta",
    "stieltjes", "zeta_derivative",
]
