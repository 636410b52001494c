"""Exact continued fractions for the prime density, with the double-precision
and sieve machinery to compare them against prime counts."""
from .contfrac import (JFraction, RationalFunction, SFraction, approximant, contract_s_to_j,
                       make_named_fraction, moments_to_sfraction, pade_from_moments,
                       prime_w_closed_form, taylor_at_infinity)
from .errors import DomainError, PrecisionLoss, PrimeCFError
from .primes import PrimeTable, SieveConfig, mertens, pi_gaussian, rh_partial_sum, sieve
from .series import Series, compose, gen_sequence, recip, revert, secondary_moments
from .special import EULER_GAMMA, digamma, e1, f_n_eval, harmonic_real, li, li_scaled, p_eval

__version__ = "0.1.0"

__all__ = [
    "EULER_GAMMA", "DomainError", "JFraction", "PrecisionLoss", "PrimeCFError", "PrimeTable",
    "RationalFunction", "SFraction", "Series", "SieveConfig", "approximant", "compose",
    "contract_s_to_j", "digamma", "e1", "f_n_eval", "gen_sequence", "harmonic_real", "li",
    "li_scaled", "make_named_fraction", "mertens", "moments_to_sfraction", "p_eval",
    "pade_from_moments", "pi_gaussian", "prime_w_closed_form", "recip", "revert",
    "rh_partial_sum", "secondary_moments", "sieve", "taylor_at_infinity",
]
