"""Exact Laurent-polynomial, rational-function and cyclotomic arithmetic."""

from .cyclotomic import (
    CyclotomicElt,
    cyclotomic_poly,
    divisors,
    euler_phi,
    galois_invert,
    reduce_mod_phi,
)
from .laurent import ONE, ZERO, LaurentPoly, lp_invert_q, lp_mul, q
from .qcomb import binom2, qbinomial, qfactorial, qmultinomial, qpochhammer
from .rational import RationalFn

__all__ = [
    "CyclotomicElt",
    "LaurentPoly",
    "ONE",
    "RationalFn",
    "ZERO",
    "binom2",
    "cyclotomic_poly",
    "divisors",
    "euler_phi",
    "galois_invert",
    "lp_invert_q",
    "lp_mul",
    "q",
    "qbinomial",
    "qfactorial",
    "qmultinomial",
    "qpochhammer",
    "reduce_mod_phi",
]
