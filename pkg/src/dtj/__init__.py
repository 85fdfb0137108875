"""Exact colored Jones polynomials of double twist knots.

Evaluators live in :mod:`dtj.cjp` (the double twist formulas and the
Walsh-style oracle) and :mod:`dtj.takata` (the 2-bridge oracle). Root of unity
series are in :mod:`dtj.kzseries`, Bailey pairs in :mod:`dtj.bailey`.
"""

from .cjp import (
    HypothesisError,
    habiro_left_torus_check,
    jones_thm1,
    jones_thm2,
    jones_thm3_neg,
    jones_thm3_pos,
    jones_torus,
    walsh_colored_jones,
)
from .knots import KnotSpec, TwoBridge, mirror, two_bridge_params
from .qalgebra import CyclotomicElt, LaurentPoly, RationalFn, lp_invert_q
from .takata import takata_colored_jones

__version__ = "0.1.0"

__all__ = [
    "CyclotomicElt",
    "HypothesisError",
    "KnotSpec",
    "LaurentPoly",
    "RationalFn",
    "TwoBridge",
    "habiro_left_torus_check",
    "jones_thm1",
    "jones_thm2",
    "jones_thm3_neg",
    "jones_thm3_pos",
    "jones_torus",
    "lp_invert_q",
    "mirror",
    "takata_colored_jones",
    "two_bridge_params",
    "walsh_colored_jones",
]
