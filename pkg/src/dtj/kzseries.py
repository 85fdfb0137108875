"""Generalized Kontsevich-Zagier series evaluated at roots of unity.

Each series is first built as the exact Laurent polynomial of its sum with
the outer index truncated at N-1 (later terms carry a factor (q)_n, which
vanishes at every N-th root of unity), then reduced modulo Phi_d.

Series tags:

* ``F``      F_{m,p}(q),        m >= 0, p >= 1; at zeta_N equals J_N(K(-m,p))
* ``Ffrak``  Ffrak_{m,p}(q),    m, p >= 1;     at zeta_N equals J_N(K(-m,-p))
* ``U``      U_{m,p}(-1; q),    m, p >= 1;     at zeta_N equals J_N(K(m,-p))
* ``Ufrak``  Ufrak_{m,p}(-1; q), m, p >= 1;    at zeta_N equals J_N(K(m,p))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import cjp
from .cjp import HypothesisError, _QuadraticSum, _thm1_form, _thm2_form
from .qalgebra import CyclotomicElt, LaurentPoly, binom2, divisors, qfactorial, reduce_mod_phi

SERIES = ("F", "Ffrak", "U", "Ufrak")


def _check(tag: str, m: int, p: int, N: int) -> None:
    lo = 0 if tag == "F" else 1
    if m < lo or p < 1:
        raise HypothesisError(f"series {tag} requires m >= {lo} and p >= 1")
    if N < 1:
        raise HypothesisError("N must be >= 1")


@lru_cache(maxsize=None)
def series_poly(tag: str, m: int, p: int, N: int) -> LaurentPoly:
    """The truncated sum (outer index <= N-1) as a Laurent polynomial."""
    _check(tag, m, p, N)
    if tag == "F":
        return _thm2_form(m, p, N, at_root=True).evaluate(N - 1, 1)
    if tag == "Ffrak":
        return _thm1_form(m, p, N, at_root=True).evaluate(N - 1, 1)
    total = LaurentPoly()
    for n in range(N):
        # (-xq)_n (-q/x)_n at x = -1 is (q)_n^2; one (q)_n cancels 1/(q)_{n_1}
        base = qfactorial(n) * cjp.d_cleared(m, n)
        if tag == "U":
            total = total + base * cjp.c_neg_chain(p, n) * LaurentPoly.monomial(-binom2(n + 1), (-1) ** n)
        elif tag == "Ufrak":
            total = total + (base * cjp.c_poly(p, n)).shift(n)
        else:
            raise ValueError(f"unknown series {tag!r}")
    return total.shift(-p if tag == "U" else p)


def F_displayed_poly(m: int, p: int, N: int) -> LaurentPoly:
    """F_{m,p} summed exactly as its defining display reads, with each special
    residue class counted once and the special product stopping below the top index.

    Agrees with ``series_poly("F", ...)`` for m >= 1; at m = 0 it differs.
    """
    _check("F", m, p, N)
    w = 2 * m + 1
    K = w * p
    s = _QuadraticSum(K)
    s.add_const(p)
    s.sign[K] += 1
    s.add_tri(K, -1)
    for i in range(1, K):
        if i % w == 0:
            continue
        for j in range(i + 1, K + 1):
            if j % w != (m + 1) % w:
                s.add_pair(i, j, cjp.delta_coeff(i, j, m))
    for i in range(1, K):
        if i % w in ((m + 1) % w, 0):
            s.sign[i] += 1
            s.add_tri(i)
        s.add_linear(i, cjp.beta_coeff(i, m))
    return s.evaluate(N - 1, 1)


@dataclass(frozen=True)
class RootOfUnitySeriesValue:
    series: str
    m: int
    p: int
    N: int
    value: CyclotomicElt

    @property
    def level(self) -> int:
        return self.value.level

    def to_json(self) -> dict:
        return {"series": self.series, "m": self.m, "p": self.p, "N": self.N, **self.value.to_json()}


def _level(N: int, divisor: int | None) -> int:
    d = N if divisor is None else divisor
    if d < 1 or N % d:
        raise HypothesisError(f"divisor {d} does not divide N={N}")
    return d


def series_at_root(tag: str, m: int, p: int, N: int, divisor: int | None = None) -> CyclotomicElt:
    """Value at a primitive d-th root of unity (d = N unless ``divisor`` is given)."""
    return reduce_mod_phi(series_poly(tag, m, p, N), _level(N, divisor))


def F_at_root(m: int, p: int, N: int, divisor: int | None = None) -> CyclotomicElt:
    return series_at_root("F", m, p, N, divisor)


def Ffrak_at_root(m: int, p: int, N: int, divisor: int | None = None) -> CyclotomicElt:
    return series_at_root("Ffrak", m, p, N, divisor)


def U_at_root(m: int, p: int, N: int, divisor: int | None = None) -> CyclotomicElt:
    return series_at_root("U", m, p, N, divisor)


def Ufrak_at_root(m: int, p: int, N: int, divisor: int | None = None) -> CyclotomicElt:
    return series_at_root("Ufrak", m, p, N, divisor)


def jones_for_series(tag: str, m: int, p: int, N: int) -> LaurentPoly:
    """The colored Jones polynomial each series matches at N-th roots of unity."""
    if tag == "F":
        return cjp.jones_thm2(m, p, N)
    if tag == "Ffrak":
        return cjp.jones_thm1(m, p, N)
    if tag == "U":
        return cjp.jones_thm3_neg(m, p, N)
    if tag == "Ufrak":
        return cjp.jones_thm3_pos(m, p, N)
    raise ValueError(f"unknown series {tag!r}")


def check_relation(tag: str, m: int, p: int, N: int, divisor: int | None = None) -> bool:
    """Series value equals the reduced colored Jones polynomial, at level d (all d | N if None)."""
    levels = divisors(N) if divisor is None else [_level(N, divisor)]
    poly, jones = series_poly(tag, m, p, N), jones_for_series(tag, m, p, N)
    return all(reduce_mod_phi(poly, d) == reduce_mod_phi(jones, d) for d in levels)


def check_ufrak_text_variant(m: int, p: int, N: int) -> bool:
    """Ufrak_{m,p}(-1; zeta_N) == J_N(K(-m,p); zeta_N), the alternative reading of the Ufrak relation."""
    return reduce_mod_phi(series_poly("Ufrak", m, p, N), N) == reduce_mod_phi(cjp.jones_thm2(m, p, N), N)


def _duality(lhs: str, rhs: str, m: int, p: int, N: int, divisor: int | None) -> bool:
    levels = divisors(N) if divisor is None else [_level(N, divisor)]
    left, right = series_poly(lhs, m, p, N), series_poly(rhs, m + 1, p, N)
    return all(reduce_mod_phi(left, d) == reduce_mod_phi(right, d).galois_invert() for d in levels)


def check_duality_1(m: int, p: int, N: int, divisor: int | None = None) -> bool:
    """F_{m,p}(zeta) == U_{m+1,p}(-1; zeta^-1)."""
    _check("F", m, p, N)
    return _duality("F", "U", m, p, N, divisor)


def check_duality_2(m: int, p: int, N: int, divisor: int | None = None) -> bool:
    """Ffrak_{m,p}(zeta) == Ufrak_{m+1,p}(-1; zeta^-1)."""
    _check("Ffrak", m, p, N)
    return _duality("Ffrak", "Ufrak", m, p, N, divisor)


def kz_classical_at_root(N: int, divisor: int | None = None) -> CyclotomicElt:
    """zeta * sum_{n<N} (zeta; zeta)_n, i.e. q times the Kontsevich-Zagier series."""
    total = LaurentPoly()
    for n in range(N):
        total = total + qfactorial(n)
    return reduce_mod_phi(total.shift(1), _level(N, divisor))


def Ufrak_series_truncated(m: int, p: int, order: int) -> LaurentPoly:
    """Ufrak_{m,p}(-1; q) as a power series, keeping exponents <= order."""
    _check("Ufrak", m, p, 1)
    total = LaurentPoly()
    # the n-th term is divisible by q^(p+n)
    for n in range(max(order - p + 1, 0)):
        total = total + (qfactorial(n) * cjp.d_cleared(m, n) * cjp.c_poly(p, n)).shift(n + p)
    return LaurentPoly({e: c for e, c in total.terms.items() if e <= order})
