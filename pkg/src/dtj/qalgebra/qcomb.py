"""q-Pochhammer symbols, Gaussian binomials and q-multinomials."""

from __future__ import annotations

from functools import lru_cache

from .laurent import LaurentPoly, ONE


@lru_cache(maxsize=None)
def qpochhammer(c: int, n: int) -> LaurentPoly:
    """(q^c; q)_n = prod_{k<n} (1 - q^(c+k)); the empty product is 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = ONE
    for k in range(n):
        result = result * LaurentPoly([(0, 1), (c + k, -1)])
    return result


def qfactorial(n: int) -> LaurentPoly:
    """(q; q)_n."""
    return qpochhammer(1, n)


# lru_cache serialises nothing, but a racing miss only recomputes the same
# immutable value, so concurrent readers never see a partial entry.
@lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial [n, k]_q via q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if k < 0 or k > n:
        return LaurentPoly()
    if k == 0 or k == n:
        return ONE
    if k > n - k:
        return qbinomial(n, n - k)
    return qbinomial(n - 1, k - 1) + qbinomial(n - 1, k).shift(k)


@lru_cache(maxsize=None)
def _qmultinomial_sorted(parts: tuple[int, ...]) -> LaurentPoly:
    result = ONE
    total = 0
    for part in parts:
        total += part
        if part:
            result = result * qbinomial(total, part)
    return result


def qmultinomial(n: int, parts) -> LaurentPoly:
    """(q)_n / prod (q)_part, a polynomial when the parts sum to n."""
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise ValueError("parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    # symmetric in the parts, so cache on the sorted nonzero multiset
    return _qmultinomial_sorted(tuple(sorted(p for p in parts if p)))


def binom2(n: int) -> int:
    """n(n-1)/2, the exponent written C(n, 2)."""
    return n * (n - 1) // 2


def warm(n_max: int) -> None:
    """Pre-fill the q-binomial table up to ``n_max``."""
    for n in range(n_max + 1):
        for k in range(n + 1):
            qbinomial(n, k)
