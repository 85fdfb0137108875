"""Bailey pairs relative to a = q^c and the rho -> infinity Bailey chain."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .qalgebra import ONE, LaurentPoly, RationalFn, binom2, qbinomial, qfactorial, qpochhammer
from .takata import multi_indices

Sequence_ = Callable[[int], RationalFn]


@dataclass(frozen=True)
class BaileyPair:
    """Sequences (alpha_n, beta_n) relative to a = q^a_exp."""

    alpha: Sequence_
    beta: Sequence_
    tag: str
    a_exp: int = 1
    history: tuple[str, ...] = field(default=())


def _memo(fn: Sequence_) -> Sequence_:
    return lru_cache(maxsize=None)(fn)


def _one_minus(e: int) -> LaurentPoly:
    return LaurentPoly([(0, 1), (e, -1)])


def verify_bailey_pair(bp: BaileyPair, n_max: int) -> bool:
    """Check beta_n (q)_n (aq)_{2n} = sum_k alpha_k (q)_n/(q)_{n-k} (aq)_{2n}/(aq)_{n+k}
    for 0 <= n <= n_max; both ratios are polynomial tails, so no division is needed."""
    c = bp.a_exp + 1
    for n in range(n_max + 1):
        lhs = bp.beta(n) * (qfactorial(n) * qpochhammer(c, 2 * n))
        rhs = RationalFn(0)
        for k in range(n + 1):
            rhs = rhs + bp.alpha(k) * (qpochhammer(n - k + 1, k) * qpochhammer(c + n + k, n - k))
        if lhs != rhs:
            return False
    return True


def slater_pair() -> BaileyPair:
    """alpha_n = (-1)^n q^(n(3n+1)/2) (1-q^(2n+1))/(1-q), beta_n = 1/(q)_n."""
    return BaileyPair(
        alpha=_memo(lambda n: RationalFn(
            LaurentPoly.monomial(n * (3 * n + 1) // 2, (-1) ** n) * _one_minus(2 * n + 1), _one_minus(1))),
        beta=_memo(lambda n: RationalFn(ONE, qfactorial(n))),
        tag="slater",
    )


def walsh_pair() -> BaileyPair:
    """alpha_n = q^(n^2) (1-q^(2n+1))/(1-q), beta_n = 1/(q)_n^2."""
    return BaileyPair(
        alpha=_memo(lambda n: RationalFn(LaurentPoly.monomial(n * n) * _one_minus(2 * n + 1), _one_minus(1))),
        beta=_memo(lambda n: RationalFn(ONE, qfactorial(n) ** 2)),
        tag="walsh",
    )


def base_pair(name: str) -> BaileyPair:
    pairs = {"slater": slater_pair, "walsh": walsh_pair}
    if name not in pairs:
        raise ValueError(f"unknown pair {name!r}; expected one of {sorted(pairs)}")
    return pairs[name]()


def bailey_step_limit(bp: BaileyPair) -> BaileyPair:
    """One Bailey-lemma step with rho_1, rho_2 -> infinity:

    alpha'_n = a^n q^(n^2) alpha_n,  beta'_n = sum_k a^k q^(k^2) beta_k / (q)_{n-k}.
    """
    c = bp.a_exp
    alpha, beta = bp.alpha, bp.beta

    def new_beta(n: int) -> RationalFn:
        total = RationalFn(0)
        for k in range(n + 1):
            total = total + beta(k) * RationalFn(LaurentPoly.monomial(c * k + k * k), qfactorial(n - k))
        return total

    return BaileyPair(
        alpha=_memo(lambda n: alpha(n) * LaurentPoly.monomial(c * n + n * n)),
        beta=_memo(new_beta),
        tag=bp.tag,
        a_exp=c,
        history=bp.history + ("limit",),
    )


def bailey_step(bp: BaileyPair, rho1_exp: int, rho2_exp: int) -> BaileyPair:
    """One Bailey-lemma step with finite rho_1 = q^rho1_exp, rho_2 = q^rho2_exp."""
    a1 = bp.a_exp + 1  # aq = q^a1
    r1, r2 = rho1_exp, rho2_exp
    s = a1 - r1 - r2  # aq/(rho1 rho2) = q^s
    alpha, beta = bp.alpha, bp.beta

    def denom(n: int) -> LaurentPoly:
        d = qpochhammer(a1 - r1, n) * qpochhammer(a1 - r2, n)
        if d.is_zero():
            raise ZeroDivisionError(f"(aq/rho)_n vanishes for these rho at n={n}")
        return d

    def new_alpha(n: int) -> RationalFn:
        num = qpochhammer(r1, n) * qpochhammer(r2, n) * LaurentPoly.monomial(s * n)
        return alpha(n) * RationalFn(num, denom(n))

    def new_beta(n: int) -> RationalFn:
        total = RationalFn(0)
        for k in range(n + 1):
            num = qpochhammer(r1, k) * qpochhammer(r2, k) * qpochhammer(s, n - k) * LaurentPoly.monomial(s * k)
            total = total + beta(k) * RationalFn(num, qfactorial(n - k))
        return total * RationalFn(ONE, denom(n))

    return BaileyPair(
        alpha=_memo(new_alpha),
        beta=_memo(new_beta),
        tag=bp.tag,
        a_exp=bp.a_exp,
        history=bp.history + (f"rho=q^{r1},q^{r2}",),
    )


def iterate_limit(bp: BaileyPair, times: int) -> BaileyPair:
    for _ in range(times):
        bp = bailey_step_limit(bp)
    return bp


def _chain_sum(p: int, n: int, weighted_bottom: bool) -> RationalFn:
    """sum over n = n_p >= ... >= n_1 >= 0 of prod q^(n_j^2+n_j) [n_{j+1}, n_j],
    times 1/(q)_{n_1} when ``weighted_bottom``."""
    total = RationalFn(0)
    for lower in multi_indices(p - 1, n):
        ch = (0, *lower, n)
        term = ONE
        for j in range(1, p):
            term = term * qbinomial(ch[j + 1], ch[j]).shift(ch[j] * ch[j] + ch[j])
        total = total + (RationalFn(term, qfactorial(ch[1])) if weighted_bottom else RationalFn(term))
    return total


def iterated_pair_slater(p: int) -> BaileyPair:
    """The closed-form pair after p-1 limit steps from the Slater pair."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return BaileyPair(
        alpha=_memo(lambda n: RationalFn(
            LaurentPoly.monomial(binom2(n) + p * (n * n + n), (-1) ** n) * _one_minus(2 * n + 1), _one_minus(1))),
        beta=_memo(lambda n: _chain_sum(p, n, False) * RationalFn(ONE, qfactorial(n))),
        tag=f"slater^{p}",
    )


def iterated_pair_walsh(p: int) -> BaileyPair:
    """The closed-form pair after p-1 limit steps from the Walsh pair."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return BaileyPair(
        alpha=_memo(lambda n: RationalFn(
            LaurentPoly.monomial(p * n * n + (p - 1) * n) * _one_minus(2 * n + 1), _one_minus(1))),
        beta=_memo(lambda n: _chain_sum(p, n, True) * RationalFn(ONE, qfactorial(n))),
        tag=f"walsh^{p}",
    )


def iterated_pair(name: str, p: int) -> BaileyPair:
    return {"slater": iterated_pair_slater, "walsh": iterated_pair_walsh}[name](p)


def pairs_agree(a: BaileyPair, b: BaileyPair, n_max: int) -> bool:
    return all(a.alpha(n) == b.alpha(n) and a.beta(n) == b.beta(n) for n in range(n_max + 1))
