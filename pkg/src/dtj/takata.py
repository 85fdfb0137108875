"""Takata's colored Jones formula for the mirror of a 2-bridge knot b(l, t).

This is the independent oracle for the double twist formulas in
:mod:`dtj.cjp`: it works from the 2-bridge tables alone and shares nothing
with them except the q-binomial primitives.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterator, Sequence

from .knots import TakataTables, TwoBridge, takata_tables_general
from .qalgebra import LaurentPoly, RationalFn, binom2, qfactorial, qmultinomial, qpochhammer


def multi_indices(length: int, top: int) -> Iterator[tuple[int, ...]]:
    """All weakly increasing ``(n_1, ..., n_length)`` with entries in ``0..top``, lexicographically."""
    if length == 0:
        yield ()
        return
    yield from combinations_with_replacement(range(top + 1), length)


def lattice_size(length: int, top: int) -> int:
    return comb(top + length, length)


class _Exponents:
    """Precomputed pieces of a(n), b1(n), b2(n) for one 2-bridge knot."""

    def __init__(self, tb: TwoBridge, tables: TakataTables):
        self.tb = tb
        self.tables = tables
        pp = tb.pprime
        T = tables
        self.pp = pp
        self.half_lt = (tb.l - tb.t) // 2
        # S[j] = sum_{k=r'(j)}^{p'} (sigma_{i_k} + sigma_{i_{p'+1-k}})
        pair = [T.si(k) + T.si(pp + 1 - k) for k in range(1, pp + 1)]
        self.S = [0] + [sum(pair[T.r(j) - 1:]) for j in range(1, pp + 1)]
        self.sym = [0] + [T.s(j + 1) + T.s(pp + 1 - j) for j in range(1, pp)]
        self.sum_sigma = sum(T.sigma)
        # ordered pairs k < k' with i_k > i_k' and sigma_{i_k} != sigma_{i_k'}
        self.cross = [
            (T.i(k), T.i(k2), T.si(k) - T.si(k2))
            for k in range(1, pp)
            for k2 in range(k + 1, pp + 1)
            if T.i(k) > T.i(k2) and T.si(k) != T.si(k2)
        ]
        l, t = tb.l, tb.t
        if l < 2 * t:
            self.b2_sign, self.b2_range = 1, range(self.half_lt + 1, (t - 1) // 2 + 1)
        else:
            self.b2_sign, self.b2_range = -1, range((t + 1) // 2 + 1, self.half_lt + 1)

    def a2(self, n: Sequence[int]) -> int:
        """Twice a(n); ``n`` is 0-padded so that n[j] = n_j."""
        T, pp = self.tables, self.pp
        total = 0
        for j in range(1, pp + 1):
            total -= self.S[j] * (n[j] - n[j - 1])
        for j in range(1, pp):
            total -= self.sym[j] * n[j]
        total -= (T.s(pp) + 1) * n[pp]
        total -= 2 * self.sum_sigma
        return total

    def b1_2(self, n: Sequence[int], a2: int) -> int:
        """Twice b1(n), given twice a(n)."""
        T, pp, h = self.tables, self.pp, self.half_lt
        total = -a2
        for k in range(1, h + 1):
            total += (1 - T.si(k)) * n[T.i(k) - 1]
        for k in range(h + 1, pp + 1):
            total -= 2 * n[T.i(k) - 1]
            total += (1 + T.si(k)) * n[T.i(k)]
        total -= 2 * (1 + T.s(pp)) * n[pp]
        for j in range(1, pp):
            total += (T.s(j + 1) - T.s(j)) * n[j]
        for ia, ib, dsig in self.cross:
            total -= dsig * (n[ia] - n[ia - 1]) * (n[ib] - n[ib - 1])
        running = 0
        prefix = [0] * (pp + 1)
        for k in range(1, pp + 1):
            i = T.i(k)
            running += n[i] - n[i - 1]
            prefix[k] = running
        for j in range(1, pp + 1):
            total += 2 * T.s(j) * prefix[T.r(j)] * n[j - 1]
        return total

    def b2(self, n: Sequence[int]) -> int:
        T = self.tables
        return self.b2_sign * sum((1 + T.si(k)) // 2 * n[T.i(k) - 1] for k in self.b2_range)


def _halve(v: int, what: str) -> int:
    if v % 2:
        raise ArithmeticError(f"{what} is not an integer")
    return v // 2


def raw_a(tb: TwoBridge, nbar: Sequence[int]) -> int:
    """a(n) evaluated directly from the tables of b(l,t)."""
    ex = _Exponents(tb, takata_tables_general(tb))
    return _halve(ex.a2((0, *nbar)), "a(n)")


def raw_b(tb: TwoBridge, nbar: Sequence[int]) -> tuple[int, int]:
    """(b1(n), b2(n)) evaluated directly."""
    ex = _Exponents(tb, takata_tables_general(tb))
    n = (0, *nbar)
    return _halve(ex.b1_2(n, ex.a2(n)), "b1(n)"), ex.b2(n)


def takata_a_closed_m2(p: int, nbar: Sequence[int]) -> int:
    """The simplified a(n) for b(10p+1, 8p+1) as usually printed: sum n_{5j-2} - sum_{j<p} n_{5j} - p.

    This does not match :func:`raw_a`; see :func:`takata_a_closed_m2_corrected`.
    """
    n = _padded_m2(p, nbar)
    return sum(n[5 * j - 2] for j in range(1, p + 1)) - sum(n[5 * j] for j in range(1, p)) - p


def takata_a_closed_m2_corrected(p: int, nbar: Sequence[int]) -> int:
    """-sum n_{5j-2} - sum_{j<p} n_{5j} - p, which is what the telescoped table sums give."""
    n = _padded_m2(p, nbar)
    return -sum(n[5 * j - 2] for j in range(1, p + 1)) - sum(n[5 * j] for j in range(1, p)) - p


def _padded_m2(p: int, nbar: Sequence[int]) -> tuple[int, ...]:
    if len(nbar) != 5 * p:
        raise ValueError(f"expected {5 * p} indices, got {len(nbar)}")
    return (0, *nbar)


def x_literal(tb: TwoBridge, nbar: Sequence[int], N: int) -> RationalFn:
    """X(n) exactly as a quotient of q-Pochhammers (test oracle for the cleared form)."""
    T = takata_tables_general(tb)
    n = (0, *nbar)
    pp = tb.pprime
    top = n[pp]
    kappa = -N * top if T.s(pp) == -1 else 0
    value = RationalFn(
        LaurentPoly.monomial(kappa, (-1) ** top) * qfactorial(N - 1) * qfactorial(top),
        qfactorial(N - top - 1),
    )
    for j in range(1, pp + 1):
        d = n[j] - n[j - 1]
        tau = LaurentPoly.constant((-1) ** d) if T.s(j) == -1 else LaurentPoly.monomial(binom2(d + 1))
        value = value * RationalFn(tau, qfactorial(d))
    return value


def x_cleared(tb: TwoBridge, nbar: Sequence[int], N: int) -> LaurentPoly:
    """X(n) as sign * q^e * (q^(N-n_top))_{n_top} * multinomial(n_top; differences)."""
    T = takata_tables_general(tb)
    n = (0, *nbar)
    pp = tb.pprime
    top = n[pp]
    e = -N * top if T.s(pp) == -1 else 0
    sign = top
    diffs = [n[j] - n[j - 1] for j in range(1, pp + 1)]
    for j, d in enumerate(diffs, start=1):
        if T.s(j) == -1:
            sign += d
        else:
            e += binom2(d + 1)
    return LaurentPoly.monomial(e, (-1) ** sign) * qpochhammer(N - top, top) * qmultinomial(top, diffs)


@lru_cache(maxsize=None)
def takata_colored_jones(tb: TwoBridge, N: int) -> LaurentPoly:
    """J_N(b(l,t)*; q), summed over weakly increasing n with n_{p'} <= N-1."""
    if N < 1:
        raise ValueError("N must be >= 1")
    T = takata_tables_general(tb)
    ex = _Exponents(tb, T)
    pp = tb.pprime
    neg_sigma = [j for j in range(1, pp + 1) if T.s(j) == -1]
    pos_sigma = [j for j in range(1, pp + 1) if T.s(j) == 1]
    top_kappa = T.s(pp) == -1

    # terms sharing (n_top, multiset of differences) share their polynomial factor
    groups: dict[tuple, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for nbar in multi_indices(pp, N - 1):
        n = (0, *nbar)
        a2 = ex.a2(n)
        b1_2 = ex.b1_2(n, a2)
        e = _halve(a2 * N + b1_2, "a(n)N + b1(n)") + ex.b2(n)
        top = n[pp]
        if top_kappa:
            e -= N * top
        diffs = [n[j] - n[j - 1] for j in range(1, pp + 1)]
        parity = top
        for j in neg_sigma:
            parity += diffs[j - 1]
        for j in pos_sigma:
            e += binom2(diffs[j - 1] + 1)
        key = (top, tuple(sorted(d for d in diffs if d)))
        groups[key][e] += -1 if parity % 2 else 1

    total = LaurentPoly()
    for (top, parts), monos in groups.items():
        factor = qpochhammer(N - top, top) * qmultinomial(top, parts)
        total = total + LaurentPoly(monos) * factor
    return total
