"""Colored Jones polynomials of double twist knots K(m, p).

Families, by the knot they compute:

* ``jones_thm1(m, p, N)``    J_N(K(-m,-p))  (nested sum over (2m+1)p-1 indices)
* ``jones_thm2(m, p, N)``    J_N(K(-m, p))  (nested sum over (2m+1)p indices)
* ``jones_torus(p, N)``      J_N(T(2,2p+1)) = J_N(K(0, p))
* ``jones_thm3_pos(m, p, N)`` J_N(K(m, p))   (cyclotomic-type sum, m, p >= 1)
* ``jones_thm3_neg(m, p, N)`` J_N(K(m,-p))
* ``walsh_colored_jones``    J_N(K(m, p)) from the unsimplified a-variable formula

All results are exact :class:`LaurentPoly` values in q.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .qalgebra import (
    ONE,
    LaurentPoly,
    RationalFn,
    binom2,
    qbinomial,
    qfactorial,
    qmultinomial,
    qpochhammer,
)
from .takata import multi_indices


class HypothesisError(ValueError):
    """Parameters outside the range where a formula is valid."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise HypothesisError(msg)


# -- coefficient functions ---------------------------------------------------


def epsilon(i: int, j: int, m: int) -> int:
    """Pair coefficient of n_i n_j in the K(-m,-p) formula."""
    w = 2 * m + 1
    if not (1 <= i < j) or i % w == 0 or j % w == m % w:
        raise ValueError(f"epsilon undefined at (i,j,m)=({i},{j},{m})")
    r = j % w
    if r in ((-i) % w, (-i - 1) % w):
        return 1
    if r in (i % w, (i - 1) % w):
        return -1
    return 0


def gamma(i: int, m: int, p: int | None = None) -> int:
    """Linear coefficient of n_i in the K(-m,-p) formula."""
    w = 2 * m + 1
    if i < 1 or (p is not None and i > w * p - 2):
        raise ValueError(f"gamma undefined at i={i}")
    r = i % w
    if 1 <= r <= m - 1:
        return 1
    if r == m:
        return 0
    return -1


def delta_coeff(i: int, j: int, m: int) -> int:
    """Pair coefficient of n_i n_j in the K(-m,p) formula."""
    w = 2 * m + 1
    if not (1 <= i < j) or i % w == 0 or j % w == (m + 1) % w:
        raise ValueError(f"Delta undefined at (i,j,m)=({i},{j},{m})")
    r = j % w
    if r in ((-i) % w, (-i + 1) % w):
        return 1
    if r in (i % w, (i + 1) % w):
        return -1
    return 0


def beta_coeff(i: int, m: int) -> int:
    """Linear coefficient of n_i in the K(-m,p) formula; identically 0 when m = 0."""
    if i < 1:
        raise ValueError(f"beta undefined at i={i}")
    if m == 0:
        return 0
    r = i % (2 * m + 1)
    if r == 0:
        return 0
    return 1 if r <= m else -1


# -- nested lattice sums -----------------------------------------------------


class _QuadraticSum:
    """sum over N-1 >= n_K >= ... >= n_1 >= 0 of
    (-1)^(sign . n) q^(E(n)) (q^c)_{n_K} prod_i [n_{i+1}, n_i]

    where E is quadratic; coefficients are stored doubled so C(n+1, 2) stays integral.
    """

    def __init__(self, K: int):
        self.K = K
        self.quad: dict[tuple[int, int], int] = defaultdict(int)
        self.lin = [0] * (K + 1)
        self.const2 = 0
        self.sign = [0] * (K + 1)

    def add_pair(self, i: int, j: int, c: int) -> None:
        if c:
            self.quad[(min(i, j), max(i, j))] += 2 * c

    def add_linear(self, i: int, c: int) -> None:
        self.lin[i] += 2 * c

    def add_tri(self, i: int, c: int = 1) -> None:
        """Add c * C(n_i + 1, 2)."""
        self.quad[(i, i)] += c
        self.lin[i] += c

    def add_const(self, c: int) -> None:
        self.const2 += 2 * c

    def evaluate(self, top_bound: int, poch_start: int) -> LaurentPoly:
        K = self.K
        quad = [(i, j, c) for (i, j), c in self.quad.items() if c]
        lin = [(i, c) for i, c in enumerate(self.lin) if c]
        signs = [i for i, s in enumerate(self.sign) for _ in range(s % 2)]
        groups: dict[tuple, dict[int, int]] = defaultdict(lambda: defaultdict(int))
        for nbar in multi_indices(K, top_bound):
            n = (0, *nbar)
            e2 = self.const2
            for i, j, c in quad:
                e2 += c * n[i] * n[j]
            for i, c in lin:
                e2 += c * n[i]
            parity = 0
            for i in signs:
                parity += n[i]
            diffs = tuple(sorted(n[i] - n[i - 1] for i in range(1, K + 1) if n[i] != n[i - 1]))
            groups[(n[K], diffs)][e2 // 2] += -1 if parity % 2 else 1
        total = LaurentPoly()
        for (top, parts), monos in groups.items():
            # prod_{i<K} [n_{i+1}, n_i] = (q)_{n_K} / ((q)_{n_1} prod (q)_{n_{i+1}-n_i})
            total = total + LaurentPoly(monos) * qpochhammer(poch_start, top) * qmultinomial(top, parts)
        return total


def _thm1_form(m: int, p: int, N: int, at_root: bool) -> _QuadraticSum:
    w = 2 * m + 1
    K = w * p - 1
    Nx = 0 if at_root else N
    s = _QuadraticSum(K)
    s.add_const(1 - p if at_root else (p - 1) * (N - 1))
    s.add_tri(K, -1)
    s.sign[K] += 1
    for i in range(1, K):
        if i % w == 0:
            continue
        for j in range(i + 1, K + 1):
            if j % w != m:
                s.add_pair(i, j, epsilon(i, j, m))
    for i in range(1, K - 1 + 1):
        if i % w in (m, 0):
            s.sign[i] += 1
            s.add_linear(i, Nx)
            s.add_tri(i)
        s.add_pair(i, i + 1, -1)
        s.add_linear(i, gamma(i, m))
    return s


def _thm2_form(m: int, p: int, N: int, at_root: bool) -> _QuadraticSum:
    # Uses the form in which the two special residue classes m+1 and 0 are
    # separate products running up to n_K; at m = 0 both apply to every index.
    w = 2 * m + 1
    K = w * p
    Nx = 0 if at_root else N
    s = _QuadraticSum(K)
    s.add_const(p if at_root else p * (1 - N))
    s.add_linear(K, Nx)
    s.add_tri(K, -2)
    for i in range(1, K):
        if i % w == 0:
            continue
        for j in range(i + 1, K + 1):
            if j % w != (m + 1) % w:
                s.add_pair(i, j, delta_coeff(i, j, m))
    for i in range(1, K + 1):
        mult = (i % w == (m + 1) % w) + (i % w == 0)
        if mult:
            s.sign[i] += mult
            s.add_linear(i, -Nx * mult)
            s.add_tri(i, mult)
    for i in range(1, K):
        s.add_linear(i, beta_coeff(i, m))
    return s


@lru_cache(maxsize=None)
def jones_thm1(m: int, p: int, N: int) -> LaurentPoly:
    """J_N(K(-m,-p); q) for m, p >= 1."""
    _require(m >= 1, "thm1 (K(-m,-p) formula) requires m >= 1")
    _require(p >= 1, "thm1 (K(-m,-p) formula) requires p >= 1")
    _require(N >= 1, "N must be >= 1")
    return _thm1_form(m, p, N, at_root=False).evaluate(N - 1, 1 - N)


@lru_cache(maxsize=None)
def jones_thm2(m: int, p: int, N: int) -> LaurentPoly:
    """J_N(K(-m,p); q) for m >= 0, p >= 1; m = 0 is the torus knot T(2,2p+1)."""
    _require(m >= 0, "thm2 (K(-m,p) formula) requires m >= 0")
    _require(p >= 1, "thm2 (K(-m,p) formula) requires p >= 1")
    _require(N >= 1, "N must be >= 1")
    return _thm2_form(m, p, N, at_root=False).evaluate(N - 1, 1 - N)


@lru_cache(maxsize=None)
def jones_torus(p: int, N: int) -> LaurentPoly:
    """J_N(T(2,2p+1); q) from the p-fold torus-knot sum."""
    _require(p >= 1, "torus formula requires p >= 1")
    _require(N >= 1, "N must be >= 1")
    total = LaurentPoly()
    for nbar in multi_indices(p, N - 1):
        n = (0, *nbar)
        e = -N * n[p]
        term = ONE
        for i in range(1, p):
            e += n[i] * (n[i] + 1 - 2 * N)
            term = term * qbinomial(n[i + 1], n[i])
        total = total + qpochhammer(1 - N, n[p]) * term.shift(e)
    return total.shift(p * (1 - N))


# -- chain sums c_{p,n}, d_{m,n}, c_{-p,n} -------------------------------------


def _chains(length: int, top: int):
    """Chains top = n_length >= ... >= n_1 >= 0, yielded 0-padded so that n[j] = n_j."""
    for lower in multi_indices(length - 1, top):
        yield (0, *lower, top)


@lru_cache(maxsize=None)
def c_poly(p: int, n: int) -> LaurentPoly:
    """c_{p,n}(q) = sum over chains of prod q^(n_j^2+n_j) [n_{j+1}, n_j]."""
    _require(p >= 1, "c_{p,n} requires p >= 1")
    total = LaurentPoly()
    for ch in _chains(p, n):
        e = 0
        term = ONE
        for j in range(1, p):
            e += ch[j] * ch[j] + ch[j]
            term = term * qbinomial(ch[j + 1], ch[j])
        total = total + term.shift(e)
    return total


def c_poly_defining(p: int, n: int) -> RationalFn:
    """c_{p,n} from its defining single sum (q)_n sum_k ... / ((q)_{n-k} (q)_{n+k+1})."""
    total = RationalFn(0)
    for k in range(n + 1):
        num = LaurentPoly({binom2(k) + p * (k * k + k): (-1) ** k}) * LaurentPoly({0: 1, 2 * k + 1: -1})
        total = total + RationalFn(num, qfactorial(n - k) * qfactorial(n + k + 1))
    return total * qfactorial(n)


def d_chain_terms(m: int, n: int):
    """Yield (n_1, chain polynomial) for the chains in d_{m,n}, without the 1/(q)_{n_1}."""
    for ch in _chains(m, n):
        e = 0
        term = ONE
        for i in range(1, m):
            e += ch[i] * ch[i] + ch[i]
            term = term * qbinomial(ch[i + 1], ch[i])
        yield ch[1], term.shift(e)


def d_poly(m: int, n: int) -> RationalFn:
    """d_{m,n}(q), which keeps a 1/(q)_{n_1} and so is only rational."""
    _require(m >= 1, "d_{m,n} requires m >= 1")
    total = RationalFn(0)
    for n1, term in d_chain_terms(m, n):
        total = total + RationalFn(term, qfactorial(n1))
    return total


@lru_cache(maxsize=None)
def d_cleared(m: int, n: int) -> LaurentPoly:
    """(q)_n d_{m,n}(q); (q)_n/(q)_{n_1} is the polynomial (q^{n_1+1})_{n-n_1}."""
    _require(m >= 1, "d_{m,n} requires m >= 1")
    total = LaurentPoly()
    for n1, term in d_chain_terms(m, n):
        total = total + qpochhammer(n1 + 1, n - n1) * term
    return total


def d_poly_defining(m: int, n: int) -> RationalFn:
    total = RationalFn(0)
    for k in range(n + 1):
        num = LaurentPoly.monomial(m * k * k + (m - 1) * k) * LaurentPoly({0: 1, 2 * k + 1: -1})
        total = total + RationalFn(num, qfactorial(n - k) * qfactorial(n + k + 1))
    return total * qfactorial(n)


@lru_cache(maxsize=None)
def c_neg_chain(p: int, n: int) -> LaurentPoly:
    """sum over chains n = s_p >= ... >= s_1 >= 0 of prod q^(-s_j - s_{j+1} s_j) [s_{j+1}, s_j]."""
    _require(p >= 1, "c_{-p,n} requires p >= 1")
    total = LaurentPoly()
    for ch in _chains(p, n):
        e = 0
        term = ONE
        for j in range(1, p):
            e -= ch[j] + ch[j + 1] * ch[j]
            term = term * qbinomial(ch[j + 1], ch[j])
        total = total + term.shift(e)
    return total


def c_neg_poly(p: int, n: int) -> LaurentPoly:
    """c_{-p,n}(q) = (-1)^n q^(-n(n+3)/2) * (chain sum)."""
    return c_neg_chain(p, n).scale((-1) ** n).shift(-(n * (n + 3) // 2))


def c_neg_transformed(p: int, n: int) -> LaurentPoly:
    """c_{-p,n} obtained instead from c_{p,n}(1/q)."""
    return c_poly(p, n).invert_q().scale((-1) ** n).shift(-(n * (n + 3) // 2))


# -- cyclotomic-type formulas ------------------------------------------------


def poch_ratio(N: int, n: int) -> LaurentPoly:
    """(q^{1-N})_n / (q)_n = (-1)^n q^(C(n+1,2) - nN) [N-1, n]."""
    return qbinomial(N - 1, n).scale((-1) ** n).shift(binom2(n + 1) - n * N)


def poch_ratio_literal(N: int, n: int) -> RationalFn:
    return RationalFn(qpochhammer(1 - N, n), qfactorial(n))


@lru_cache(maxsize=None)
def jones_thm3_pos(m: int, p: int, N: int) -> LaurentPoly:
    """J_N(K(m,p); q) for m, p >= 1."""
    _require(m >= 1 and p >= 1, "thm3pos (K(m,p) formula) requires m >= 1 and p >= 1")
    _require(N >= 1, "N must be >= 1")
    total = LaurentPoly()
    # terms with n >= N vanish: (q^{1-N})_n contains the factor 1 - q^0
    for n in range(N):
        total = total + (
            qpochhammer(1 + N, n) * poch_ratio(N, n) * c_poly(p, n) * d_cleared(m, n)
        ).shift(n)
    return total.shift(p * (1 - N * N))


@lru_cache(maxsize=None)
def jones_thm3_neg(m: int, p: int, N: int) -> LaurentPoly:
    """J_N(K(m,-p); q) for m, p >= 1."""
    _require(m >= 1 and p >= 1, "thm3neg (K(m,-p) formula) requires m >= 1 and p >= 1")
    _require(N >= 1, "N must be >= 1")
    total = LaurentPoly()
    for n in range(N):
        sign_tri = LaurentPoly.monomial(-binom2(n + 1), (-1) ** n)
        total = total + (
            qpochhammer(1 + N, n) * poch_ratio(N, n) * sign_tri * c_neg_chain(p, n) * d_cleared(m, n)
        )
    return total.shift(-p * (1 - N * N))


def jones_thm3_pos_literal(m: int, p: int, N: int) -> RationalFn:
    """Same sum, evaluated with the 1/(q)_{n_1} kept as a rational function."""
    total = RationalFn(0)
    for n in range(N):
        total = total + RationalFn(
            (qpochhammer(1 + N, n) * qpochhammer(1 - N, n) * c_poly(p, n)).shift(n)
        ) * d_poly(m, n)
    return total * LaurentPoly.monomial(p * (1 - N * N))


# -- Walsh's formula in the variable a, q = a^2 --------------------------------


def _br(n: int) -> LaurentPoly:
    """Quantum integer [n] = (a^n - a^-n)/(a - a^-1)."""
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def _br_fact(n: int) -> LaurentPoly:
    return _br_fact(n - 1) * _br(n) if n > 0 else ONE


@lru_cache(maxsize=None)
def _curly_fact(n: int) -> LaurentPoly:
    # {n}! with {n} = a^n - a^-n
    return _curly_fact(n - 1) * LaurentPoly({n: 1, -n: -1}) if n > 0 else ONE


_A_MINUS = LaurentPoly({1: 1, -1: -1})  # a - a^-1 = {1}


def walsh_c_prime(n: int, p: int) -> RationalFn:
    """c'_{n,p} = (a - a^-1)^-n sum_k (-1)^k mu_{2k}^p [2k+1] [n]! / ([n+k+1]! [n-k]!)."""
    total = RationalFn(0)
    for k in range(n + 1):
        # mu_{2k} = a^(2k^2 + 2k)
        num = _br(2 * k + 1).shift(p * (2 * k * k + 2 * k)).scale((-1) ** k) * _br_fact(n)
        total = total + RationalFn(num, _br_fact(n + k + 1) * _br_fact(n - k))
    return total / _A_MINUS**n


def walsh_a(m: int, p: int, N: int) -> RationalFn:
    """J_N(K(m,p); a^2) as a reduced rational function in a."""
    total = RationalFn(0)
    for n in range(N):
        inner = RationalFn(0)
        for k in range(n + 1):
            # mu_{2k}^((2m-1)/2) = a^((2m-1)(k^2+k))
            inner = inner + RationalFn(
                _br(2 * k + 1).shift((2 * m - 1) * (k * k + k)),
                _br_fact(n + k + 1) * _br_fact(n - k),
            )
        outer = RationalFn(
            _br_fact(N + n) * _curly_fact(2 * n + 1) * _curly_fact(n) * (-1) ** n,
            _br_fact(N - n - 1) * _br_fact(2 * n + 1) * _A_MINUS ** (2 * n + 1),
        )
        total = total + outer * walsh_c_prime(n, p) * inner
    return total * RationalFn(LaurentPoly.monomial(2 * p * (1 - N * N)), _br(N))


@lru_cache(maxsize=None)
def walsh_colored_jones(m: int, p: int, N: int) -> LaurentPoly:
    """J_N(K(m,p); q) for m >= 1, p != 0, from Walsh's formula with a^2 = q."""
    _require(m >= 1, "walsh formula requires m >= 1")
    _require(p != 0, "walsh formula requires p != 0")
    _require(N >= 1, "N must be >= 1")
    value = walsh_a(m, p, N)
    if not value.is_laurent():
        raise ArithmeticError(f"walsh({m},{p},{N}) left a non-unit denominator {value.den}")
    try:
        return value.num.halve_exponents()
    except ValueError:
        raise ArithmeticError(f"walsh({m},{p},{N}) has an odd power of a") from None


# -- cyclotomic expansion for K(1,-p) --------------------------------------------


def habiro_coefficient(p: int, n: int) -> LaurentPoly:
    """C_n(K(1,-p); q), reading the inner product's upper limit as p - 1."""
    total = LaurentPoly()
    for lower in multi_indices(p - 1, n):
        k = (0, *(x + 1 for x in lower), n + 1)
        e = 0
        term = ONE
        run = 0  # sum_{j<i} k_j
        for i in range(1, p):
            e += k[i] * k[i]
            term = term * qbinomial(k[i + 1] + k[i] - i + 2 * run, k[i + 1] - k[i])
            run += k[i]
        total = total + term.shift(e)
    return total.shift(n + 1 - p)


@lru_cache(maxsize=None)
def habiro_left_torus_check(p: int, N: int) -> LaurentPoly:
    """sum_n (q^{1+N})_n (q^{1-N})_n C_n(K(1,-p); q); compare with jones_thm3_neg(1, p, N)."""
    _require(p >= 1 and N >= 1, "habiro check requires p, N >= 1")
    total = LaurentPoly()
    for n in range(N):
        total = total + qpochhammer(1 + N, n) * qpochhammer(1 - N, n) * habiro_coefficient(p, n)
    return total
