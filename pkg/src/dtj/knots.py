"""Double twist knots, their 2-bridge parameters, and Takata's index tables."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

MINUSMINUS = "minusminus"
MINUSPLUS = "minusplus"
_FAMILY_ALIASES = {MINUSMINUS: MINUSMINUS, MINUSPLUS: MINUSPLUS, "odd": MINUSMINUS, "even": MINUSPLUS}

_KNOT_RE = re.compile(r"^\s*K\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


def _family(family: str) -> str:
    try:
        return _FAMILY_ALIASES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected minusminus or minusplus") from None


@dataclass(frozen=True)
class KnotSpec:
    """The double twist knot K(m, p): 2m-1 half-twists in one region, 2p in the other.

    Positive values mean right-handed twists. ``m = 0`` is allowed because
    K(0, p) is the torus knot T(2, 2p+1).
    """

    m: int
    p: int

    def __post_init__(self):
        if self.p == 0:
            raise ValueError("p must be nonzero")

    @classmethod
    def parse(cls, text: str) -> "KnotSpec":
        match = _KNOT_RE.match(text)
        if not match:
            raise ValueError(f"expected a knot name like K(-2,3), got {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))

    def mirror(self) -> "KnotSpec":
        return mirror(self)

    def two_bridge(self) -> tuple["TwoBridge", bool]:
        """Return ``(b, starred)`` with this knot equal to b(l,t)* if starred, else b(l,t)."""
        m, p = self.m, self.p
        if m >= 2:
            fam = MINUSMINUS if p > 0 else MINUSPLUS
            return two_bridge_params(m - 1, abs(p), fam), False
        if m <= -1:
            fam = MINUSMINUS if p < 0 else MINUSPLUS
            return two_bridge_params(-m, abs(p), fam), True
        raise ValueError(f"no 2-bridge normal form implemented for {self}")

    def __str__(self) -> str:
        return f"K({self.m},{self.p})"


def mirror(k: KnotSpec) -> KnotSpec:
    """K(-m,-p) <-> K(m+1,p) and K(-m,p) <-> K(m+1,-p); both are K(a,b) -> K(1-a,-b)."""
    return KnotSpec(1 - k.m, -k.p)


@dataclass(frozen=True)
class TwoBridge:
    """The 2-bridge knot b(l, t) with l > t >= 1 coprime and odd."""

    l: int
    t: int

    def __post_init__(self):
        l, t = self.l, self.t
        if not (l % 2 == 1 and t % 2 == 1 and l > t >= 1 and gcd(l, t) == 1):
            raise ValueError(f"invalid 2-bridge parameters (l,t)=({l},{t})")

    @property
    def pprime(self) -> int:
        return (self.l - 1) // 2


def two_bridge_params(m: int, p: int, family: str) -> TwoBridge:
    """(l,t) with b(l,t)* = K(-m,-p) (minusminus) or K(-m,p) (minusplus)."""
    family = _family(family)
    if m < 1 or p < 1:
        raise ValueError("two_bridge_params requires m >= 1 and p >= 1")
    if family == MINUSMINUS:
        return TwoBridge(4 * m * p + 2 * p - 1, 4 * m * p - 1)
    return TwoBridge(4 * m * p + 2 * p + 1, 4 * m * p + 1)


@dataclass(frozen=True)
class TakataTables:
    """sigma_j, i_k, sigma_{i_k} and r'(j), stored 0-based (entry 0 is index 1)."""

    sigma: tuple[int, ...]
    ik: tuple[int, ...]
    sigma_ik: tuple[int, ...]
    rprime: tuple[int, ...]

    @property
    def pprime(self) -> int:
        return len(self.sigma)

    def s(self, j: int) -> int:
        return self.sigma[j - 1]

    def i(self, k: int) -> int:
        return self.ik[k - 1]

    def si(self, k: int) -> int:
        return self.sigma_ik[k - 1]

    def r(self, j: int) -> int:
        return self.rprime[j - 1]


def takata_tables_general(tb: TwoBridge) -> TakataTables:
    l, t, pp = tb.l, tb.t, tb.pprime
    sigma, rprime = [], []
    for j in range(1, pp + 1):
        v = (2 * j - 1) * t
        r = v % (2 * l)
        if r >= l:
            r -= 2 * l
        sigma.append(-1 if (v // l) % 2 else 1)
        rprime.append((abs(r) + 1) // 2)
    if sorted(rprime) != list(range(1, pp + 1)):
        raise ValueError(f"r' is not a bijection for (l,t)=({l},{t})")
    ik = [0] * pp
    for j, k in enumerate(rprime, start=1):
        ik[k - 1] = j
    sigma_ik = [sigma[i - 1] for i in ik]
    return TakataTables(tuple(sigma), tuple(ik), tuple(sigma_ik), tuple(rprime))


def takata_tables_lemma(m: int, p: int, family: str) -> TakataTables:
    """The same tables, built by the interval rules for the double twist families."""
    family = _family(family)
    if m < 1 or p < 1:
        raise ValueError("m and p must be positive")
    w = 2 * m + 1
    if family == MINUSMINUS:
        pp = w * p - 1
        sigma = [1 if 1 <= j % w <= m else -1 for j in range(1, pp + 1)]
        lengths = [p] * (2 * m) + [p - 1]
        jump = 2 * w * p - 1
        first = lambda k: w * (k - 1) + m + 1
        second = lambda k: w * (2 * p - k) + m
        start_sign = -1
    else:
        pp = w * p
        sigma = [1 if 1 <= j % w <= m + 1 else -1 for j in range(1, pp + 1)]
        lengths = [p] * w
        jump = 2 * w * p + 1
        first = lambda k: w * (k - 1) + m + 1
        second = lambda k: w * (2 * p - k) + m + 2
        start_sign = 1

    ik, sigma_ik = [], []
    k = 1
    for idx, length in enumerate(lengths, start=1):
        # odd intervals step down by `jump` from interval idx-2, even ones step up
        if idx % 2:
            base, offset = first, -jump * ((idx - 1) // 2)
        else:
            base, offset = second, jump * ((idx - 2) // 2)
        sign = start_sign if idx % 2 else -start_sign
        for _ in range(length):
            ik.append(base(k) + offset)
            sigma_ik.append(sign)
            k += 1
    rprime = [0] * pp
    for kk, j in enumerate(ik, start=1):
        rprime[j - 1] = kk
    return TakataTables(tuple(sigma), tuple(ik), tuple(sigma_ik), tuple(rprime))


def predicted_pair_sum(m: int, p: int, family: str, k: int) -> int:
    """Predicted sigma_{i_k} + sigma_{i_{p'+1-k}} from the interval position of k."""
    family = _family(family)
    i, r = divmod(k - 1, p)
    if family == MINUSMINUS:
        if r == p - 1:  # k = (i+1)p
            return 0
        return 2 if i % 2 else -2
    return -2 if i % 2 else 2


def predicted_sym_sum(m: int, p: int, family: str, j: int) -> int:
    """Predicted sigma_{j+1} + sigma_{p'+1-j}."""
    family = _family(family)
    w = 2 * m + 1
    if family == MINUSMINUS:
        return -2 if j % w == m % w else 0
    return 2 if j % w == 0 else 0


def sum_patterns_hold(m: int, p: int, family: str) -> bool:
    """Compare both paired-sum patterns with the general tables."""
    T = takata_tables_general(two_bridge_params(m, p, family))
    pp = len(T.sigma)
    pair_ok = all(T.si(k) + T.si(pp + 1 - k) == predicted_pair_sum(m, p, family, k) for k in range(1, pp + 1))
    sym_ok = all(T.s(j + 1) + T.s(pp + 1 - j) == predicted_sym_sum(m, p, family, j) for j in range(1, pp))
    return pair_ok and sym_ok
