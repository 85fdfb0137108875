"""Arithmetic in Z[x]/Phi_N(x), i.e. exact evaluation at a primitive N-th root of unity."""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .laurent import LaurentPoly


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> LaurentPoly:
    """Phi_n, by dividing x^n - 1 by Phi_d for every proper divisor d."""
    if n < 1:
        raise ValueError("n must be positive")
    f = LaurentPoly({n: 1, 0: -1})
    for d in divisors(n)[:-1]:
        f = f.exact_div(cyclotomic_poly(d))
    return f


def _fold(f: LaurentPoly, n: int) -> list[int]:
    out = [0] * n
    for e, c in f.terms.items():
        out[e % n] += c
    return out


def _rem(coeffs: list[int], phi: list[int]) -> list[int]:
    # remainder modulo a monic polynomial; phi ascending, phi[-1] == 1
    d = len(phi) - 1
    rem = coeffs[:]
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c:
            for j in range(d + 1):
                rem[i - d + j] -= c * phi[j]
    rem = rem[:d] + [0] * max(0, d - len(rem))
    return rem


@lru_cache(maxsize=None)
def _phi_coeffs(n: int) -> list[int]:
    return cyclotomic_poly(n).dense()[1]


class CyclotomicElt:
    """A residue class in Z[x]/Phi_N, stored as phi(N) integer coefficients."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if level < 1:
            raise ValueError("level must be positive")
        if len(coeffs) != len(_phi_coeffs(level)) - 1:
            raise ValueError(f"level {level} needs {len(_phi_coeffs(level)) - 1} coefficients")
        self.level = level
        self.coeffs = coeffs

    @classmethod
    def reduce(cls, f: LaurentPoly | int, level: int) -> "CyclotomicElt":
        if isinstance(f, int):
            f = LaurentPoly.constant(f)
        return cls(level, _rem(_fold(f, level), _phi_coeffs(level)))

    @classmethod
    def from_int(cls, c: int, level: int) -> "CyclotomicElt":
        return cls.reduce(c, level)

    def lift(self) -> LaurentPoly:
        """Canonical representative of degree below phi(N)."""
        return LaurentPoly.from_coeffs(self.coeffs)

    def _check(self, other: "CyclotomicElt") -> None:
        if other.level != self.level:
            raise ValueError("levels differ")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicElt.from_int(other, self.level)
        self._check(other)
        return CyclotomicElt(self.level, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElt(self.level, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicElt(self.level, [a * other for a in self.coeffs])
        self._check(other)
        return CyclotomicElt.reduce(self.lift() * other.lift(), self.level)

    __rmul__ = __mul__

    def galois_invert(self) -> "CyclotomicElt":
        """Apply x -> x^(N-1), i.e. zeta -> zeta^-1."""
        return CyclotomicElt.reduce(self.lift().invert_q(), self.level)

    def is_integer(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CyclotomicElt.from_int(other, self.level)
        if not isinstance(other, CyclotomicElt):
            return NotImplemented
        return self.level == other.level and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.level, self.coeffs))

    def to_json(self) -> dict:
        return {"level": self.level, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "CyclotomicElt":
        return cls(int(obj["level"]), [int(c) for c in obj["coeffs"]])

    def __repr__(self) -> str:
        return f"CyclotomicElt({self.level}, {list(self.coeffs)})"


def reduce_mod_phi(f: LaurentPoly, n: int) -> CyclotomicElt:
    return CyclotomicElt.reduce(f, n)


def galois_invert(e: CyclotomicElt) -> CyclotomicElt:
    return e.galois_invert()
