"""Reduced quotients of Laurent polynomials.

Polynomial gcds are delegated to sympy's dense integer-polynomial routines;
everything else (canonical form, arithmetic) lives here.
"""

from __future__ import annotations

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_inner_gcd

from .laurent import LaurentPoly


def _to_dup(f: LaurentPoly) -> tuple[int, list]:
    # descending coefficient list of f / q^val, as sympy expects
    val, coeffs = f.dense()
    return val, [ZZ(c) for c in reversed(coeffs)]


def _from_dup(coeffs: list, val: int) -> LaurentPoly:
    return LaurentPoly.from_coeffs([int(c) for c in reversed(coeffs)], val)


class RationalFn:
    """``num/den`` kept in lowest terms.

    The denominator is an ordinary polynomial with nonzero constant term,
    and that constant term is positive; monomial factors all live in the
    numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly | int, den: LaurentPoly | int = 1):
        num = _lp(num)
        den = _lp(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFn":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    def is_laurent(self) -> bool:
        return self.den == 1

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ArithmeticError(f"denominator is not a unit: {self.den}")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def invert_q(self) -> "RationalFn":
        return RationalFn(self.num.invert_q(), self.den.invert_q())

    def __add__(self, other) -> "RationalFn":
        other = _rf(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn._raw(-self.num, self.den)

    def __sub__(self, other) -> "RationalFn":
        other = _rf(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFn":
        other = _rf(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFn":
        other = _rf(other)
        if other is None:
            return NotImplemented
        # cross-cancel first to keep the gcd inputs small
        a_num, b_den = _reduce(self.num, other.den)
        b_num, a_den = _reduce(other.num, self.den)
        return RationalFn._raw(*_normalize(a_num * b_num, a_den * b_den))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        other = _rf(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        return self * RationalFn._raw(*_normalize(other.den, other.num))

    def __rtruediv__(self, other) -> "RationalFn":
        other = _rf(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> "RationalFn":
        if n < 0:
            return RationalFn(1) / self**(-n)
        return RationalFn._raw(self.num**n, self.den**n)

    def __eq__(self, other) -> bool:
        other = _rf(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        if self.is_laurent():
            return f"RationalFn({self.num.to_text()!r})"
        return f"RationalFn(({self.num.to_text()}) / ({self.den.to_text()}))"


def _lp(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


def _rf(x) -> RationalFn | None:
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, (LaurentPoly, int)):
        return RationalFn._raw(_lp(x), LaurentPoly.constant(1))
    return None


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    # move monomial part of den into num, make den's constant term positive
    v = den.valuation
    if v:
        num, den = num.shift(-v), den.shift(-v)
    if den.coeff(0) < 0:
        num, den = -num, -den
    return num, den


def _reduce(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return num, LaurentPoly.constant(1)
    if den.is_monomial():
        (e, c), = den.terms.items()
        if c in (1, -1):
            return num.shift(-e).scale(c), LaurentPoly.constant(1)
    nv, nd = _to_dup(num)
    dv, dd = _to_dup(den)
    _, cff, cfg = dup_inner_gcd(nd, dd, ZZ)
    return _normalize(_from_dup(cff, nv), _from_dup(cfg, dv))
