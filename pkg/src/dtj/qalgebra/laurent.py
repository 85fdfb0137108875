"""Sparse single-variable Laurent polynomials with exact integer coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Coercible = Union["LaurentPoly", int]

_TERM_RE = re.compile(r"^(?:(\d+)\*)?q\^(-?\d+)$|^(\d+)$")


class LaurentPoly:
    """An element of Z[q, q^-1], stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are equal. Instances are immutable.

    >>> q = LaurentPoly.monomial(1)
    >>> (q - 1) * (q + 1)
    LaurentPoly('-1 + q^2')
    >>> str((1 - q.invert_q()) * LaurentPoly.monomial(-2))
    '-q^-3 + q^-2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        if terms is None:
            self._terms: dict[int, int] = {}
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            acc: dict[int, int] = {}
            for e, c in items:
                e, c = int(e), int(c)
                if c:
                    acc[e] = acc.get(e, 0) + c
            self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({int(exponent): int(coeff)} if coeff else {})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], valuation: int = 0) -> "LaurentPoly":
        """Build from a dense ascending coefficient list starting at ``q^valuation``."""
        return cls._raw({valuation + i: int(c) for i, c in enumerate(coeffs) if c})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        """Terms in ascending exponent order."""
        return sorted(self._terms.items())

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def dense(self) -> tuple[int, list[int]]:
        """Return ``(valuation, ascending coefficient list)``."""
        if not self._terms:
            return 0, []
        lo, hi = self.valuation, self.degree
        out = [0] * (hi - lo + 1)
        for e, c in self._terms.items():
            out[e - lo] = c
        return lo, out

    def evaluate(self, x):
        """Evaluate at ``x``; integer ``x`` with negative exponents gives a Fraction."""
        if x == 1:
            return sum(self._terms.values())
        total = 0
        for e, c in self._terms.items():
            total += c * (Fraction(x) ** e if e < 0 else x**e)
        return total

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other: Coercible) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        acc = dict(self._terms)
        for e, c in other._terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return LaurentPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Coercible) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        acc: dict[int, int] = {}
        get = acc.get
        b_items = list(b.items())
        for ea, ca in a.items():
            for eb, cb in b_items:
                k = ea + eb
                acc[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only unit monomials have negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly.monomial(e * n, c ** (-n))
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q^k``."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c: int) -> "LaurentPoly":
        if not c:
            return LaurentPoly._raw({})
        return LaurentPoly._raw({e: v * c for e, v in self._terms.items()})

    def invert_q(self) -> "LaurentPoly":
        """Substitute ``q -> q^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Substitute ``q -> q^k`` for a nonzero integer ``k``."""
        if k == 0:
            raise ValueError("k must be nonzero")
        return LaurentPoly._raw({e * k: c for e, c in self._terms.items()})

    def halve_exponents(self) -> "LaurentPoly":
        """Substitute ``q^2 -> q``; every exponent must be even."""
        if any(e % 2 for e in self._terms):
            raise ValueError("odd exponent present")
        return LaurentPoly._raw({e // 2: c for e, c in self._terms.items()})

    def divmod_monic(self, g: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Polynomial division by ``g`` whose top coefficient is +-1.

        Both operands are first shifted to ordinary polynomials; the remainder
        has degree below ``deg g`` relative to ``g``'s valuation.
        """
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self, self
        gv, gc = g.dense()
        lead = gc[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        fv, fc = self.dense()
        dg = len(gc) - 1
        rem = fc[:]
        quo = [0] * max(len(rem) - dg, 1)
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i]
            if c:
                t = c * lead
                quo[i - dg] = t
                for j in range(dg + 1):
                    rem[i - dg + j] -= t * gc[j]
        return (
            LaurentPoly.from_coeffs(quo, fv - gv),
            LaurentPoly.from_coeffs(rem[:dg], fv),
        )

    def exact_div(self, g: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / g``; raises if ``g`` does not divide."""
        if g.is_monomial():
            (e, c), = g._terms.items()
            out = {}
            for k, v in self._terms.items():
                qv, r = divmod(v, c)
                if r:
                    raise ArithmeticError("not divisible")
                out[k - e] = qv
            return LaurentPoly._raw(out)
        quo, rem = self.divmod_monic(g)
        if not rem.is_zero():
            raise ArithmeticError("not divisible")
        return quo

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- text / json -------------------------------------------------------

    def to_text(self, var: str = "q") -> str:
        """Ascending-exponent rendering, e.g. ``-q^-4 + q^-3 + q^-1``."""
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = f"{var}^{e}"
            else:
                body = f"{mag}*{var}^{e}"
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    @classmethod
    def parse(cls, text: str, var: str = "q") -> "LaurentPoly":
        """Inverse of :meth:`to_text`."""
        s = text.strip()
        if var != "q":
            s = s.replace(var + "^", "q^")
        if s == "0":
            return cls()
        tokens = s.replace(" - ", " + -").split(" + ")
        terms: dict[int, int] = {}
        for tok in tokens:
            tok = tok.strip()
            neg = tok.startswith("-")
            if neg:
                tok = tok[1:]
            m = _TERM_RE.match(tok)
            if not m:
                raise ValueError(f"cannot parse term {tok!r}")
            if m.group(3) is not None:
                e, c = 0, int(m.group(3))
            else:
                e, c = int(m.group(2)), int(m.group(1) or 1)
            terms[e] = terms.get(e, 0) + (-c if neg else c)
        return cls(terms)

    def to_json(self, var: str = "q") -> dict:
        return {"variable": var, "terms": [[e, str(c)] for e, c in self.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in obj["terms"])

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"


q = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()


def lp_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def lp_invert_q(f: LaurentPoly) -> LaurentPoly:
    return f.invert_q()
