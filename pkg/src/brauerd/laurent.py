"""Exact arithmetic in Z[d, 1/d] and in the scalar monoid generated by d, xi, theta.

Python integers are arbitrary precision, so coefficient growth never wraps.
"""

from __future__ import annotations

import enum
import re
from typing import Iterable, Mapping


class LaurentPoly:
    """Integer Laurent polynomial in the single symbol ``d`` (delta).

    Immutable; ``terms`` maps exponent -> nonzero coefficient.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, exp: int = 0, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return LaurentPoly([*self._terms.items(), *other._terms.items()])

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return LaurentPoly(
            (e1 + e2, c1 * c2)
            for e1, c1 in self._terms.items()
            for e2, c2 in other._terms.items()
        )

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by d**k."""
        if k == 0:
            return self
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def evaluate(self, d: int | float = 1):
        if d == 1:
            return sum(self._terms.values())
        return sum(c * d**e for e, c in self._terms.items())

    def as_monomial(self) -> tuple[int, int] | None:
        """Return (exponent, coefficient) if this is a single term."""
        if len(self._terms) != 1:
            return None
        return next(iter(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, (e, c) in enumerate(self._terms.items()):
            body = f"{abs(c)}" if e == 0 else f"{abs(c)}d^{e}"
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse ``-1 + 2d^3``-style text (also accepts ``d``, ``d^-2``, ``3d``)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        if s == "0":
            return cls()
        term_re = re.compile(r"([+-]?)(\d*)(d(?:\^(-?\d+))?)?")
        pos = 0
        acc: list[tuple[int, int]] = []
        while pos < len(s):
            m = term_re.match(s, pos)
            if m is None or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"bad polynomial text: {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                exp = int(m.group(4)) if m.group(4) is not None else 1
            else:
                exp = 0
            acc.append((exp, sign * coeff))
            pos = m.end()
            if pos < len(s) and s[pos] not in "+-":
                raise ValueError(f"bad polynomial text: {text!r}")
        return cls(acc)


ZERO = LaurentPoly()
ONE_POLY = LaurentPoly.const(1)
DELTA = LaurentPoly.monomial(1)


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


class LambdaClass(enum.IntEnum):
    ONE = 0
    XI = 1
    THETA = 2

    @property
    def token(self) -> str:
        return ("1", "xi", "theta")[self]

    @classmethod
    def from_token(cls, tok: str) -> LambdaClass:
        try:
            return {"1": cls.ONE, "xi": cls.XI, "theta": cls.THETA}[tok]
        except KeyError:
            raise ValueError(f"unknown scalar class {tok!r}") from None


# xi^2 = d^2, xi*theta = d*theta, theta^2 = d^2*theta
_CLASS_TABLE = {
    (LambdaClass.XI, LambdaClass.XI): (LambdaClass.ONE, 2),
    (LambdaClass.XI, LambdaClass.THETA): (LambdaClass.THETA, 1),
    (LambdaClass.THETA, LambdaClass.XI): (LambdaClass.THETA, 1),
    (LambdaClass.THETA, LambdaClass.THETA): (LambdaClass.THETA, 2),
}


def class_mul(a: LambdaClass, b: LambdaClass) -> tuple[LambdaClass, int]:
    """Return (c, s) with a*b = d**s * c."""
    if a is LambdaClass.ONE:
        return b, 0
    if b is LambdaClass.ONE:
        return a, 0
    return _CLASS_TABLE[a, b]


def pi_class(c: LambdaClass) -> int:
    """Delta exponent of the type-A specialization xi -> d, theta -> d^2."""
    return int(c)


class LambdaScalar:
    """``coeff * cls``; the zero scalar is stored as (ONE, 0)."""

    __slots__ = ("cls", "coeff")

    def __init__(self, cls: LambdaClass = LambdaClass.ONE, coeff: LaurentPoly | int = ONE_POLY):
        if isinstance(coeff, int):
            coeff = LaurentPoly.const(coeff)
        if coeff.is_zero():
            cls = LambdaClass.ONE
        self.cls = LambdaClass(cls)
        self.coeff = coeff

    @classmethod
    def zero(cls) -> LambdaScalar:
        return cls(LambdaClass.ONE, ZERO)

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def __mul__(self, other: LambdaScalar) -> LambdaScalar:
        return scalar_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LambdaScalar):
            return NotImplemented
        return self.cls == other.cls and self.coeff == other.coeff

    def __hash__(self) -> int:
        return hash((self.cls, self.coeff))

    def __str__(self) -> str:
        return f"{self.cls.token}*({self.coeff})"

    def __repr__(self) -> str:
        return f"LambdaScalar({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> LambdaScalar:
        m = re.fullmatch(r"\s*(1|xi|theta)\s*\*\s*\((.*)\)\s*", text)
        if m is None:
            raise ValueError(f"bad scalar text: {text!r}")
        return cls(LambdaClass.from_token(m.group(1)), LaurentPoly.parse(m.group(2)))


def scalar_mul(a: LambdaScalar, b: LambdaScalar) -> LambdaScalar:
    c, s = class_mul(a.cls, b.cls)
    return LambdaScalar(c, (a.coeff * b.coeff).shift(s))
