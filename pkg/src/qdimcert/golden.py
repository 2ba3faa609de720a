"""Exact arithmetic in the golden field Q(sqrt 5).

Elements are stored as ``a + b*phi`` with ``phi**2 == phi + 1``.  The
coefficients are exact rationals, held as integer numerators over a
shared denominator and exposed as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Union

GoldenLike = Union["GoldenNum", int, Fraction]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


class GoldenNum:
    # a = _p / _d, b = _q / _d in lowest terms with _d > 0; one gcd per
    # operation instead of one per Fraction step
    __slots__ = ("_p", "_q", "_d")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0) -> None:
        a, b = _frac(a), _frac(b)
        d = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        self._p = a.numerator * (d // a.denominator)
        self._q = b.numerator * (d // b.denominator)
        self._d = d

    @classmethod
    def _make(cls, p: int, q: int, d: int) -> GoldenNum:
        g = math.gcd(math.gcd(p, q), d)
        if d < 0:
            g = -g
        obj = object.__new__(cls)
        if g != 1:
            p, q, d = p // g, q // g, d // g
        obj._p, obj._q, obj._d = p, q, d
        return obj

    @property
    def a(self) -> Fraction:
        return Fraction(self._p, self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._q, self._d)

    @classmethod
    def coerce(cls, value: GoldenLike) -> GoldenNum:
        if isinstance(value, GoldenNum):
            return value
        if isinstance(value, int):
            return cls._make(value, 0, 1)
        return cls(_frac(value), 0)

    # -- ring operations ------------------------------------------------

    def __add__(self, other: GoldenLike) -> GoldenNum:
        try:
            o = GoldenNum.coerce(other)
        except TypeError:
            return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return GoldenNum._make(self._p + o._p, self._q + o._q, d1)
        return GoldenNum._make(self._p * d2 + o._p * d1, self._q * d2 + o._q * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> GoldenNum:
        obj = object.__new__(GoldenNum)
        obj._p, obj._q, obj._d = -self._p, -self._q, self._d
        return obj

    def __sub__(self, other: GoldenLike) -> GoldenNum:
        try:
            o = GoldenNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: GoldenLike) -> GoldenNum:
        return GoldenNum.coerce(other) - self

    def __mul__(self, other: GoldenLike) -> GoldenNum:
        try:
            o = GoldenNum.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._p, self._q, o._p, o._q
        # (a + b phi)(c + d phi) = ac + (ad + bc) phi + bd (phi + 1)
        bd = b * d
        return GoldenNum._make(a * c + bd, a * d + b * c + bd, self._d * o._d)

    __rmul__ = __mul__

    def conjugate(self) -> GoldenNum:
        """Galois conjugate, phi -> 1 - phi."""
        return GoldenNum._make(self._p + self._q, -self._q, self._d)

    def field_norm(self) -> Fraction:
        # (a + b phi)(a + b - b phi) = a^2 + ab - b^2
        a, b = self._p, self._q
        return Fraction(a * a + a * b - b * b, self._d * self._d)

    def inverse(self) -> GoldenNum:
        a, b, d = self._p, self._q, self._d
        n = a * a + a * b - b * b
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 5)")
        # d (a + b - b phi) / n
        return GoldenNum._make(d * (a + b), -d * b, n)

    def __truediv__(self, other: GoldenLike) -> GoldenNum:
        try:
            o = GoldenNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: GoldenLike) -> GoldenNum:
        return GoldenNum.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> GoldenNum:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GoldenNum):
            return self._p == other._p and self._q == other._q and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._q == 0 and Fraction(self._p, self._d) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._p, self._q, self._d))

    def __bool__(self) -> bool:
        return bool(self._p) or bool(self._q)

    def sign(self) -> int:
        """Sign of the value under phi -> (1 + sqrt 5)/2.

        This is the only ordering information exposed; it exists for norm
        positivity checks.
        """
        # a + b phi = (m + b sqrt5) / 2 with m = 2a + b
        # the positive denominator does not change the sign
        m = 2 * self._p + self._q
        n = self._q
        sm = (m > 0) - (m < 0)
        sn = (n > 0) - (n < 0)
        if sm == 0:
            return sn
        if sn == 0 or sm == sn:
            return sm
        # opposite signs: compare m^2 with 5 n^2
        diff = m * m - 5 * n * n
        return sm if diff > 0 else -sm

    # -- rendering ------------------------------------------------------

    def __repr__(self) -> str:
        return f"GoldenNum({self.a!s}, {self.b!s})"

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*phi"

    @classmethod
    def parse(cls, text: str) -> GoldenNum:
        m = _GOLDEN_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"not a golden number: {text!r}")
        return cls(Fraction(m.group(1)), Fraction(m.group(2)))


_RAT = r"-?\d+(?:/\d+)?"
_GOLDEN_RE = re.compile(rf"({_RAT})\s*\+\s*({_RAT})\*phi")

ZERO = GoldenNum(0, 0)
ONE = GoldenNum(1, 0)
PHI = GoldenNum(0, 1)
