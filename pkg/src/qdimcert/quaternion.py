"""Quaternions over the golden field.

The algebra is the Hamilton quaternions with coefficients in Q(sqrt 5); it is
a division algebra, which is what makes the nonvanishing arguments in
:mod:`qdimcert.affine` work.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .golden import ONE, ZERO, GoldenLike, GoldenNum

QuatLike = Union["Quaternion", GoldenNum, int, Fraction]


class Quaternion:
    __slots__ = ("w", "x", "y", "z", "_hash")

    def __init__(self, w: GoldenLike = 0, x: GoldenLike = 0, y: GoldenLike = 0,
                 z: GoldenLike = 0) -> None:
        self.w = GoldenNum.coerce(w)
        self.x = GoldenNum.coerce(x)
        self.y = GoldenNum.coerce(y)
        self.z = GoldenNum.coerce(z)
        self._hash = None

    @classmethod
    def coerce(cls, value: QuatLike) -> Quaternion:
        if isinstance(value, Quaternion):
            return value
        return cls(GoldenNum.coerce(value))

    @property
    def coefficients(self) -> tuple[GoldenNum, GoldenNum, GoldenNum, GoldenNum]:
        return (self.w, self.x, self.y, self.z)

    def __add__(self, other: QuatLike) -> Quaternion:
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other: QuatLike) -> Quaternion:
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return Quaternion(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, other: QuatLike) -> Quaternion:
        return Quaternion.coerce(other) - self

    def __mul__(self, other: QuatLike) -> Quaternion:
        if isinstance(other, (GoldenNum, int, Fraction)):
            c = GoldenNum.coerce(other)
            return Quaternion(self.w * c, self.x * c, self.y * c, self.z * c)
        if not isinstance(other, Quaternion):
            return NotImplemented
        a1, b1, c1, d1 = self.w, self.x, self.y, self.z
        a2, b2, c2, d2 = other.w, other.x, other.y, other.z
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other: GoldenLike) -> Quaternion:
        # scalars are central
        if isinstance(other, (GoldenNum, int, Fraction)):
            return self * other
        return NotImplemented

    def conjugate(self) -> Quaternion:
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> GoldenNum:
        """Reduced norm w^2 + x^2 + y^2 + z^2."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self) -> Quaternion:
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of the zero quaternion")
        return self.conjugate() * n.inverse()

    def __truediv__(self, other: GoldenLike) -> Quaternion:
        if isinstance(other, (GoldenNum, int, Fraction)):
            return self * GoldenNum.coerce(other).inverse()
        return NotImplemented

    def __pow__(self, exponent: int) -> Quaternion:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = Quaternion(ONE), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Quaternion):
            return (self.w == other.w and self.x == other.x
                    and self.y == other.y and self.z == other.z)
        if isinstance(other, (GoldenNum, int, Fraction)):
            return self == Quaternion.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.w, self.x, self.y, self.z))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.w) or bool(self.x) or bool(self.y) or bool(self.z)

    def __repr__(self) -> str:
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"

    def __str__(self) -> str:
        return f"({self.w}) + ({self.x})*i + ({self.y})*j + ({self.z})*k"

    @classmethod
    def parse(cls, text: str) -> Quaternion:
        m = _QUAT_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"not a quaternion: {text!r}")
        return cls(*(GoldenNum.parse(g) for g in m.groups()))


_QUAT_RE = re.compile(
    r"\(([^()]*)\)\s*\+\s*\(([^()]*)\)\*i\s*\+\s*\(([^()]*)\)\*j\s*\+\s*\(([^()]*)\)\*k"
)

QZERO = Quaternion(ZERO)
QONE = Quaternion(ONE)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)
