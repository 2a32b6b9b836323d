"""Exact arithmetic in the rationals and in the quadratic field Q(sqrt 5).

Rationals are plain :class:`fractions.Fraction` objects. :class:`GoldenNumber`
stores ``a + b*sqrt(5)`` with rational ``a`` and ``b`` and supports the field
operations, exact sign determination and ordering.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction

_SQRT5 = math.sqrt(5.0)

Scalar = Union[int, Fraction, "GoldenNumber"]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class GoldenNumber:
    """An element ``a + b*sqrt(5)`` of Q(sqrt 5). Immutable."""

    __slots__ = ("a", "b")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenNumber is immutable")

    @classmethod
    def coerce(cls, x: Scalar) -> GoldenNumber:
        if isinstance(x, GoldenNumber):
            return x
        if isinstance(x, (int, _RationalABC)):
            return cls(Fraction(x))
        raise TypeError(f"cannot convert {type(x).__name__} to GoldenNumber")

    # ring operations

    def __add__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldenNumber(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenNumber(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenNumber(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> GoldenNumber:
        """Galois conjugate ``a - b*sqrt(5)``."""
        return GoldenNumber(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 5 b^2``."""
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> GoldenNumber:
        nrm = self.norm()
        if nrm == 0:
            # a^2 = 5 b^2 has only the trivial rational solution
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        return GoldenNumber(self.a / nrm, -self.b / nrm)

    def __truediv__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = GoldenNumber(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ordering

    def sign(self) -> int:
        """Exact sign of the real number ``a + b*sqrt(5)``."""
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite signs: whichever of a^2, 5 b^2 is larger dominates
        d = self.a * self.a - 5 * self.b * self.b
        return sa if d > 0 else sb

    def __eq__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return golden_to_float(self)

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"GoldenNumber({self.a!s}, {self.b!s})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt5"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt5"


TAU = GoldenNumber(Fraction(1, 2), Fraction(1, 2))
SIGMA = GoldenNumber(Fraction(1, 2), Fraction(-1, 2))
SQRT5 = GoldenNumber(0, 1)
ZERO = GoldenNumber(0)
ONE = GoldenNumber(1)


def golden_add(x: Scalar, y: Scalar) -> GoldenNumber:
    return GoldenNumber.coerce(x) + y


def golden_sub(x: Scalar, y: Scalar) -> GoldenNumber:
    return GoldenNumber.coerce(x) - y


def golden_mul(x: Scalar, y: Scalar) -> GoldenNumber:
    return GoldenNumber.coerce(x) * y


def golden_div(x: Scalar, y: Scalar) -> GoldenNumber:
    """Exact quotient; raises :class:`ZeroDivisionError` when ``y == 0``."""
    return GoldenNumber.coerce(x) / y


def golden_sign(x: Scalar) -> int:
    return GoldenNumber.coerce(x).sign()


def golden_to_float(x: Scalar) -> float:
    """Nearest double to ``x`` (rendering boundary only)."""
    g = GoldenNumber.coerce(x)
    if g.b == 0:
        return float(g.a)
    if g.a == 0:
        return float(g.b) * _SQRT5
    fa, fb = float(g.a), float(g.b) * _SQRT5
    s = fa + fb
    # catastrophic cancellation: a - b*sqrt5 = (a^2 - 5b^2) / (a + b*sqrt5)
    if abs(s) < 1e-3 * max(abs(fa), abs(fb)):
        return float(g.norm()) / (fa - fb)
    return s
