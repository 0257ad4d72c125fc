"""Exact arithmetic in the quadratic field Q(sqrt 2)"""
from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Union

from hexforce.errors import ConsistencyError

Rational = Union[int, Fraction]


class QuadRat:
    """a + b*sqrt(2) with rational a and b"""

    __slots__ = ("a", "b")

    def __init__(self, a: Rational = 0, b: Rational = 0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def conjugate(self) -> "QuadRat":
        """Galois conjugate a - b*sqrt(2)"""
        return QuadRat(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 2 * self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_integer(self) -> int:
        """The value as an integer; a nonzero sqrt(2) part or a fraction is a consistency failure"""
        if self.b != 0:
            raise ConsistencyError(f"Closed form left an irrational residue {self.b}*sqrt(2)")
        if self.a.denominator != 1:
            raise ConsistencyError(f"Closed form is not integral: {self.a}")
        return self.a.numerator

    def to_decimal(self, prec: int = 50) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = prec
            a = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            b = Decimal(self.b.numerator) / Decimal(self.b.denominator)
            return +(a + b * Decimal(2).sqrt())

    def __add__(self, other: Union["QuadRat", Rational]) -> "QuadRat":
        other = _lift(other)
        return QuadRat(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "QuadRat":
        return QuadRat(-self.a, -self.b)

    def __sub__(self, other: Union["QuadRat", Rational]) -> "QuadRat":
        return self + (-_lift(other))

    def __rsub__(self, other: Rational) -> "QuadRat":
        return _lift(other) - self

    def __mul__(self, other: Union["QuadRat", Rational]) -> "QuadRat":
        other = _lift(other)
        return QuadRat(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Union["QuadRat", Rational]) -> "QuadRat":
        other = _lift(other)
        mag = other.norm()
        if mag == 0:
            raise ZeroDivisionError("Division by zero in Q(sqrt 2)")
        scaled = self * other.conjugate()
        return QuadRat(scaled.a / mag, scaled.b / mag)

    def __rtruediv__(self, other: Rational) -> "QuadRat":
        return _lift(other) / self

    def __pow__(self, power: int) -> "QuadRat":
        if power < 0:
            return QuadRat(1) / (self ** -power)
        result = QuadRat(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadRat(other)
        if not isinstance(other, QuadRat):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"QuadRat({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {abs(self.b)}*sqrt(2)"


def _lift(value: Union[QuadRat, Rational]) -> QuadRat:
    if isinstance(value, QuadRat):
        return value
    if isinstance(value, (int, Fraction)):
        return QuadRat(value)
    raise TypeError(f"Cannot combine QuadRat with {type(value).__name__}")
