"""Dense univariate polynomials with arbitrary-precision integer coefficients"""
from __future__ import annotations

from typing import Iterable, Mapping, Union


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    # Strip trailing zeros; the zero polynomial is the empty tuple
    coeffs = list(coeffs)
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    """
    Polynomial over the integers, ``coeffs[i]`` is the coefficient of x**i.

    Instances are immutable and always canonical (no trailing zero).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = tuple(coeffs)
        if any(not isinstance(c, int) or isinstance(c, bool) for c in coeffs):
            raise TypeError(f"Coefficients must be integers, got {coeffs!r}")
        self._coeffs = _normalize(coeffs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def from_histogram(cls, histogram: Mapping[int, int]) -> "IntPoly":
        """Polynomial whose x**k coefficient is histogram[k]"""
        if not histogram:
            return cls()
        coeffs = [0] * (max(histogram) + 1)
        for k, count in histogram.items():
            coeffs[k] += count
        return cls(coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial"""
        return len(self._coeffs) - 1

    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient; -1 for the zero polynomial"""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return -1

    def __getitem__(self, i: int) -> int:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self._coeffs)

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return self.scale(other)
        if not self._coeffs or not other._coeffs:
            return IntPoly()
        res = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                res[i + j] += a * b
        return IntPoly(res)

    __rmul__ = __mul__

    def scale(self, k: int) -> "IntPoly":
        return IntPoly(k * c for c in self._coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self._coeffs) if i)

    def eval_at(self, x: int) -> int:
        """Horner evaluation, exact"""
        result = 0
        for c in reversed(self._coeffs):
            result = result * x + c
        return result

    __call__ = eval_at

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self._coeffs)})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(value: Union[IntPoly, int]) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly.constant(value)
    raise TypeError(f"Cannot combine IntPoly with {type(value).__name__}")
