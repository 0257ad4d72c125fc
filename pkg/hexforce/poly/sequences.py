"""
Forcing and anti-forcing polynomials of pyrene chains by recurrence and by
closed form, and the integer sequences derived from them:

    phi(n)     number of perfect matchings of H_n
    idf(n)     sum of forcing numbers over all perfect matchings
    af_sum(n)  sum of anti-forcing numbers over all perfect matchings

Every sequence has several independent computation routes; exact closed forms
are evaluated in Q(sqrt 2) and must come out integral.
"""
from __future__ import annotations

import logging
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple, Optional, Sequence

from hexforce.errors import InvalidParameterError
from hexforce.poly.intpoly import IntPoly
from hexforce.poly.quadrat import QuadRat
from hexforce.schemas import RatioRow, SequenceRow, SequenceTable

logger = logging.getLogger(__name__)

FORCING_STEP = IntPoly((0, 2, 4))            # 4x^2 + 2x
ANTIFORCING_STEP = IntPoly((0, 2, 2, 2))     # 2x^3 + 2x^2 + 2x
X_SQUARED = IntPoly((0, 0, 1))

# Roots of t^2 - 6t + 1
R_MINUS = QuadRat(3, -2)
R_PLUS = QuadRat(3, 2)

# phi(n) = c- r-^n + c+ r+^n
PHI_COEFFS = (QuadRat(17, -12) / QuadRat(16, -12), QuadRat(17, 12) / QuadRat(16, 12))

# (constant, coefficient of n) on r-^n, then on r+^n
IDF_COEFFS = (
    (QuadRat(0, 1) / 32, QuadRat(7, -5) / 8),
    (QuadRat(0, -1) / 32, QuadRat(7, 5) / 8),
)
AF_COEFFS = (
    (QuadRat(0, 3) / 64, QuadRat(17, -12) / 16),
    (QuadRat(0, -3) / 64, QuadRat(17, 12) / 16),
)

LIMITS = {
    "idf": QuadRat(1, Fraction(1, 2)),
    "af_sum": QuadRat(1, Fraction(3, 4)),
}
# ratio - limit = kappa / n + (exponentially small)
FIRST_ORDER = {
    "idf": QuadRat(Fraction(-3, 4), Fraction(1, 2)),
    "af_sum": QuadRat(Fraction(-9, 8), Fraction(3, 4)),
}

PHI_ROUTES = ("recurrence", "closed_form", "poly_eval")
SUM_ROUTES = ("poly_derivative", "recurrence", "closed_form")
SEQUENCE_ROUTES = {"phi": PHI_ROUTES, "idf": SUM_ROUTES, "af_sum": SUM_ROUTES}


def _require_index(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise InvalidParameterError(f"n must be a nonnegative integer, got {n!r}")


@lru_cache(maxsize=None)
def binomial(a: int, b: int) -> int:
    """C(a, b) by Pascal's rule; zero outside 0 <= b <= a"""
    if b < 0 or a < 0 or b > a:
        return 0
    if b == 0 or b == a:
        return 1
    return binomial(a - 1, b - 1) + binomial(a - 1, b)


# --- Polynomials --------------------------------------------------------------

@lru_cache(maxsize=256)
def _poly_table(step: IntPoly, seed: IntPoly, n: int) -> tuple[IntPoly, ...]:
    table = [IntPoly((1,)), seed]
    for _ in range(2, n + 1):
        table.append(step * table[-1] - X_SQUARED * table[-2])
    return tuple(table[: n + 1])


def forcing_poly_recurrence(n: int, seed: Optional[IntPoly] = None) -> IntPoly:
    """F(H_n, x) from F_n = (4x^2 + 2x) F_{n-1} - x^2 F_{n-2}.

    ``seed`` replaces F(H_1, x); validation uses it for fault injection.
    """
    _require_index(n)
    return _poly_table(FORCING_STEP, FORCING_STEP if seed is None else seed, n)[n]


def antiforcing_poly_recurrence(n: int) -> IntPoly:
    """Af(H_n, x) from Af_n = (2x^3 + 2x^2 + 2x) Af_{n-1} - x^2 Af_{n-2}"""
    _require_index(n)
    return _poly_table(ANTIFORCING_STEP, ANTIFORCING_STEP, n)[n]


@lru_cache(maxsize=64)
def forcing_poly_closed(n: int) -> IntPoly:
    _require_index(n)
    coeffs = [0] * (2 * n + 1)
    for j in range(n + 1):
        total = 0
        for i in range((j + n + 1) // 2, n + 1):
            sign = -1 if (n - i) % 2 else 1
            total += sign * 2 ** (2 * i + j - n) * binomial(i, n - i) * binomial(2 * i - n, j)
        coeffs[n + j] = total
    return IntPoly(coeffs)


@lru_cache(maxsize=64)
def antiforcing_poly_closed(n: int) -> IntPoly:
    """Triple binomial sum for Af(H_n, x).

    The inner index j runs up to l although C(2i - n, j) vanishes beyond
    2i - n; those terms are counted and logged.
    """
    _require_index(n)
    coeffs = [0] * (3 * n + 1)
    beyond = 0
    beyond_nonzero = 0
    for l in range(2 * n + 1):
        total = 0
        for i in range((l + 2 * n + 3) // 4, n + 1):
            sign = -1 if (n - i) % 2 else 1
            outer = sign * 2 ** (2 * i - n) * binomial(i, 2 * i - n)
            if not outer:
                continue
            for j in range((l + 1) // 2, l + 1):
                term = outer * binomial(2 * i - n, j) * binomial(j, l - j)
                if j > 2 * i - n:
                    beyond += 1
                    beyond_nonzero += bool(term)
                total += term
        coeffs[n + l] = total
    logger.debug(
        "Af closed form n=%d: %d terms with j > 2i-n, %d of them nonzero",
        n, beyond, beyond_nonzero,
    )
    return IntPoly(coeffs)


# --- Sequences ---------------------------------------------------------------

def _require_route(name: str, route: str) -> None:
    if route not in SEQUENCE_ROUTES[name]:
        raise InvalidParameterError(
            f"Unknown route {route!r} for {name}; expected one of {', '.join(SEQUENCE_ROUTES[name])}"
        )


@lru_cache(maxsize=None)
def _phi_recurrence(n: int) -> int:
    a, b = 1, 6
    for _ in range(n):
        a, b = b, 6 * b - a
    return a


def _closed(coeffs, n: int) -> int:
    (c1, c2), (c3, c4) = coeffs
    value = (c1 + c2 * n) * R_MINUS ** n + (c3 + c4 * n) * R_PLUS ** n
    return value.to_integer()


def phi(n: int, route: str = "recurrence") -> int:
    """Number of perfect matchings of H_n"""
    _require_index(n)
    _require_route("phi", route)
    if route == "recurrence":
        return _phi_recurrence(n)
    if route == "closed_form":
        c_minus, c_plus = PHI_COEFFS
        return (c_minus * R_MINUS ** n + c_plus * R_PLUS ** n).to_integer()
    return forcing_poly_recurrence(n).eval_at(1)


@lru_cache(maxsize=None)
def _mixed_recurrence(n: int, seed: int, weight: int) -> int:
    # X_n = 6 X_{n-1} - X_{n-2} + weight * phi_{n-1} - 2 phi_{n-2}
    if n == 0:
        return 0
    a, b = 0, seed
    for k in range(2, n + 1):
        a, b = b, 6 * b - a + weight * _phi_recurrence(k - 1) - 2 * _phi_recurrence(k - 2)
    return b


def idf(n: int, route: str = "recurrence") -> int:
    """Degree of freedom of H_n: the sum of forcing numbers over all perfect matchings"""
    _require_index(n)
    _require_route("idf", route)
    if route == "recurrence":
        return _mixed_recurrence(n, 10, 10)
    if route == "closed_form":
        return _closed(IDF_COEFFS, n)
    return forcing_poly_recurrence(n).derivative().eval_at(1)


def af_sum(n: int, route: str = "recurrence") -> int:
    """Sum of anti-forcing numbers over all perfect matchings of H_n"""
    _require_index(n)
    _require_route("af_sum", route)
    if route == "recurrence":
        return _mixed_recurrence(n, 12, 12)
    if route == "closed_form":
        return _closed(AF_COEFFS, n)
    return antiforcing_poly_recurrence(n).derivative().eval_at(1)


SEQUENCES: dict[str, Callable[[int, str], int]] = {"phi": phi, "idf": idf, "af_sum": af_sum}


def sequence_value(name: str, n: int, route: str) -> int:
    if name not in SEQUENCES:
        raise InvalidParameterError(f"Unknown sequence {name!r}")
    return SEQUENCES[name](n, route)


def sequence_table(name: str, max_n: int) -> SequenceTable:
    """Rows (n, route, value) for 0 <= n <= max_n, every registered route.

    The sums also carry their exact ratio to n * phi(n) for n >= 1.
    """
    _require_index(max_n)
    if name not in SEQUENCES:
        raise InvalidParameterError(f"Unknown sequence {name!r}")
    rows = [
        SequenceRow(n=n, route=route, value=sequence_value(name, n, route))
        for n in range(max_n + 1)
        for route in SEQUENCE_ROUTES[name]
    ]
    ratios = []
    if name in LIMITS:
        ratios = [RatioRow(n=n, ratio=format_ratio(asymptotic_ratio(name, n))) for n in range(1, max_n + 1)]
    return SequenceTable(name=name, rows=rows, ratios=ratios)


def format_ratio(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def fourth_order_residuals(values: Sequence[int]) -> list[int]:
    """X_{n+2} - (12 X_{n+1} - 38 X_n + 12 X_{n-1} - X_{n-2}) for every window of ``values``"""
    return [
        values[k + 2] - (12 * values[k + 1] - 38 * values[k] + 12 * values[k - 1] - values[k - 2])
        for k in range(2, len(values) - 2)
    ]


# --- Asymptotics --------------------------------------------------------------

class AsymptoticGap(NamedTuple):
    n: int
    ratio: Fraction
    gap: Decimal
    corrected: Decimal


def asymptotic_ratio(kind: str, n: int) -> Fraction:
    """IDF_n / (n phi_n) or AF_n / (n phi_n), exactly"""
    if kind not in LIMITS:
        raise InvalidParameterError(f"Unknown kind {kind!r}; expected idf or af_sum")
    if not isinstance(n, int) or n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}")
    return Fraction(sequence_value(kind, n, "recurrence"), n * phi(n))


def asymptotic_gap(kind: str, n: int, prec: int = 50) -> AsymptoticGap:
    """
    Distance of the exact ratio from its limit at ``prec`` significant digits.

    ``corrected`` is n * (ratio - limit) - kappa, which vanishes exponentially
    since the ratio converges like limit + kappa / n.
    """
    ratio = asymptotic_ratio(kind, n)
    with localcontext() as ctx:
        ctx.prec = prec
        exact = Decimal(ratio.numerator) / Decimal(ratio.denominator)
        gap = exact - LIMITS[kind].to_decimal(prec)
        corrected = n * gap - FIRST_ORDER[kind].to_decimal(prec)
    return AsymptoticGap(n=n, ratio=ratio, gap=gap, corrected=corrected)
