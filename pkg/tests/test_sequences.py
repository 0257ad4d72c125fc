"""Recurrences, closed forms and integer sequences of pyrene chains"""
import logging
from decimal import Decimal
from fractions import Fraction

import pytest

from hexforce.errors import InvalidParameterError
from hexforce.poly.intpoly import IntPoly
from hexforce.poly.quadrat import QuadRat
from hexforce.poly.sequences import (
    PHI_COEFFS,
    PHI_ROUTES,
    SUM_ROUTES,
    af_sum,
    antiforcing_poly_closed,
    antiforcing_poly_recurrence,
    asymptotic_gap,
    asymptotic_ratio,
    binomial,
    forcing_poly_closed,
    forcing_poly_recurrence,
    fourth_order_residuals,
    idf,
    phi,
    sequence_table,
)

PHI = [1, 6, 35, 204, 1189, 6930, 40391]
IDF = [0, 10, 118, 1036, 8068, 58854, 411978]
AF = [0, 12, 142, 1248, 9724, 70956, 496794, 3380640, 22531256]


def test_binomial_vanishes_outside_range():
    assert binomial(5, 2) == 10
    assert binomial(3, 4) == 0
    assert binomial(3, -1) == 0
    assert binomial(0, 0) == 1


@pytest.mark.parametrize(
    "n, coeffs",
    [
        (0, [1]),
        (1, [0, 2, 4]),
        (2, [0, 0, 3, 16, 16]),
    ],
)
def test_forcing_polynomials(n, coeffs):
    assert forcing_poly_recurrence(n) == IntPoly(coeffs)
    assert forcing_poly_closed(n) == IntPoly(coeffs)


@pytest.mark.parametrize(
    "n, coeffs",
    [
        (0, [1]),
        (1, [0, 2, 2, 2]),
        (2, [0, 0, 3, 8, 12, 8, 4]),
    ],
)
def test_antiforcing_polynomials(n, coeffs):
    assert antiforcing_poly_recurrence(n) == IntPoly(coeffs)
    assert antiforcing_poly_closed(n) == IntPoly(coeffs)


@pytest.mark.parametrize("n", range(21))
def test_recurrence_equals_closed_form(n):
    assert forcing_poly_recurrence(n) == forcing_poly_closed(n)
    assert antiforcing_poly_recurrence(n) == antiforcing_poly_closed(n)


@pytest.mark.parametrize("n", range(1, 21))
def test_degree_bounds(n):
    f = forcing_poly_recurrence(n)
    af = antiforcing_poly_recurrence(n)
    assert (f.valuation(), f.degree()) == (n, 2 * n)
    assert (af.valuation(), af.degree()) == (n, 3 * n)
    assert all(f[k] > 0 for k in range(n, 2 * n + 1))
    assert all(af[k] > 0 for k in range(n, 3 * n + 1))
    assert f(1) == af(1) == phi(n)


def test_seed_override():
    corrupted = IntPoly([0, 2, 5])
    assert forcing_poly_recurrence(1, corrupted) == corrupted
    assert forcing_poly_recurrence(2, corrupted) != forcing_poly_closed(2)


@pytest.mark.parametrize("n", [-1, -5])
def test_negative_index(n):
    for build in (forcing_poly_recurrence, antiforcing_poly_recurrence, forcing_poly_closed):
        with pytest.raises(InvalidParameterError):
            build(n)
    with pytest.raises(InvalidParameterError):
        phi(n)


@pytest.mark.parametrize("n, value", enumerate(PHI))
@pytest.mark.parametrize("route", PHI_ROUTES)
def test_phi(n, value, route):
    assert phi(n, route) == value


@pytest.mark.parametrize("n, value", enumerate(IDF))
@pytest.mark.parametrize("route", SUM_ROUTES)
def test_idf(n, value, route):
    assert idf(n, route) == value


@pytest.mark.parametrize("n, value", enumerate(AF))
@pytest.mark.parametrize("route", SUM_ROUTES)
def test_af_sum(n, value, route):
    assert af_sum(n, route) == value


@pytest.mark.parametrize("n", range(41))
def test_closed_forms_are_integral_up_to_40(n):
    assert phi(n, "closed_form") == phi(n)
    assert idf(n, "closed_form") == idf(n)
    assert af_sum(n, "closed_form") == af_sum(n)


def test_unknown_route():
    with pytest.raises(InvalidParameterError):
        phi(3, "poly_derivative")
    with pytest.raises(InvalidParameterError):
        idf(3, "poly_eval")


def test_fourth_order_recurrence():
    assert fourth_order_residuals([idf(n) for n in range(30)]) == [0] * 26
    assert fourth_order_residuals([af_sum(n) for n in range(30)]) == [0] * 26
    assert fourth_order_residuals([0, 0, 0, 0, 1]) == [1]


def test_asymptotic_ratio_small_n():
    assert asymptotic_ratio("idf", 1) == Fraction(5, 3)
    assert asymptotic_ratio("af_sum", 1) == 2
    with pytest.raises(InvalidParameterError):
        asymptotic_ratio("idf", 0)
    with pytest.raises(InvalidParameterError):
        asymptotic_ratio("phi", 3)


@pytest.mark.parametrize("kind", ["idf", "af_sum"])
def test_asymptotic_convergence(kind):
    gaps = [asymptotic_gap(kind, n) for n in range(1, 41)]
    magnitudes = [abs(g.gap) for g in gaps]
    assert magnitudes == sorted(magnitudes, reverse=True)
    assert len(set(magnitudes)) == len(magnitudes)
    assert magnitudes[-1] < Decimal("2e-3")
    assert abs(gaps[-1].corrected) < Decimal("1e-6")


def test_antiforcing_closed_form_audit(caplog):
    antiforcing_poly_closed.cache_clear()
    with caplog.at_level(logging.DEBUG, logger="hexforce.poly.sequences"):
        antiforcing_poly_closed(4)
    assert "0 of them nonzero" in caplog.text


def test_sequence_table():
    table = sequence_table("idf", 3)
    assert table.name == "idf"
    assert len(table.rows) == 4 * len(SUM_ROUTES)
    assert {row.value for row in table.rows if row.n == 3} == {1036}
    with pytest.raises(InvalidParameterError):
        sequence_table("fib", 3)


def test_phi_coefficients_are_rationalized():
    c_minus, c_plus = PHI_COEFFS
    assert c_minus == QuadRat(Fraction(1, 2), Fraction(-3, 8))
    assert c_plus == c_minus.conjugate()
    assert c_minus + c_plus == phi(0)


def test_sequence_table_ratios():
    table = sequence_table("af_sum", 2)
    assert [(r.n, r.ratio) for r in table.ratios] == [(1, "2/1"), (2, "71/35")]
    assert sequence_table("phi", 2).ratios == []
