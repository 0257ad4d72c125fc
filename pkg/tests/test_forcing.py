"""Forcing numbers by definition and by the disjoint-hexagon oracle"""
import pytest

from hexforce.config import Settings
from hexforce.errors import (
    CapExceededError,
    EmptyPolynomialError,
    MethodMismatchError,
    UnsupportedGraphError,
)
from hexforce.forcing import (
    forcing_number,
    forcing_number_oracle,
    forcing_polynomial,
    forcing_results,
    forcing_spectrum,
    forcing_values,
    is_forcing_set,
    minimum_hitting_subset,
)
from hexforce.hexsystem import build_auxiliary_system, build_pyrene_chain, to_graph
from hexforce.matching import count_matchings_containing, enumerate_perfect_matchings
from hexforce.models import Graph
from hexforce.poly.intpoly import IntPoly
from hexforce.poly.sequences import forcing_poly_recurrence
from hexforce.schemas import Method


def test_seed_polynomials(h1, phenanthrene, diphenyl):
    assert forcing_polynomial(h1) == IntPoly([0, 2, 4])
    assert forcing_polynomial(phenanthrene) == IntPoly([0, 1, 4])
    assert forcing_polynomial(diphenyl) == IntPoly([0, 0, 4])


def test_auxiliary_seed(g1):
    assert forcing_polynomial(g1) == IntPoly([0, 1, 4])


def test_benzene(benzene):
    for m in enumerate_perfect_matchings(benzene):
        result = forcing_number(benzene, m)
        assert result.value == 1
        assert result.method == Method.DEFINITION
        assert count_matchings_containing(benzene, result.witness_set) == 1


def test_witnesses_are_minimum(h2):
    g = to_graph(h2)
    for m in enumerate_perfect_matchings(g):
        result = forcing_number(g, m)
        assert len(result.witness_set) == result.value
        assert set(result.witness_set) <= set(m.edges)
        assert is_forcing_set(g, m, result.witness_set)
        if result.value:
            assert not is_forcing_set(g, m, result.witness_set[:-1])


def test_is_forcing_set_rejects_foreign_edges(h1):
    g = to_graph(h1)
    m = enumerate_perfect_matchings(g)[0]
    outside = next(e for e in range(g.num_edges) if e not in m)
    assert not is_forcing_set(g, m, [outside])
    assert is_forcing_set(g, m, m.edges)


@pytest.mark.parametrize("n", [1, 2])
def test_definition_matches_oracle(n):
    system = build_pyrene_chain(n)
    assert forcing_values(system) == forcing_values(system, Method.HEXAGON_ORACLE)


@pytest.mark.slow
def test_definition_matches_oracle_h3(h3):
    assert forcing_values(h3) == forcing_values(h3, Method.HEXAGON_ORACLE)


@pytest.mark.parametrize("n", [1, 2])
def test_auxiliary_definition_matches_oracle(n):
    system = build_auxiliary_system(n)
    assert forcing_values(system) == forcing_values(system, Method.HEXAGON_ORACLE)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_oracle_matches_recurrence(n):
    assert forcing_polynomial(build_pyrene_chain(n), Method.HEXAGON_ORACLE) == forcing_poly_recurrence(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_oracle_matches_recurrence_large(n):
    assert forcing_polynomial(build_pyrene_chain(n), Method.HEXAGON_ORACLE) == forcing_poly_recurrence(n)


def test_oracle_result_carries_hexagons(h2):
    g = to_graph(h2)
    for m in enumerate_perfect_matchings(g):
        result = forcing_number_oracle(h2, m)
        assert result.method == Method.HEXAGON_ORACLE
        assert result.witness_set == []
        assert len(result.witness_cycles) == result.value
        used = [v for cycle in result.witness_cycles for v in cycle]
        assert len(used) == len(set(used))


def test_oracle_needs_a_chain(phenanthrene):
    with pytest.raises(MethodMismatchError):
        forcing_values(phenanthrene, Method.HEXAGON_ORACLE)
    m = enumerate_perfect_matchings(to_graph(phenanthrene))[0]
    with pytest.raises(UnsupportedGraphError):
        forcing_number_oracle(phenanthrene, m)


def test_oracle_rejects_raw_graphs(diphenyl):
    with pytest.raises(MethodMismatchError):
        forcing_values(diphenyl, "hexagon-oracle")


def test_matching_cap(h2):
    with pytest.raises(CapExceededError):
        forcing_values(h2, settings=Settings(brute_forcing_max_matchings=10))


def test_empty_polynomial(path3):
    with pytest.raises(EmptyPolynomialError):
        forcing_polynomial(path3)


def test_results_follow_enumeration_order(h1):
    g = to_graph(h1)
    results = forcing_results(h1)
    assert len(results) == len(enumerate_perfect_matchings(g))
    assert [r.value for r in results] == forcing_values(h1)


@pytest.mark.parametrize("n", [1, 2])
def test_spectrum_is_interval(n):
    report = forcing_spectrum(build_pyrene_chain(n))
    assert (report.min, report.max) == (n, 2 * n)
    assert report.support == list(range(n, 2 * n + 1))
    assert report.contiguous


def test_minimum_hitting_subset_prefers_lexicographic_order():
    pool = [1, 3, 5, 7]
    found = minimum_hitting_subset(pool, 2, [], lambda mask: bool(mask >> 5 & 1))
    assert found == (1, 5)


def test_minimum_hitting_subset_respects_obstructions():
    pool = [0, 1, 2, 3]
    obstructions = [0b1000, 0b0100]
    found = minimum_hitting_subset(pool, 2, obstructions, lambda mask: True)
    assert found == (2, 3)
    assert minimum_hitting_subset(pool, 1, obstructions, lambda mask: True) is None


def test_null_graph_has_one_empty_matching():
    null = Graph(coords=(), edges=(), colors=())
    (m,) = enumerate_perfect_matchings(null)
    assert m.mask == 0
    assert forcing_number(null, m).value == 0
    assert forcing_polynomial(null) == IntPoly([1])
