"""Anti-forcing numbers by definition and by the compatible-set oracle"""
import pytest

from hexforce.antiforcing import (
    anti_forcing_number,
    anti_forcing_number_oracle,
    anti_forcing_polynomial,
    anti_forcing_spectrum,
    anti_forcing_values,
    is_anti_forcing_set,
)
from hexforce.config import Settings
from hexforce.errors import CapExceededError, MethodMismatchError, UnsupportedGraphError
from hexforce.hexsystem import build_auxiliary_system, build_pyrene_chain, to_graph
from hexforce.matching import count_perfect_matchings, enumerate_perfect_matchings
from hexforce.models import Graph
from hexforce.poly.intpoly import IntPoly
from hexforce.poly.sequences import antiforcing_poly_recurrence
from hexforce.schemas import Method


def test_seed_polynomial(h1):
    assert anti_forcing_polynomial(h1) == IntPoly([0, 2, 2, 2])


def test_benzene(benzene):
    for m in enumerate_perfect_matchings(benzene):
        result = anti_forcing_number(benzene, m)
        assert result.value == 1
        (edge,) = result.witness_set
        assert edge not in m
        assert count_perfect_matchings(benzene, forbidden=1 << edge) == 1


def test_witnesses_are_minimum(h1):
    g = to_graph(h1)
    for m in enumerate_perfect_matchings(g):
        result = anti_forcing_number(g, m, h1)
        assert len(result.witness_set) == result.value
        assert not any(e in m for e in result.witness_set)
        assert is_anti_forcing_set(g, m, result.witness_set)
        assert not is_anti_forcing_set(g, m, result.witness_set[:-1])


def test_is_anti_forcing_set_rejects_matched_edges(h1):
    g = to_graph(h1)
    m = enumerate_perfect_matchings(g)[0]
    assert not is_anti_forcing_set(g, m, [m.edges[0]])
    unmatched = [e for e in range(g.num_edges) if e not in m]
    assert is_anti_forcing_set(g, m, unmatched)


def test_definition_without_system_uses_face_bound(h1):
    g = to_graph(h1)
    with_system = [anti_forcing_number(g, m, h1).value for m in enumerate_perfect_matchings(g)]
    without = [anti_forcing_number(g, m).value for m in enumerate_perfect_matchings(g)]
    assert with_system == without


def test_definition_matches_oracle_h1(h1):
    assert anti_forcing_values(h1) == anti_forcing_values(h1, Method.COMPATIBLE_ORACLE)


@pytest.mark.slow
def test_definition_matches_oracle_h2(h2):
    assert anti_forcing_values(h2) == anti_forcing_values(h2, Method.COMPATIBLE_ORACLE)


def test_auxiliary_definition_matches_oracle():
    system = build_auxiliary_system(1)
    assert anti_forcing_values(system) == anti_forcing_values(system, Method.COMPATIBLE_ORACLE)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_oracle_matches_recurrence(n):
    system = build_pyrene_chain(n)
    assert anti_forcing_polynomial(system, Method.COMPATIBLE_ORACLE) == antiforcing_poly_recurrence(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_oracle_matches_recurrence_large(n):
    system = build_pyrene_chain(n)
    assert anti_forcing_polynomial(system, Method.COMPATIBLE_ORACLE) == antiforcing_poly_recurrence(n)


def test_oracle_result(h2):
    g = to_graph(h2)
    m = enumerate_perfect_matchings(g)[0]
    result = anti_forcing_number_oracle(h2, m)
    assert result.method == Method.COMPATIBLE_ORACLE
    assert len(result.witness_cycles) == result.value


def test_oracle_needs_a_chain(phenanthrene, diphenyl):
    with pytest.raises(MethodMismatchError):
        anti_forcing_values(phenanthrene, Method.COMPATIBLE_ORACLE)
    with pytest.raises(MethodMismatchError):
        anti_forcing_values(diphenyl, Method.COMPATIBLE_ORACLE)


def test_hexagon_oracle_is_not_an_anti_forcing_method(h1):
    with pytest.raises(MethodMismatchError):
        anti_forcing_values(h1, Method.HEXAGON_ORACLE)


def test_caps(h1, h2):
    with pytest.raises(CapExceededError):
        anti_forcing_values(h2, settings=Settings(brute_antiforcing_max_matchings=10))
    with pytest.raises(CapExceededError):
        anti_forcing_values(h1, settings=Settings(brute_antiforcing_max_width=5))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_spectrum_is_interval(n):
    report = anti_forcing_spectrum(build_pyrene_chain(n), Method.COMPATIBLE_ORACLE)
    assert report.support == list(range(n, 3 * n + 1))
    assert report.contiguous


def test_null_graph_polynomial():
    null = Graph(coords=(), edges=(), colors=())
    (m,) = enumerate_perfect_matchings(null)
    assert m.mask == 0
    assert anti_forcing_polynomial(null) == IntPoly([1])


def test_oracle_function_rejects_raw_cells(phenanthrene):
    m = enumerate_perfect_matchings(to_graph(phenanthrene))[0]
    with pytest.raises(UnsupportedGraphError):
        anti_forcing_number_oracle(phenanthrene, m)
