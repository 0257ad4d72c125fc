"""Perfect matching enumeration, alternating cycles and compatible sets"""
import numpy as np
import pytest

from hexforce.errors import InvalidParameterError, UnsupportedGraphError
from hexforce.hexsystem import build_auxiliary, build_named, build_pyrene_chain, to_graph
from hexforce.matching import (
    alternating_hexagons,
    count_matchings_containing,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    face_masks,
    find_alternating_cycle,
    is_alternating_cycle,
    is_perfect_matching,
    max_compatible_faces,
    max_compatible_restricted,
    max_disjoint_alternating_hexagons,
    require_perfect_matching,
)
from hexforce.models import Graph, Matching
from hexforce.search_engine import ConflictSearchEngine


@pytest.mark.parametrize(
    "make, count",
    [
        (lambda: to_graph(build_pyrene_chain(1)), 6),
        (lambda: to_graph(build_pyrene_chain(2)), 35),
        (lambda: to_graph(build_pyrene_chain(3)), 204),
        (lambda: build_auxiliary(1), 5),
        (lambda: build_auxiliary(2), 29),
        (lambda: build_named("phenanthrene"), 5),
        (lambda: build_named("diphenyl"), 4),
    ],
)
def test_matching_counts(make, count):
    g = make()
    assert count_perfect_matchings(g) == count
    assert len(enumerate_perfect_matchings(g)) == count


def test_enumeration_is_sorted_and_valid(h2):
    g = to_graph(h2)
    matchings = enumerate_perfect_matchings(g)
    keys = [m.edges for m in matchings]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    for m in matchings:
        assert is_perfect_matching(g, m.mask)
        assert len(m) == g.num_vertices // 2


def test_no_perfect_matching(path3):
    assert enumerate_perfect_matchings(path3) == []
    assert count_perfect_matchings(path3) == 0


def test_count_limit_caps(h2):
    assert count_perfect_matchings(to_graph(h2), limit=2) == 2


def test_count_matchings_containing(h1):
    g = to_graph(h1)
    m = enumerate_perfect_matchings(g)[0]
    assert count_matchings_containing(g, m.edges) == 1
    assert count_matchings_containing(g, []) == 6
    assert 1 <= count_matchings_containing(g, m.edges[:1]) <= 6
    with pytest.raises(InvalidParameterError):
        count_matchings_containing(g, [g.num_edges])


def test_count_matchings_containing_adjacent_edges(benzene):
    # edges 0 and 1 share a corner
    assert count_matchings_containing(benzene, [0, 1]) == 0


def test_foreign_matching_is_rejected(h1, h2):
    m = enumerate_perfect_matchings(to_graph(h1))[0]
    with pytest.raises(InvalidParameterError):
        require_perfect_matching(to_graph(h2), m)


def test_benzene_flip(benzene):
    first, second = enumerate_perfect_matchings(benzene)
    (face,) = alternating_hexagons(benzene, first)
    assert first.symmetric_difference(face_masks(benzene)[0].edges) == second
    assert is_alternating_cycle(benzene, first, face)


def test_find_alternating_cycle(benzene):
    m = enumerate_perfect_matchings(benzene)[0]
    cycle = find_alternating_cycle(benzene, m.mask)
    assert sorted(cycle) == list(range(6))
    assert find_alternating_cycle(benzene, m.mask, removed_edges=1 << cycle[0]) is None
    assert find_alternating_cycle(benzene, m.mask, removed_vertices=1) is None


def test_alternating_cycles_flip_to_matchings(h2):
    g = to_graph(h2)
    for m in enumerate_perfect_matchings(g):
        assert find_alternating_cycle(g, m.mask, removed_vertices=g.full_vertex_mask) is None
        cycle = find_alternating_cycle(g, m.mask)
        assert cycle is not None
        flipped = m.mask ^ sum(1 << e for e in cycle)
        assert is_perfect_matching(g, flipped)


def test_alternating_cycle_edges_follow_the_cycle(h2):
    g = to_graph(h2)
    for m in enumerate_perfect_matchings(g):
        cycle = find_alternating_cycle(g, m.mask)
        flags = [bool(m.mask >> e & 1) for e in cycle]
        assert all(flags[k] != flags[k - 1] for k in range(len(flags)))
        ends = [set(g.edges[e]) for e in cycle]
        assert all(ends[k] & ends[k - 1] for k in range(len(ends)))


def test_odd_cycle_cannot_alternate():
    triangle = Graph(coords=((0, 0), (1, 0), (0, 1)), edges=((0, 1), (0, 2), (1, 2)), colors=(0, 1, 1))
    with pytest.raises(InvalidParameterError):
        is_alternating_cycle(triangle, Matching(1, triangle.token), [0, 1, 2])


def test_non_cycle_is_rejected(benzene):
    m = enumerate_perfect_matchings(benzene)[0]
    with pytest.raises(InvalidParameterError):
        is_alternating_cycle(benzene, m, [0, 0, 1, 2])


def test_faces_needed(path3):
    with pytest.raises(UnsupportedGraphError):
        face_masks(path3)


def test_symmetric_difference_closure(h2):
    g = to_graph(h2)
    for m in enumerate_perfect_matchings(g):
        for fm in face_masks(g):
            if fm.is_alternating(m.mask):
                assert is_perfect_matching(g, m.mask ^ fm.edges)


def test_disjoint_hexagons_bound_compatible_sets(h2):
    g = to_graph(h2)
    for m in enumerate_perfect_matchings(g):
        disjoint = max_disjoint_alternating_hexagons(g, m)
        faces = max_compatible_faces(g, m)
        restricted = max_compatible_restricted(h2, m)
        assert disjoint.size <= faces.size <= restricted.size
        assert len(disjoint.witnesses) == disjoint.size


def test_pyrene_extremes(h1):
    g = to_graph(h1)
    sizes = sorted(max_disjoint_alternating_hexagons(g, m).size for m in enumerate_perfect_matchings(g))
    assert sizes == [1, 1, 2, 2, 2, 2]


def test_single_pyrene_has_no_peripheries(h1):
    g = to_graph(h1)
    for m in enumerate_perfect_matchings(g):
        assert max_compatible_restricted(h1, m).size == max_compatible_faces(g, m).size


def test_restricted_needs_a_chain(phenanthrene):
    g = to_graph(phenanthrene)
    m = enumerate_perfect_matchings(g)[0]
    with pytest.raises(UnsupportedGraphError):
        max_compatible_restricted(phenanthrene, m)


class TestConflictSearchEngine:
    def test_path(self):
        conflicts = np.zeros((4, 4), dtype=bool)
        for i in range(3):
            conflicts[i, i + 1] = conflicts[i + 1, i] = True
        engine = ConflictSearchEngine(conflicts)
        best = engine.maximum_independent_set()
        assert best == [0, 2]
        stats = engine.get_stats()
        assert stats["candidates"] == 4
        assert stats["conflicts"] == 3
        assert stats["nodes_explored"] > 0

    def test_clique(self):
        engine = ConflictSearchEngine.from_predicate(list(range(3)), lambda a, b: True)
        assert len(engine.maximum_independent_set()) == 1

    def test_empty(self):
        engine = ConflictSearchEngine(np.zeros((0, 0), dtype=bool))
        assert engine.maximum_independent_set() == []

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            ConflictSearchEngine(np.zeros((2, 3), dtype=bool))
