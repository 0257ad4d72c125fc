"""Perfect matching enumeration, counting and alternating-cycle primitives"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx

from hexforce.errors import InvalidParameterError, UnsupportedGraphError
from hexforce.hexsystem import to_graph, triphenylene_peripheries
from hexforce.models import Graph, HexSystem, Matching, iter_bits
from hexforce.schemas import AltSetReport
from hexforce.search_engine import ConflictSearchEngine

logger = logging.getLogger(__name__)


# --- Enumeration and counting ------------------------------------------------

def is_perfect_matching(g: Graph, mask: int) -> bool:
    if mask >> g.num_edges:
        return False
    covered = 0
    for e in iter_bits(mask):
        vm = g.edge_vertex_masks[e]
        if covered & vm:
            return False
        covered |= vm
    return covered == g.full_vertex_mask


def require_perfect_matching(g: Graph, m: Matching) -> None:
    if m.host != g.token or not is_perfect_matching(g, m.mask):
        raise InvalidParameterError(f"Edges {list(m.edges)} are not a perfect matching of {g.name}")


def iter_perfect_matchings(g: Graph, covered: int = 0, forbidden: int = 0) -> Iterator[int]:
    """Yield perfect matchings of g − covered vertices − forbidden edges as edge masks.

    Branches on the lowest-indexed uncovered vertex, edges in index order.
    """
    full = g.full_vertex_mask
    adj = g.adjacency
    dead: set[int] = set()

    def branch(cov: int, acc: int) -> Iterator[int]:
        if cov == full:
            yield acc
            return
        if cov in dead:
            return
        free = full & ~cov
        v = (free & -free).bit_length() - 1
        found = False
        for w, e in adj[v]:
            if cov >> w & 1 or forbidden >> e & 1:
                continue
            for result in branch(cov | (1 << v) | (1 << w), acc | (1 << e)):
                found = True
                yield result
        if not found:
            dead.add(cov)

    if (g.num_vertices - covered.bit_count()) % 2 == 0:
        yield from branch(covered, 0)


def count_perfect_matchings(
    g: Graph,
    covered: int = 0,
    forbidden: int = 0,
    limit: Optional[int] = None,
) -> int:
    """Number of perfect matchings of g − covered vertices − forbidden edges.

    With ``limit`` the count is capped, which lets uniqueness tests stop at 2.
    """
    if (g.num_vertices - covered.bit_count()) % 2:
        return 0
    full = g.full_vertex_mask
    adj = g.adjacency
    memo: dict[int, int] = {}

    def count(cov: int) -> int:
        if cov == full:
            return 1
        if cov in memo:
            return memo[cov]
        free = full & ~cov
        v = (free & -free).bit_length() - 1
        total = 0
        for w, e in adj[v]:
            if cov >> w & 1 or forbidden >> e & 1:
                continue
            total += count(cov | (1 << v) | (1 << w))
            if limit is not None and total >= limit:
                total = limit
                break
        memo[cov] = total
        return total

    return count(covered)


@lru_cache(maxsize=16)
def _matching_masks(g: Graph) -> tuple[int, ...]:
    masks = sorted(iter_perfect_matchings(g), key=lambda mask: tuple(iter_bits(mask)))
    logger.debug("%s: %d perfect matchings", g.name, len(masks))
    return tuple(masks)


def enumerate_perfect_matchings(g: Graph) -> list[Matching]:
    """All perfect matchings, ordered lexicographically by sorted edge indices"""
    if g.num_vertices % 2:
        return []
    return [Matching(mask, g.token) for mask in _matching_masks(g)]


def count_matchings_containing(g: Graph, s: Iterable[int]) -> int:
    """Number of perfect matchings of g that contain every edge of s"""
    covered = 0
    for e in set(s):
        if not 0 <= e < g.num_edges:
            raise InvalidParameterError(f"Edge {e} is not an edge of {g.name}")
        vm = g.edge_vertex_masks[e]
        if covered & vm:
            return 0
        covered |= vm
    return count_perfect_matchings(g, covered=covered)


def find_alternating_cycle(
    g: Graph,
    m_mask: int,
    removed_vertices: int = 0,
    removed_edges: int = 0,
) -> Optional[list[int]]:
    """Edges of some m-alternating cycle avoiding the removed parts, or None.

    Orients matched edges black to white and the rest white to black; the
    directed cycles of that orientation are exactly the alternating cycles.
    """
    oriented = nx.DiGraph()
    for e, (u, v) in enumerate(g.edges):
        if removed_edges >> e & 1 or (removed_vertices >> u & 1) or (removed_vertices >> v & 1):
            continue
        black, white = (u, v) if g.colors[u] == 0 else (v, u)
        if m_mask >> e & 1:
            oriented.add_edge(black, white, index=e)
        else:
            oriented.add_edge(white, black, index=e)
    try:
        arcs = nx.find_cycle(oriented)
    except nx.NetworkXNoCycle:
        return None
    return [oriented.edges[u, v]["index"] for u, v in arcs]


# --- Alternating structure -------------------------------------------------------

def is_alternating_cycle(g: Graph, m: Matching, cycle: Sequence[int]) -> bool:
    """True iff the edges along ``cycle`` alternate in and out of m"""
    edges = g.cycle_edges(cycle)
    if len(edges) % 2:
        raise InvalidParameterError(f"Cycle of odd length {len(edges)} cannot alternate")
    flags = [bool(m.mask >> e & 1) for e in edges]
    return all(flags[k] != flags[(k + 1) % len(flags)] for k in range(len(flags)))


class CycleMasks:
    """Vertex mask, edge mask and the two alternating halves of one cycle"""

    __slots__ = ("cycle", "vertices", "edges", "even", "odd")

    def __init__(self, g: Graph, cycle: Sequence[int]):
        edges = g.cycle_edges(cycle)
        self.cycle = tuple(cycle)
        self.vertices = sum(1 << v for v in cycle)
        self.edges = sum(1 << e for e in edges)
        self.even = sum(1 << e for e in edges[0::2])
        self.odd = sum(1 << e for e in edges[1::2])

    def is_alternating(self, m_mask: int) -> bool:
        return (m_mask & self.even) == self.even or (m_mask & self.odd) == self.odd

    def matched_edges(self, m_mask: int) -> int:
        return self.edges & m_mask


@lru_cache(maxsize=64)
def face_masks(g: Graph) -> tuple[CycleMasks, ...]:
    if not g.has_faces:
        raise UnsupportedGraphError(f"{g.name} has no face registry")
    return tuple(CycleMasks(g, face) for face in g.faces)


def alternating_hexagons(g: Graph, m: Matching) -> list[tuple[int, ...]]:
    """Faces of g that are m-alternating"""
    return [fm.cycle for fm in face_masks(g) if fm.is_alternating(m.mask)]


def compatible(g: Graph, m_mask: int, a: CycleMasks, b: CycleMasks) -> bool:
    """Disjoint, or meeting only in edges of the matching"""
    shared_vertices = a.vertices & b.vertices
    if not shared_vertices:
        return True
    shared_edges = a.edges & b.edges
    if shared_edges & ~m_mask:
        return False
    return g.vertices_of_edges(shared_edges) & shared_vertices == shared_vertices


def max_disjoint_alternating_hexagons(g: Graph, m: Matching) -> AltSetReport:
    """h(M): maximum number of pairwise vertex-disjoint m-alternating faces"""
    candidates = [fm for fm in face_masks(g) if fm.is_alternating(m.mask)]
    engine = ConflictSearchEngine.from_predicate(
        candidates, lambda a, b: bool(a.vertices & b.vertices)
    )
    chosen = engine.maximum_independent_set()
    return AltSetReport(size=len(chosen), witnesses=[list(candidates[i].cycle) for i in chosen])


def _max_compatible(g: Graph, m: Matching, masks: Iterable[CycleMasks]) -> AltSetReport:
    candidates = [cm for cm in masks if cm.is_alternating(m.mask)]
    engine = ConflictSearchEngine.from_predicate(
        candidates, lambda a, b: not compatible(g, m.mask, a, b)
    )
    chosen = engine.maximum_independent_set()
    return AltSetReport(size=len(chosen), witnesses=[list(candidates[i].cycle) for i in chosen])


def max_compatible_faces(g: Graph, m: Matching) -> AltSetReport:
    """Compatible alternating faces only; a lower bound on c'(M) for any benzenoid"""
    return _max_compatible(g, m, face_masks(g))


@lru_cache(maxsize=64)
def restricted_cycle_masks(system: HexSystem) -> tuple[CycleMasks, ...]:
    """Faces followed by the junction triphenylene peripheries"""
    g = to_graph(system)
    peripheries = tuple(CycleMasks(g, c) for c in triphenylene_peripheries(system))
    return face_masks(g) + peripheries


def max_compatible_restricted(system: HexSystem, m: Matching) -> AltSetReport:
    """c'(M) for pyrene chains: compatible sets of hexagons and triphenylene peripheries"""
    if not system.is_chain_family:
        raise UnsupportedGraphError("The restricted compatible-set oracle needs a pyrene chain")
    g = to_graph(system)
    require_perfect_matching(g, m)
    return _max_compatible(g, m, restricted_cycle_masks(system))
