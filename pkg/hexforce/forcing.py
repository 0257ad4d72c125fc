"""Forcing numbers, forcing spectra and forcing polynomials"""
from __future__ import annotations

import logging
from collections import Counter
from typing import Callable, Optional, Sequence, Union

from hexforce.config import Settings, get_settings
from hexforce.errors import (
    CapExceededError,
    EmptyPolynomialError,
    MethodMismatchError,
    UnsupportedGraphError,
)
from hexforce.hexsystem import to_graph
from hexforce.matching import (
    count_perfect_matchings,
    enumerate_perfect_matchings,
    face_masks,
    find_alternating_cycle,
    max_disjoint_alternating_hexagons,
    require_perfect_matching,
)
from hexforce.models import Graph, HexSystem, Matching, mask_of
from hexforce.poly.intpoly import IntPoly
from hexforce.schemas import ForcingResult, Method, SpectrumReport

logger = logging.getLogger(__name__)

Target = Union[Graph, HexSystem]


def _hits_all(obstructions: list[int], chosen: int, tail: int, remaining: int) -> bool:
    """Whether every unhit obstruction can still be hit with ``remaining`` picks.

    Pairwise disjoint unhit obstructions need one pick each.
    """
    used = 0
    need = 0
    for o in obstructions:
        if o & chosen:
            continue
        live = o & tail
        if not live:
            return False
        if not live & used:
            used |= live
            need += 1
            if need > remaining:
                return False
    return True


def minimum_hitting_subset(
    pool: Sequence[int],
    size: int,
    obstructions: list[int],
    accept: Callable[[int], bool],
) -> Optional[tuple[int, ...]]:
    """
    First subset of ``pool`` of the given size, in lexicographic order, accepted by ``accept``.

    Candidates must hit every obstruction mask; ``accept`` may append new
    obstructions when it rejects a candidate, which prunes the rest of the search.

    Args:
        pool: Sorted edge indices to choose from
        size: Subset size
        obstructions: Edge masks every accepted subset must intersect
        accept: Final test on the subset's edge mask

    Returns:
        The accepted subset, or None
    """
    tails = [0] * (len(pool) + 1)
    for pos in range(len(pool) - 1, -1, -1):
        tails[pos] = tails[pos + 1] | (1 << pool[pos])

    chosen: list[int] = []

    def extend(start: int, mask: int) -> Optional[tuple[int, ...]]:
        remaining = size - len(chosen)
        if not _hits_all(obstructions, mask, tails[start], remaining):
            return None
        if remaining == 0:
            return tuple(chosen) if accept(mask) else None
        for pos in range(start, len(pool) - remaining + 1):
            e = pool[pos]
            chosen.append(e)
            found = extend(pos + 1, mask | (1 << e))
            chosen.pop()
            if found is not None:
                return found
        return None

    return extend(0, 0)


def forcing_number(g: Graph, m: Matching) -> ForcingResult:
    """Smallest S ⊆ m contained in no other perfect matching, by definition.

    Subsets are searched by ascending size and then lexicographically; the
    search starts at the number of disjoint alternating hexagons when g has faces.
    """
    require_perfect_matching(g, m)
    pool = list(m.edges)

    lower = 0
    obstructions: list[int] = []
    if g.has_faces:
        lower = max_disjoint_alternating_hexagons(g, m).size
        obstructions = [fm.matched_edges(m.mask) for fm in face_masks(g) if fm.is_alternating(m.mask)]

    def forces(s_mask: int) -> bool:
        covered = g.vertices_of_edges(s_mask)
        if count_perfect_matchings(g, covered=covered, limit=2) == 1:
            return True
        cycle = find_alternating_cycle(g, m.mask, removed_vertices=covered)
        if cycle is not None:
            obstructions.append(mask_of(cycle) & m.mask)
        return False

    for size in range(lower, len(pool) + 1):
        witness = minimum_hitting_subset(pool, size, obstructions, forces)
        if witness is not None:
            logger.debug("forcing number %d (lower bound %d, %d obstructions)", size, lower, len(obstructions))
            return ForcingResult(value=size, witness_set=list(witness), method=Method.DEFINITION)
    # m itself always forces
    raise AssertionError("unreachable: the full matching is a forcing set")


def forcing_number_oracle(system: HexSystem, m: Matching) -> ForcingResult:
    """f(H_n, M) as the maximum number of disjoint M-alternating hexagons"""
    if not system.is_chain_family:
        raise UnsupportedGraphError("The hexagon oracle applies to pyrene chains only")
    g = to_graph(system)
    require_perfect_matching(g, m)
    report = max_disjoint_alternating_hexagons(g, m)
    return ForcingResult(
        value=report.size,
        witness_set=[],
        method=Method.HEXAGON_ORACLE,
        witness_cycles=report.witnesses,
    )


def resolve_target(target: Target) -> tuple[Optional[HexSystem], Graph]:
    if isinstance(target, HexSystem):
        return target, to_graph(target)
    return None, target


def forcing_results(
    target: Target,
    method: Method = Method.DEFINITION,
    settings: Optional[Settings] = None,
) -> list[ForcingResult]:
    """Forcing result of every perfect matching, in enumeration order"""
    settings = settings or get_settings()
    method = Method(method)
    system, g = resolve_target(target)
    matchings = enumerate_perfect_matchings(g)
    if not matchings:
        raise EmptyPolynomialError(f"{g.name} has no perfect matching")

    if method == Method.HEXAGON_ORACLE:
        if system is None or not system.is_chain_family:
            raise MethodMismatchError("The hexagon oracle applies to pyrene chains only")
        return [forcing_number_oracle(system, m) for m in matchings]
    if method != Method.DEFINITION:
        raise MethodMismatchError(f"Method {method.value} does not compute forcing numbers")

    if len(matchings) > settings.brute_forcing_max_matchings:
        raise CapExceededError(
            f"{g.name} has {len(matchings)} perfect matchings, "
            f"cap is {settings.brute_forcing_max_matchings}"
        )
    return [forcing_number(g, m) for m in matchings]


def forcing_values(
    target: Target,
    method: Method = Method.DEFINITION,
    settings: Optional[Settings] = None,
) -> list[int]:
    """Forcing number of every perfect matching, in enumeration order"""
    return [r.value for r in forcing_results(target, method, settings)]


def forcing_polynomial(
    target: Target,
    method: Method = Method.DEFINITION,
    settings: Optional[Settings] = None,
) -> IntPoly:
    """F(G, x): coefficient of x^i counts perfect matchings with forcing number i"""
    return IntPoly.from_histogram(Counter(forcing_values(target, method, settings)))


def spectrum_of(poly: IntPoly) -> SpectrumReport:
    """Histogram, min and max exponent of a counting polynomial"""
    if poly.is_zero():
        raise EmptyPolynomialError("The zero polynomial has no spectrum")
    histogram = {i: c for i, c in enumerate(poly.coeffs) if c}
    return SpectrumReport(histogram=histogram, min=poly.valuation(), max=poly.degree())


def forcing_spectrum(
    target: Target,
    method: Method = Method.DEFINITION,
    settings: Optional[Settings] = None,
) -> SpectrumReport:
    """Spec_f(G) with multiplicities"""
    return spectrum_of(forcing_polynomial(target, method, settings))


def is_forcing_set(g: Graph, m: Matching, edges: Sequence[int]) -> bool:
    """Whether ``edges`` ⊆ m lies in no other perfect matching"""
    s_mask = mask_of(edges)
    if s_mask & ~m.mask:
        return False
    return count_perfect_matchings(g, covered=g.vertices_of_edges(s_mask), limit=2) == 1

