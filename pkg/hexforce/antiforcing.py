"""Anti-forcing numbers, anti-forcing spectra and anti-forcing polynomials"""
from __future__ import annotations

import logging
from collections import Counter
from typing import Optional, Sequence

from hexforce.config import Settings, get_settings
from hexforce.errors import (
    CapExceededError,
    EmptyPolynomialError,
    MethodMismatchError,
    UnsupportedGraphError,
)
from hexforce.forcing import Target, resolve_target, minimum_hitting_subset, spectrum_of
from hexforce.hexsystem import to_graph
from hexforce.matching import (
    count_perfect_matchings,
    enumerate_perfect_matchings,
    face_masks,
    find_alternating_cycle,
    max_compatible_faces,
    max_compatible_restricted,
    require_perfect_matching,
)
from hexforce.models import Graph, HexSystem, Matching, mask_of
from hexforce.poly.intpoly import IntPoly
from hexforce.schemas import AntiForcingResult, Method, SpectrumReport

logger = logging.getLogger(__name__)


def anti_forcing_number(g: Graph, m: Matching, system: Optional[HexSystem] = None) -> AntiForcingResult:
    """Smallest S ⊆ E(g) \\ m such that m is the only perfect matching of g − S.

    The search starts from the compatible-set lower bound: the restricted
    family for pyrene chains, compatible alternating faces for other benzenoids.
    """
    require_perfect_matching(g, m)
    pool = [e for e in range(g.num_edges) if not m.mask >> e & 1]

    lower = 0
    obstructions: list[int] = []
    if system is not None and system.is_chain_family and to_graph(system) is g:
        lower = max_compatible_restricted(system, m).size
    elif g.has_faces:
        lower = max_compatible_faces(g, m).size
    if g.has_faces:
        obstructions = [fm.edges & ~m.mask for fm in face_masks(g) if fm.is_alternating(m.mask)]

    def isolates(s_mask: int) -> bool:
        if count_perfect_matchings(g, forbidden=s_mask, limit=2) == 1:
            return True
        cycle = find_alternating_cycle(g, m.mask, removed_edges=s_mask)
        if cycle is not None:
            obstructions.append(mask_of(cycle) & ~m.mask)
        return False

    for size in range(lower, len(pool) + 1):
        witness = minimum_hitting_subset(pool, size, obstructions, isolates)
        if witness is not None:
            logger.debug("anti-forcing number %d (lower bound %d, %d obstructions)", size, lower, len(obstructions))
            return AntiForcingResult(value=size, witness_set=list(witness), method=Method.DEFINITION)
    # deleting every unmatched edge leaves m alone
    raise AssertionError("unreachable: E(g) \\ m is an anti-forcing set")


def anti_forcing_number_oracle(system: HexSystem, m: Matching) -> AntiForcingResult:
    """af(H_n, M) as the maximum compatible set of hexagons and triphenylene peripheries"""
    if not system.is_chain_family:
        raise UnsupportedGraphError("The compatible-set oracle applies to pyrene chains only")
    report = max_compatible_restricted(system, m)
    return AntiForcingResult(
        value=report.size,
        witness_set=[],
        method=Method.COMPATIBLE_ORACLE,
        witness_cycles=report.witnesses,
    )


def anti_forcing_results(
    target: Target,
    method: Method = Method.DEFINITION,
    settings: Optional[Settings] = None,
) -> list[AntiForcingResult]:
    """Anti-forcing result of every perfect matching, in enumeration order"""
    settings = settings or get_settings()
    method = Method(method)
    system, g = resolve_target(target)
    matchings = enumerate_perfect_matchings(g)
    if not matchings:
        raise EmptyPolynomialError(f"{g.name} has no perfect matching")

    if method == Method.COMPATIBLE_ORACLE:
        if system is None or not system.is_chain_family:
            raise MethodMismatchError("The compatible-set oracle applies to pyrene chains only")
        return [anti_forcing_number_oracle(system, m) for m in matchings]
    if method != Method.DEFINITION:
        raise MethodMismatchError(f"Method {method.value} does not compute anti-forcing numbers")

    width = g.num_edges - g.num_vertices // 2
    if len(matchings) > settings.brute_antiforcing_max_matchings:
        raise CapExceededError(
            f"{g.name} has {len(matchings)} perfect matchings, "
            f"cap is {settings.brute_antiforcing_max_matchings}"
        )
    if width > settings.brute_antiforcing_max_width:
        raise CapExceededError(
            f"{g.name} has {width} unmatched edges per matching, "
            f"cap is {settings.brute_antiforcing_max_width}"
        )
    return [anti_forcing_number(g, m, system) for m in matchings]


def anti_forcing_values(
    target: Target,
    method: Method = Method.DEFINITION,
    settings: Optional[Settings] = None,
) -> list[int]:
    """Anti-forcing number of every perfect matching, in enumeration order"""
    return [r.value for r in anti_forcing_results(target, method, settings)]


def anti_forcing_polynomial(
    target: Target,
    method: Method = Method.DEFINITION,
    settings: Optional[Settings] = None,
) -> IntPoly:
    """Af(G, x): coefficient of x^i counts perfect matchings with anti-forcing number i"""
    return IntPoly.from_histogram(Counter(anti_forcing_values(target, method, settings)))


def anti_forcing_spectrum(
    target: Target,
    method: Method = Method.DEFINITION,
    settings: Optional[Settings] = None,
) -> SpectrumReport:
    """Spec_af(G) with multiplicities"""
    return spectrum_of(anti_forcing_polynomial(target, method, settings))


def is_anti_forcing_set(g: Graph, m: Matching, edges: Sequence[int]) -> bool:
    """Whether deleting ``edges`` (disjoint from m) leaves m as the unique perfect matching"""
    s_mask = mask_of(edges)
    if s_mask & m.mask:
        return False
    return count_perfect_matchings(g, forbidden=s_mask, limit=2) == 1
