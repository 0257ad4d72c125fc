"""Builders for pyrene chains, auxiliary systems and small benzenoids.

Cells live in axial coordinates. Corners are placed on an integer lattice
where a pointy-top cell (q, r) has its center at (2q + r, 3r) and corner k at
center + CORNER_OFFSETS[k]; shared corners are deduplicated by those exact
coordinates.
"""
from __future__ import annotations

import json
import logging
from collections import Counter
from functools import lru_cache
from typing import Iterable, Optional, Union

import networkx as nx
from pydantic import TypeAdapter, ValidationError

from hexforce.errors import InvalidParameterError, ParseError
from hexforce.models import Cell, Graph, HexSystem, label
from hexforce.schemas import CellsDocument, FamilyDocument, NamedDocument, SystemDocument

logger = logging.getLogger(__name__)

CORNER_OFFSETS = ((1, 1), (0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1))

NAMED_SYSTEMS = ("pyrene", "phenanthrene", "diphenyl")

_document_adapter = TypeAdapter(SystemDocument)


def cell_center(cell: Cell) -> tuple[int, int]:
    return 2 * cell.q + cell.r, 3 * cell.r


def cell_corners(cell: Cell) -> list[tuple[int, int]]:
    x, y = cell_center(cell)
    return [(x + dx, y + dy) for dx, dy in CORNER_OFFSETS]


def is_connected(cells: Iterable[Cell]) -> bool:
    cells = set(cells)
    if not cells:
        return False
    adjacency = nx.Graph()
    adjacency.add_nodes_from(cells)
    adjacency.add_edges_from((cell, nb) for cell in cells for nb in cell.neighbors() if nb in cells)
    return nx.is_connected(adjacency)


def _require_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}")


def _chain_labels(n: int) -> list[tuple[str, Cell]]:
    labels = []
    for i in range(1, n + 1):
        labels.append((label("h", i, 1), Cell(2 * i - 2, 0)))
        labels.append((label("h", i, 2), Cell(2 * i - 1, 0)))
        labels.append((label("s", i, 1), Cell(2 * i - 2, 1)))
        labels.append((label("s", i, 2), Cell(2 * i - 1, -1)))
    return labels


def build_pyrene_chain(n: int) -> HexSystem:
    """Pyrene chain H_n: n fragments of four cells, consecutive fragments
    sharing the edge between h(i,2) and h(i+1,1)."""
    _require_positive(n)
    labels = _chain_labels(n)
    return HexSystem(
        cells=frozenset(cell for _, cell in labels),
        labels=tuple(labels),
        family="pyrene_chain",
        n=n,
    )


def build_auxiliary_system(n: int) -> HexSystem:
    """H_n without its leftmost hexagon h(1,1)"""
    _require_positive(n)
    labels = [(tag, cell) for tag, cell in _chain_labels(n) if tag != label("h", 1, 1)]
    return HexSystem(
        cells=frozenset(cell for _, cell in labels),
        labels=tuple(labels),
        family="auxiliary",
        n=n,
    )


def build_auxiliary(n: int) -> Graph:
    """Graph of the auxiliary system G_n"""
    return to_graph(build_auxiliary_system(n))


def build_cells(cells: Iterable[Union[Cell, tuple[int, int]]]) -> HexSystem:
    """Arbitrary connected benzenoid from a cell list; chain families are recognized"""
    cell_set = frozenset(Cell(*c) for c in cells)
    if not cell_set:
        raise InvalidParameterError("A hexagonal system needs at least one cell")
    if not is_connected(cell_set):
        raise InvalidParameterError("Cells are not connected")
    return _recognize_family(cell_set) or HexSystem(cells=cell_set)


def _recognize_family(cells: frozenset[Cell]) -> Optional[HexSystem]:
    if len(cells) % 4 == 0:
        chain = build_pyrene_chain(len(cells) // 4)
        if chain.cells == cells:
            return chain
    if len(cells) % 4 == 3:
        aux = build_auxiliary_system(len(cells) // 4 + 1)
        if aux.cells == cells:
            return aux
    return None


def _graph_from_cells(cells: list[Cell], name: str) -> tuple[list, list, list, list]:
    """Vertices, edges, colors and faces for the given cells in this order"""
    index: dict[tuple[int, int], int] = {}
    coords: list[tuple[int, int]] = []
    colors: list[int] = []
    edges: list[tuple[int, int]] = []
    seen_edges: set[tuple[int, int]] = set()
    faces: list[tuple[int, ...]] = []

    for cell in cells:
        face = []
        for k, corner in enumerate(cell_corners(cell)):
            if corner not in index:
                index[corner] = len(coords)
                coords.append(corner)
                colors.append(k % 2)
            face.append(index[corner])
        for k in range(6):
            u, v = face[k], face[(k + 1) % 6]
            key = (min(u, v), max(u, v))
            if key not in seen_edges:
                seen_edges.add(key)
                edges.append(key)
        faces.append(tuple(face))

    logger.debug("%s: %d vertices, %d edges, %d faces", name, len(coords), len(edges), len(faces))
    return coords, edges, colors, faces


@lru_cache(maxsize=128)
def to_graph(system: HexSystem) -> Graph:
    """Vertex/edge graph of a hexagonal system with its face registry"""
    cells = system.sorted_cells
    name = f"{system.family}({system.n})" if system.family else f"cells[{len(cells)}]"
    coords, edges, colors, faces = _graph_from_cells(cells, name)
    return Graph(
        coords=tuple(coords),
        edges=tuple(edges),
        colors=tuple(colors),
        faces=tuple(faces),
        face_cells=tuple(cells),
        name=name,
    )


def _build_diphenyl() -> Graph:
    # Two separate rings; corner 5 of the first is bridged to corner 2 of the second
    cells = [Cell(0, 0), Cell(2, -1)]
    coords, edges, colors, faces = _graph_from_cells(cells, "diphenyl")
    index = {c: i for i, c in enumerate(coords)}
    first = index[cell_corners(cells[0])[5]]
    second = index[cell_corners(cells[1])[2]]
    edges.append((min(first, second), max(first, second)))
    return Graph(
        coords=tuple(coords),
        edges=tuple(edges),
        colors=tuple(colors),
        faces=tuple(faces),
        face_cells=tuple(cells),
        name="diphenyl",
    )


def named_system(name: str) -> Optional[HexSystem]:
    """Cell system behind a named graph, ``None`` for diphenyl"""
    if name == "pyrene":
        return build_pyrene_chain(1)
    if name == "phenanthrene":
        return HexSystem(cells=frozenset({Cell(0, 1), Cell(0, 0), Cell(1, -1)}))
    if name == "diphenyl":
        return None
    raise InvalidParameterError(f"Unknown named graph '{name}'. Allowed: {', '.join(NAMED_SYSTEMS)}")


def build_named(name: str) -> Graph:
    """Pyrene, phenanthrene or diphenyl"""
    system = named_system(name)
    if system is None:
        return _build_diphenyl()
    return to_graph(system)


def _boundary_cycle(graph: Graph, cells: list[Cell]) -> tuple[int, ...]:
    """Outer boundary of a simply connected union of cells, as a vertex cycle.

    Starts at the smallest vertex and heads to its smaller boundary neighbor.
    """
    face_of = dict(zip(graph.face_cells, graph.faces))
    multiplicity: Counter[tuple[int, int]] = Counter()
    for cell in cells:
        face = face_of[cell]
        for k in range(6):
            u, v = face[k], face[(k + 1) % 6]
            multiplicity[min(u, v), max(u, v)] += 1

    boundary = nx.Graph([edge for edge, count in multiplicity.items() if count == 1])
    start = min(boundary)
    cycle = [u for u, _ in nx.find_cycle(boundary, source=start)]
    k = cycle.index(start)
    cycle = cycle[k:] + cycle[:k]
    if cycle[-1] < cycle[1]:
        cycle = [start] + cycle[:0:-1]
    return tuple(cycle)


def triphenylene_quadruples(system: HexSystem) -> list[tuple[str, list[str]]]:
    """Center tag and member tags of every junction triphenylene"""
    if not system.is_chain_family:
        raise InvalidParameterError("Triphenylene peripheries are defined for pyrene chains only")
    quadruples = []
    for i in range(1, system.n):
        quadruples.append((
            label("h", i, 2),
            [label("s", i, 1), label("s", i, 2), label("h", i, 2), label("h", i + 1, 1)],
        ))
        quadruples.append((
            label("h", i + 1, 1),
            [label("h", i, 2), label("h", i + 1, 1), label("s", i + 1, 1), label("s", i + 1, 2)],
        ))
    return quadruples


def triphenylene_peripheries(system: HexSystem) -> list[tuple[int, ...]]:
    """Peripheries (18-cycles) of the two triphenylenes at each chain junction"""
    graph = to_graph(system)
    return [
        _boundary_cycle(graph, [system.cell(tag) for tag in members])
        for _, members in triphenylene_quadruples(system)
    ]


# --- Documents ------------------------------------------------------------------

def parse_document(text: Union[bytes, str]) -> SystemDocument:
    """Validate a JSON system document"""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Malformed JSON: {e.msg}", line=e.lineno, column=e.colno) from e
    except UnicodeDecodeError as e:
        raise ParseError(f"Document is not UTF-8: {e}") from e

    try:
        return _document_adapter.validate_python(raw)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(p) for p in first["loc"])
        raise ParseError(f"Invalid system document: {first['msg']}", field=field) from e


def system_from_document(doc: SystemDocument) -> Optional[HexSystem]:
    """Cell system for a document; ``None`` when the document names diphenyl"""
    try:
        if isinstance(doc, FamilyDocument):
            if doc.family == "pyrene_chain":
                return build_pyrene_chain(doc.n)
            return build_auxiliary_system(doc.n)
        if isinstance(doc, NamedDocument):
            return named_system(doc.named)
        return build_cells(doc.cells)
    except InvalidParameterError as e:
        raise ParseError(str(e), field="cells" if isinstance(doc, CellsDocument) else None) from e


def parse_system(text: Union[bytes, str]) -> HexSystem:
    """Parse a document into a HexSystem; family specs expand to cell lists"""
    doc = parse_document(text)
    system = system_from_document(doc)
    if system is None:
        raise ParseError("Diphenyl is not a hexagonal system", field="named")
    return system


def load_graph(text: Union[bytes, str]) -> tuple[Optional[HexSystem], Graph]:
    """System (when there is one) and graph for any document, diphenyl included"""
    doc = parse_document(text)
    system = system_from_document(doc)
    if system is None:
        return None, build_named("diphenyl")
    return system, to_graph(system)


def serialize_system(system: HexSystem) -> bytes:
    """Explicit {"cells": [...]} form, cells sorted lexicographically"""
    doc = {"cells": [[c.q, c.r] for c in system.sorted_cells]}
    return json.dumps(doc).encode("utf-8")
