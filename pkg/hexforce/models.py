"""Core domain types: hexagonal cells, hexagonal systems, graphs and perfect matchings"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple, Optional

from hexforce.errors import InvalidParameterError


AXIAL_DIRECTIONS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


class Cell(NamedTuple):
    """A hexagonal cell in axial coordinates"""
    q: int
    r: int

    def neighbors(self) -> list["Cell"]:
        return [Cell(self.q + dq, self.r + dr) for dq, dr in AXIAL_DIRECTIONS]

    def is_adjacent(self, other: "Cell") -> bool:
        return (other.q - self.q, other.r - self.r) in AXIAL_DIRECTIONS


def label(kind: str, i: int, j: int) -> str:
    """Role tag of a labeled cell, e.g. ``label("h", 1, 2) == "h(1,2)"``"""
    return f"{kind}({i},{j})"


@dataclass(frozen=True)
class HexSystem:
    """A finite connected set of hexagonal cells.

    Family-built systems (pyrene chains and their auxiliary systems) also
    carry role labels h(i,1), h(i,2), s(i,1), s(i,2) and the chain length.
    """
    cells: frozenset[Cell]
    labels: tuple[tuple[str, Cell], ...] = ()
    family: Optional[str] = None
    n: Optional[int] = None

    @property
    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def cell(self, tag: str) -> Cell:
        for name, cell in self.labels:
            if name == tag:
                return cell
        raise InvalidParameterError(f"System has no cell labeled {tag}")

    @property
    def is_chain_family(self) -> bool:
        """True for pyrene chains and their auxiliary systems"""
        return self.family in ("pyrene_chain", "auxiliary")


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple bipartite graph with planar vertex coordinates.

    ``coords`` are integer lattice points (x in units of sqrt(3)/2, y in
    units of 1/2), ``colors`` is a proper 2-coloring and ``faces`` holds one
    6-cycle per cell for cell-derived graphs (``None`` otherwise).
    """
    coords: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]
    faces: Optional[tuple[tuple[int, ...], ...]] = None
    face_cells: Optional[tuple[Cell, ...]] = None
    name: str = field(default="graph")

    @property
    def num_vertices(self) -> int:
        return len(self.coords)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def has_faces(self) -> bool:
        return self.faces is not None

    @cached_property
    def token(self) -> str:
        """Structural identity used to tie matchings to their host graph"""
        digest = hashlib.sha1(repr((self.coords, self.edges)).encode()).hexdigest()
        return digest[:16]

    @cached_property
    def full_vertex_mask(self) -> int:
        return (1 << self.num_vertices) - 1

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the (neighbor, edge index) pairs in edge-index order"""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.num_vertices)]
        for e, (u, v) in enumerate(self.edges):
            adj[u].append((v, e))
            adj[v].append((u, e))
        return tuple(tuple(row) for row in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {(u, v): e for e, (u, v) in enumerate(self.edges)}

    @cached_property
    def edge_vertex_masks(self) -> tuple[int, ...]:
        return tuple((1 << u) | (1 << v) for u, v in self.edges)

    def edge_between(self, u: int, v: int) -> Optional[int]:
        return self.edge_index.get((min(u, v), max(u, v)))

    def bipartition_sizes(self) -> tuple[int, int]:
        black = sum(1 for c in self.colors if c == 0)
        return black, self.num_vertices - black

    def cycle_edges(self, cycle: tuple[int, ...] | list[int]) -> list[int]:
        """Edge indices along a closed vertex sequence.

        Raises InvalidParameterError unless ``cycle`` is a simple cycle of
        this graph.
        """
        if len(cycle) < 3 or len(set(cycle)) != len(cycle):
            raise InvalidParameterError(f"Not a simple cycle: {list(cycle)}")
        edges = []
        for k, u in enumerate(cycle):
            v = cycle[(k + 1) % len(cycle)]
            e = self.edge_between(u, v)
            if e is None:
                raise InvalidParameterError(f"Vertices {u} and {v} are not adjacent")
            edges.append(e)
        return edges

    def vertices_of_edges(self, edge_mask: int) -> int:
        mask = 0
        for e in iter_bits(edge_mask):
            mask |= self.edge_vertex_masks[e]
        return mask


@dataclass(frozen=True)
class Matching:
    """A perfect matching stored as a bit set over the host's edge indices"""
    mask: int
    host: str

    def __contains__(self, edge: int) -> bool:
        return bool(self.mask >> edge & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def symmetric_difference(self, edge_mask: int) -> "Matching":
        return Matching(self.mask ^ edge_mask, self.host)
