"""generate: cells and graph statistics of an input system"""
import json

from hexforce.commands import load_input
from hexforce.config import Settings
from hexforce.schemas import GraphStats, RunConfig

HEADER = ("vertices", "edges", "faces", "black", "white", "cells")


def run(config: RunConfig, settings: Settings) -> GraphStats:
    system, g = load_input(config)
    cells = system.sorted_cells if system is not None else sorted(g.face_cells or ())
    return GraphStats(
        cells=[[c.q, c.r] for c in cells],
        vertices=g.num_vertices,
        edges=g.num_edges,
        faces=len(g.faces) if g.has_faces else 0,
        bipartition=list(g.bipartition_sizes()),
    )


def csv_rows(report: GraphStats) -> tuple[tuple[str, ...], list[list]]:
    black, white = report.bipartition
    cells = json.dumps(report.cells, separators=(",", ":"))
    return HEADER, [[report.vertices, report.edges, report.faces, black, white, cells]]
