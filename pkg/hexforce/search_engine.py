"""Branch-and-bound maximum independent set over small conflict graphs"""
import logging
from typing import List, Sequence

import numpy as np

logger = logging.getLogger(__name__)


class ConflictSearchEngine:
    """Exact maximum independent set of a conflict graph.

    The conflict graph is given as a symmetric boolean numpy matrix; vertices
    are the candidate cycles and an entry is True when two candidates may not
    be chosen together.
    """

    def __init__(self, conflicts: np.ndarray):
        conflicts = np.asarray(conflicts, dtype=bool)
        if conflicts.ndim != 2 or conflicts.shape[0] != conflicts.shape[1]:
            raise ValueError(f"Conflict matrix must be square, got shape {conflicts.shape}")
        self.size = conflicts.shape[0]
        # Closed neighborhoods as bit masks
        self.blocked = [
            (1 << i) | sum(1 << int(j) for j in np.flatnonzero(conflicts[i]))
            for i in range(self.size)
        ]
        self.nodes_explored = 0

    @classmethod
    def from_predicate(cls, items: Sequence, conflict) -> "ConflictSearchEngine":
        """Build the matrix from a pairwise ``conflict(a, b)`` predicate"""
        k = len(items)
        matrix = np.zeros((k, k), dtype=bool)
        for i in range(k):
            for j in range(i + 1, k):
                if conflict(items[i], items[j]):
                    matrix[i, j] = matrix[j, i] = True
        return cls(matrix)

    def maximum_independent_set(self) -> List[int]:
        """
        Largest set of pairwise non-conflicting vertices.

        Branches on the lowest-indexed candidate, trying inclusion first, and
        bounds by the number of remaining candidates. Among maximum sets the
        first one found in that order is returned, so results are deterministic.

        Returns:
            Sorted vertex indices of a maximum independent set
        """
        self.nodes_explored = 0
        best: List[int] = []

        def branch(candidates: int, chosen: List[int]) -> None:
            nonlocal best
            self.nodes_explored += 1
            if not candidates:
                if len(chosen) > len(best):
                    best = list(chosen)
                return
            if len(chosen) + candidates.bit_count() <= len(best):
                return
            v = (candidates & -candidates).bit_length() - 1
            chosen.append(v)
            branch(candidates & ~self.blocked[v], chosen)
            chosen.pop()
            branch(candidates & ~(1 << v), chosen)

        branch((1 << self.size) - 1, [])
        logger.debug("MIS over %d candidates: size %d, %d nodes", self.size, len(best), self.nodes_explored)
        return sorted(best)

    def get_stats(self) -> dict:
        """Search statistics of the last run"""
        return {
            "candidates": self.size,
            "nodes_explored": self.nodes_explored,
            "conflicts": sum((b & ~(1 << i)).bit_count() for i, b in enumerate(self.blocked)) // 2,
        }
