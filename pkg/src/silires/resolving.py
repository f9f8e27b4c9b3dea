"""Distance codes and verification of vertex / edge resolving sets.

A landmark set is an ordered tuple of distinct vertex ids; the code of a
vertex (or edge) is its vector of distances to the landmarks in that order.
A set resolves the vertices (edges) when all codes are pairwise distinct.

Verification packs each code into bytes and runs a sort-based duplicate
scan, which keeps it cheap enough to sit in the exact solver's inner loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import GraphInputError
from .graphs import DistanceMatrix, Edge, Graph, bfs_distances

Code = tuple[int, ...]


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of a resolving-set check.

    ``witness`` is ``None`` exactly when ``resolving`` is true; otherwise it
    is the lexicographically first pair of objects (vertices or canonical
    edges) sharing a code.
    """

    resolving: bool
    witness: Optional[tuple]


def validate_landmarks(g: Graph, landmarks: Sequence[int]) -> tuple[int, ...]:
    lm = tuple(int(v) for v in landmarks)
    if len(set(lm)) != len(lm):
        raise GraphInputError(f"landmark set {lm} contains duplicates")
    for v in lm:
        if not (0 <= v < g.vertex_count):
            raise GraphInputError(f"landmark {v} outside [0, {g.vertex_count})")
    return lm


def vertex_code(dist: DistanceMatrix, v: int, landmarks: Sequence[int]) -> Code:
    """Distances from vertex ``v`` to each landmark, in landmark order."""
    return tuple(int(dist.d[v, u]) for u in landmarks)


def edge_code(dist: DistanceMatrix, edge: Edge, landmarks: Sequence[int]) -> Code:
    """Per-landmark minimum of the two endpoint distances of ``edge``."""
    a, b = edge
    da = dist.d[a]
    db = dist.d[b]
    return tuple(int(min(da[u], db[u])) for u in landmarks)


def landmark_rows(g: Graph, landmarks: Sequence[int]) -> np.ndarray:
    """BFS distance rows, one per landmark, as a ``(k, n)`` int16 array."""
    rows = [bfs_distances(g, s) for s in landmarks]
    return np.array(rows, dtype=np.int16).reshape(len(landmarks), g.vertex_count)


def edge_code_table(g: Graph, landmarks: Sequence[int]) -> np.ndarray:
    """Codes of every canonical edge, one row per edge: ``(m, k)`` int16."""
    rows = landmark_rows(g, landmarks)
    if not g.edges:
        return np.zeros((0, len(landmarks)), dtype=np.int16)
    eu = np.fromiter((e[0] for e in g.edges), dtype=np.int64, count=g.edge_count)
    ev = np.fromiter((e[1] for e in g.edges), dtype=np.int64, count=g.edge_count)
    return np.minimum(rows[:, eu], rows[:, ev]).T.copy()


def vertex_code_table(g: Graph, landmarks: Sequence[int]) -> np.ndarray:
    """Codes of every vertex, one row per vertex: ``(n, k)`` int16."""
    return landmark_rows(g, landmarks).T.copy()


def first_duplicate_rows(table: np.ndarray) -> Optional[tuple[int, int]]:
    """Indices of the lexicographically first pair of equal rows, if any.

    Rows are compared as packed byte strings; duplicates are located with a
    sort, and among all colliding groups the pair minimizing (i, j) wins.
    """
    count = table.shape[0]
    if count < 2:
        return None
    packed = np.ascontiguousarray(table).tobytes()
    width = table.shape[1] * table.itemsize
    keyed = sorted((packed[i * width : (i + 1) * width], i) for i in range(count))
    best: Optional[tuple[int, int]] = None
    run_start = 0
    for pos in range(1, count + 1):
        if pos == count or keyed[pos][0] != keyed[run_start][0]:
            if pos - run_start >= 2:
                members = sorted(idx for _, idx in keyed[run_start:pos])
                pair = (members[0], members[1])
                if best is None or pair < best:
                    best = pair
            run_start = pos
    return best


def is_edge_resolving(g: Graph, landmarks: Sequence[int]) -> VerificationResult:
    """Check whether ``landmarks`` distinguishes every pair of edges.

    On failure the witness is the lexicographically first colliding pair of
    canonical edges.  An empty landmark set fails on any graph with two or
    more edges, with the first two edges as witness.
    """
    lm = validate_landmarks(g, landmarks)
    if g.edge_count <= 1:
        return VerificationResult(resolving=True, witness=None)
    if not lm:
        return VerificationResult(resolving=False, witness=(g.edges[0], g.edges[1]))
    table = edge_code_table(g, lm)
    dup = first_duplicate_rows(table)
    if dup is None:
        return VerificationResult(resolving=True, witness=None)
    i, j = dup
    return VerificationResult(resolving=False, witness=(g.edges[i], g.edges[j]))


def is_vertex_resolving(g: Graph, landmarks: Sequence[int]) -> VerificationResult:
    """Check whether ``landmarks`` distinguishes every pair of vertices."""
    lm = validate_landmarks(g, landmarks)
    if g.vertex_count <= 1:
        return VerificationResult(resolving=True, witness=None)
    if not lm:
        return VerificationResult(resolving=False, witness=(0, 1))
    table = vertex_code_table(g, lm)
    dup = first_duplicate_rows(table)
    if dup is None:
        return VerificationResult(resolving=True, witness=None)
    return VerificationResult(resolving=False, witness=dup)
