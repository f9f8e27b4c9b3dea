"""Generators for chain silicates, cyclic silicates, and skeleton expansions.

All generators are deterministic: vertex ids are assigned in first-appearance
order while tetrahedra are emitted 1..n, each tetrahedron contributing its
not-yet-seen vertices in the fixed order (shared-with-previous, private
vertices, shared-with-next).  The resulting numbering is part of the public
contract (documented in the README) so that landmark sets are meaningful
across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import GraphInputError
from .graphs import Graph, build_graph, is_connected

CHAIN = "chain"
CYCLIC = "cyclic"
SKELETON = "skeleton"

FAMILIES = (CHAIN, CYCLIC, SKELETON)


@dataclass(frozen=True)
class SilicateSpec:
    """Which silicate network to build.

    ``n`` is the tetrahedron count for the chain and cyclic families and is
    ignored for ``skeleton``, where the base graph is given explicitly.
    """

    family: str
    n: int = 0
    skeleton: Optional[Graph] = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise GraphInputError(f"unknown silicate family {self.family!r}")
        if self.family == CHAIN and self.n < 1:
            raise GraphInputError(f"chain silicate needs n >= 1, got {self.n}")
        if self.family == CYCLIC and self.n < 3:
            raise GraphInputError(f"cyclic silicate needs n >= 3, got {self.n}")
        if self.family == SKELETON and self.skeleton is None:
            raise GraphInputError("skeleton family needs a base graph")


@dataclass(frozen=True)
class LabeledSilicate:
    """A silicate network together with its construction metadata.

    ``tetrahedra[i]`` is the sorted 4-tuple of vertex ids of tetrahedron
    ``i+1``.  ``shared_vertices`` are the corners belonging to two or more
    tetrahedra (degree 6 in the chain and cyclic families).
    ``private_vertices[i]`` lists the degree-3 vertices of tetrahedron
    ``i+1``.
    """

    graph: Graph
    tetrahedra: tuple[tuple[int, int, int, int], ...]
    shared_vertices: tuple[int, ...]
    private_vertices: tuple[tuple[int, ...], ...]


def _assemble(vertex_count: int, tetrahedra: list[tuple[int, ...]]) -> LabeledSilicate:
    edges = []
    for tet in tetrahedra:
        a, b, c, d = tet
        edges.extend([(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)])
    graph = build_graph(vertex_count, edges)
    appearances: dict[int, int] = {}
    for tet in tetrahedra:
        for v in tet:
            appearances[v] = appearances.get(v, 0) + 1
    shared = tuple(sorted(v for v, k in appearances.items() if k >= 2))
    private = tuple(
        tuple(v for v in tet if graph.degree(v) == 3) for tet in tetrahedra
    )
    return LabeledSilicate(
        graph=graph,
        tetrahedra=tuple(tuple(sorted(t)) for t in tetrahedra),
        shared_vertices=shared,
        private_vertices=private,
    )


def chain_silicate(n: int) -> LabeledSilicate:
    """Chain of ``n`` tetrahedra, consecutive ones glued at a single corner.

    The graph has ``3n + 1`` vertices and ``6n`` edges.  Ids: tetrahedron 1
    takes privates 0,1,2 and hinge 3; interior tetrahedron i takes privates
    3i-2, 3i-1 and hinge 3i; the last takes privates 3n-2, 3n-1, 3n.
    """
    if n < 1:
        raise GraphInputError(f"chain silicate needs n >= 1, got {n}")
    if n == 1:
        return _assemble(4, [(0, 1, 2, 3)])
    tetrahedra: list[tuple[int, ...]] = []
    next_id = 0
    prev_hinge = None
    for i in range(1, n + 1):
        members = []
        if prev_hinge is not None:
            members.append(prev_hinge)
        fresh = 3 if i in (1, n) else 2
        for _ in range(fresh):
            members.append(next_id)
            next_id += 1
        if i < n:
            members.append(next_id)
            prev_hinge = next_id
            next_id += 1
        tetrahedra.append(tuple(members))
    return _assemble(3 * n + 1, tetrahedra)


def cyclic_silicate(n: int) -> LabeledSilicate:
    """Ring of ``n`` tetrahedra obtained by expanding each edge of an n-cycle.

    The graph has ``3n`` vertices and ``6n`` edges.  Ids: corner c_1 is 0;
    tetrahedron i < n takes privates 3i-2, 3i-1 and corner c_{i+1} = 3i; the
    last tetrahedron takes privates 3n-2, 3n-1 and closes back on corner 0.
    """
    if n < 3:
        raise GraphInputError(f"cyclic silicate needs n >= 3, got {n}")
    tetrahedra: list[tuple[int, ...]] = []
    for i in range(1, n + 1):
        c_prev = 3 * (i - 1)
        c_next = 0 if i == n else 3 * i
        tetrahedra.append((c_prev, 3 * i - 2, 3 * i - 1, c_next))
    return _assemble(3 * n, tetrahedra)


def silicate_of_skeleton(base: Graph) -> LabeledSilicate:
    """Expand every edge of a connected simple base graph into a tetrahedron.

    Each base edge uv becomes a tetrahedron on {u, v, two fresh vertices};
    the output has ``|V| + 2|E|`` vertices and ``6|E|`` edges.  Chain and
    cyclic silicates are the path and cycle instances of this construction
    (up to relabeling).  No dimension formulas are claimed for other bases.
    """
    if base.vertex_count == 0 or base.edge_count == 0:
        raise GraphInputError("skeleton base must have at least one edge")
    if not is_connected(base):
        raise GraphInputError("skeleton base must be connected")
    tetrahedra: list[tuple[int, ...]] = []
    next_id = base.vertex_count
    for u, v in base.edges:
        tetrahedra.append((u, v, next_id, next_id + 1))
        next_id += 2
    return _assemble(base.vertex_count + 2 * base.edge_count, tetrahedra)


def build_silicate(spec: SilicateSpec) -> LabeledSilicate:
    if spec.family == CHAIN:
        return chain_silicate(spec.n)
    if spec.family == CYCLIC:
        return cyclic_silicate(spec.n)
    assert spec.skeleton is not None
    return silicate_of_skeleton(spec.skeleton)
