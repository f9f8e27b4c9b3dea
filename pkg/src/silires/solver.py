"""Exact minimum edge / vertex metric dimension by pruned subset search.

The solver enumerates landmark sets in increasing size and, within a size,
in lexicographic order, so the first verified set is the lexicographically
smallest optimal witness.  Searches may be seeded with a lower bound; a
downward confirmation pass re-establishes exhaustive infeasibility at
``dimension - 1`` whenever the seed (or a cubic-only restriction) leaves it
unproven, so certificates stay exact.

Pruning for the edge target uses a proven necessary condition: if two
degree-3 vertices p, q of one tetrahedron (or of two tetrahedra sharing a
hinge v0) are both excluded, the edges (p, v0) and (q, v0) receive the same
code from every remaining vertex, because a degree-3 vertex's whole
neighbourhood lies inside its own K4, forcing d((p,v0), u) = d(v0, u) for
all u outside {p, q}.  Sets failing the condition are skipped without
evaluating codes; resolving sets are never skipped.
"""

from __future__ import annotations

import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import StructureError, UnsupportedFamilyError
from .graphs import Graph, all_pairs_distances
from .resolving import is_edge_resolving, is_vertex_resolving
from .structure import (
    classify_silicate,
    dimension_lower_bound,
    find_tetrahedra,
    find_twins,
)

EDGE = "edge"
VERTEX = "vertex"

STATUS_OPTIMAL = "optimal"
STATUS_CONDITIONAL = "upper-bound-conditional"
STATUS_PARTIAL = "partial"


@dataclass(frozen=True)
class SolveOptions:
    """Search configuration.

    ``start_size`` seeds the first level (default: the family lower bound
    when the graph is recognized, else 1); ``max_size`` caps the largest
    level searched; ``restrict_to_cubic`` limits the sweep to degree-3
    vertices (optimality is then re-established by an unrestricted pass);
    ``budget_subsets`` bounds the number of candidate sets evaluated, at
    block granularity, after which a non-optimal certificate is returned.
    """

    start_size: Optional[int] = None
    max_size: Optional[int] = None
    restrict_to_cubic: bool = False
    parallel_workers: int = 1
    budget_subsets: Optional[int] = None

    def __post_init__(self) -> None:
        if self.start_size is not None and self.start_size < 1:
            raise ValueError("start_size must be positive")
        if self.max_size is not None and self.max_size < 1:
            raise ValueError("max_size must be positive")
        if (
            self.start_size is not None
            and self.max_size is not None
            and self.start_size > self.max_size
        ):
            raise ValueError("start_size must not exceed max_size")
        if self.parallel_workers < 1:
            raise ValueError("parallel_workers must be positive")
        if self.budget_subsets is not None and self.budget_subsets < 0:
            raise ValueError("budget_subsets must be non-negative")


@dataclass(frozen=True)
class SolveStats:
    subsets_examined: int
    elapsed_seconds: float


@dataclass(frozen=True)
class Certificate:
    """Outcome of a dimension search.

    ``infeasible_size_checked`` is the largest size proven (exhaustively,
    over all vertices) to admit no resolving set; by monotonicity every
    smaller size is then infeasible too.  ``status`` is ``optimal`` exactly
    when that proof reaches ``dimension - 1``; ``upper-bound-conditional``
    when a witness exists but the proof below it is incomplete; ``partial``
    when no witness was found within budget.  ``elapsed_seconds`` and the
    worker count are informational and excluded from serialized output.
    """

    target: str
    dimension: Optional[int]
    witness: Optional[tuple[int, ...]]
    infeasible_size_checked: int
    lower_bound: int
    upper_bound: Optional[int]
    status: str
    start_size: int
    restrict_to_cubic: bool
    parallel_workers: int
    stats: SolveStats


def _suffix_masks(universe: Sequence[int]) -> tuple[int, ...]:
    """suffix[i] = bitmask of universe[i:], for reachability lookahead."""
    masks = [0] * (len(universe) + 1)
    for i in range(len(universe) - 1, -1, -1):
        masks[i] = masks[i + 1] | (1 << universe[i])
    return tuple(masks)


def _columns_distinct(a: np.ndarray) -> bool:
    """True when no two columns of the (k, items) code matrix coincide."""
    items = a.shape[1]
    if items <= 1:
        return True
    order = np.lexsort(a[::-1])
    s = a.T[order]
    return not bool(np.any(np.all(s[1:] == s[:-1], axis=1)))


def _search_block(ctx, k: int, block: int):
    """Lexicographic search of all k-sets whose smallest member is
    universe[block].  Returns (first resolving set or None, sets evaluated).
    """
    universe, rows, masks, suffix = ctx
    n_u = len(universe)
    first = universe[block]
    chosen = [first]
    state = [None, 0]  # witness, evaluated

    def walk(pos: int, smask: int, need: int) -> None:
        if state[0] is not None:
            return
        if need == 0:
            for m in masks:
                if (m & ~smask).bit_count() >= 2:
                    return
            state[1] += 1
            if _columns_distinct(rows[chosen]):
                state[0] = tuple(chosen)
            return
        if n_u - pos < need:
            return
        reachable = smask | suffix[pos]
        for m in masks:
            if (m & ~reachable).bit_count() >= 2:
                return
        v = universe[pos]
        chosen.append(v)
        walk(pos + 1, smask | (1 << v), need - 1)
        chosen.pop()
        walk(pos + 1, smask, need)

    walk(block + 1, 1 << first, k - 1)
    return state[0], state[1]


_WORKER_CTXS: list = []


def _init_worker(ctxs) -> None:
    global _WORKER_CTXS
    _WORKER_CTXS = ctxs


def _block_task(args):
    ctx_idx, k, block = args
    return _search_block(_WORKER_CTXS[ctx_idx], k, block)


def _search_level(
    ctx, ctx_idx: int, k: int, pool, workers: int, remaining: Optional[int]
):
    """Search one size level block by block, in lexicographic block order.

    Returns (witness, evaluated, exhausted, budget_tripped).  Results are
    accumulated strictly in block order, and the budget is checked only at
    block boundaries, so the outcome is identical for any worker count.
    """
    universe = ctx[0]
    blocks = len(universe) - k + 1
    if blocks <= 0:
        return None, 0, True, False
    if remaining is not None and remaining <= 0:
        return None, 0, False, True
    total = 0
    if pool is None:
        for b in range(blocks):
            witness, ev = _search_block(ctx, k, b)
            total += ev
            if witness is not None:
                return witness, total, False, False
            if remaining is not None and total >= remaining and b + 1 < blocks:
                return None, total, False, True
        return None, total, True, False
    window = workers * 2
    futures: deque = deque()
    next_block = 0
    while next_block < min(blocks, window):
        futures.append(pool.submit(_block_task, (ctx_idx, k, next_block)))
        next_block += 1
    done = 0
    while futures:
        witness, ev = futures.popleft().result()
        total += ev
        done += 1
        if witness is not None:
            for f in futures:
                f.cancel()
            return witness, total, False, False
        if remaining is not None and total >= remaining and done < blocks:
            for f in futures:
                f.cancel()
            return None, total, False, True
        if next_block < blocks:
            futures.append(pool.submit(_block_task, (ctx_idx, k, next_block)))
            next_block += 1
    return None, total, True, False


def edge_infeasibility_masks(g: Graph) -> list[int]:
    """Bitmasks of cubic sets; any landmark set missing two or more bits of
    one mask provably fails to resolve the edges.  Empty when the graph has
    no edge-disjoint K4 cover (no pruning applies).
    """
    try:
        tetrahedra = find_tetrahedra(g)
    except StructureError:
        return []
    masks: set[int] = set()
    for tet in tetrahedra:
        if len(tet.cubic_vertices) >= 2:
            mask = 0
            for v in tet.cubic_vertices:
                mask |= 1 << v
            masks.add(mask)
    for twin in find_twins(g, tetrahedra):
        if len(twin.cubic_set) >= 2:
            mask = 0
            for v in twin.cubic_set:
                mask |= 1 << v
            masks.add(mask)
    return sorted(masks)


def _default_start(g: Graph, target: str) -> int:
    if target != EDGE:
        return 1
    spec = classify_silicate(g)
    if spec is None:
        return 1
    try:
        return dimension_lower_bound(spec)
    except UnsupportedFamilyError:
        return 1


def _solve(g: Graph, opts: SolveOptions, target: str) -> Certificate:
    t0 = time.perf_counter()
    dist = all_pairs_distances(g).d
    if target == EDGE:
        item_count = g.edge_count
        if item_count > 0:
            eu = np.fromiter((e[0] for e in g.edges), dtype=np.intp, count=item_count)
            ev = np.fromiter((e[1] for e in g.edges), dtype=np.intp, count=item_count)
            rows = np.ascontiguousarray(np.minimum(dist[:, eu], dist[:, ev]))
        else:
            rows = np.zeros((g.vertex_count, 0), dtype=np.int16)
        masks = edge_infeasibility_masks(g)
    else:
        item_count = g.vertex_count
        rows = np.ascontiguousarray(dist)
        masks = []

    def build(dimension, witness, infeasible, status, start, counted):
        return Certificate(
            target=target,
            dimension=dimension,
            witness=witness,
            infeasible_size_checked=infeasible,
            lower_bound=infeasible + 1,
            upper_bound=dimension,
            status=status,
            start_size=start,
            restrict_to_cubic=opts.restrict_to_cubic,
            parallel_workers=opts.parallel_workers,
            stats=SolveStats(
                subsets_examined=counted,
                elapsed_seconds=time.perf_counter() - t0,
            ),
        )

    if item_count <= 1:
        return build(0, (), -1, STATUS_OPTIMAL, 0, 0)

    full_universe = tuple(range(g.vertex_count))
    if opts.restrict_to_cubic:
        universe = tuple(v for v in full_universe if g.degree(v) == 3)
    else:
        universe = full_universe
    cap = opts.max_size if opts.max_size is not None else g.vertex_count
    if opts.start_size is not None:
        start = opts.start_size
    else:
        start = min(_default_start(g, target), cap)

    ctx_main = (universe, rows, masks, _suffix_masks(universe))
    ctx_full = (full_universe, rows, masks, _suffix_masks(full_universe))
    pool = None
    if opts.parallel_workers > 1:
        pool = ProcessPoolExecutor(
            max_workers=opts.parallel_workers,
            initializer=_init_worker,
            initargs=([ctx_main, ctx_full],),
        )
    counted = 0
    proven_infeasible = 0  # size 0 always fails with >= 2 items
    try:
        budget = opts.budget_subsets

        def level(ctx, ctx_idx, k):
            nonlocal counted
            remaining = None if budget is None else budget - counted
            witness, ev, exhausted, tripped = _search_level(
                ctx, ctx_idx, k, pool, opts.parallel_workers, remaining
            )
            counted += ev
            return witness, exhausted, tripped

        hit: Optional[tuple[int, tuple[int, ...]]] = None
        k = start
        while k <= cap:
            witness, exhausted, tripped = level(ctx_main, 0, k)
            if witness is not None:
                hit = (k, witness)
                break
            if tripped:
                break
            if not opts.restrict_to_cubic:
                proven_infeasible = max(proven_infeasible, k)
            k += 1

        if hit is None:
            return build(None, None, proven_infeasible, STATUS_PARTIAL, start, counted)

        best_k, best_witness = hit
        while True:
            below = best_k - 1
            if below <= 0 or proven_infeasible >= below:
                status = STATUS_OPTIMAL
                break
            witness, exhausted, tripped = level(ctx_full, 1, below)
            if witness is not None:
                best_k, best_witness = below, witness
                continue
            if tripped:
                status = STATUS_CONDITIONAL
                break
            proven_infeasible = below
            status = STATUS_OPTIMAL
            break
    finally:
        if pool is not None:
            pool.shutdown(wait=False, cancel_futures=True)

    checker = is_edge_resolving if target == EDGE else is_vertex_resolving
    if not checker(g, best_witness).resolving:
        raise RuntimeError(
            "internal error: search returned a non-resolving witness "
            f"{best_witness!r}"
        )
    return build(best_k, best_witness, proven_infeasible, status, start, counted)


def exact_edge_metric_dimension(
    g: Graph, opts: Optional[SolveOptions] = None
) -> Certificate:
    """Minimum number of vertices whose distance codes separate all edges."""
    return _solve(g, opts or SolveOptions(), EDGE)


def exact_metric_dimension(
    g: Graph, opts: Optional[SolveOptions] = None
) -> Certificate:
    """Minimum number of vertices whose distance codes separate all vertices."""
    return _solve(g, opts or SolveOptions(), VERTEX)


def is_minimal(g: Graph, landmarks: Sequence[int], target: str = EDGE) -> bool:
    """True when no single landmark can be dropped while staying resolving."""
    if target not in (EDGE, VERTEX):
        raise ValueError(f"target must be {EDGE!r} or {VERTEX!r}, got {target!r}")
    checker = is_edge_resolving if target == EDGE else is_vertex_resolving
    if not checker(g, landmarks).resolving:
        raise ValueError("landmark set is not resolving; minimality is undefined")
    for v in landmarks:
        rest = [u for u in landmarks if u != v]
        if checker(g, rest).resolving:
            return False
    return True
