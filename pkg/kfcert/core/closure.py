# kfcert/core/closure.py
"""
l-closure: repeatedly join non-adjacent pairs whose degree sum is at least
``l`` until none is left.

Degrees only grow while the closure runs, so a pair that becomes eligible
stays eligible. A heap of candidate pairs therefore suffices: adding
``uv`` can only create new candidates that contain ``u`` or ``v``.
"""

from __future__ import annotations

import heapq
import logging
import random
from typing import List, Optional, Tuple

from .data_models import ClosureStep, ClosureTrace, Lemma2Report
from .exceptions import InvalidGraphError, InvalidParametersError
from .graph import Graph, iter_bits
from .matching import is_k_factor_critical

logger = logging.getLogger(__name__)


def l_closure(
    graph: Graph, l: int, rng: Optional[random.Random] = None
) -> Tuple[Graph, ClosureTrace]:
    """Return the l-closure of ``graph`` and the ordered trace of joined pairs.

    Pairs are joined in lexicographic order among those currently eligible.
    Passing ``rng`` picks eligible pairs in a random order instead; the
    resulting graph is the same, only the trace differs.
    """
    if l < 0:
        raise InvalidParametersError(f"closure level must be nonnegative, got {l}")
    n = graph.n
    rows = list(graph.rows)
    degree = [row.bit_count() for row in rows]
    full = graph.vertex_mask

    heap: List[Tuple[float, int, int]] = []

    def priority(u: int, v: int) -> float:
        return rng.random() if rng is not None else float(u * n + v)

    def push_candidates(u: int) -> None:
        for w in iter_bits(full & ~rows[u] & ~(1 << u)):
            if degree[u] + degree[w] >= l:
                a, b = (u, w) if u < w else (w, u)
                heapq.heappush(heap, (priority(a, b), a, b))

    for u in range(n):
        # each pair once, from its smaller endpoint
        for w in iter_bits(full & ~rows[u] & ~((1 << (u + 1)) - 1)):
            if degree[u] + degree[w] >= l:
                heapq.heappush(heap, (priority(u, w), u, w))

    trace = ClosureTrace(l=l)
    while heap:
        _, u, v = heapq.heappop(heap)
        if (rows[u] >> v) & 1:
            continue
        trace.added.append(ClosureStep(u=u, v=v, d_u=degree[u], d_v=degree[v]))
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        degree[u] += 1
        degree[v] += 1
        push_candidates(u)
        push_candidates(v)

    closed = Graph(n, rows)
    logger.debug("%d-closure of %r added %d edges", l, graph, len(trace.added))
    return closed, trace


def replay_trace(graph: Graph, trace: ClosureTrace) -> Graph:
    """Re-apply a trace, checking each recorded join against the live degrees."""
    current = graph
    for step in trace.added:
        if current.has_edge(step.u, step.v):
            raise InvalidGraphError(f"trace joins already adjacent pair ({step.u}, {step.v})")
        if (current.degree(step.u), current.degree(step.v)) != (step.d_u, step.d_v):
            raise InvalidGraphError(f"trace degrees disagree at pair ({step.u}, {step.v})")
        if step.d_u + step.d_v < trace.l:
            raise InvalidGraphError(f"pair ({step.u}, {step.v}) joined below level {trace.l}")
        current = current.add_edge(step.u, step.v)
    return current


def closure_degree_condition(graph: Graph, l: int) -> bool:
    """True iff every non-adjacent pair has degree sum at most ``l - 1``."""
    degree = graph.degrees()
    full = graph.vertex_mask
    for u, row in enumerate(graph.rows):
        for w in iter_bits(full & ~row & ~((1 << (u + 1)) - 1)):
            if degree[u] + degree[w] >= l:
                return False
    return True


def lemma2_equivalence(graph: Graph, k: int) -> Lemma2Report:
    """Criticality of ``G`` and of ``C_{n+k-1}(G)``, for connected ``G`` and 1 ≤ k ≤ n-2."""
    n = graph.n
    if not 1 <= k <= n - 2:
        raise InvalidParametersError(f"k must satisfy 1 <= k <= n-2={n - 2}, got {k}")
    if not graph.is_connected():
        raise InvalidGraphError("closure equivalence needs a connected graph")
    level = n + k - 1
    closed, trace = l_closure(graph, level)
    return Lemma2Report(
        k=k,
        closure_level=level,
        graph_verdict=is_k_factor_critical(graph, k),
        closure_verdict=is_k_factor_critical(closed, k),
        closure_edges_added=len(trace.added),
    )
