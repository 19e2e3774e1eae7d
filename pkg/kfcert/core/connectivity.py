# kfcert/core/connectivity.py
"""
Exact vertex connectivity.

Local connectivity between two non-adjacent vertices is a unit-capacity
max-flow on the vertex-split network (every vertex ``v`` becomes
``v_in -> v_out`` with capacity 1), augmented along BFS-shortest residual
paths. The global value uses the Esfahanian-Hakimi candidate set: a
minimum-degree vertex ``v`` against each of its non-neighbours, plus every
non-adjacent pair inside ``N(v)``.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .data_models import ConnectivityResult
from .exceptions import InvalidGraphError, InvalidParametersError
from .graph import Graph, bits_to_list, iter_bits

logger = logging.getLogger(__name__)

# residual-network node ids: v_in = 2v, v_out = 2v + 1
_IN = 0
_OUT = 1


@dataclass
class _SplitFlow:
    """Flow state of one source/sink computation on the vertex-split network."""

    graph: Graph
    source: int
    sink: int
    through: List[bool] = field(default_factory=list)
    arc_flow: Dict[Tuple[int, int], int] = field(default_factory=dict)
    value: int = 0

    def __post_init__(self) -> None:
        self.through = [False] * self.graph.n

    def _residual_moves(self, node: int):
        v, side = divmod(node, 2)
        rows = self.graph.rows
        if side == _IN:
            if v in (self.source, self.sink) or not self.through[v]:
                yield 2 * v + _OUT
            for u in iter_bits(rows[v]):
                if self.arc_flow.get((u, v), 0) > 0:
                    yield 2 * u + _OUT
        else:
            for w in iter_bits(rows[v]):
                yield 2 * w + _IN
            if v not in (self.source, self.sink) and self.through[v]:
                yield 2 * v + _IN

    def _search(self) -> Optional[Dict[int, int]]:
        start = 2 * self.source + _OUT
        goal = 2 * self.sink + _IN
        parent = {start: start}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for nxt in self._residual_moves(node):
                if nxt in parent:
                    continue
                parent[nxt] = node
                if nxt == goal:
                    return parent
                queue.append(nxt)
        return None

    def _push(self, parent: Dict[int, int]) -> None:
        node = 2 * self.sink + _IN
        start = 2 * self.source + _OUT
        while node != start:
            prev = parent[node]
            a, a_side = divmod(prev, 2)
            b, b_side = divmod(node, 2)
            if a == b:
                # internal arc, forward when leaving v_in
                self.through[a] = a_side == _IN
            elif a_side == _OUT:
                # a_out -> b_in: cancel opposite flow first
                if self.arc_flow.get((b, a), 0) > 0:
                    self.arc_flow[(b, a)] -= 1
                else:
                    self.arc_flow[(a, b)] = self.arc_flow.get((a, b), 0) + 1
            else:
                # a_in -> b_out undoes flow on b_out -> a_in
                self.arc_flow[(b, a)] -= 1
            node = prev
        self.value += 1

    def run(self, limit: Optional[int] = None) -> int:
        while limit is None or self.value < limit:
            parent = self._search()
            if parent is None:
                break
            self._push(parent)
        return self.value

    def min_cut(self) -> List[int]:
        """Vertices whose split arc crosses from the source side (valid after ``run()``)."""
        start = 2 * self.source + _OUT
        seen = {start}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for nxt in self._residual_moves(node):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return sorted(
            v for v in range(self.graph.n) if 2 * v + _IN in seen and 2 * v + _OUT not in seen
        )


def local_connectivity(
    graph: Graph, s: int, t: int, limit: Optional[int] = None
) -> Tuple[int, List[int]]:
    """Maximum number of internally disjoint s-t paths and a minimum s-t separator.

    With ``limit`` the flow stops once that many paths exist; the separator
    is then only meaningful when the returned value is below ``limit``.
    """
    if s == t or graph.has_edge(s, t):
        raise InvalidGraphError(f"local connectivity needs distinct non-adjacent vertices, got {s}, {t}")
    flow = _SplitFlow(graph, s, t)
    value = flow.run(limit)
    return value, flow.min_cut()


def _candidate_pairs(graph: Graph) -> Tuple[int, List[Tuple[int, int]]]:
    degrees = graph.degrees()
    pivot = min(range(graph.n), key=lambda v: degrees[v])
    pairs = [(pivot, w) for w in bits_to_list(graph.vertex_mask & ~graph.rows[pivot] & ~(1 << pivot))]
    for x, y in combinations(graph.neighbors(pivot), 2):
        if not graph.has_edge(x, y):
            pairs.append((x, y))
    return pivot, pairs


def vertex_connectivity(graph: Graph) -> ConnectivityResult:
    n = graph.n
    if n < 1:
        raise InvalidGraphError("vertex connectivity needs at least one vertex")
    if n == 1:
        return ConnectivityResult(kappa=0)
    if not graph.is_connected():
        return ConnectivityResult(kappa=0, separator=[])
    if graph.edge_count == n * (n - 1) // 2:
        return ConnectivityResult(kappa=n - 1)

    pivot, pairs = _candidate_pairs(graph)
    best = graph.degree(pivot)
    separator = graph.neighbors(pivot)
    for s, t in pairs:
        value, cut = local_connectivity(graph, s, t, limit=best)
        if value < best:
            best, separator = value, cut
    logger.debug("kappa(%r) = %d over %d flow computations", graph, best, len(pairs))
    return ConnectivityResult(kappa=best, separator=separator)


def is_t_connected(graph: Graph, t: int) -> bool:
    """More than ``t`` vertices and no vertex cut of size below ``t``."""
    if t < 0:
        raise InvalidParametersError(f"t must be nonnegative, got {t}")
    n = graph.n
    if n <= t:
        return False
    if t == 0:
        return True
    if not graph.is_connected() or graph.min_degree() < t:
        return False
    if graph.edge_count == n * (n - 1) // 2:
        return True
    _, pairs = _candidate_pairs(graph)
    for s, u in pairs:
        value, _ = local_connectivity(graph, s, u, limit=t)
        if value < t:
            return False
    return True
