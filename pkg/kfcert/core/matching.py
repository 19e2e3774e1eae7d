# kfcert/core/matching.py
"""
Maximum matching in general graphs (Edmonds' blossom method) and the exact
k-factor-criticality check.

The solver works on the subgraph induced by an ``active`` vertex mask, so
``G - S`` never has to be materialized. It can also start from any valid
matching; augmenting once from every exposed vertex still yields a
maximum matching.
"""

from __future__ import annotations

import logging
from collections import deque
from itertools import combinations
from typing import Iterable, List, Optional, Sequence

from .data_models import CriticalityReason, CriticalityVerdict, Matching
from .exceptions import InvalidParametersError
from .graph import Graph, iter_bits, list_to_bits

logger = logging.getLogger(__name__)

_UNMATCHED = -1


class BlossomMatcher:
    """Edmonds' algorithm with explicit base/parent arrays, O(n³) per full solve."""

    def __init__(self, graph: Graph, active: Optional[int] = None):
        self._graph = graph
        self._n = graph.n
        self._active = graph.vertex_mask if active is None else active
        self.mate: List[int] = [_UNMATCHED] * self._n
        # per-search state
        self._parent: List[int] = []
        self._base: List[int] = []
        self._in_tree: List[bool] = []

    def seed(self, pairs: Iterable[Sequence[int]]) -> None:
        """Start from an existing matching; pairs touching inactive vertices are dropped."""
        for u, v in pairs:
            if (self._active >> u) & 1 and (self._active >> v) & 1:
                self.mate[u] = v
                self.mate[v] = u

    def _lca(self, a: int, b: int) -> int:
        seen = [False] * self._n
        while True:
            a = self._base[a]
            seen[a] = True
            if self.mate[a] == _UNMATCHED:
                break
            a = self._parent[self.mate[a]]
        while True:
            b = self._base[b]
            if seen[b]:
                return b
            b = self._parent[self.mate[b]]

    def _mark_path(self, v: int, base: int, child: int, blossom: List[bool]) -> None:
        while self._base[v] != base:
            blossom[self._base[v]] = True
            blossom[self._base[self.mate[v]]] = True
            self._parent[v] = child
            child = self.mate[v]
            v = self._parent[self.mate[v]]

    def _find_augmenting_path(self, root: int) -> int:
        """Grow an alternating tree from ``root``; return an exposed endpoint or -1."""
        n = self._n
        rows = self._graph.rows
        active = self._active
        self._parent = [_UNMATCHED] * n
        self._base = list(range(n))
        self._in_tree = [False] * n
        self._in_tree[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in iter_bits(rows[v] & active):
                if self._base[v] == self._base[to] or self.mate[v] == to:
                    continue
                if to == root or (
                    self.mate[to] != _UNMATCHED and self._parent[self.mate[to]] != _UNMATCHED
                ):
                    # odd cycle: contract the blossom onto its base
                    base = self._lca(v, to)
                    blossom = [False] * n
                    self._mark_path(v, base, to, blossom)
                    self._mark_path(to, base, v, blossom)
                    for i in range(n):
                        if blossom[self._base[i]]:
                            self._base[i] = base
                            if not self._in_tree[i]:
                                self._in_tree[i] = True
                                queue.append(i)
                elif self._parent[to] == _UNMATCHED:
                    self._parent[to] = v
                    if self.mate[to] == _UNMATCHED:
                        return to
                    partner = self.mate[to]
                    self._in_tree[partner] = True
                    queue.append(partner)
        return _UNMATCHED

    def _augment(self, end: int) -> None:
        v = end
        while v != _UNMATCHED:
            pv = self._parent[v]
            next_v = self.mate[pv]
            self.mate[v] = pv
            self.mate[pv] = v
            v = next_v

    def augment_from(self, root: int) -> bool:
        end = self._find_augmenting_path(root)
        if end == _UNMATCHED:
            return False
        self._augment(end)
        return True

    def solve(self, stop_on_exposed: bool = False) -> bool:
        """Augment from every exposed active vertex in increasing order.

        Returns ``True`` when every active vertex ends up matched. With
        ``stop_on_exposed`` the search stops at the first vertex that no
        augmenting path reaches: some maximum matching misses it, so the
        active subgraph has no perfect matching.
        """
        perfect = True
        for v in iter_bits(self._active):
            if self.mate[v] != _UNMATCHED:
                continue
            if not self.augment_from(v):
                perfect = False
                if stop_on_exposed:
                    return False
        return perfect

    def matching(self) -> Matching:
        pairs = [(u, v) for u, v in enumerate(self.mate) if v != _UNMATCHED and u < v]
        return Matching(pairs=pairs)


def max_matching(graph: Graph, initial: Optional[Matching] = None) -> Matching:
    """Maximum-cardinality matching; deterministic for a fixed vertex order."""
    matcher = BlossomMatcher(graph)
    if initial is not None:
        matcher.seed(initial.pairs)
    matcher.solve()
    result = matcher.matching()
    logger.debug("max matching of %r has %d pairs", graph, result.size)
    return result


def has_perfect_matching(graph: Graph) -> bool:
    if graph.n % 2:
        return False
    return BlossomMatcher(graph).solve(stop_on_exposed=True)


def _removal_has_perfect_matching(
    graph: Graph, removed: Sequence[int], base: Optional[Matching]
) -> bool:
    matcher = BlossomMatcher(graph, active=graph.vertex_mask & ~list_to_bits(removed))
    if base is not None:
        matcher.seed(base.pairs)
    return matcher.solve(stop_on_exposed=True)


def is_k_factor_critical(graph: Graph, k: int, reseed: bool = True) -> CriticalityVerdict:
    """Decide whether ``G - S`` has a perfect matching for every k-subset ``S``.

    Subsets are tried in lexicographic order and the first failure is the
    witness. With ``reseed`` each ``G - S`` starts from a maximum matching
    of ``G`` restricted to the surviving vertices, leaving at most 2k
    exposed vertices to augment from.
    """
    n = graph.n
    if not 0 <= k <= n:
        raise InvalidParametersError(f"k must satisfy 0 <= k <= n={n}, got {k}")
    if (n - k) % 2:
        return CriticalityVerdict(is_critical=False, k=k, reason=CriticalityReason.PARITY)

    base = max_matching(graph) if reseed else None
    checked = 0
    for subset in combinations(range(n), k):
        checked += 1
        if not _removal_has_perfect_matching(graph, subset, base):
            logger.debug("k=%d criticality fails at S=%s after %d subsets", k, subset, checked)
            return CriticalityVerdict(
                is_critical=False,
                k=k,
                reason=CriticalityReason.WITNESS_FOUND,
                witness=list(subset),
                subsets_checked=checked,
            )
    return CriticalityVerdict(
        is_critical=True,
        k=k,
        reason=CriticalityReason.ALL_SUBSETS_PASS,
        subsets_checked=checked,
    )


def removal_leaves_perfect_matching(graph: Graph, removed: Sequence[int]) -> bool:
    """Direct check of a single candidate witness ``S``."""
    if (graph.n - len(set(removed))) % 2:
        return False
    return _removal_has_perfect_matching(graph, removed, None)
