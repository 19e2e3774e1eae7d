# kfcert/core/invariants.py
"""
Clique and independence numbers, the independence-number sufficient
condition for k-factor-criticality, the clique-forcing edge check and the
structural recognizer of the extremal family.
"""

from __future__ import annotations

import logging
from typing import List, Tuple

from .closure import closure_degree_condition
from .connectivity import is_t_connected
from .data_models import ClaimsReport, CliqueResult, Lemma8Report, Lemma8Status
from .exceptions import InvalidParametersError
from .extremal import ExtremalParams, extremal_edge_count, meets_edge_order_bound, thm4_threshold
from .graph import Graph, bits_to_list, complement, list_to_bits

logger = logging.getLogger(__name__)


class _MaxCliqueSearch:
    """Branch and bound over bitset candidate sets with a greedy-colouring bound."""

    def __init__(self, graph: Graph):
        self.rows = graph.rows
        self.best: List[int] = []
        self.nodes = 0

    def _colour_order(self, candidates: int) -> Tuple[List[int], List[int]]:
        order: List[int] = []
        bounds: List[int] = []
        uncoloured = candidates
        colour = 0
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                v = (available & -available).bit_length() - 1
                available &= ~self.rows[v] & ~(1 << v)
                uncoloured &= ~(1 << v)
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def expand(self, current: List[int], candidates: int) -> None:
        self.nodes += 1
        order, bounds = self._colour_order(candidates)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + bounds[i] <= len(self.best):
                return
            v = order[i]
            current.append(v)
            narrowed = candidates & self.rows[v]
            if narrowed:
                self.expand(current, narrowed)
            elif len(current) > len(self.best):
                self.best = list(current)
            current.pop()
            candidates &= ~(1 << v)


def clique_number(graph: Graph) -> CliqueResult:
    """Exact ω(G) with a maximum clique as witness."""
    if graph.n == 0:
        return CliqueResult(omega=0, witness=[])
    search = _MaxCliqueSearch(graph)
    search.expand([], graph.vertex_mask)
    witness = sorted(search.best)
    logger.debug("omega(%r) = %d after %d search nodes", graph, len(witness), search.nodes)
    return CliqueResult(omega=len(witness), witness=witness)


def independence_number(graph: Graph) -> int:
    return clique_number(complement(graph)).omega


def maximum_independent_set(graph: Graph) -> List[int]:
    return clique_number(complement(graph)).witness


def is_clique(graph: Graph, vertices: List[int]) -> bool:
    mask = list_to_bits(vertices)
    return all((graph.rows[v] | (1 << v)) & mask == mask for v in vertices)


def favaron_condition(graph: Graph, k: int, t: int) -> bool:
    """t-connected, α(G) ≤ t-k+1 and n ≡ k (mod 2): enough for k-factor-criticality."""
    if not t >= k >= 0:
        raise InvalidParametersError(f"need t >= k >= 0, got t={t}, k={k}")
    if (graph.n - k) % 2:
        return False
    if not is_t_connected(graph, t):
        return False
    return independence_number(graph) <= t - k + 1


def lemma8_check(graph: Graph, t: int, k: int) -> Lemma8Report:
    """Check that a closed t-connected graph above the edge threshold has ω ≥ n+k-t-1."""
    n = graph.n
    edges = graph.edge_count
    unmet: List[str] = []
    if not t >= k >= 1:
        unmet.append("t >= k >= 1")
    if (n - k) % 2:
        unmet.append("n ≡ k (mod 2)")
    if not meets_edge_order_bound(n, t, k):
        unmet.append("2n >= 15t - 11k + 29")
    if not unmet:
        if not closure_degree_condition(graph, n + k - 1):
            unmet.append("graph equals its (n+k-1)-closure")
        if not is_t_connected(graph, t):
            unmet.append(f"{t}-connected")
    if unmet:
        return Lemma8Report(status=Lemma8Status.HYPOTHESES_UNMET, edges=edges, unmet=unmet)

    p = ExtremalParams.of(n, t, k)
    threshold = thm4_threshold(p)
    if edges <= threshold:
        return Lemma8Report(status=Lemma8Status.BELOW_THRESHOLD, edges=edges, threshold=threshold)
    omega = clique_number(graph).omega
    status = Lemma8Status.PASS if omega >= p.clique_size else Lemma8Status.FAIL
    if status is Lemma8Status.FAIL:
        logger.error("clique forcing failed: e=%d > %d but omega=%d < %d", edges, threshold, omega, p.clique_size)
    return Lemma8Report(
        status=status,
        edges=edges,
        threshold=threshold,
        omega=omega,
        required_omega=p.clique_size,
    )


def claims_report(graph: Graph, p: ExtremalParams) -> ClaimsReport:
    """Evaluate each structural property of K_t ∨ (K_{n+k-2t-1} + (t-k+1)K_1) on ``graph``.

    When the middle clique has a single vertex it also has degree t; one
    degree-t vertex is then counted with the clique side, which is an
    automorphism of the family.
    """
    n, t = graph.n, p.t
    degrees = graph.degrees()
    low = [v for v in range(n) if degrees[v] == t]
    if p.middle_size == 1 and len(low) == p.independent_size + 1:
        low = low[:-1]
    low_mask = list_to_bits(low)

    independent = all(graph.rows[v] & low_mask == 0 for v in low)
    neighborhoods = {graph.rows[v] for v in low}
    common = len(neighborhoods) == 1 and next(iter(neighborhoods)).bit_count() == t
    hub = bits_to_list(next(iter(neighborhoods))) if common else []
    rest = [v for v in range(n) if not (low_mask >> v) & 1]
    hub_universal = bool(hub) and all(degrees[v] == n - 1 for v in hub)

    return ClaimsReport(
        clique_size_ok=len(rest) == p.clique_size and is_clique(graph, rest),
        low_degree_count_ok=len(low) == p.independent_size,
        low_degree_independent=independent,
        common_neighborhood_ok=common,
        hub_universal=hub_universal,
        low_degree_vertices=low,
        hub=hub,
    )


def is_extremal(graph: Graph, p: ExtremalParams) -> bool:
    """Structural isomorphism test against K_t ∨ (K_{n+k-2t-1} + (t-k+1)K_1)."""
    if graph.n != p.n or graph.edge_count != extremal_edge_count(p):
        return False
    return claims_report(graph, p).all_hold

