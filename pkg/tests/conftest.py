"""Shared fixtures and brute-force oracles for the kfcert test suite."""

import random
from itertools import combinations
from typing import Iterator, List

import pytest

from kfcert.core.extremal import ExtremalParams, construct_extremal
from kfcert.core.graph import Graph, from_edges, iter_bits


# -- brute-force oracles ---------------------------------------------------------


def brute_max_matching_size(graph: Graph, alive: int = -1) -> int:
    """Exhaustive maximum matching on the vertices in ``alive``."""
    alive &= graph.vertex_mask
    if not alive:
        return 0
    v = (alive & -alive).bit_length() - 1
    rest = alive & ~(1 << v)
    best = brute_max_matching_size(graph, rest)
    for w in iter_bits(graph.rows[v] & rest):
        best = max(best, 1 + brute_max_matching_size(graph, rest & ~(1 << w)))
    return best


def brute_has_perfect_matching(graph: Graph, alive: int = -1) -> bool:
    alive &= graph.vertex_mask
    if not alive:
        return True
    if bin(alive).count("1") % 2:
        return False
    v = (alive & -alive).bit_length() - 1
    rest = alive & ~(1 << v)
    return any(
        brute_has_perfect_matching(graph, rest & ~(1 << w)) for w in iter_bits(graph.rows[v] & rest)
    )


def brute_k_factor_critical(graph: Graph, k: int) -> bool:
    full = graph.vertex_mask
    for subset in combinations(range(graph.n), k):
        gone = sum(1 << v for v in subset)
        if not brute_has_perfect_matching(graph, full & ~gone):
            return False
    return True


def brute_kappa(graph: Graph) -> int:
    """Smallest vertex set whose removal disconnects; n-1 for complete graphs."""
    n = graph.n
    if n <= 1:
        return 0
    full = graph.vertex_mask
    for size in range(n - 1):
        for subset in combinations(range(n), size):
            gone = sum(1 << v for v in subset)
            if len(graph.components(full & ~gone)) > 1:
                return size
    return n - 1


def brute_omega(graph: Graph) -> int:
    best = 0 if graph.n == 0 else 1
    for size in range(2, graph.n + 1):
        found = any(
            all(graph.has_edge(u, v) for u, v in combinations(subset, 2))
            for subset in combinations(range(graph.n), size)
        )
        if not found:
            break
        best = size
    return best


# -- random graphs ------------------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    edges += [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return from_edges(n, [(u, v) for u, v in edges if u != v])


def all_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edges(n, [pair for i, pair in enumerate(pairs) if (mask >> i) & 1])


def is_separator(graph: Graph, separator: List[int]) -> bool:
    gone = sum(1 << v for v in separator)
    return len(graph.components(graph.vertex_mask & ~gone)) > 1


# -- fixtures --------------------------------------------------------------------------


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def extremal_17() -> Graph:
    """K_1 ∨ (K_15 + K_1): hub 0, middle 1..15, pendant 16."""
    return construct_extremal(ExtremalParams(n=17, t=1, k=1))


@pytest.fixture
def params_17() -> ExtremalParams:
    return ExtremalParams(n=17, t=1, k=1)
