# kfcert/core/extremal.py
"""
Extremal family K_t ∨ (K_{n+k-2t-1} + (t-k+1)K_1) and its exact thresholds.

All arithmetic here is on Python integers. Order bounds with fractional
right-hand sides are compared after clearing denominators.
"""

from __future__ import annotations

from math import comb

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from .exceptions import InvalidParametersError
from .graph import Graph, complete_graph, disjoint_union, empty_graph, join


class ExtremalParams(BaseModel):
    """Parameter triple (n, t, k) of the extremal family and every threshold."""

    model_config = ConfigDict(frozen=True)

    n: int
    t: int
    k: int

    @model_validator(mode="after")
    def check_family(self) -> "ExtremalParams":
        if not self.t >= self.k >= 1:
            raise ValueError(f"need t >= k >= 1, got t={self.t}, k={self.k}")
        if (self.n - self.k) % 2:
            raise ValueError(f"need n ≡ k (mod 2), got n={self.n}, k={self.k}")
        if self.middle_size < 1:
            raise ValueError(
                f"middle clique K_(n+k-2t-1) is empty for n={self.n}, t={self.t}, k={self.k}"
            )
        return self

    @classmethod
    def of(cls, n: int, t: int, k: int) -> "ExtremalParams":
        """Validated constructor that reports violations as ``InvalidParametersError``."""
        try:
            return cls(n=n, t=t, k=k)
        except ValidationError as exc:
            messages = "; ".join(err["msg"] for err in exc.errors())
            raise InvalidParametersError(messages) from exc

    @property
    def middle_size(self) -> int:
        return self.n + self.k - 2 * self.t - 1

    @property
    def independent_size(self) -> int:
        return self.t - self.k + 1

    @property
    def clique_size(self) -> int:
        """n + k - t - 1: hub plus middle clique."""
        return self.n + self.k - self.t - 1

    @property
    def closure_level(self) -> int:
        return self.n + self.k - 1


def construct_extremal(p: ExtremalParams) -> Graph:
    """Hub ``[0, t)``, then the middle clique, then the ``t-k+1`` independent vertices."""
    graph = join(
        complete_graph(p.t),
        disjoint_union(complete_graph(p.middle_size), empty_graph(p.independent_size)),
    )
    assert graph.n == p.n
    return graph


def hub_vertices(p: ExtremalParams) -> range:
    return range(p.t)


def middle_vertices(p: ExtremalParams) -> range:
    return range(p.t, p.t + p.middle_size)


def independent_vertices(p: ExtremalParams) -> range:
    return range(p.t + p.middle_size, p.n)


def extremal_edge_count(p: ExtremalParams) -> int:
    return comb(p.n + p.k - p.t - 1, 2) + p.t * (p.t - p.k + 1)


def edge_threshold(n: int, t: int, k: int) -> int:
    """C(n+k-t-2, 2) + (t-k+2)(t+1) for any integers; the binomial is 0 below 2."""
    return comb(max(n + k - t - 2, 0), 2) + (t - k + 2) * (t + 1)


def thm4_threshold(p: ExtremalParams) -> int:
    """Edge count that must be strictly exceeded: C(n+k-t-2, 2) + (t-k+2)(t+1)."""
    return edge_threshold(p.n, p.t, p.k)


# -- order bounds ---------------------------------------------------------------


def meets_edge_order_bound(n: int, t: int, k: int) -> bool:
    """n ≥ (15t - 11k + 29)/2, compared as 2n ≥ 15t - 11k + 29."""
    return 2 * n >= 15 * t - 11 * k + 29


def meets_spectral_order_bound(n: int, t: int, k: int) -> bool:
    """n ≥ max{(15t - 11k + 29)/2, t² + 5t/2 + 2}."""
    return meets_edge_order_bound(n, t, k) and 2 * n >= 2 * t * t + 5 * t + 4


def smallest_valid_order(t: int, k: int, spectral: bool = False) -> int:
    """Smallest n ≡ k (mod 2) satisfying the order bound of the edge (or spectral) theorem."""
    if not t >= k >= 1:
        raise InvalidParametersError(f"need t >= k >= 1, got t={t}, k={k}")
    bound = meets_spectral_order_bound if spectral else meets_edge_order_bound
    n = max(k, 2 * t - k + 2)
    if (n - k) % 2:
        n += 1
    while not bound(n, t, k):
        n += 2
    return n


# -- spectral-to-edge bridge --------------------------------------------------


def hong_edge_bound_doubled(p: ExtremalParams) -> int:
    """2 × ((n+k-t-2)² + n - 1)/2: edges forced once ρ(G) > n+k-t-2, via Hong's bound."""
    m = p.n + p.k - p.t - 2
    return m * m + p.n - 1


def spectral_edge_bridge(p: ExtremalParams) -> bool:
    """Whether the edge count forced by ρ(G) > n+k-t-2 reaches the edge threshold.

    Holds for every ``p`` meeting the spectral order bound; that is the
    step which lets the spectral condition fall back on the edge condition.
    """
    return hong_edge_bound_doubled(p) >= 2 * thm4_threshold(p)
