# kfcert/core/spectral.py
"""
Adjacency spectral radius and the bounds built on it.

``spectral_radius`` runs power iteration on ``A + I`` from the all-ones
vector. The shift keeps the dominant eigenvalue simple on bipartite
graphs, where ``A`` alone has the pair ``±ρ``. Convergence is certified by
the residual ``‖Ax - ρx‖∞ / ‖x‖∞``.
"""

from __future__ import annotations

import logging
import math
from typing import Optional

import numpy as np
from scipy.optimize import bisect

from .data_models import SpectralEstimate, ThresholdVerdict
from .exceptions import InvalidGraphError, SpectralConvergenceError
from .extremal import ExtremalParams
from .graph import Graph, iter_bits

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
THRESHOLD_SLACK = 1e-9
QUOTIENT_XTOL = 1e-12


def adjacency_matrix(graph: Graph) -> np.ndarray:
    a = np.zeros((graph.n, graph.n), dtype=float)
    for u, row in enumerate(graph.rows):
        a[u, list(iter_bits(row))] = 1.0
    return a


def iteration_budget(n: int) -> int:
    return 100 * n + 1000


def spectral_radius(
    graph: Graph, tol: float = DEFAULT_TOL, max_iter: Optional[int] = None
) -> SpectralEstimate:
    """Largest adjacency eigenvalue of a connected graph."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if graph.n == 0 or not graph.is_connected():
        raise InvalidGraphError("spectral radius is only computed for connected graphs")
    a = adjacency_matrix(graph)
    budget = iteration_budget(graph.n) if max_iter is None else max_iter

    x = np.ones(graph.n)
    best: Optional[SpectralEstimate] = None
    for iteration in range(1, budget + 1):
        ax = a @ x
        rho = float(x @ ax) / float(x @ x)
        residual = float(np.max(np.abs(ax - rho * x)) / np.max(np.abs(x)))
        best = SpectralEstimate(rho=rho, residual=residual, iterations=iteration)
        if residual <= tol:
            logger.debug("rho(%r) = %.12f after %d iterations", graph, rho, iteration)
            return best
        y = ax + x
        x = y / np.max(np.abs(y))

    raise SpectralConvergenceError(
        f"power iteration did not reach residual {tol:g} within {budget} iterations",
        estimate=best,
    )


def quotient_matrix(p: ExtremalParams) -> np.ndarray:
    """Equitable-partition quotient of K_t ∨ (K_{n+k-2t-1} + (t-k+1)K_1): hub, middle, independent."""
    t, mid, ind = p.t, p.middle_size, p.independent_size
    return np.array(
        [
            [t - 1, mid, ind],
            [t, mid - 1, 0],
            [t, 0, 0],
        ],
        dtype=float,
    )


def quotient_characteristic(p: ExtremalParams, x: float) -> float:
    """det(xI - B) for the 3×3 quotient ``B``, expanded along the last row."""
    t, mid, ind = p.t, p.middle_size, p.independent_size
    a = x - (t - 1)
    d = x - (mid - 1)
    # | a    -mid  -ind |
    # | -t    d     0   |
    # | -t    0     x   |
    return a * d * x - mid * t * x - ind * t * d


def extremal_quotient_rho(p: ExtremalParams) -> float:
    """ρ of the extremal graph as the largest root of the quotient's characteristic cubic.

    The root lies in ``[n+k-t-2, n-1]``: above the spectral radius of the
    clique K_{n+k-t-1} it contains, and at most the maximum degree.
    """
    lo = float(p.n + p.k - p.t - 2)
    hi = float(p.n - 1)
    f_lo = quotient_characteristic(p, lo)
    if f_lo == 0.0:
        return lo
    if f_lo > 0:
        raise ArithmeticError(f"characteristic cubic does not change sign on [{lo}, {hi}] for {p}")
    return float(bisect(lambda x: quotient_characteristic(p, x), lo, hi, xtol=QUOTIENT_XTOL))


def hong_bound(graph: Graph) -> float:
    """sqrt(2e - n + 1), an upper bound on ρ for connected graphs."""
    if graph.n == 0 or not graph.is_connected():
        raise InvalidGraphError("Hong's bound applies to connected graphs")
    return math.sqrt(2 * graph.edge_count - graph.n + 1)


def compare_to_threshold(value: float, threshold: float, slack: float = THRESHOLD_SLACK) -> ThresholdVerdict:
    if value > threshold + slack:
        return ThresholdVerdict.ABOVE
    if value < threshold - slack:
        return ThresholdVerdict.BELOW
    return ThresholdVerdict.WITHIN_SLACK


def check_spectral_monotonicity(
    sub: Graph, sup: Graph, tol: float = DEFAULT_TOL, slack: float = THRESHOLD_SLACK
) -> bool:
    """ρ(G) ≤ ρ(H) for a spanning subgraph G of H, both connected."""
    if not sub.is_spanning_subgraph_of(sup):
        raise InvalidGraphError("first graph must be a spanning subgraph of the second")
    return spectral_radius(sub, tol).rho <= spectral_radius(sup, tol).rho + slack
