# kfcert/core/verification/theorems.py
"""
End-to-end checks of the edge-count and spectral-radius conditions for
k-factor-criticality of t-connected graphs.

Both verifiers record every hypothesis with its numbers and never raise on
a failed hypothesis. The exceptional case is tested on the
(n+k-1)-closure for the edge condition and on ``G`` itself for the
spectral condition, as the two statements differ there.
"""

import logging
from typing import Dict, Optional

from ..closure import l_closure
from ..connectivity import vertex_connectivity
from ..data_models import SpectralEstimate, ThresholdVerdict
from ..exceptions import InvalidParametersError, SpectralConvergenceError
from ..extremal import (
    ExtremalParams,
    edge_threshold,
    meets_edge_order_bound,
    meets_spectral_order_bound,
)
from ..formats import serialize_graph6
from ..graph import Graph
from ..invariants import is_extremal
from ..matching import is_k_factor_critical
from ..spectral import (
    DEFAULT_TOL,
    THRESHOLD_SLACK,
    compare_to_threshold,
    extremal_quotient_rho,
    spectral_radius,
)
from .data_models import HYPOTHESIS_NAMES, Conclusion, HypothesisCheck, Theorem, TheoremReport

logger = logging.getLogger(__name__)


def _params(n: int, t: int, k: int) -> Optional[ExtremalParams]:
    try:
        return ExtremalParams.of(n, t, k)
    except InvalidParametersError:
        return None


def _common_hypotheses(graph: Graph, t: int, k: int, spectral: bool) -> Dict[str, HypothesisCheck]:
    n = graph.n
    checks: Dict[str, HypothesisCheck] = {
        "parameters": HypothesisCheck(
            passed=t >= k >= 1,
            value=None,
            required="t >= k >= 1",
        ),
    }
    kappa = vertex_connectivity(graph).kappa if n >= 1 else 0
    checks["connectivity"] = HypothesisCheck(
        passed=n > t and kappa >= t, value=kappa, required=f">= {t} with n > {t}"
    )
    if spectral:
        order_ok = meets_spectral_order_bound(n, t, k)
        required = f"2n >= max(15t - 11k + 29, 2t^2 + 5t + 4) = {max(15 * t - 11 * k + 29, 2 * t * t + 5 * t + 4)}"
    else:
        order_ok = meets_edge_order_bound(n, t, k)
        required = f"2n >= 15t - 11k + 29 = {15 * t - 11 * k + 29}"
    checks["order"] = HypothesisCheck(passed=order_ok, value=n, required=required)
    checks["parity"] = HypothesisCheck(
        passed=(n - k) % 2 == 0, value=(n - k) % 2, required="n - k ≡ 0 (mod 2)"
    )
    return checks


def verify_thm4(graph: Graph, t: int, k: int) -> TheoremReport:
    """Edge condition: e(G) > C(n+k-t-2, 2) + (t-k+2)(t+1) forces k-factor-criticality
    unless the (n+k-1)-closure is the extremal graph."""
    n, edges = graph.n, graph.edge_count
    hypotheses = _common_hypotheses(graph, t, k, spectral=False)
    threshold = edge_threshold(n, t, k)
    hypotheses["threshold"] = HypothesisCheck(
        passed=edges > threshold, value=edges, required=f"> {threshold}"
    )
    report = dict(theorem=Theorem.THM4, n=n, t=t, k=k, edges=edges, hypotheses=hypotheses)
    if not all(check.passed for check in hypotheses.values()):
        return TheoremReport(conclusion=Conclusion.HYPOTHESES_UNMET, **report)

    verdict = is_k_factor_critical(graph, k)
    if verdict.is_critical:
        return TheoremReport(conclusion=Conclusion.CRITICAL, criticality=verdict, **report)

    p = ExtremalParams.of(n, t, k)
    closed, trace = l_closure(graph, p.closure_level)
    extras = dict(
        criticality=verdict,
        closure_edges_added=len(trace.added),
        closure_graph6=serialize_graph6(closed),
    )
    if is_extremal(closed, p):
        return TheoremReport(conclusion=Conclusion.EXTREMAL_EXCEPTION, **extras, **report)

    logger.error("edge condition violated for n=%d t=%d k=%d: %s", n, t, k, serialize_graph6(graph))
    return TheoremReport(conclusion=Conclusion.VIOLATION, **extras, **report)


def verify_thm5(
    graph: Graph, t: int, k: int, tol: float = DEFAULT_TOL, slack: float = THRESHOLD_SLACK
) -> TheoremReport:
    """Spectral condition: ρ(G) ≥ ρ(extremal) forces k-factor-criticality unless G is extremal."""
    n, edges = graph.n, graph.edge_count
    hypotheses = _common_hypotheses(graph, t, k, spectral=True)
    p = _params(n, t, k)
    threshold_rho = extremal_quotient_rho(p) if p is not None else None

    estimate: Optional[SpectralEstimate] = None
    verdict_rho: Optional[ThresholdVerdict] = None
    note: Optional[str] = None
    converged = False
    if graph.n > 0 and graph.is_connected():
        try:
            estimate = spectral_radius(graph, tol)
            converged = True
        except SpectralConvergenceError as exc:
            estimate = exc.estimate
            note = str(exc)
    else:
        note = "spectral radius not computed for a disconnected graph"
    if estimate is not None and threshold_rho is not None and note is None:
        verdict_rho = compare_to_threshold(estimate.rho, threshold_rho, slack)

    hypotheses["threshold"] = HypothesisCheck(
        passed=verdict_rho in (ThresholdVerdict.ABOVE, ThresholdVerdict.WITHIN_SLACK),
        value=estimate.rho if estimate is not None else None,
        required=f">= {threshold_rho!r}" if threshold_rho is not None else ">= rho(extremal)",
    )
    report = dict(
        theorem=Theorem.THM5,
        n=n,
        t=t,
        k=k,
        edges=edges,
        hypotheses=hypotheses,
        spectral=estimate,
        threshold_rho=threshold_rho,
        spectral_verdict=verdict_rho,
        note=note,
    )
    if not all(hypotheses[name].passed for name in HYPOTHESIS_NAMES if name != "threshold"):
        return TheoremReport(conclusion=Conclusion.HYPOTHESES_UNMET, **report)
    if not converged:
        # neither side of the threshold is certified
        return TheoremReport(conclusion=Conclusion.INDETERMINATE, **report)
    if not hypotheses["threshold"].passed:
        return TheoremReport(conclusion=Conclusion.HYPOTHESES_UNMET, **report)

    verdict = is_k_factor_critical(graph, k)
    if verdict.is_critical:
        return TheoremReport(conclusion=Conclusion.CRITICAL, criticality=verdict, **report)
    if is_extremal(graph, p):
        return TheoremReport(conclusion=Conclusion.EXTREMAL_EXCEPTION, criticality=verdict, **report)
    if verdict_rho is ThresholdVerdict.WITHIN_SLACK:
        return TheoremReport(conclusion=Conclusion.INDETERMINATE, criticality=verdict, **report)

    logger.error("spectral condition violated for n=%d t=%d k=%d: %s", n, t, k, serialize_graph6(graph))
    return TheoremReport(conclusion=Conclusion.VIOLATION, criticality=verdict, **report)
