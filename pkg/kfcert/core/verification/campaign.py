# kfcert/core/verification/campaign.py
"""
Counterexample-search campaigns over a (n, t, k) grid.

Every sample is reproducible from the master seed alone: the sample seed is
``derive_seed(master, theorem, n, t, k, index)`` and nothing else feeds the
generator, so running with ``workers > 1`` yields the same report as a
serial run.
"""

import logging
import random
from math import ceil, comb
from multiprocessing import Pool
from typing import List, Tuple

from ..config.schema import CampaignConfig, EdgeWindow
from ..extremal import ExtremalParams, construct_extremal, extremal_edge_count, thm4_threshold
from ..graph import Graph
from ..spectral import extremal_quotient_rho
from .data_models import CampaignReport, CellParams, CellReport, Conclusion, Theorem, TheoremReport
from .generators import derive_seed, extremal_supergraph, harary_backbone, random_t_connected
from .theorems import verify_thm4, verify_thm5

logger = logging.getLogger(__name__)

SampleTask = Tuple[str, int, int, int, int, int, int, int]


def edge_anchor(theorem: Theorem, p: ExtremalParams) -> int:
    """Edge count the sampling window is centred on."""
    if theorem == Theorem.THM4:
        return thm4_threshold(p)
    # ρ ≥ ρ* needs 2e - n + 1 ≥ ρ*² on connected graphs
    rho = extremal_quotient_rho(p)
    return ceil((rho * rho + p.n - 1) / 2)


def edge_range(theorem: Theorem, p: ExtremalParams, window: EdgeWindow) -> Tuple[int, int]:
    """Inclusive range of target edge counts, clamped to what the backbone allows.

    For the spectral theorem the range always reaches the complete graph:
    random graphs only meet ρ ≥ ρ* within about n(t-k+1)/2 edges of it.
    """
    floor_edges = harary_backbone(p.n, p.t).edge_count
    ceiling_edges = comb(p.n, 2)
    anchor = edge_anchor(theorem, p)
    lo = min(max(anchor - window.below, floor_edges), ceiling_edges)
    top = ceiling_edges if theorem == Theorem.THM5 else anchor + window.above
    hi = max(min(top, ceiling_edges), lo)
    return lo, hi


def sample_graph(
    theorem: Theorem, p: ExtremalParams, index: int, master_seed: int, window: EdgeWindow
) -> Tuple[int, Graph]:
    """The ``index``-th sample of a cell together with its seed.

    Spectral campaigns alternate: even indices are extremal supergraphs with
    1 to ``window.above`` extra edges, odd indices are backbone samples.
    """
    seed = derive_seed(master_seed, theorem.value, p.n, p.t, p.k, index)
    rng = random.Random(seed)
    if theorem == Theorem.THM5 and index % 2 == 0:
        room = comb(p.n, 2) - extremal_edge_count(p)
        surplus = rng.randint(1, max(1, min(window.above, room)))
        return seed, extremal_supergraph(p, surplus, seed)
    lo, hi = edge_range(theorem, p, window)
    target = rng.randint(lo, hi)
    surplus = target - harary_backbone(p.n, p.t).edge_count
    return seed, random_t_connected(p.n, p.t, surplus, seed)


def _verify(theorem: Theorem, graph: Graph, p: ExtremalParams) -> TheoremReport:
    if theorem == Theorem.THM4:
        return verify_thm4(graph, p.t, p.k)
    return verify_thm5(graph, p.t, p.k)


def _evaluate_sample(task: SampleTask) -> Tuple[int, Conclusion]:
    theorem_value, n, t, k, index, master_seed, below, above = task
    theorem = Theorem(theorem_value)
    p = ExtremalParams(n=n, t=t, k=k)
    seed, graph = sample_graph(theorem, p, index, master_seed, EdgeWindow(below=below, above=above))
    return seed, _verify(theorem, graph, p).conclusion


def _cell_tasks(config: CampaignConfig, p: ExtremalParams) -> List[SampleTask]:
    return [
        (config.theorem.value, p.n, p.t, p.k, index, config.seed, config.edges.below, config.edges.above)
        for index in range(config.samples)
    ]


def search_counterexample(config: CampaignConfig) -> CampaignReport:
    """Sample every grid cell, verify each sample and tally the conclusions."""
    cells = config.cell_params()
    logger.info(
        "starting %s campaign",
        config.theorem.value,
        extra={"campaign_seed": config.seed, "cells": len(cells), "samples": config.samples},
    )
    pool = Pool(config.workers) if config.workers > 1 else None
    reports: List[CellReport] = []
    try:
        for p in cells:
            cell_seed = derive_seed(config.seed, config.theorem.value, p.n, p.t, p.k)
            cell = CellReport(params=CellParams(n=p.n, t=p.t, k=p.k), samples=config.samples, cell_seed=cell_seed)
            tasks = _cell_tasks(config, p)
            results = pool.map(_evaluate_sample, tasks) if pool is not None else map(_evaluate_sample, tasks)
            for seed, conclusion in results:
                cell.record(conclusion, seed)
            if config.include_extremal:
                cell.extremal_conclusion = _verify(config.theorem, construct_extremal(p), p).conclusion
                if cell.extremal_conclusion != Conclusion.EXTREMAL_EXCEPTION:
                    logger.warning(
                        "extremal graph was classified %s",
                        cell.extremal_conclusion.value,
                        extra={"cell": [p.n, p.t, p.k]},
                    )
            violations = cell.counts.get(Conclusion.VIOLATION, 0)
            log = logger.error if violations else logger.info
            log(
                "cell n=%d t=%d k=%d done",
                p.n,
                p.t,
                p.k,
                extra={"cell_seed": cell_seed, "counts": {c.value: v for c, v in cell.counts.items()}},
            )
            reports.append(cell)
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    return CampaignReport(
        theorem=config.theorem,
        seed=config.seed,
        grid=[cell.params for cell in reports],
        cells=reports,
    )
