# kfcert/core/verification/generators.py
"""Seeded random t-connected graphs: a Harary-style circulant backbone plus
random edges, or a relabelled extremal graph plus random edges."""

import hashlib
import logging
import random
from typing import Union

from ..connectivity import is_t_connected
from ..exceptions import InvalidParametersError, KFCertError
from ..extremal import ExtremalParams, construct_extremal
from ..graph import Graph, circulant_graph

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 16


def derive_seed(*parts: Union[int, str]) -> int:
    """Stable 64-bit seed from the master seed and a cell/sample path."""
    digest = hashlib.blake2b(":".join(str(p) for p in parts).encode("utf-8"), digest_size=8)
    return int.from_bytes(digest.digest(), "big")


def harary_backbone(n: int, t: int) -> Graph:
    """Circulant joining each vertex to its ⌈t/2⌉ nearest neighbours on each side (κ ≥ t)."""
    reach = (t + 1) // 2
    return circulant_graph(n, range(1, reach + 1))


def random_t_connected(n: int, t: int, surplus: int, seed: int) -> Graph:
    """Backbone plus ``surplus`` distinct uniformly chosen non-edges."""
    if not n > t >= 1:
        raise InvalidParametersError(f"need n > t >= 1, got n={n}, t={t}")
    backbone = harary_backbone(n, t)
    candidates = backbone.non_edges()
    if not 0 <= surplus <= len(candidates):
        raise InvalidParametersError(
            f"surplus must lie in [0, {len(candidates)}] for n={n}, t={t}, got {surplus}"
        )

    attempt_seed = seed
    for attempt in range(MAX_ATTEMPTS):
        rng = random.Random(attempt_seed)
        rows = list(backbone.rows)
        for u, v in rng.sample(candidates, surplus):
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        graph = Graph(n, rows)
        if is_t_connected(graph, t):
            return graph
        logger.warning("sample with seed %d is not %d-connected, regenerating", attempt_seed, t)
        attempt_seed = derive_seed(seed, "retry", attempt)
    raise KFCertError(f"could not generate a {t}-connected graph on {n} vertices")


def extremal_supergraph(p: ExtremalParams, surplus: int, seed: int) -> Graph:
    """Extremal graph plus ``surplus`` distinct uniformly chosen non-edges, randomly relabelled.

    Every such graph is t-connected and, for ``surplus >= 1``, has spectral
    radius strictly above the extremal one.
    """
    base = construct_extremal(p)
    candidates = base.non_edges()
    if not 0 <= surplus <= len(candidates):
        raise InvalidParametersError(
            f"surplus must lie in [0, {len(candidates)}] for n={p.n}, t={p.t}, k={p.k}, got {surplus}"
        )
    rng = random.Random(seed)
    rows = list(base.rows)
    for u, v in rng.sample(candidates, surplus):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    perm = list(range(p.n))
    rng.shuffle(perm)
    return Graph(p.n, rows).relabel(perm)
