import random
from itertools import combinations

import pytest

from kfcert.core.closure import l_closure
from kfcert.core.connectivity import is_t_connected
from kfcert.core.data_models import Lemma8Status
from kfcert.core.exceptions import InvalidParametersError
from kfcert.core.extremal import ExtremalParams, construct_extremal, thm4_threshold
from kfcert.core.graph import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edges,
    petersen_graph,
)
from kfcert.core.invariants import (
    claims_report,
    clique_number,
    favaron_condition,
    independence_number,
    is_clique,
    is_extremal,
    lemma8_check,
    maximum_independent_set,
)
from kfcert.core.matching import is_k_factor_critical

from .conftest import brute_omega, random_graph


def pendant_heavy_graph(rng: random.Random, p: ExtremalParams) -> Graph:
    """Up to t-k+1 vertices of degree t attached to a nearly complete remainder."""
    low = rng.randint(1, p.independent_size)
    rest = list(range(low, p.n))
    drop = rng.uniform(0.0, 0.2)
    edges = [(u, v) for u, v in combinations(rest, 2) if rng.random() >= drop]
    for v in range(low):
        edges += [(v, w) for w in rng.sample(rest, p.t)]
    return from_edges(p.n, edges)


class TestCliqueNumber:
    def test_named_graphs(self):
        assert clique_number(complete_graph(7)).omega == 7
        assert clique_number(cycle_graph(5)).omega == 2
        assert clique_number(petersen_graph()).omega == 2
        assert clique_number(empty_graph(4)).omega == 1
        assert clique_number(empty_graph(0)).omega == 0

    def test_independence_of_named_graphs(self):
        assert independence_number(petersen_graph()) == 4
        assert independence_number(cycle_graph(7)) == 3
        assert independence_number(complete_graph(5)) == 1

    def test_random_against_brute_force(self):
        rng = random.Random(15)
        for _ in range(500):
            g = random_graph(rng, rng.randint(1, 10), rng.random())
            result = clique_number(g)
            assert result.omega == brute_omega(g)
            assert len(result.witness) == result.omega
            assert is_clique(g, result.witness)

    def test_independent_set_witness(self):
        rng = random.Random(16)
        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 14), rng.random())
            witness = maximum_independent_set(g)
            assert is_clique(complement(g), witness)
            assert len(witness) == brute_omega(complement(g))

    def test_extremal_invariants(self, extremal_17):
        result = clique_number(extremal_17)
        assert result.omega == 16
        assert result.witness == list(range(16))
        assert independence_number(extremal_17) == 2


class TestFavaronCondition:
    def test_condition_implies_criticality(self):
        rng = random.Random(17)
        hits = 0
        for _ in range(2000):
            n = rng.randint(3, 12)
            g = random_graph(rng, n, rng.uniform(0.5, 0.95))
            k = rng.choice([1, 2])
            t = rng.randint(k, max(k, n - 2))
            if favaron_condition(g, k, t):
                hits += 1
                assert is_k_factor_critical(g, k).is_critical
        assert hits > 0

    def test_parity_fails_fast(self):
        assert not favaron_condition(complete_graph(6), 1, 4)

    def test_bad_parameters(self):
        with pytest.raises(InvalidParametersError):
            favaron_condition(complete_graph(4), 3, 2)


class TestCliqueForcing:
    def test_extremal_graph_passes(self, extremal_17):
        report = lemma8_check(extremal_17, 1, 1)
        assert report.status == Lemma8Status.PASS
        assert report.omega == 16 and report.required_omega == 16
        assert report.threshold == 109

    def test_below_threshold(self):
        # the 17-cycle is closed at level 17 and far below 110 edges
        report = lemma8_check(cycle_graph(17), 1, 1)
        assert report.status == Lemma8Status.BELOW_THRESHOLD

    def test_hypotheses_listed(self):
        report = lemma8_check(complete_graph(16), 1, 1)
        assert report.status == Lemma8Status.HYPOTHESES_UNMET
        assert "n ≡ k (mod 2)" in report.unmet
        report = lemma8_check(complete_graph(17).remove_edge(0, 1), 1, 1)
        assert report.unmet == ["graph equals its (n+k-1)-closure"]

    @pytest.mark.timeout(120)
    def test_closed_graphs_above_threshold(self):
        rng = random.Random(18)
        families = [ExtremalParams(n=17, t=1, k=1), ExtremalParams(n=25, t=2, k=1), ExtremalParams(n=20, t=2, k=2)]
        checked = incomplete = 0
        for _ in range(2000):
            p = rng.choice(families)
            g = pendant_heavy_graph(rng, p)
            closed, _ = l_closure(g, p.closure_level)
            if not is_t_connected(closed, p.t) or closed.edge_count <= thm4_threshold(p):
                continue
            report = lemma8_check(closed, p.t, p.k)
            assert report.status == Lemma8Status.PASS
            assert report.omega >= p.clique_size
            checked += 1
            incomplete += closed != complete_graph(p.n)
            if checked == 200:
                break
        assert checked == 200
        assert incomplete > 0


class TestExtremalRecognizer:
    def test_claims_on_extremal(self, extremal_17, params_17):
        claims = claims_report(extremal_17, params_17)
        assert claims.all_hold
        assert claims.low_degree_vertices == [16]
        assert claims.hub == [0]

    def test_relabelled_extremal_is_recognised(self, params_17, extremal_17):
        rng = random.Random(19)
        for _ in range(50):
            perm = list(range(17))
            rng.shuffle(perm)
            assert is_extremal(extremal_17.relabel(perm), params_17)

    def test_single_vertex_middle(self):
        # n + k - 2t - 1 = 1: the middle vertex also has degree t
        p = ExtremalParams(n=6, t=3, k=2)
        assert p.middle_size == 1
        assert is_extremal(construct_extremal(p), p)

    def test_near_misses_rejected(self, extremal_17, params_17):
        assert not is_extremal(extremal_17.remove_edge(1, 2), params_17)
        assert not is_extremal(complete_graph(17), params_17)
        moved = extremal_17.remove_edge(1, 2).add_edge(3, 16)
        assert not is_extremal(moved, params_17)
