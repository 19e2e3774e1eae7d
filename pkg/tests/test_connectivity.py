import random

import networkx as nx
import pytest

from kfcert.core.connectivity import is_t_connected, local_connectivity, vertex_connectivity
from kfcert.core.exceptions import InvalidGraphError, InvalidParametersError
from kfcert.core.graph import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    petersen_graph,
)

from .conftest import all_graphs, brute_kappa, is_separator, random_graph


class TestVertexConnectivity:
    def test_named_graphs(self):
        assert vertex_connectivity(cycle_graph(6)).kappa == 2
        assert vertex_connectivity(path_graph(5)).kappa == 1
        assert vertex_connectivity(petersen_graph()).kappa == 3

    def test_edge_cases(self):
        single = vertex_connectivity(empty_graph(1))
        assert single.kappa == 0 and single.separator is None
        split = vertex_connectivity(disjoint_union(complete_graph(2), complete_graph(3)))
        assert split.kappa == 0 and split.separator == []
        full = vertex_connectivity(complete_graph(5))
        assert full.kappa == 4 and full.separator is None
        with pytest.raises(InvalidGraphError):
            vertex_connectivity(empty_graph(0))

    def test_extremal_hub_is_the_cut(self, extremal_17):
        result = vertex_connectivity(extremal_17)
        assert result.kappa == 1
        assert result.separator == [0]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_exhaustive_small(self, n):
        for g in all_graphs(n):
            result = vertex_connectivity(g)
            assert result.kappa == brute_kappa(g)
            if result.separator:
                assert len(result.separator) == result.kappa
                assert is_separator(g, result.separator)

    def test_random_seven_vertices(self):
        rng = random.Random(4)
        for _ in range(3000):
            g = random_graph(rng, 7, rng.random())
            result = vertex_connectivity(g)
            assert result.kappa == brute_kappa(g)
            if result.separator:
                assert is_separator(g, result.separator)

    @pytest.mark.slow
    def test_exhaustive_six_and_sampled_seven(self):
        checked = 0
        for g in all_graphs(6):
            assert vertex_connectivity(g).kappa == brute_kappa(g)
            checked += 1
        rng = random.Random(40)
        for _ in range(70000):
            g = random_graph(rng, 7, rng.random())
            result = vertex_connectivity(g)
            assert result.kappa == brute_kappa(g)
            if result.separator:
                assert is_separator(g, result.separator)
            checked += 1
        assert checked >= 100000

    def test_random_against_networkx(self):
        rng = random.Random(5)
        for _ in range(100):
            g = random_graph(rng, rng.randint(8, 30), rng.uniform(0.2, 0.8))
            ref = nx.Graph()
            ref.add_nodes_from(range(g.n))
            ref.add_edges_from(g.edges())
            assert vertex_connectivity(g).kappa == nx.node_connectivity(ref)


class TestPredicate:
    def test_agrees_with_kappa(self):
        rng = random.Random(8)
        for _ in range(500):
            g = random_graph(rng, rng.randint(1, 9), rng.random())
            kappa = vertex_connectivity(g).kappa
            for t in range(0, 5):
                expected = g.n > t and (kappa >= t or t == 0)
                assert is_t_connected(g, t) == expected

    def test_order_must_exceed_t(self):
        assert not is_t_connected(complete_graph(3), 3)
        assert is_t_connected(complete_graph(4), 3)

    def test_negative_t_rejected(self):
        with pytest.raises(InvalidParametersError):
            is_t_connected(cycle_graph(4), -1)


class TestLocalConnectivity:
    def test_cycle_has_two_paths(self):
        value, cut = local_connectivity(cycle_graph(6), 0, 3)
        assert value == 2
        assert sorted(cut) in ([1, 4], [1, 5], [2, 4], [2, 5])

    def test_limit_stops_early(self):
        value, _ = local_connectivity(petersen_graph(), 0, 2, limit=1)
        assert value == 1

    def test_adjacent_pair_rejected(self):
        with pytest.raises(InvalidGraphError):
            local_connectivity(cycle_graph(4), 0, 1)
