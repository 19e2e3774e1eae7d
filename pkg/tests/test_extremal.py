from math import comb

import pytest
from pydantic import ValidationError

from kfcert.core.connectivity import vertex_connectivity
from kfcert.core.exceptions import InvalidParametersError
from kfcert.core.extremal import (
    ExtremalParams,
    construct_extremal,
    edge_threshold,
    extremal_edge_count,
    hong_edge_bound_doubled,
    hub_vertices,
    independent_vertices,
    meets_edge_order_bound,
    meets_spectral_order_bound,
    middle_vertices,
    smallest_valid_order,
    spectral_edge_bridge,
    thm4_threshold,
)
from kfcert.core.invariants import clique_number, independence_number, is_extremal
from kfcert.core.matching import is_k_factor_critical


def golden_grid():
    for t in range(1, 6):
        for k in range(1, t + 1):
            base = smallest_valid_order(t, k)
            for n in (base, base + 2, base + 4):
                yield ExtremalParams(n=n, t=t, k=k)


GOLDEN = list(golden_grid())


class TestExtremalParams:
    def test_derived_sizes(self, params_17):
        assert params_17.middle_size == 15
        assert params_17.independent_size == 1
        assert params_17.clique_size == 16
        assert params_17.closure_level == 17

    @pytest.mark.parametrize(
        "n, t, k",
        [(17, 1, 2), (17, 0, 0), (18, 1, 1), (3, 2, 1)],
    )
    def test_invalid_triples(self, n, t, k):
        with pytest.raises(InvalidParametersError):
            ExtremalParams.of(n, t, k)

    def test_frozen(self, params_17):
        with pytest.raises(ValidationError):
            params_17.n = 19


class TestThresholds:
    def test_reference_values(self, params_17):
        assert thm4_threshold(params_17) == 109
        assert extremal_edge_count(params_17) == 121
        p = ExtremalParams(n=25, t=2, k=1)
        assert thm4_threshold(p) == 240
        assert extremal_edge_count(p) == 257

    def test_edge_threshold_matches_binomial_form(self):
        for p in GOLDEN:
            expected = comb(p.n + p.k - p.t - 2, 2) + (p.t - p.k + 2) * (p.t + 1)
            assert edge_threshold(p.n, p.t, p.k) == thm4_threshold(p) == expected
        # out-of-family triples stay defined for hypothesis reports
        assert edge_threshold(0, 1, 1) == 4
        assert edge_threshold(5, 2, 3) == comb(4, 2) + 3

    def test_order_bounds_are_exact(self):
        # 2n >= 33 for t = k = 1
        assert not meets_edge_order_bound(16, 1, 1)
        assert meets_edge_order_bound(17, 1, 1)
        # t = 5, k = 5: edge bound gives 25, spectral bound 2n >= 79
        assert meets_edge_order_bound(25, 5, 5)
        assert not meets_spectral_order_bound(39, 5, 5)
        assert meets_spectral_order_bound(40, 5, 5)

    @pytest.mark.parametrize(
        "t, k, spectral, expected",
        [(1, 1, False, 17), (2, 1, False, 25), (2, 2, False, 20), (3, 1, False, 33), (5, 5, True, 41)],
    )
    def test_smallest_valid_order(self, t, k, spectral, expected):
        assert smallest_valid_order(t, k, spectral=spectral) == expected

    def test_smallest_valid_order_rejects_bad_pairs(self):
        with pytest.raises(InvalidParametersError):
            smallest_valid_order(1, 2)

    @pytest.mark.parametrize("p", GOLDEN, ids=str)
    def test_extremal_exceeds_threshold(self, p):
        assert extremal_edge_count(p) > thm4_threshold(p)

    def test_spectral_edge_bridge_holds_at_spectral_orders(self):
        for t in range(1, 6):
            for k in range(1, t + 1):
                base = smallest_valid_order(t, k, spectral=True)
                for n in range(base, base + 20, 2):
                    p = ExtremalParams(n=n, t=t, k=k)
                    assert spectral_edge_bridge(p)
                    assert hong_edge_bound_doubled(p) == (n + k - t - 2) ** 2 + n - 1


class TestConstructExtremal:
    def test_layout(self, params_17, extremal_17):
        assert list(hub_vertices(params_17)) == [0]
        assert list(middle_vertices(params_17)) == list(range(1, 16))
        assert list(independent_vertices(params_17)) == [16]
        assert extremal_17.neighbors(16) == [0]
        assert extremal_17.degree(0) == 16

    @pytest.mark.timeout(60)
    @pytest.mark.parametrize("p", GOLDEN, ids=str)
    def test_golden_properties(self, p):
        g = construct_extremal(p)
        assert g.n == p.n
        assert g.edge_count == comb(p.n + p.k - p.t - 1, 2) + p.t * (p.t - p.k + 1)
        assert clique_number(g).omega == p.n + p.k - p.t - 1
        assert independence_number(g) == p.t - p.k + 2
        assert vertex_connectivity(g).kappa == p.t
        verdict = is_k_factor_critical(g, p.k)
        assert not verdict.is_critical
        assert set(verdict.witness) <= set(hub_vertices(p))
        assert is_extremal(g, p)
