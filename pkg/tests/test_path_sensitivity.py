import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from qospath import (
    WeightedDigraph,
    WeightedGraph,
    classify_undirected,
    classify_unit,
    classify_weighted,
    distance_labels,
)
from qospath.oracles import classify_by_enumeration

from genutil import random_weighted_digraph, random_weighted_graph, rng_for

CHAIN = WeightedDigraph(3, ((0, 1, 1), (1, 2, 1)))
DIAMOND = WeightedDigraph(4, ((0, 1, 1), (1, 3, 1), (0, 2, 1), (2, 3, 1)))


class TestClassifyWeighted:
    def test_chain_all_category_one(self):
        cls = classify_weighted(CHAIN, 0, 2)
        assert cls.vertex_category == (1, 1, 1)
        assert cls.edge_category == (1, 1)

    def test_diamond_middle_is_category_two(self):
        cls = classify_weighted(DIAMOND, 0, 3)
        assert cls.vertex_category == (1, 2, 2, 1)
        assert cls.edge_category == (2, 2, 2, 2)

    def test_unreachable_target_all_category_three(self):
        g = WeightedDigraph(3, ((0, 1, 1),))
        cls = classify_weighted(g, 0, 2)
        assert cls.vertex_category == (3, 3, 3)
        assert cls.edge_category == (3,)

    def test_source_equals_target(self):
        cls = classify_weighted(CHAIN, 1, 1)
        assert cls.vertex_category == (3, 1, 3)
        assert cls.edge_category == (3, 3)

    def test_heavy_shortcut_between_marked_vertices(self):
        # both endpoints marked, but the direct edge is too heavy to be tight
        g = WeightedDigraph(3, ((0, 1, 1), (1, 2, 1), (0, 2, 5)))
        cls = classify_weighted(g, 0, 2)
        assert cls.edge_category == (1, 1, 3)

    def test_zero_weight_rejected(self):
        g = WeightedDigraph(2, ((0, 1, 0),))
        with pytest.raises(ValueError):
            classify_weighted(g, 0, 1)

    def test_out_of_range_endpoint(self):
        with pytest.raises(ValueError):
            classify_weighted(CHAIN, 0, 7)

    def test_float_weights_supported(self):
        g = WeightedDigraph(3, ((0, 1, 0.5), (1, 2, 0.25), (0, 2, 0.75)))
        cls = classify_weighted(g, 0, 2)
        vcat, ecat = classify_by_enumeration(g, 0, 2)
        assert cls.vertex_category == tuple(vcat)
        assert cls.edge_category == tuple(ecat)


class TestDistanceLabels:
    def test_marks_match_definition(self):
        labels = distance_labels(DIAMOND, 0, 3)
        assert labels.ds[0] == 0 and labels.dt[3] == 0
        assert all(labels.marked)


class TestClassifyUnit:
    def test_matches_weighted_on_chain(self):
        assert classify_unit(CHAIN, 0, 2) == classify_weighted(CHAIN, 0, 2)

    def test_diamond_level_count(self):
        cls = classify_unit(DIAMOND, 0, 3)
        assert cls.vertex_category == (1, 2, 2, 1)

    def test_source_equals_target(self):
        cls = classify_unit(CHAIN, 1, 1)
        assert cls.vertex_category == (3, 1, 3)
        assert cls.edge_category == (3, 3)

    def test_non_uniform_weights_rejected(self):
        g = WeightedDigraph(3, ((0, 1, 1), (1, 2, 2)))
        with pytest.raises(ValueError):
            classify_unit(g, 0, 2)


class TestClassifyUndirected:
    def test_path_graph(self):
        ug = WeightedGraph(3, ((0, 1, 1), (1, 2, 1)))
        cls = classify_undirected(ug, 0, 2)
        assert cls.vertex_category == (1, 1, 1)
        assert cls.edge_category == (1, 1)

    def test_triangle_detour_is_category_three(self):
        ug = WeightedGraph(3, ((0, 1, 1), (1, 2, 1), (0, 2, 1)))
        cls = classify_undirected(ug, 0, 1)
        assert cls.edge_category[0] == 1
        assert cls.vertex_category[2] == 3
        assert cls.edge_category[1] == 3 and cls.edge_category[2] == 3

    def test_four_cycle_two_routes(self):
        ug = WeightedGraph(4, ((0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)))
        cls = classify_undirected(ug, 0, 2)
        assert cls.vertex_category == (1, 2, 1, 2)
        assert cls.edge_category == (2, 2, 2, 2)

    def test_methods_agree(self):
        ug = WeightedGraph(4, ((0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)))
        assert classify_undirected(ug, 0, 2, "unit") == classify_undirected(
            ug, 0, 2, "weighted"
        )


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_weighted_matches_enumeration(seed):
    rng = rng_for(seed)
    g = random_weighted_digraph(rng, n_max=8, m_max=16)
    s, t = rng.randrange(g.n), rng.randrange(g.n)
    cls = classify_weighted(g, s, t)
    vcat, ecat = classify_by_enumeration(g, s, t)
    assert cls.vertex_category == tuple(vcat)
    assert cls.edge_category == tuple(ecat)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_unit_matches_weighted_on_uniform(seed):
    rng = rng_for(seed)
    g = random_weighted_digraph(rng, n_max=8, m_max=16, uniform=True)
    s, t = rng.randrange(g.n), rng.randrange(g.n)
    assert classify_unit(g, s, t) == classify_weighted(g, s, t)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_undirected_matches_enumeration(seed):
    rng = rng_for(seed)
    ug = random_weighted_graph(rng, n_max=7, m_max=10)
    s, t = rng.randrange(ug.n), rng.randrange(ug.n)
    cls = classify_undirected(ug, s, t)
    vcat, ecat = classify_by_enumeration(ug, s, t)
    assert cls.vertex_category == tuple(vcat)
    assert cls.edge_category == tuple(ecat)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_category_one_edges_lie_on_every_shortest_path(seed):
    from qospath.oracles import enumerate_shortest_paths

    rng = rng_for(seed)
    g = random_weighted_digraph(rng, n_max=7, m_max=14)
    s, t = rng.randrange(g.n), rng.randrange(g.n)
    cls = classify_weighted(g, s, t)
    best, paths = enumerate_shortest_paths(g, s, t)
    ones = {i for i, c in enumerate(cls.edge_category) if c == 1}
    for _, eidxs in paths:
        assert ones <= set(eidxs)
