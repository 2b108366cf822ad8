import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from qospath import (
    KnapsackInstance,
    classify_by_removal,
    classify_feasibility,
    classify_mincost,
)
from qospath.oracles import enumerate_min_cost_subsets, enumerate_subsets

from genutil import rng_for


def _cats_from_subsets(n, solutions):
    if not solutions:
        return [3] * n
    sets = [set(sub) for sub in solutions]
    every = set.intersection(*sets)
    some = set.union(*sets)
    return [1 if i in every else 2 if i in some else 3 for i in range(n)]


class TestFeasibility:
    def test_forced_item(self):
        assert classify_feasibility(KnapsackInstance((2, 2, 3), 5)) == [2, 2, 1]

    def test_all_items_forced(self):
        assert classify_feasibility(KnapsackInstance((2, 2, 3), 7)) == [1, 1, 1]

    def test_excluded_item(self):
        assert classify_feasibility(KnapsackInstance((2, 2, 3), 4)) == [1, 1, 3]

    def test_no_solution_everything_category_three(self):
        assert classify_feasibility(KnapsackInstance((2, 4), 3)) == [3, 3]

    def test_zero_target(self):
        # the empty subset always works; a weight-0 item can join or not
        assert classify_feasibility(KnapsackInstance((2, 0), 0)) == [3, 2]

    def test_zero_weight_items_count_as_distinct_solutions(self):
        assert classify_feasibility(KnapsackInstance((0, 5), 5)) == [2, 1]


class TestMinCost:
    def test_expensive_item_priced_out(self):
        inst = KnapsackInstance((2, 2, 3), 5, (1, 5, 1))
        assert classify_mincost(inst) == [1, 3, 1]

    def test_two_optima(self):
        assert classify_mincost(KnapsackInstance((1, 1), 1, (4, 4))) == [2, 2]

    def test_infeasible_target(self):
        assert classify_mincost(KnapsackInstance((2,), 1, (1,))) == [3]

    def test_requires_costs(self):
        with pytest.raises(ValueError):
            classify_mincost(KnapsackInstance((1,), 1))


class TestByRemoval:
    def test_matches_feasibility_example(self):
        inst = KnapsackInstance((2, 2, 3), 5)
        assert classify_by_removal(inst) == classify_feasibility(inst)

    def test_matches_mincost_example(self):
        inst = KnapsackInstance((2, 2, 3), 5, (1, 5, 1))
        assert classify_by_removal(inst) == classify_mincost(inst)


def test_validation():
    with pytest.raises(ValueError):
        KnapsackInstance((1, -2), 3)
    with pytest.raises(ValueError):
        KnapsackInstance((1,), -1)
    with pytest.raises(ValueError):
        KnapsackInstance((1,), 1, count_cap=1)


def _random_instance(rng, with_costs):
    n = rng.randint(1, 10)
    weights = tuple(rng.randint(0, 8) for _ in range(n))
    target = rng.randint(0, 20)
    costs = tuple(rng.randint(0, 9) for _ in range(n)) if with_costs else None
    return KnapsackInstance(weights, target, costs)


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_three_way_agreement_feasibility(seed):
    inst = _random_instance(rng_for(seed), with_costs=False)
    fast = classify_feasibility(inst)
    removal = classify_by_removal(inst)
    brute = _cats_from_subsets(inst.n, enumerate_subsets(inst.weights, inst.target))
    assert fast == removal == brute


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_three_way_agreement_mincost(seed):
    inst = _random_instance(rng_for(seed), with_costs=True)
    fast = classify_mincost(inst)
    removal = classify_by_removal(inst)
    _, best_subsets = enumerate_min_cost_subsets(
        inst.weights, inst.costs, inst.target
    )
    brute = _cats_from_subsets(inst.n, best_subsets)
    assert fast == removal == brute


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_count_cap_does_not_change_categories(seed):
    rng = rng_for(seed)
    with_costs = rng.random() < 0.5
    base = _random_instance(rng, with_costs)
    fn = classify_mincost if with_costs else classify_feasibility
    results = [
        fn(KnapsackInstance(base.weights, base.target, base.costs, count_cap=cap))
        for cap in (2, 3, None)
    ]
    assert results[0] == results[1] == results[2]


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_reversing_items_reverses_categories(seed):
    rng = rng_for(seed)
    with_costs = rng.random() < 0.5
    inst = _random_instance(rng, with_costs)
    fn = classify_mincost if with_costs else classify_feasibility
    forward = fn(inst)
    rev = KnapsackInstance(
        inst.weights[::-1], inst.target,
        inst.costs[::-1] if inst.costs is not None else None,
    )
    assert fn(rev) == forward[::-1]
