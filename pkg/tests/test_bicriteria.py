import math

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from qospath import (
    BiweightedDigraph,
    ConstrainedQuery,
    CycleError,
    NegativeCycleError,
    Objective,
    Sense,
    Status,
    WeightedDigraph,
    dag_optimal_path,
    exact_constrained,
    probe_x_min,
    shortest_path_at_x,
    solve_constrained,
)
from qospath.bicriteria import StateCapError
from qospath.oracles import enumerate_constrained_paths

from genutil import path_cost_sums, random_biweighted, rng_for

TWO_ROUTE = BiweightedDigraph(3, ((0, 1, 1, 5), (1, 2, 1, 5), (0, 2, 10, 2)))


class TestShortestPathAtX:
    def test_x_zero_prefers_w1(self):
        p = shortest_path_at_x(TWO_ROUTE, 0, 2, 0)
        assert p.vertices == (0, 1, 2)
        assert p.costs == {"w1sum": 2, "w2sum": 10}

    def test_large_x_prefers_w2(self):
        p = shortest_path_at_x(TWO_ROUTE, 0, 2, 10)
        assert p.vertices == (0, 2)
        assert p.costs == {"w1sum": 10, "w2sum": 2}

    def test_source_equals_target(self):
        p = shortest_path_at_x(TWO_ROUTE, 1, 1, 0)
        assert p.vertices == (1,) and p.edges == ()
        assert p.costs == {"w1sum": 0, "w2sum": 0}

    def test_unreachable_returns_none(self):
        g = BiweightedDigraph(3, ((0, 1, 1, 1),))
        assert shortest_path_at_x(g, 0, 2, 0) is None

    def test_infinite_x_substitutes_w2(self):
        p = shortest_path_at_x(TWO_ROUTE, 0, 2, float("inf"))
        assert p.costs["w2sum"] == 2

    def test_negative_x_without_probe_raises_on_negative_cycle(self):
        g = BiweightedDigraph(2, ((0, 1, 0, 3), (1, 0, 0, 3)))
        with pytest.raises(NegativeCycleError):
            shortest_path_at_x(g, 0, 1, -5)

    def test_bad_tiebreak(self):
        with pytest.raises(ValueError):
            shortest_path_at_x(TWO_ROUTE, 0, 2, 0, tiebreak="median")


class TestProbeXMin:
    def test_acyclic_graph(self):
        g = BiweightedDigraph(3, ((0, 1, 1, 1), (1, 2, 1, 1)))
        assert probe_x_min(g) == float("-inf")

    def test_two_cycle_breakpoint(self):
        # cycle cost 8 + 2x stays non-negative iff x >= -4
        g = BiweightedDigraph(2, ((0, 1, 4, 1), (1, 0, 4, 1)))
        x = probe_x_min(g)
        assert -4 <= x <= -4 + 1e-6

    def test_zero_w2_cycles_are_safe_everywhere(self):
        g = BiweightedDigraph(2, ((0, 1, 3, 0), (1, 0, 2, 0)))
        assert probe_x_min(g) == float("-inf")

    def test_breakpoint_at_zero(self):
        # a free cycle with positive w2 goes negative for every x < 0
        g = BiweightedDigraph(2, ((0, 1, 0, 2), (1, 0, 0, 3)))
        assert probe_x_min(g) == 0.0


class TestSolveConstrained:
    def test_at_most_needs_search(self):
        ans = solve_constrained(TWO_ROUTE, ConstrainedQuery(0, 2, 4))
        assert ans.status is Status.FOUND_BY_SEARCH
        assert ans.w1sum == 10 and ans.w2sum == 2

    def test_at_most_satisfied_at_zero(self):
        ans = solve_constrained(TWO_ROUTE, ConstrainedQuery(0, 2, 10))
        assert ans.status is Status.EXACT_AT_X0
        assert ans.w1sum == 2 and ans.x_star == 0.0

    def test_at_most_infeasible(self):
        ans = solve_constrained(TWO_ROUTE, ConstrainedQuery(0, 2, 1))
        assert ans.status is Status.INFEASIBLE and ans.path is None

    def test_at_least_needs_search(self):
        g = BiweightedDigraph(3, ((0, 1, 1, 1), (1, 2, 1, 1), (0, 2, 0, 9)))
        ans = solve_constrained(g, ConstrainedQuery(0, 2, 5, Sense.AT_LEAST))
        assert ans.status is not Status.INFEASIBLE
        assert ans.w2sum >= 5

    def test_at_least_uses_cycles_when_needed(self):
        # the only way to stack w2 >= 7 is looping the free 0<->1 cycle
        g = BiweightedDigraph(3, ((0, 1, 0, 2), (1, 0, 0, 2), (0, 2, 1, 1)))
        ans = solve_constrained(g, ConstrainedQuery(0, 2, 7, Sense.AT_LEAST))
        assert ans.status is not Status.INFEASIBLE
        assert ans.w2sum >= 7
        w1, w2 = path_cost_sums(g, ans.path.edges)
        assert (w1, w2) == (ans.w1sum, ans.w2sum)

    def test_unreachable_is_infeasible(self):
        g = BiweightedDigraph(3, ((0, 1, 1, 1),))
        ans = solve_constrained(g, ConstrainedQuery(0, 2, 5))
        assert ans.status is Status.INFEASIBLE

    def test_maximize_requires_dag(self):
        g = BiweightedDigraph(2, ((0, 1, 1, 1), (1, 0, 1, 1)))
        with pytest.raises(CycleError):
            solve_constrained(
                g, ConstrainedQuery(0, 1, 1, Sense.AT_MOST, Objective.MAXIMIZE)
            )

    def test_maximize_at_most_on_dag(self):
        g = BiweightedDigraph(3, ((0, 1, 5, 5), (1, 2, 5, 5), (0, 2, 3, 2)))
        ans = solve_constrained(
            g, ConstrainedQuery(0, 2, 4, Sense.AT_MOST, Objective.MAXIMIZE)
        )
        assert ans.status is not Status.INFEASIBLE
        assert ans.w2sum <= 4 and ans.w1sum == 3

    def test_maximize_at_least_on_dag(self):
        g = BiweightedDigraph(3, ((0, 1, 5, 1), (1, 2, 5, 1), (0, 2, 3, 9)))
        ans = solve_constrained(
            g, ConstrainedQuery(0, 2, 2, Sense.AT_LEAST, Objective.MAXIMIZE)
        )
        assert ans.status is Status.EXACT_AT_X0
        assert ans.w1sum == 10 and ans.w2sum == 2


class TestExactConstrained:
    def test_at_most(self):
        ans = exact_constrained(TWO_ROUTE, ConstrainedQuery(0, 2, 4))
        assert ans.status is Status.EXACT and ans.w1sum == 10

    def test_at_least(self):
        ans = exact_constrained(TWO_ROUTE, ConstrainedQuery(0, 2, 8, Sense.AT_LEAST))
        assert ans.w1sum == 2 and ans.w2sum == 10

    def test_unreachable(self):
        g = BiweightedDigraph(2, ())
        ans = exact_constrained(g, ConstrainedQuery(0, 1, 3))
        assert ans.status is Status.INFEASIBLE

    def test_state_cap(self):
        with pytest.raises(StateCapError):
            exact_constrained(TWO_ROUTE, ConstrainedQuery(0, 2, 10, Sense.AT_LEAST),
                              max_states=5)

    def test_matches_path_enumeration(self):
        # exhaustive simple-path oracle agrees on acyclic instances
        for seed in range(80):
            g = random_biweighted(rng_for(seed), n_max=6, m_max=10, w_max=5, dag=True)
            paths = enumerate_constrained_paths(g, 0, g.n - 1)
            for sense in (Sense.AT_MOST, Sense.AT_LEAST):
                budget = seed % 12
                ans = exact_constrained(g, ConstrainedQuery(0, g.n - 1, budget, sense))
                ok = [
                    w1 for (w1, w2, _) in paths
                    if (w2 <= budget if sense is Sense.AT_MOST else w2 >= budget)
                ]
                if not ok:
                    assert ans.status is Status.INFEASIBLE
                else:
                    assert ans.w1sum == min(ok)


def _query_for(rng, g, dag):
    sense = rng.choice([Sense.AT_MOST, Sense.AT_LEAST])
    objective = (
        rng.choice([Objective.MINIMIZE, Objective.MAXIMIZE])
        if dag else Objective.MINIMIZE
    )
    total_w2 = sum(e[3] for e in g.edges)
    budget = rng.randint(0, max(1, total_w2 // 2))
    s = rng.randrange(g.n)
    t = rng.randrange(g.n)
    return ConstrainedQuery(s, t, budget, sense, objective)


@settings(max_examples=120, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_heuristic_feasible_and_dominated_by_exact(seed):
    rng = rng_for(seed)
    dag = rng.random() < 0.5
    g = random_biweighted(rng, n_max=7, m_max=14, w_max=6, dag=dag)
    query = _query_for(rng, g, dag)
    ans = solve_constrained(g, query)
    ref = exact_constrained(g, query)
    if ans.status is Status.INFEASIBLE:
        if query.sense is Sense.AT_MOST:
            # at-most infeasibility is certified exactly by the w2-only probe
            assert ref.status is Status.INFEASIBLE
        return
    w1, w2 = path_cost_sums(g, ans.path.edges)
    assert (w1, w2) == (ans.w1sum, ans.w2sum)
    if query.sense is Sense.AT_MOST:
        assert w2 <= query.budget
    else:
        assert w2 >= query.budget
    assert ref.status is Status.EXACT
    if query.objective is Objective.MINIMIZE:
        assert ans.w1sum >= ref.w1sum
    else:
        assert ans.w1sum <= ref.w1sum


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_w2sum_monotone_in_x(seed):
    rng = rng_for(seed)
    g = random_biweighted(rng, n_max=7, m_max=14, w_max=6)
    s, t = rng.randrange(g.n), rng.randrange(g.n)
    xs = sorted(rng.uniform(0, 20) for _ in range(4))
    sums = []
    for x in xs:
        p = shortest_path_at_x(g, s, t, x, tiebreak="min-w2")
        if p is None:
            return
        sums.append(p.costs["w2sum"])
    assert all(a >= b for a, b in zip(sums, sums[1:]))


class TestDagOptimalPath:
    def test_single_vertex(self):
        g = WeightedDigraph(1, (), vertex_cost=(7,))
        assert dag_optimal_path(g, 0) == [7]

    def test_unit_chain(self):
        g = WeightedDigraph(
            3, ((0, 1, 1), (1, 2, 1)), vertex_cost=(1, 1, 1)
        )
        pop = dag_optimal_path(g, 2, aggf="sum", opt="min")
        assert pop == [5, 3, 1]

    def test_diamond_min(self):
        g = WeightedDigraph(
            4,
            ((0, 1, 1), (1, 3, 1), (0, 2, 5), (2, 3, 5)),
            vertex_cost=(0, 0, 0, 0),
        )
        pop = dag_optimal_path(g, 3, aggf="sum", opt="min")
        assert pop[0] == 2

    def test_max_objective(self):
        g = WeightedDigraph(
            4, ((0, 1, 1), (1, 3, 1), (0, 2, 5), (2, 3, 5)),
            vertex_cost=(0, 0, 0, 0),
        )
        pop = dag_optimal_path(g, 3, aggf="sum", opt="max")
        assert pop[0] == 10

    def test_unreachable_vertices_are_none(self):
        g = WeightedDigraph(3, ((0, 1, 1),))
        pop = dag_optimal_path(g, 1)
        assert pop == [1, 0, None]

    def test_cycle_raises(self):
        g = WeightedDigraph(3, ((0, 1, 1), (1, 0, 1)))
        with pytest.raises(CycleError):
            dag_optimal_path(g, 2)

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(0, 10**6))
    def test_equals_sssp_on_dags(self, seed):
        # aggf=sum with zero vertex costs is single-target shortest paths
        rng = rng_for(seed)
        n = rng.randint(2, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        edges = tuple((u, v, rng.randint(0, 9)) for u, v in pairs[: rng.randint(0, 12)])
        g = WeightedDigraph(n, edges)
        t = n - 1
        pop = dag_optimal_path(g, t, aggf="sum", opt="min")
        bi = BiweightedDigraph(n, tuple((u, v, w, 0) for u, v, w in edges))
        for u in range(n):
            paths = enumerate_constrained_paths(bi, u, t)
            want = min((w1 for w1, _, _ in paths), default=None)
            assert pop[u] == want
