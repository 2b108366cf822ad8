import math

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from qospath import (
    STRATEGIES,
    TournamentOracle,
    ham_path,
    matrix_tournament,
    random_tournament,
    verify_ham_path,
)
from qospath.tournament import InconsistentOracleError

from genutil import hashed_tournament


def transitive_oracle():
    return TournamentOracle(lambda u, v: 1 if u < v else -1)


@pytest.mark.parametrize("strategy", STRATEGIES)
class TestPerStrategy:
    def test_single_vertex(self, strategy):
        oracle = transitive_oracle()
        assert ham_path(oracle, 1, strategy) == [0]
        assert oracle.query_count == 0

    def test_three_cycle(self, strategy):
        # 0->1, 1->2, 2->0: any rotation of the cycle is a valid path
        cyc = {(0, 1): 1, (1, 2): 1, (0, 2): -1}
        oracle = TournamentOracle(lambda u, v: cyc[(u, v)])
        path = ham_path(oracle, 3, strategy)
        assert verify_ham_path(oracle, path)

    def test_transitive_returns_identity(self, strategy):
        for n in (1, 2, 5, 17, 64):
            assert ham_path(transitive_oracle(), n, strategy) == list(range(n))

    def test_valid_on_random_tournaments(self, strategy):
        for seed in range(25):
            n = 3 + seed * 7 % 60
            oracle = random_tournament(n, seed)
            assert verify_ham_path(oracle, ham_path(oracle, n, strategy))

    def test_deterministic(self, strategy):
        first = ham_path(random_tournament(40, 5), 40, strategy)
        second = ham_path(random_tournament(40, 5), 40, strategy)
        assert first == second


def test_unknown_strategy():
    with pytest.raises(ValueError):
        ham_path(transitive_oracle(), 3, "bogo")


def test_n_zero_rejected():
    with pytest.raises(ValueError):
        ham_path(transitive_oracle(), 0)


def test_verify_rejects_wrong_order():
    assert verify_ham_path(transitive_oracle(), [0, 1, 2])
    assert not verify_ham_path(transitive_oracle(), [2, 1, 0])
    assert not verify_ham_path(transitive_oracle(), [0, 0, 1])


def test_query_memoization_counts_distinct_pairs():
    oracle = transitive_oracle()
    assert oracle.ask(0, 1) == 1
    assert oracle.ask(1, 0) == -1
    assert oracle.ask(0, 1) == 1
    assert oracle.query_count == 1


def test_inconsistent_oracle_detected():
    with pytest.raises(InconsistentOracleError):
        TournamentOracle(lambda u, v: 0).ask(0, 1)
    with pytest.raises(InconsistentOracleError):
        matrix_tournament([[0, 1], [1, 0]])


def test_matrix_tournament():
    oracle = matrix_tournament([[0, 1, -1], [-1, 0, 1], [1, -1, 0]])
    path = ham_path(oracle, 3, "insertion")
    assert verify_ham_path(oracle, path)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 120))
def test_binary_insertion_query_bound(seed, n):
    oracle = hashed_tournament(n, seed)
    path = ham_path(oracle, n, "binaryInsertion")
    assert verify_ham_path(oracle, path)
    bound = n * (math.ceil(math.log2(n)) + 2) if n > 1 else 0
    assert oracle.query_count <= bound


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 120))
def test_merge_sort_query_bound(seed, n):
    oracle = hashed_tournament(n, seed)
    path = ham_path(oracle, n, "mergeSort")
    assert verify_ham_path(oracle, path)
    bound = n * math.ceil(math.log2(n)) + n if n > 1 else 0
    assert oracle.query_count <= bound


def test_larger_random_tournaments_all_strategies():
    for n in (250, 500):
        oracle_seed = n
        for strategy in STRATEGIES:
            oracle = hashed_tournament(n, oracle_seed)
            assert verify_ham_path(oracle, ham_path(oracle, n, strategy))
