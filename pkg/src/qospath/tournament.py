"""Hamiltonian paths in implicitly given tournaments via orientation queries.

The tournament is exposed only through ``ask(u, v)``: +1 when the edge
u->v exists, -1 when v->u does.  Four construction strategies are
provided; every tournament has a Hamiltonian path and each strategy finds
one.  Queries are memoized per unordered pair, and ``query_count`` counts
distinct pairs asked.
"""

from __future__ import annotations

import random
from typing import Callable

__all__ = [
    "TournamentOracle",
    "InconsistentOracleError",
    "STRATEGIES",
    "ham_path",
    "verify_ham_path",
    "random_tournament",
    "matrix_tournament",
]

STRATEGIES = ("insertion", "bubble", "binaryInsertion", "mergeSort")


class InconsistentOracleError(ValueError):
    """The ask callback returned something other than a consistent +/-1."""


class TournamentOracle:
    """Memoizing wrapper around an orientation callback.

    Repeated questions about the same pair are answered from the cache, so
    ``query_count`` reflects distinct pairs only and answers stay
    consistent across calls even for a misbehaving callback.
    """

    def __init__(self, ask: Callable[[int, int], int]):
        self._ask = ask
        self._cache: dict = {}
        self.query_count = 0

    def ask(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("ask(u, v) requires u != v")
        key = (u, v) if u < v else (v, u)
        sign = self._cache.get(key)
        if sign is None:
            sign = self._ask(key[0], key[1])
            if sign not in (1, -1):
                raise InconsistentOracleError(
                    "ask(%d, %d) returned %r; expected +1 or -1" % (key[0], key[1], sign)
                )
            self._cache[key] = sign
            self.query_count += 1
        return sign if (u, v) == key else -sign


def _coerce_oracle(oracle) -> TournamentOracle:
    return oracle if isinstance(oracle, TournamentOracle) else TournamentOracle(oracle)


def random_tournament(n: int, seed: int) -> TournamentOracle:
    """Seeded random tournament with materialized orientations (O(n^2) bits)."""
    rng = random.Random(seed)
    orient = {}
    for u in range(n):
        for v in range(u + 1, n):
            orient[(u, v)] = 1 if rng.random() < 0.5 else -1
    return TournamentOracle(lambda u, v: orient[(u, v)])


def matrix_tournament(matrix) -> TournamentOracle:
    """Oracle over an explicit sign matrix: entry [u][v] = 1 iff u->v exists."""
    n = len(matrix)
    for u in range(n):
        if len(matrix[u]) != n:
            raise ValueError("sign matrix must be square")
        if matrix[u][u] != 0:
            raise ValueError("diagonal entries must be 0")
        for v in range(n):
            if u != v and matrix[u][v] != -matrix[v][u]:
                raise InconsistentOracleError(
                    "matrix is not antisymmetric at (%d, %d)" % (u, v)
                )
            if u != v and matrix[u][v] not in (1, -1):
                raise ValueError("off-diagonal entries must be +1 or -1")
    return TournamentOracle(lambda u, v: matrix[u][v])


def _build_insertion(oracle: TournamentOracle, n: int) -> list:
    path = [0]
    for i in range(1, n):
        if oracle.ask(i, path[0]) == 1:
            path.insert(0, i)
            continue
        if oracle.ask(path[-1], i) == 1:
            path.append(i)
            continue
        # path[0]->i and i->path[-1] both hold, so a switch point exists
        for j in range(1, len(path)):
            if oracle.ask(i, path[j]) == 1:
                path.insert(j, i)
                break
    return path


def _build_bubble(oracle: TournamentOracle, n: int) -> list:
    path = list(range(n))
    # each adjacent swap fixes exactly one inverted pair, and n sweeps
    # suffice empirically; overrunning the cap means the oracle lies
    for _ in range(max(n, 1)):
        swapped = False
        for i in range(n - 1):
            if oracle.ask(path[i], path[i + 1]) == -1:
                path[i], path[i + 1] = path[i + 1], path[i]
                swapped = True
        if not swapped:
            return path
    raise InconsistentOracleError(
        "bubble passes did not converge within %d sweeps" % n
    )


def _build_binary_insertion(oracle: TournamentOracle, n: int) -> list:
    path = [0]
    for i in range(1, n):
        if oracle.ask(i, path[0]) == 1:
            path.insert(0, i)
            continue
        if oracle.ask(path[-1], i) == 1:
            path.append(i)
            continue
        # invariant: path[a]->i and i->path[b]
        a, b = 0, len(path) - 1
        while b - a > 1:
            c = (a + b) // 2
            if oracle.ask(path[c], i) == 1:
                a = c
            else:
                b = c
        path.insert(b, i)
    return path


def _build_merge_sort(oracle: TournamentOracle, n: int) -> list:
    def merge(left, right):
        out = []
        i = j = 0
        while i < len(left) and j < len(right):
            if oracle.ask(left[i], right[j]) == 1:
                out.append(left[i])
                i += 1
            else:
                out.append(right[j])
                j += 1
        out.extend(left[i:])
        out.extend(right[j:])
        return out

    def sort(seq):
        if len(seq) <= 1:
            return seq
        mid = len(seq) // 2
        return merge(sort(seq[:mid]), sort(seq[mid:]))

    return sort(list(range(n)))


_BUILDERS = {
    "insertion": _build_insertion,
    "bubble": _build_bubble,
    "binaryInsertion": _build_binary_insertion,
    "mergeSort": _build_merge_sort,
}


def ham_path(oracle, n: int, strategy: str = "binaryInsertion") -> list:
    """A Hamiltonian path of the n-vertex tournament behind ``oracle``.

    ``oracle`` may be a :class:`TournamentOracle` or a bare callback.
    Strategies: ``insertion`` and ``bubble`` ask O(n^2) questions,
    ``binaryInsertion`` at most ``n * (ceil(log2 n) + 2)`` and
    ``mergeSort`` at most ``n * ceil(log2 n) + n``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if strategy not in _BUILDERS:
        raise ValueError(
            "unknown strategy %r (expected one of %s)" % (strategy, ", ".join(STRATEGIES))
        )
    return _BUILDERS[strategy](_coerce_oracle(oracle), n)


def verify_ham_path(oracle, order) -> bool:
    """True iff ``order`` is a permutation with every consecutive edge present."""
    oracle = _coerce_oracle(oracle)
    n = len(order)
    if sorted(order) != list(range(n)):
        return False
    return all(oracle.ask(order[i], order[i + 1]) == 1 for i in range(n - 1))
