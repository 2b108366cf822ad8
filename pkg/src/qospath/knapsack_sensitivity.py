"""Classify knapsack items by their role in the exact-sum solutions.

Category 1: the item is in every solution; 2: in at least one; 3: in none.
Two variants: plain feasibility (any subset summing to the target) and
minimum cost (only the cheapest subsets summing to the target count).

Both run one forward and one backward DP sweep and answer each item from
the prefix table before it and the suffix table after it, so item i is
excluded by construction.  Solution counts saturate at a small cap (any
cap >= 2 gives the same categories, since only the zero/positive
distinction is consumed); ``count_cap=None`` keeps exact big-integer
counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "KnapsackInstance",
    "DpTables",
    "classify_feasibility",
    "classify_mincost",
    "classify_by_removal",
]


@dataclass(frozen=True)
class KnapsackInstance:
    weights: tuple[int, ...]
    target: int
    costs: tuple | None = None
    count_cap: int | None = 2

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        for w in self.weights:
            if isinstance(w, bool) or not isinstance(w, int) or w < 0:
                raise ValueError("item weights must be non-negative integers")
        if not isinstance(self.target, int) or self.target < 0:
            raise ValueError("target sum must be a non-negative integer")
        if self.costs is not None:
            object.__setattr__(self, "costs", tuple(self.costs))
            if len(self.costs) != len(self.weights):
                raise ValueError("costs must match weights in length")
            for c in self.costs:
                if isinstance(c, bool) or not isinstance(c, (int, float)) or c < 0:
                    raise ValueError("item costs must be non-negative")
        if self.count_cap is not None and self.count_cap < 2:
            raise ValueError("count cap must be at least 2 (or None for exact)")

    @property
    def n(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class DpTables:
    """Prefix/suffix feasibility or min-cost tables with saturated counts."""

    ok1: tuple | None
    cnt1: tuple
    ok2: tuple | None
    cnt2: tuple
    cmin1: tuple | None = None
    cmin2: tuple | None = None


def _sat_add(a, b, cap):
    s = a + b
    return s if cap is None else min(cap, s)


def _sat_mul(a, b, cap):
    s = a * b
    return s if cap is None else min(cap, s)


def _feas_tables(inst: KnapsackInstance):
    n, S, cap = inst.n, inst.target, inst.count_cap
    w = inst.weights
    ok1 = [[False] * (S + 1) for _ in range(n + 2)]
    cnt1 = [[0] * (S + 1) for _ in range(n + 2)]
    ok2 = [[False] * (S + 1) for _ in range(n + 2)]
    cnt2 = [[0] * (S + 1) for _ in range(n + 2)]
    ok1[0][0] = True
    cnt1[0][0] = 1
    for i in range(1, n + 1):
        wi = w[i - 1]
        for j in range(S + 1):
            if j < wi:
                ok1[i][j] = ok1[i - 1][j]
                cnt1[i][j] = cnt1[i - 1][j]
            else:
                ok1[i][j] = ok1[i - 1][j] or ok1[i - 1][j - wi]
                cnt1[i][j] = _sat_add(cnt1[i - 1][j], cnt1[i - 1][j - wi], cap)
    ok2[n + 1][0] = True
    cnt2[n + 1][0] = 1
    for i in range(n, 0, -1):
        wi = w[i - 1]
        for j in range(S + 1):
            if j < wi:
                ok2[i][j] = ok2[i + 1][j]
                cnt2[i][j] = cnt2[i + 1][j]
            else:
                ok2[i][j] = ok2[i + 1][j] or ok2[i + 1][j - wi]
                cnt2[i][j] = _sat_add(cnt2[i + 1][j], cnt2[i + 1][j - wi], cap)
    return ok1, cnt1, ok2, cnt2


def classify_feasibility(inst: KnapsackInstance):
    """Categories relative to all subsets summing exactly to the target.

    Returns a list with one category (1, 2 or 3) per item.  When no subset
    reaches the target at all, every item is category 3.
    """
    n, S = inst.n, inst.target
    w = inst.weights
    ok1, cnt1, ok2, cnt2 = _feas_tables(inst)
    cap = inst.count_cap
    cats = []
    for i in range(1, n + 1):
        wi = w[i - 1]
        if wi > S:
            with_i = False
        else:
            with_i = any(
                ok1[i - 1][j] and ok2[i + 1][S - j - wi] for j in range(S - wi + 1)
            )
        if not with_i:
            cats.append(3)
            continue
        without_i = 0
        for j in range(S + 1):
            without_i = _sat_add(
                without_i, _sat_mul(cnt1[i - 1][j], cnt2[i + 1][S - j], cap), cap
            )
            if cap is not None and without_i >= cap:
                break
        cats.append(2 if without_i > 0 else 1)
    return cats


def _mincost_tables(inst: KnapsackInstance):
    n, S, cap = inst.n, inst.target, inst.count_cap
    w, cost = inst.weights, inst.costs
    INF = math.inf
    cmin1 = [[INF] * (S + 1) for _ in range(n + 2)]
    cnt1 = [[0] * (S + 1) for _ in range(n + 2)]
    cmin2 = [[INF] * (S + 1) for _ in range(n + 2)]
    cnt2 = [[0] * (S + 1) for _ in range(n + 2)]
    cmin1[0][0] = 0
    cnt1[0][0] = 1
    for i in range(1, n + 1):
        wi, ci = w[i - 1], cost[i - 1]
        for j in range(S + 1):
            if j < wi:
                cmin1[i][j] = cmin1[i - 1][j]
                cnt1[i][j] = cnt1[i - 1][j]
            else:
                take = cmin1[i - 1][j - wi] + ci
                cmin1[i][j] = min(cmin1[i - 1][j], take)
                total = cnt1[i - 1][j] if cmin1[i - 1][j] == cmin1[i][j] else 0
                if take == cmin1[i][j]:
                    total = _sat_add(total, cnt1[i - 1][j - wi], cap)
                cnt1[i][j] = total
    cmin2[n + 1][0] = 0
    cnt2[n + 1][0] = 1
    for i in range(n, 0, -1):
        wi, ci = w[i - 1], cost[i - 1]
        for j in range(S + 1):
            if j < wi:
                cmin2[i][j] = cmin2[i + 1][j]
                cnt2[i][j] = cnt2[i + 1][j]
            else:
                take = cmin2[i + 1][j - wi] + ci
                cmin2[i][j] = min(cmin2[i + 1][j], take)
                total = cnt2[i + 1][j] if cmin2[i + 1][j] == cmin2[i][j] else 0
                if take == cmin2[i][j]:
                    total = _sat_add(total, cnt2[i + 1][j - wi], cap)
                cnt2[i][j] = total
    return cmin1, cnt1, cmin2, cnt2


def classify_mincost(inst: KnapsackInstance):
    """Categories relative to the minimum-cost subsets summing to the target."""
    if inst.costs is None:
        raise ValueError("instance has no costs; use classify_feasibility")
    n, S, cap = inst.n, inst.target, inst.count_cap
    w, cost = inst.weights, inst.costs
    cmin1, cnt1, cmin2, cnt2 = _mincost_tables(inst)
    opt = cmin1[n][S]
    if opt == math.inf:
        return [3] * n
    cats = []
    for i in range(1, n + 1):
        wi, ci = w[i - 1], cost[i - 1]
        if wi > S:
            with_i = math.inf
        else:
            with_i = min(
                (cmin1[i - 1][j] + ci + cmin2[i + 1][S - j - wi]
                 for j in range(S - wi + 1)),
                default=math.inf,
            )
        if with_i > opt:
            cats.append(3)
            continue
        without_i = 0
        for j in range(S + 1):
            if cmin1[i - 1][j] + cmin2[i + 1][S - j] != opt:
                continue
            without_i = _sat_add(
                without_i, _sat_mul(cnt1[i - 1][j], cnt2[i + 1][S - j], cap), cap
            )
            if cap is not None and without_i >= cap:
                break
        cats.append(2 if without_i > 0 else 1)
    return cats


def _feasible_without(weights, target, skip):
    reach = [False] * (target + 1)
    reach[0] = True
    for i, wi in enumerate(weights):
        if i == skip:
            continue
        for j in range(target, wi - 1, -1):
            if reach[j - wi]:
                reach[j] = True
    return reach


def _mincost_without(weights, costs, target, skip):
    INF = math.inf
    best = [INF] * (target + 1)
    best[0] = 0
    for i, wi in enumerate(weights):
        if i == skip:
            continue
        ci = costs[i]
        for j in range(target, wi - 1, -1):
            cand = best[j - wi] + ci
            if cand < best[j]:
                best[j] = cand
    return best


def classify_by_removal(inst: KnapsackInstance):
    """Quadratic-time reference: redo the DP once per removed item.

    Handles both variants depending on whether the instance carries costs.
    Used purely as a second oracle for the split-table classifiers.
    """
    n, S = inst.n, inst.target
    w = inst.weights
    cats = []
    if inst.costs is None:
        for i in range(n):
            reach = _feasible_without(w, S, i)
            has_with = w[i] <= S and reach[S - w[i]]
            has_without = reach[S]
            if not has_with:
                cats.append(3)
            elif has_without:
                cats.append(2)
            else:
                cats.append(1)
        return cats
    full = _mincost_without(w, inst.costs, S, skip=-1)
    opt = full[S]
    if opt == math.inf:
        return [3] * n
    for i in range(n):
        best = _mincost_without(w, inst.costs, S, i)
        with_i = best[S - w[i]] + inst.costs[i] if w[i] <= S else math.inf
        without_i = best[S]
        if with_i > opt:
            cats.append(3)
        elif without_i == opt:
            cats.append(2)
        else:
            cats.append(1)
    return cats
