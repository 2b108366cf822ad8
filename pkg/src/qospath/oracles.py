"""Exhaustive reference implementations used to cross-check the fast paths.

Everything here is deliberately naive (DFS path enumeration, 2^n subset
scans, permutation sweeps) and guarded by explicit budgets so a misuse
fails loudly instead of hanging.  The traversal logic shares no code with
the algorithms it checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graphs import BiweightedDigraph, ColoredDigraph, WeightedDigraph, WeightedGraph

__all__ = [
    "EnumerationBudget",
    "BudgetExceededError",
    "enumerate_constrained_paths",
    "enumerate_subsets",
    "enumerate_min_cost_subsets",
    "enumerate_q_paths_cycles",
    "enumerate_shortest_paths",
    "classify_by_enumeration",
    "enumerate_alt_paths",
]


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured budget."""


@dataclass(frozen=True)
class EnumerationBudget:
    """Hard caps for the enumerators; exceeding any of them raises."""

    max_vertices: int = 10
    max_paths: int = 500_000
    max_subsets: int = 1 << 16

    def check_vertices(self, n: int):
        if n > self.max_vertices:
            raise BudgetExceededError(
                "instance has %d vertices; enumeration budget allows %d"
                % (n, self.max_vertices)
            )

    def check_subsets(self, count: int):
        if count > self.max_subsets:
            raise BudgetExceededError(
                "%d subsets exceed the enumeration budget of %d"
                % (count, self.max_subsets)
            )


DEFAULT_BUDGET = EnumerationBudget()


def enumerate_constrained_paths(g: BiweightedDigraph, s: int, t: int,
                                budget: EnumerationBudget = DEFAULT_BUDGET):
    """All simple s->t paths as ``(w1sum, w2sum, vertices)`` triples.

    ``s == t`` yields exactly the empty path ``(0, 0, (s,))``.
    """
    budget.check_vertices(g.n)
    if s == t:
        return [(0, 0, (s,))]
    found = []
    on_path = [False] * g.n
    stack = [s]
    on_path[s] = True

    def dfs(u, w1, w2):
        if u == t:
            found.append((w1, w2, tuple(stack)))
            if len(found) > budget.max_paths:
                raise BudgetExceededError("too many simple paths")
            return
        for idx in g.out_edges(u):
            _, v, ew1, ew2 = g.edges[idx]
            if on_path[v]:
                continue
            on_path[v] = True
            stack.append(v)
            dfs(v, w1 + ew1, w2 + ew2)
            stack.pop()
            on_path[v] = False

    dfs(s, 0, 0)
    return found


def enumerate_subsets(weights, target: int,
                      budget: EnumerationBudget = DEFAULT_BUDGET):
    """All subsets (as index tuples) whose weights sum exactly to ``target``."""
    n = len(weights)
    budget.check_subsets(1 << n)
    out = []
    for mask in range(1 << n):
        total = 0
        for i in range(n):
            if mask >> i & 1:
                total += weights[i]
        if total == target:
            out.append(tuple(i for i in range(n) if mask >> i & 1))
    return out


def enumerate_min_cost_subsets(weights, costs, target: int,
                               budget: EnumerationBudget = DEFAULT_BUDGET):
    """The minimum-cost subsets summing to ``target``; ``(best_cost, subsets)``.

    ``best_cost`` is ``None`` when no subset reaches the target.
    """
    solutions = enumerate_subsets(weights, target, budget)
    if not solutions:
        return None, []
    costed = [(sum(costs[i] for i in sub), sub) for sub in solutions]
    best = min(c for c, _ in costed)
    return best, [sub for c, sub in costed if c == best]


def _agg_fn(agg):
    if agg == "sum":
        return lambda a, b: a + b
    if agg == "max":
        return lambda a, b: max(a, b)
    raise ValueError("agg must be 'sum' or 'max'")


def _edge_cost_map(g):
    cost = {}
    for idx, e in enumerate(g.edges):
        if isinstance(g, ColoredDigraph):
            u, v, c, _ = e
        else:
            u, v, c = e
        cost[(u, v)] = min(c, cost.get((u, v), c))
    return cost


def enumerate_q_paths_cycles(g, q: int, agg: str = "sum", mode: str = "path",
                             allowed=None,
                             budget: EnumerationBudget = DEFAULT_BUDGET):
    """Optimal aggregate over all simple paths/cycles on exactly ``q`` vertices.

    Checks every ordered vertex tuple for edge existence; returns the best
    value or ``None`` when no such path/cycle exists.
    """
    budget.check_vertices(g.n)
    fn = _agg_fn(agg)
    vc = [g.vcost(u) for u in range(g.n)]
    cost = _edge_cost_map(g)
    best = None
    if mode == "path" and q == 1:
        for u in range(g.n):
            if allowed is not None and not allowed(frozenset((u,))):
                continue
            if best is None or vc[u] < best:
                best = vc[u]
        return best
    for combo in permutations(range(g.n), q):
        if allowed is not None and not allowed(frozenset(combo)):
            continue
        val = vc[combo[0]]
        ok = True
        for a, b in zip(combo, combo[1:]):
            if (a, b) not in cost:
                ok = False
                break
            val = fn(val, cost[(a, b)])
            val = fn(val, vc[b])
        if not ok:
            continue
        if mode == "cycle":
            closing = (combo[-1], combo[0])
            if closing not in cost:
                continue
            val = fn(val, cost[closing])
        if best is None or val < best:
            best = val
    return best


def _adjacency(g, undirected):
    adj = [[] for _ in range(g.n)]
    for idx, (u, v, w) in enumerate(g.edges):
        adj[u].append((v, w, idx))
        if undirected:
            adj[v].append((u, w, idx))
    return adj


def enumerate_shortest_paths(g, s: int, t: int,
                             budget: EnumerationBudget = DEFAULT_BUDGET):
    """``(best_weight, paths)`` over all simple s->t paths.

    Each path is ``(vertices, edge_indices)``; ``best_weight`` is ``None``
    when t is unreachable.  Works for :class:`WeightedDigraph` and
    :class:`WeightedGraph`.
    """
    budget.check_vertices(g.n)
    undirected = isinstance(g, WeightedGraph)
    adj = _adjacency(g, undirected)
    all_paths = []
    on_path = [False] * g.n
    verts = [s]
    eidxs = []
    on_path[s] = True

    def dfs(u, weight):
        if u == t:
            all_paths.append((weight, tuple(verts), tuple(eidxs)))
            if len(all_paths) > budget.max_paths:
                raise BudgetExceededError("too many simple paths")
            if t != s:
                return
        for v, w, idx in adj[u]:
            if on_path[v]:
                continue
            on_path[v] = True
            verts.append(v)
            eidxs.append(idx)
            dfs(v, weight + w)
            eidxs.pop()
            verts.pop()
            on_path[v] = False

    dfs(s, 0)
    if not all_paths:
        return None, []
    best = min(w for w, _, _ in all_paths)
    return best, [(vs, es) for w, vs, es in all_paths if w == best]


def classify_by_enumeration(g, s: int, t: int,
                            budget: EnumerationBudget = DEFAULT_BUDGET):
    """Per-element 1/2/3 categories by listing every minimum-weight s-t path.

    Returns ``(vertex_categories, edge_categories)`` as lists; category 1
    means on every shortest path, 2 on at least one, 3 on none.
    """
    best, paths = enumerate_shortest_paths(g, s, t, budget)
    vcat = [3] * g.n
    ecat = [3] * g.m
    if best is None:
        return vcat, ecat
    vsets = [set(vs) for vs, _ in paths]
    esets = [set(es) for _, es in paths]
    v_all = set.intersection(*vsets)
    v_any = set.union(*vsets)
    e_all = set.intersection(*esets) if esets else set()
    e_any = set.union(*esets) if esets else set()
    for u in range(g.n):
        if u in v_all:
            vcat[u] = 1
        elif u in v_any:
            vcat[u] = 2
    for e in range(g.m):
        if e in e_all:
            ecat[e] = 1
        elif e in e_any:
            ecat[e] = 2
    return vcat, ecat


def enumerate_alt_paths(g: ColoredDigraph, s: int, t: int, agg: str = "sum",
                        budget: EnumerationBudget = DEFAULT_BUDGET):
    """Best aggregate over simple s->t paths whose consecutive colors differ.

    Aggregates the source vertex cost, then alternately edge costs and the
    entered vertex's cost.  Returns ``None`` when no such path exists.
    """
    budget.check_vertices(g.n)
    fn = _agg_fn(agg)
    best = [None]
    on_path = [False] * g.n
    on_path[s] = True

    def dfs(u, last_color, value):
        if u == t:
            if best[0] is None or value < best[0]:
                best[0] = value
        for idx in g.out_edges(u):
            _, v, cost, color = g.edges[idx]
            if color == last_color or on_path[v]:
                continue
            on_path[v] = True
            dfs(v, color, fn(fn(value, cost), g.vcost(v)))
            on_path[v] = False

    dfs(s, 0, g.vcost(s))
    return best[0]
