"""Budget-constrained two-weight path search via a Lagrangian multiplier.

Every edge carries integer weights ``(w1, w2)``.  Blending them into the
scalar cost ``c(e, x) = w1 + x*w2`` turns the budgeted problem into a
family of plain shortest-path problems; the multiplier ``x`` is then
binary-searched until the budget on the w2 sum is met.  The search is a
heuristic: returned paths are always budget-feasible but not guaranteed
w1-optimal (:func:`exact_constrained` provides the exact reference via a
budget-expanded state graph).

All multiplier arithmetic is done on exact rationals: a probe at
``x = p/q`` runs on the integer edge costs ``q*w1 + p*w2``, so cost ties
and the monotonicity of the tie-broken w2 sum are exact, never subject to
floating-point noise.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .graphs import BiweightedDigraph, PathResult, WeightedDigraph

__all__ = [
    "Sense",
    "Objective",
    "Status",
    "ConstrainedQuery",
    "BicriteriaAnswer",
    "NegativeCycleError",
    "CycleError",
    "StateCapError",
    "HALVING_ITERATIONS",
    "shortest_path_at_x",
    "probe_x_min",
    "solve_constrained",
    "exact_constrained",
    "dag_optimal_path",
]

# Fixed number of interval-halving steps for every multiplier search.  With
# integer weights the interesting breakpoints are rationals; 64 halvings
# exceed any realistic precision need and keep the runtime deterministic.
HALVING_ITERATIONS = 64

_GROWTH_LIMIT = 256  # doubling steps before we declare the instance absurd


class Sense(str, Enum):
    AT_MOST = "atMost"
    AT_LEAST = "atLeast"


class Objective(str, Enum):
    MINIMIZE = "min"
    MAXIMIZE = "max"


class Status(str, Enum):
    EXACT_AT_X0 = "exactAtX0"
    FOUND_BY_SEARCH = "foundBySearch"
    INFEASIBLE = "infeasible"
    EXACT = "exact"


class NegativeCycleError(RuntimeError):
    """Relaxation diverged: a negative-cost cycle exists at this multiplier."""


class CycleError(ValueError):
    """A cycle was found in a graph that must be acyclic."""


class StateCapError(RuntimeError):
    """The budget-expanded state graph would exceed the configured cap."""


@dataclass(frozen=True)
class ConstrainedQuery:
    source: int
    target: int
    budget: int
    sense: Sense = Sense.AT_MOST
    objective: Objective = Objective.MINIMIZE


@dataclass(frozen=True)
class BicriteriaAnswer:
    status: Status
    path: PathResult | None
    x_star: float | None

    @property
    def w1sum(self):
        return None if self.path is None else self.path.costs["w1sum"]

    @property
    def w2sum(self):
        return None if self.path is None else self.path.costs["w2sum"]


# ---------------------------------------------------------------------------
# path engines
#
# All engines minimize the lexicographic key (sum of integer edge costs,
# tie) where tie is either the accumulated w2 (prefer small) or the negated
# accumulated w2 saturated at a cap (prefer large).  Maximization is
# handled by negating the integer costs, which only the DAG engine accepts.


class _Lab:
    __slots__ = ("cost", "tie", "vertex", "edge", "prev")

    def __init__(self, cost, tie, vertex, edge, prev):
        self.cost = cost
        self.tie = tie
        self.vertex = vertex
        self.edge = edge
        self.prev = prev


def _topological_order(g) -> list | None:
    """Kahn order of the vertices, or ``None`` when the graph has a cycle."""
    indeg = [0] * g.n
    for e in g.edges:
        indeg[e[1]] += 1
    queue = deque(u for u in range(g.n) if indeg[u] == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for idx in g.out_edges(u):
            v = g.edges[idx][1]
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return order if len(order) == g.n else None


def _compose_tie(tie, w2, tie_max, tie_cap):
    if tie_max:
        # tie stores the negated, cap-saturated w2 accumulation
        return -min(-tie + w2, tie_cap)
    return tie + w2


def _relax_dag(g, s, costs, order, tie_max, tie_cap):
    labs = [None] * g.n
    labs[s] = _Lab(0, 0, s, None, None)
    for u in order:
        lab = labs[u]
        if lab is None:
            continue
        for idx in g.out_edges(u):
            _, v, _, w2 = g.edges[idx]
            nc = lab.cost + costs[idx]
            nt = _compose_tie(lab.tie, w2, tie_max, tie_cap)
            cur = labs[v]
            if cur is None or (nc, nt) < (cur.cost, cur.tie):
                labs[v] = _Lab(nc, nt, v, idx, lab)
    return labs


def _relax_dijkstra(g, s, costs):
    # non-negative costs, tie = accumulated w2 (prefer small): both key
    # components are non-decreasing along edges, so label setting is exact
    labs = [None] * g.n
    root = _Lab(0, 0, s, None, None)
    heap = [(0, 0, 0, root)]
    seq = 1
    while heap:
        cost, tie, _, lab = heapq.heappop(heap)
        u = lab.vertex
        cur = labs[u]
        if cur is not None:
            continue
        labs[u] = lab
        for idx in g.out_edges(u):
            _, v, _, w2 = g.edges[idx]
            if labs[v] is not None:
                continue
            heapq.heappush(
                heap, (cost + costs[idx], tie + w2, seq, _Lab(cost + costs[idx], tie + w2, v, idx, lab))
            )
            seq += 1
    return labs


def _relax_queue(g, s, costs, tie_max, tie_cap):
    # label-correcting relaxation; the caller must have ruled out negative
    # cycles at this multiplier, the update cutoff only guards misuse
    labs = [None] * g.n
    labs[s] = _Lab(0, 0, s, None, None)
    queue = deque([s])
    in_queue = [False] * g.n
    in_queue[s] = True
    budget_part = 8 * g.n * (tie_cap if tie_max and tie_cap is not None else 0)
    limit = 1000 + 64 * (g.n + 1) * (g.m + 1) + budget_part
    updates = 0
    while queue:
        u = queue.popleft()
        in_queue[u] = False
        lab = labs[u]
        for idx in g.out_edges(u):
            _, v, _, w2 = g.edges[idx]
            nc = lab.cost + costs[idx]
            nt = _compose_tie(lab.tie, w2, tie_max, tie_cap)
            cur = labs[v]
            if cur is None or (nc, nt) < (cur.cost, cur.tie):
                labs[v] = _Lab(nc, nt, v, idx, lab)
                updates += 1
                if updates > limit:
                    raise NegativeCycleError(
                        "relaxation did not converge; the cost function at this "
                        "multiplier admits a negative cycle"
                    )
                if not in_queue[v]:
                    queue.append(v)
                    in_queue[v] = True
    return labs


def _best_path_int(g: BiweightedDigraph, s, t, p, q, *, maximize=False,
                   tie_max=False, tie_cap=None, topo="auto"):
    """Best s->t walk under integer edge costs ``q*w1 + p*w2``.

    Returns ``(w1sum, w2sum, vertices, edge_indices)`` or ``None`` when t
    is unreachable.
    """
    if tie_max and tie_cap is None:
        tie_cap = sum(e[3] for e in g.edges)
    costs = [q * e[2] + p * e[3] for e in g.edges]
    if maximize:
        costs = [-c for c in costs]
    if topo == "auto":
        topo = _topological_order(g)
    if topo is not None:
        labs = _relax_dag(g, s, costs, topo, tie_max, tie_cap)
    elif maximize:
        raise CycleError("maximize objective requires an acyclic graph")
    elif not tie_max and p >= 0 and q >= 0:
        labs = _relax_dijkstra(g, s, costs)
    else:
        labs = _relax_queue(g, s, costs, tie_max, tie_cap)
    lab = labs[t]
    if lab is None:
        return None
    verts = []
    eidx = []
    while lab is not None:
        verts.append(lab.vertex)
        if lab.edge is not None:
            eidx.append(lab.edge)
        lab = lab.prev
    verts.reverse()
    eidx.reverse()
    w1sum = sum(g.edges[i][2] for i in eidx)
    w2sum = sum(g.edges[i][3] for i in eidx)
    return w1sum, w2sum, verts, eidx


def _as_pq(x):
    """A real multiplier as an exact (p, q) pair; +/-inf become (+/-1, 0)."""
    if isinstance(x, float) and x == float("inf"):
        return 1, 0
    if isinstance(x, float) and x == float("-inf"):
        return -1, 0
    frac = Fraction(x)
    return frac.numerator, frac.denominator


def _path_result(res) -> PathResult:
    w1sum, w2sum, verts, eidx = res
    return PathResult(tuple(verts), tuple(eidx), {"w1sum": w1sum, "w2sum": w2sum})


def shortest_path_at_x(g: BiweightedDigraph, s: int, t: int, x,
                       tiebreak: str = "min-w2") -> PathResult | None:
    """Cheapest s->t path under the blended cost ``w1 + x*w2``.

    Cost ties are broken toward the smallest (``tiebreak='min-w2'``) or the
    largest (``'max-w2'``) accumulated w2.  ``x`` may be any real, including
    ``float('inf')`` / ``float('-inf')``, which substitute the costs ``w2``
    and ``-w2`` directly.  For ``x < 0`` the caller must have established
    (e.g. via :func:`probe_x_min`) that no cycle goes negative at this
    multiplier; otherwise :class:`NegativeCycleError` is raised.  Returns
    ``None`` when t is unreachable.
    """
    if tiebreak not in ("min-w2", "max-w2"):
        raise ValueError("tiebreak must be 'min-w2' or 'max-w2'")
    for vtx in (s, t):
        if not 0 <= vtx < g.n:
            raise ValueError("vertex %d out of range" % vtx)
    p, q = _as_pq(x)
    res = _best_path_int(g, s, t, p, q, tie_max=(tiebreak == "max-w2"))
    return None if res is None else _path_result(res)


def _has_negative_cycle(g: BiweightedDigraph, p, q) -> bool:
    # Bellman-Ford from a virtual super-source: n full passes, an
    # improvement on the last one certifies a negative cycle
    dist = [0] * g.n
    edges = g.edges
    costs = [q * e[2] + p * e[3] for e in edges]
    changed = False
    for _ in range(g.n):
        changed = False
        for idx, (u, v, _, _) in enumerate(edges):
            nd = dist[u] + costs[idx]
            if nd < dist[v]:
                dist[v] = nd
                changed = True
        if not changed:
            return False
    return changed


def _probe_x_min_exact(g: BiweightedDigraph):
    """Smallest safe multiplier as a Fraction, or ``None`` for minus infinity."""
    if not _has_negative_cycle(g, -1, 0):
        return None
    lo = Fraction(-1)
    steps = 0
    while not _has_negative_cycle(g, lo.numerator, lo.denominator):
        lo *= 2
        steps += 1
        if steps > _GROWTH_LIMIT:  # unreachable with sane integer weights
            raise RuntimeError("x_min bracketing did not terminate")
    hi = Fraction(0)
    for _ in range(HALVING_ITERATIONS):
        mid = (lo + hi) / 2
        if _has_negative_cycle(g, mid.numerator, mid.denominator):
            lo = mid
        else:
            hi = mid
    return hi


def probe_x_min(g: BiweightedDigraph) -> float:
    """Least multiplier at which no cycle has negative blended cost.

    Returns ``float('-inf')`` when even the pure ``-w2`` costs admit no
    negative cycle (i.e. every cycle has zero total w2).
    """
    exact = _probe_x_min_exact(g)
    return float("-inf") if exact is None else float(exact)


def solve_constrained(g: BiweightedDigraph, query: ConstrainedQuery) -> BicriteriaAnswer:
    """Multiplier binary search over all four sense/objective variants.

    Minimization runs on any digraph; maximization requires an acyclic
    graph.  A non-infeasible answer always satisfies the budget, and is the
    best budget-feasible path seen at any probed multiplier (near-optimal,
    not guaranteed optimal).  For the at-least sense the returned walk may
    revisit vertices when that is the only way to accumulate enough w2.
    """
    s, t, B = query.source, query.target, query.budget
    for vtx in (s, t):
        if not 0 <= vtx < g.n:
            raise ValueError("vertex %d out of range" % vtx)
    if not isinstance(B, int) or isinstance(B, bool) or B < 0:
        raise ValueError("budget must be a non-negative integer")
    maximize = query.objective is Objective.MAXIMIZE
    at_most = query.sense is Sense.AT_MOST
    topo = _topological_order(g)
    if maximize and topo is None:
        raise CycleError("maximize objective requires an acyclic graph")
    tie_max = not at_most
    tie_cap = B if tie_max else None

    def probe(p, q):
        return _best_path_int(g, s, t, p, q, maximize=maximize,
                              tie_max=tie_max, tie_cap=tie_cap, topo=topo)

    def feasible(res):
        if res is None:
            return False
        return res[1] <= B if at_most else res[1] >= B

    best = None
    best_x = None

    def consider(res, x):
        nonlocal best, best_x
        if not feasible(res):
            return False
        if best is None:
            better = True
        elif res[0] != best[0]:
            better = res[0] > best[0] if maximize else res[0] < best[0]
        elif res[1] != best[1]:
            # same w1: take the more comfortably feasible w2
            better = res[1] < best[1] if at_most else res[1] > best[1]
        else:
            # same quality: report a finite multiplier over the +/-inf probe
            better = isinstance(x, float) and abs(x) != float("inf") and (
                best_x is None or abs(best_x) == float("inf")
            )
        if better:
            best = res
            best_x = x
        return True

    base = probe(0, 1)
    if base is None:
        return BicriteriaAnswer(Status.INFEASIBLE, None, None)
    if feasible(base):
        return BicriteriaAnswer(Status.EXACT_AT_X0, _path_result(base), 0.0)

    # direction of the search: the at-most/minimize and at-least/maximize
    # variants push x upward from 0, the other two push x downward
    upward = at_most is not maximize

    far = None
    if not at_most and not maximize:
        # general digraphs may develop negative cycles for x < 0: bracket
        # the search at the least multiplier that keeps every cycle safe
        # before probing anything below zero
        x_min = _probe_x_min_exact(g)
        if x_min is not None:
            res = probe(x_min.numerator, x_min.denominator)
            if not consider(res, float(x_min)):
                return BicriteriaAnswer(Status.INFEASIBLE, None, None)
            far = x_min

    if far is None:
        # attainability check at the limit multiplier, where the blended
        # cost degenerates to +/-w2 and the probed w2 sum is exact
        limit_p = 1 if upward else -1
        limit_res = probe(limit_p, 0)
        if not consider(limit_res, float("inf") if upward else float("-inf")):
            return BicriteriaAnswer(Status.INFEASIBLE, None, None)
        # grow the feasible endpoint by doubling from +/-1
        far = Fraction(1) if upward else Fraction(-1)
        steps = 0
        while not consider(probe(far.numerator, far.denominator), float(far)):
            far *= 2
            steps += 1
            if steps > _GROWTH_LIMIT:
                raise RuntimeError("multiplier bracketing did not terminate")

    near = Fraction(0)  # infeasible endpoint (the x=0 probe failed above)
    for _ in range(HALVING_ITERATIONS):
        mid = (near + far) / 2
        if consider(probe(mid.numerator, mid.denominator), float(mid)):
            far = mid
        else:
            near = mid

    return BicriteriaAnswer(Status.FOUND_BY_SEARCH, _path_result(best), best_x)


def exact_constrained(g: BiweightedDigraph, query: ConstrainedQuery, *,
                      max_states: int = 2_000_000) -> BicriteriaAnswer:
    """Exact optimum via shortest paths in the budget-expanded state graph.

    States are ``(vertex, accumulated w2)``; for the at-least sense the
    accumulation saturates at the budget, which caps the layer count at
    ``B`` without changing the answer.  Minimization runs on any digraph,
    maximization on acyclic graphs only.  Intended as the testing
    reference for :func:`solve_constrained` at small scale; the state
    count is guarded by ``max_states``.
    """
    s, t, B = query.source, query.target, query.budget
    for vtx in (s, t):
        if not 0 <= vtx < g.n:
            raise ValueError("vertex %d out of range" % vtx)
    if not isinstance(B, int) or isinstance(B, bool) or B < 0:
        raise ValueError("budget must be a non-negative integer")
    maximize = query.objective is Objective.MAXIMIZE
    at_most = query.sense is Sense.AT_MOST
    total_w2 = sum(e[3] for e in g.edges)
    jcap = min(B, total_w2) if at_most else B
    if g.n * (jcap + 1) > max_states:
        raise StateCapError(
            "budget-expanded graph needs %d states (cap %d)"
            % (g.n * (jcap + 1), max_states)
        )

    width = jcap + 1

    def state(v, j):
        return v * width + j

    n_states = g.n * width
    dist = [None] * n_states
    parent = [None] * n_states  # (prev_state, edge_index)

    def step(j, w2):
        if at_most:
            nj = j + w2
            return nj if nj <= jcap else None
        return min(j + w2, jcap)

    if maximize:
        topo = _topological_order(g)
        if topo is None:
            raise CycleError("maximize objective requires an acyclic graph")
        dist[state(s, 0)] = 0
        for u in topo:
            base = u * width
            for j in range(width):
                d = dist[base + j]
                if d is None:
                    continue
                for idx in g.out_edges(u):
                    _, v, w1, w2 = g.edges[idx]
                    nj = step(j, w2)
                    if nj is None:
                        continue
                    st = state(v, nj)
                    nd = d + w1
                    if dist[st] is None or nd > dist[st]:
                        dist[st] = nd
                        parent[st] = (base + j, idx)
    else:
        start = state(s, 0)
        dist[start] = 0
        heap = [(0, start)]
        while heap:
            d, st = heapq.heappop(heap)
            if d > dist[st]:
                continue
            u, j = divmod(st, width)
            for idx in g.out_edges(u):
                _, v, w1, w2 = g.edges[idx]
                nj = step(j, w2)
                if nj is None:
                    continue
                nst = state(v, nj)
                nd = d + w1
                if dist[nst] is None or nd < dist[nst]:
                    dist[nst] = nd
                    parent[nst] = (st, idx)
                    heapq.heappush(heap, (nd, nst))

    if at_most:
        candidates = [state(t, j) for j in range(width)]
    else:
        candidates = [state(t, jcap)]
    best_state = None
    for st in candidates:
        if dist[st] is None:
            continue
        if best_state is None:
            best_state = st
        elif maximize and dist[st] > dist[best_state]:
            best_state = st
        elif not maximize and dist[st] < dist[best_state]:
            best_state = st
    if best_state is None:
        return BicriteriaAnswer(Status.INFEASIBLE, None, None)

    eidx = []
    st = best_state
    while parent[st] is not None:
        st, idx = parent[st]
        eidx.append(idx)
    eidx.reverse()
    verts = [s]
    for idx in eidx:
        verts.append(g.edges[idx][1])
    w1sum = sum(g.edges[i][2] for i in eidx)
    w2sum = sum(g.edges[i][3] for i in eidx)
    path = PathResult(tuple(verts), tuple(eidx), {"w1sum": w1sum, "w2sum": w2sum})
    return BicriteriaAnswer(Status.EXACT, path, None)


def dag_optimal_path(g: WeightedDigraph, target: int, aggf="sum", opt: str = "min"):
    """Per-vertex optimal aggregate of any u->target path in an acyclic graph.

    ``aggf`` combines a weight with a partial result (``'sum'``, ``'max'``
    or any associative callable); ``opt`` picks ``'min'`` or ``'max'``
    among the outgoing alternatives.  Every vertex is evaluated exactly
    once (memoized).  Returns a list with one value per vertex; vertices
    with no path to ``target`` hold ``None``.  Raises :class:`CycleError`
    if the traversal re-enters an in-progress vertex.
    """
    if not 0 <= target < g.n:
        raise ValueError("target out of range")
    if aggf == "sum":
        fn = lambda a, b: a + b
    elif aggf == "max":
        fn = lambda a, b: max(a, b)
    elif callable(aggf):
        fn = aggf
    else:
        raise ValueError("aggf must be 'sum', 'max' or a callable")
    if opt == "min":
        pick = min
    elif opt == "max":
        pick = max
    else:
        raise ValueError("opt must be 'min' or 'max'")

    WHITE, GRAY, BLACK = 0, 1, 2
    color = [WHITE] * g.n
    pop = [None] * g.n
    pop[target] = g.vcost(target)
    color[target] = BLACK

    for root in range(g.n):
        if color[root] != WHITE:
            continue
        stack = [(root, iter(g.out_edges(root)))]
        color[root] = GRAY
        while stack:
            u, it = stack[-1]
            advanced = False
            for idx in it:
                v = g.edges[idx][1]
                if color[v] == GRAY:
                    raise CycleError("graph has a cycle through vertex %d" % v)
                if color[v] == WHITE:
                    color[v] = GRAY
                    stack.append((v, iter(g.out_edges(v))))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            color[u] = BLACK
            candidates = []
            for idx in g.out_edges(u):
                _, v, w = g.edges[idx]
                if pop[v] is not None:
                    candidates.append(fn(w, pop[v]))
            if candidates:
                pop[u] = fn(g.vcost(u), pick(candidates))
    return pop
