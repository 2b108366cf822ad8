"""Minimum-aggregate s->t paths whose consecutive edges differ in color.

Two independent methods:

* ``alt_path_expanded`` searches the color-expanded product graph whose
  nodes are (vertex, color of last used edge); exact for walk semantics
  on any digraph with non-negative costs.
* ``alt_path_two_best`` keeps per vertex only the best arrival and the
  best arrival whose last color differs from the first -- exact on DAGs
  in topological order, and a queue-driven relaxation heuristic on
  general graphs.

The aggregate is ``sum`` or ``max``; vertex costs are charged on arrival
plus the source's cost once.
"""

from __future__ import annotations

import heapq
from collections import deque

from .graphs import ColoredDigraph, PathResult
from .bicriteria import CycleError, _topological_order

__all__ = ["alt_path_expanded", "alt_path_two_best"]


def _agg_fn(agg):
    if agg == "sum":
        return lambda a, b: a + b
    if agg == "max":
        return lambda a, b: max(a, b)
    raise ValueError("agg must be 'sum' or 'max'")


def _check(g, s, t):
    for vtx in (s, t):
        if not 0 <= vtx < g.n:
            raise ValueError("vertex %d out of range" % vtx)


def _result(g, value, eidx_chain) -> PathResult:
    verts = []
    if eidx_chain:
        verts.append(g.edges[eidx_chain[0]][0])
        for idx in eidx_chain:
            verts.append(g.edges[idx][1])
    return PathResult(tuple(verts), tuple(eidx_chain), {"aggCost": value})


def alt_path_expanded(g: ColoredDigraph, s: int, t: int,
                      agg: str = "sum") -> PathResult | None:
    """Exact color-alternating optimum via the (vertex, last color) graph.

    Node (i, k) means "at vertex i, last edge had color k"; k = 0 is the
    start state of the source only.  An edge e contributes transitions
    (u(e), k) -> (v(e), col(e)) for every k != col(e), each costing the
    edge cost combined with the entered vertex's cost.  The expansion has
    O(n*C) nodes and O(m*C) edges.  Returns ``None`` if t is unreachable
    by any alternating path.
    """
    _check(g, s, t)
    fn = _agg_fn(agg)
    width = g.colors + 1

    def node(v, k):
        return v * width + k

    size = g.n * width
    dist = [None] * size
    parent = [None] * size  # (prev_node, edge_index)
    start = node(s, 0)
    dist[start] = 0
    heap = [(0, start)]
    while heap:
        d, nd = heapq.heappop(heap)
        if dist[nd] is not None and d > dist[nd]:
            continue
        u, k = divmod(nd, width)
        for idx in g.out_edges(u):
            _, v, cost, color = g.edges[idx]
            if color == k:
                continue
            nvd = fn(fn(d, cost), g.vcost(v))
            tgt = node(v, color)
            if dist[tgt] is None or nvd < dist[tgt]:
                dist[tgt] = nvd
                parent[tgt] = (nd, idx)
                heapq.heappush(heap, (nvd, tgt))

    best_node = None
    for k in range(width):
        nd = node(t, k)
        if dist[nd] is None:
            continue
        if best_node is None or dist[nd] < dist[best_node]:
            best_node = nd
    if best_node is None:
        return None
    chain = []
    nd = best_node
    while parent[nd] is not None:
        nd, idx = parent[nd]
        chain.append(idx)
    chain.reverse()
    value = fn(g.vcost(s), dist[best_node])
    if best_node == start:
        return PathResult((s,), (), {"aggCost": value})
    return _result(g, value, chain)


class _AltLab:
    __slots__ = ("value", "color", "edge", "prev")

    def __init__(self, value, color, edge, prev):
        self.value = value
        self.color = color
        self.edge = edge
        self.prev = prev


def _offer(slots, cand: _AltLab) -> bool:
    """Streamed best/second-best update preserving distinct last colors."""
    best, second = slots
    if best is None or cand.value < best.value:
        if best is not None and cand.color != best.color:
            slots[1] = best
        slots[0] = cand
        return True
    if cand.color != best.color and (second is None or cand.value < second.value):
        slots[1] = cand
        return True
    return False


def alt_path_two_best(g: ColoredDigraph, s: int, t: int, agg: str = "sum",
                      mode: str = "queueRelaxation") -> PathResult | None:
    """Color-alternating optimum from two arrival labels per vertex.

    Each vertex tracks its best arrival and the best arrival whose last
    edge color differs from the first's.  ``mode='dagTopological'``
    processes vertices in topological order and is exact on acyclic
    graphs; ``'queueRelaxation'`` reinserts a vertex whenever either label
    improves and is the general-graph heuristic (adversarial cyclic
    instances may need more than two retained colors).
    """
    _check(g, s, t)
    if mode not in ("dagTopological", "queueRelaxation"):
        raise ValueError("mode must be 'dagTopological' or 'queueRelaxation'")
    fn = _agg_fn(agg)
    labels = [[None, None] for _ in range(g.n)]
    labels[s][0] = _AltLab(g.vcost(s), 0, None, None)

    def push(u) -> list:
        """Relax all edges out of u; vertices whose labels changed."""
        touched = []
        for idx in g.out_edges(u):
            _, v, cost, color = g.edges[idx]
            for lab in labels[u]:
                if lab is None or lab.color == color:
                    continue
                cand = _AltLab(fn(fn(lab.value, cost), g.vcost(v)), color, idx, lab)
                if _offer(labels[v], cand):
                    touched.append(v)
        return touched

    if mode == "dagTopological":
        order = _topological_order(g)
        if order is None:
            raise CycleError("dagTopological mode requires an acyclic graph")
        for u in order:
            if labels[u][0] is not None:
                push(u)
    else:
        queue = deque([s])
        in_queue = [False] * g.n
        in_queue[s] = True
        while queue:
            u = queue.popleft()
            in_queue[u] = False
            for v in push(u):
                if not in_queue[v]:
                    queue.append(v)
                    in_queue[v] = True

    cands = [lab for lab in labels[t] if lab is not None]
    if not cands:
        return None
    best = min(cands, key=lambda lab: lab.value)
    chain = []
    lab = best
    while lab.prev is not None:
        chain.append(lab.edge)
        lab = lab.prev
    chain.reverse()
    if not chain:
        return PathResult((s,), (), {"aggCost": best.value})
    return _result(g, best.value, chain)
