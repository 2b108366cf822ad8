"""Classify graph elements by their role in the minimum-weight s-t paths.

Category 1: the element lies on every shortest s-t path.
Category 2: it lies on at least one, but not all.
Category 3: it lies on none.

The weighted classifier restricts the graph to the tight shortest-path
subgraph and reads category 1 off the bridges and cut vertices of its
undirected shadow.  When all weights are equal, a linear-time variant
counts marked vertices per BFS level instead.  Edge weights must be
strictly positive: with zero-weight cycles the tight subgraph describes
shortest *walks*, which no longer match membership in simple shortest
paths.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .graphs import WeightedDigraph, WeightedGraph, transpose, undirected_to_directed

__all__ = [
    "ElementClassification",
    "DistanceLabels",
    "distance_labels",
    "classify_weighted",
    "classify_unit",
    "classify_undirected",
]

_TOL = 1e-9  # tightness tolerance for non-integer weights


@dataclass(frozen=True)
class ElementClassification:
    vertex_category: tuple[int, ...]
    edge_category: tuple[int, ...]


@dataclass(frozen=True)
class DistanceLabels:
    """Distances from the source and to the target, plus the tight marks."""

    ds: tuple[float, ...]
    dt: tuple[float, ...]
    marked: tuple[bool, ...]


def _check_endpoints(g, s, t):
    for vtx in (s, t):
        if not 0 <= vtx < g.n:
            raise ValueError("vertex %d out of range [0, %d)" % (vtx, g.n))


def _check_positive_weights(g):
    for e in g.edges:
        if e[2] <= 0:
            raise ValueError(
                "edge weights must be strictly positive for path sensitivity "
                "(got %r on edge %d->%d)" % (e[2], e[0], e[1])
            )


def _dijkstra(g: WeightedDigraph, source: int):
    dist = [math.inf] * g.n
    dist[source] = 0
    heap = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for idx in g.out_edges(u):
            _, v, w = g.edges[idx]
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def _all_integral(g):
    return all(isinstance(e[2], int) for e in g.edges)


def _tight(a, b, exact):
    if exact:
        return a == b
    return abs(a - b) <= _TOL


def distance_labels(g: WeightedDigraph, s: int, t: int) -> DistanceLabels:
    """Forward/backward distances and the marks ``ds(u) + dt(u) == ds(t)``."""
    _check_endpoints(g, s, t)
    ds = _dijkstra(g, s)
    dt = _dijkstra(transpose(g), t)
    exact = _all_integral(g)
    total = ds[t]
    marked = tuple(
        math.isfinite(total)
        and math.isfinite(ds[u])
        and math.isfinite(dt[u])
        and _tight(ds[u] + dt[u], total, exact)
        for u in range(g.n)
    )
    return DistanceLabels(tuple(ds), tuple(dt), marked)


def _bridges_and_cuts(n, edge_list):
    """Bridges and articulation points of an undirected (multi)graph.

    ``edge_list`` holds ``(u, v)`` pairs; parallel pairs are distinct edges.
    Returns ``(bridge_flags, cut_flags)`` indexed like the inputs.
    """
    adj = [[] for _ in range(n)]
    for idx, (u, v) in enumerate(edge_list):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    visited = [False] * n
    disc = [0] * n
    low = [0] * n
    is_bridge = [False] * len(edge_list)
    is_cut = [False] * n
    timer = 1

    for root in range(n):
        if visited[root] or not adj[root]:
            continue
        # iterative lowpoint DFS; entering edge ids (not parent vertices)
        # are skipped so parallel edges never count as bridges
        stack = [(root, -1, iter(adj[root]))]
        visited[root] = True
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            u, in_edge, it = stack[-1]
            advanced = False
            for v, idx in it:
                if idx == in_edge:
                    continue
                if visited[v]:
                    low[u] = min(low[u], disc[v])
                    continue
                visited[v] = True
                disc[v] = low[v] = timer
                timer += 1
                if u == root:
                    root_children += 1
                stack.append((v, idx, iter(adj[v])))
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            if stack:
                pu = stack[-1][0]
                low[pu] = min(low[pu], low[u])
                if low[u] > disc[pu]:
                    is_bridge[in_edge] = True
                if pu != root and low[u] >= disc[pu]:
                    is_cut[pu] = True
        if root_children >= 2:
            is_cut[root] = True
    return is_bridge, is_cut


def classify_weighted(g: WeightedDigraph, s: int, t: int) -> ElementClassification:
    """1/2/3 categories for a positively weighted digraph.

    If t is unreachable every element is category 3.  Otherwise the tight
    subgraph (marked endpoints and ``ds(u) + w + dt(v) == ds(t)``) carries
    the shortest paths; its bridges and cut vertices, computed after
    forgetting edge directions, are exactly the category-1 elements, with
    s and t always category 1.
    """
    _check_endpoints(g, s, t)
    _check_positive_weights(g)
    labels = distance_labels(g, s, t)
    vcat = [3] * g.n
    ecat = [3] * g.m
    total = labels.ds[t]
    if not math.isfinite(total):
        return ElementClassification(tuple(vcat), tuple(ecat))
    exact = _all_integral(g)
    tight_edges = []
    for idx, (u, v, w) in enumerate(g.edges):
        if (
            labels.marked[u]
            and labels.marked[v]
            and _tight(labels.ds[u] + w + labels.dt[v], total, exact)
        ):
            tight_edges.append(idx)
    sub_pairs = [(g.edges[i][0], g.edges[i][1]) for i in tight_edges]
    is_bridge, is_cut = _bridges_and_cuts(g.n, sub_pairs)
    for u in range(g.n):
        if labels.marked[u]:
            vcat[u] = 1 if is_cut[u] else 2
    vcat[s] = 1
    vcat[t] = 1
    for pos, idx in enumerate(tight_edges):
        ecat[idx] = 1 if is_bridge[pos] else 2
    return ElementClassification(tuple(vcat), tuple(ecat))


def classify_unit(g: WeightedDigraph, s: int, t: int) -> ElementClassification:
    """Linear-time classification when all edge weights are equal.

    Weights are normalized to 1 and distances found by BFS.  A marked
    vertex is category 1 exactly when it is the only marked vertex at its
    BFS level; a tight edge is category 1 exactly when both endpoints are.
    """
    _check_endpoints(g, s, t)
    _check_positive_weights(g)
    weights = {e[2] for e in g.edges}
    if len(weights) > 1:
        raise ValueError("classify_unit requires all edge weights equal")

    def bfs(adj, source):
        dist = [math.inf] * g.n
        dist[source] = 0
        queue = [source]
        for u in queue:
            for v in adj[u]:
                if dist[v] is math.inf:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    fwd = [[] for _ in range(g.n)]
    back = [[] for _ in range(g.n)]
    for u, v, _ in g.edges:
        fwd[u].append(v)
        back[v].append(u)
    ds = bfs(fwd, s)
    dt = bfs(back, t)
    vcat = [3] * g.n
    ecat = [3] * g.m
    total = ds[t]
    if not math.isfinite(total):
        return ElementClassification(tuple(vcat), tuple(ecat))
    marked = [
        math.isfinite(ds[u]) and math.isfinite(dt[u]) and ds[u] + dt[u] == total
        for u in range(g.n)
    ]
    cnt = [0] * (int(total) + 1)
    for u in range(g.n):
        if marked[u]:
            cnt[int(ds[u])] += 1
    for u in range(g.n):
        if marked[u]:
            vcat[u] = 1 if cnt[int(ds[u])] == 1 else 2
    for idx, (u, v, _) in enumerate(g.edges):
        if marked[u] and marked[v] and ds[u] + 1 + dt[v] == total:
            ecat[idx] = 1 if vcat[u] == 1 and vcat[v] == 1 else 2
    return ElementClassification(tuple(vcat), tuple(ecat))


def classify_undirected(ug: WeightedGraph, s: int, t: int,
                        method: str = "auto") -> ElementClassification:
    """Classification for undirected graphs via the doubled digraph.

    Each undirected edge becomes the two directed copies; vertex categories
    carry over directly, and an undirected edge takes the category of
    whichever directed copy is category 1 or 2 (at most one can be, given
    positive weights), else 3.  ``method`` picks the directed classifier:
    ``'weighted'``, ``'unit'`` or ``'auto'`` (unit when weights are uniform).
    """
    if method not in ("auto", "weighted", "unit"):
        raise ValueError("method must be 'auto', 'weighted' or 'unit'")
    dg, origin = undirected_to_directed(ug)
    if method == "auto":
        method = "unit" if len({e[2] for e in ug.edges}) <= 1 else "weighted"
    if method == "unit":
        directed = classify_unit(dg, s, t)
    else:
        directed = classify_weighted(dg, s, t)
    ecat = [3] * ug.m
    for didx, cat in enumerate(directed.edge_category):
        if cat in (1, 2):
            ecat[origin[didx]] = cat
    return ElementClassification(directed.vertex_category, tuple(ecat))
