"""Exact minimum-aggregate paths/cycles on exactly Q distinct vertices.

Dynamic programming over bitmask vertex sets: a state is (visited set,
last vertex) and holds the optimal aggregate of any simple path covering
exactly that set.  For cycles the set's minimum-index vertex is fixed as
the start, so each cycle is counted once and the closing edge back to it
finishes the tour; this needs only the O(n * 2^n) path table rather than
a full two-endpoint table.

The aggregate combines vertex and edge costs uniformly with ``sum`` or
``max``.  Intended for small graphs; the vertex count is capped.
"""

from __future__ import annotations

from .graphs import ColoredDigraph, CycleResult, PathResult, WeightedDigraph

__all__ = ["min_q_path", "min_q_cycle", "DEFAULT_VERTEX_CAP"]

DEFAULT_VERTEX_CAP = 20


def _agg_fn(agg):
    if agg == "sum":
        return lambda a, b: a + b
    if agg == "max":
        return lambda a, b: max(a, b)
    raise ValueError("agg must be 'sum' or 'max'")


def _instance(g):
    """Normalize either digraph flavor to (n, in-edges, vertex costs).

    Colors on :class:`ColoredDigraph` edges are ignored here.
    ``in_edges[v]`` lists ``(u, cost, edge_index)``.
    """
    if isinstance(g, ColoredDigraph):
        triples = [(u, v, c) for (u, v, c, _color) in g.edges]
        vcost = list(g.vertex_cost)
    elif isinstance(g, WeightedDigraph):
        triples = [(u, v, w) for (u, v, w) in g.edges]
        vcost = [g.vcost(u) for u in range(g.n)]
    else:
        raise TypeError("expected WeightedDigraph or ColoredDigraph")
    in_edges = [[] for _ in range(g.n)]
    for idx, (u, v, c) in enumerate(triples):
        in_edges[v].append((u, c, idx))
    return g.n, in_edges, vcost


def _mask_allow(allow_mask, n):
    if allow_mask is None:
        return (1 << n) - 1
    if isinstance(allow_mask, int):
        return allow_mask
    mask = 0
    for u in allow_mask:
        mask |= 1 << u
    return mask


def _check_args(g, q, max_vertices):
    if g.n > max_vertices:
        raise ValueError(
            "graph has %d vertices; subset DP is capped at %d" % (g.n, max_vertices)
        )
    if not 1 <= q <= g.n:
        raise ValueError("q must be in [1, n]")


def _set_of(mask):
    out = []
    u = 0
    while mask:
        if mask & 1:
            out.append(u)
        mask >>= 1
        u += 1
    return frozenset(out)


def min_q_path(g, q: int, agg: str = "sum", allowed=None, allow_mask=None,
               max_vertices: int = DEFAULT_VERTEX_CAP) -> PathResult | None:
    """Cheapest simple path visiting exactly ``q`` distinct vertices.

    ``allow_mask`` (an int bitmask or an iterable of vertices) prunes DP
    states early to a vertex subset; ``allowed`` is an optional predicate
    on the full frozen vertex set, checked only at answer extraction.
    Returns ``None`` when no q-vertex path exists.
    """
    _check_args(g, q, max_vertices)
    fn = _agg_fn(agg)
    n, in_edges, vcost = _instance(g)
    allow_bits = _mask_allow(allow_mask, n)

    if q == 1:
        best_u = None
        for u in range(n):
            if not allow_bits >> u & 1:
                continue
            if allowed is not None and not allowed(frozenset((u,))):
                continue
            if best_u is None or vcost[u] < vcost[best_u]:
                best_u = u
        if best_u is None:
            return None
        return PathResult((best_u,), (), {"aggCost": vcost[best_u]})

    dp = {}
    for u in range(n):
        if allow_bits >> u & 1:
            dp[(1 << u) * n + u] = (vcost[u], None, None)
    # masks in increasing numeric order visit subsets before supersets
    full = 1 << n
    for mask in range(1, full):
        if mask & ~allow_bits:
            continue
        size = bin(mask).count("1")
        if size < 2 or size > q:
            continue
        for i in range(n):
            if not mask >> i & 1:
                continue
            prev_mask = mask ^ (1 << i)
            best = None
            for (j, cost, eidx) in in_edges[i]:
                if not prev_mask >> j & 1:
                    continue
                state = dp.get(prev_mask * n + j)
                if state is None:
                    continue
                cand = fn(state[0], cost)
                if best is None or cand < best[0]:
                    best = (cand, prev_mask * n + j, eidx)
            if best is not None:
                dp[mask * n + i] = (fn(vcost[i], best[0]), best[1], best[2])

    best_key = None
    best_val = None
    for key, (val, _p, _e) in dp.items():
        mask = key // n
        if bin(mask).count("1") != q:
            continue
        if allowed is not None and not allowed(_set_of(mask)):
            continue
        if best_val is None or val < best_val:
            best_val = val
            best_key = key
    if best_key is None:
        return None
    verts, eidxs = _reconstruct(dp, best_key, n)
    return PathResult(tuple(verts), tuple(eidxs), {"aggCost": best_val})


def _reconstruct(dp, key, n):
    verts = []
    eidxs = []
    while key is not None:
        val, parent, eidx = dp[key]
        verts.append(key % n)
        if eidx is not None:
            eidxs.append(eidx)
        key = parent
    verts.reverse()
    eidxs.reverse()
    return verts, eidxs


def min_q_cycle(g, q: int, agg: str = "sum", allowed=None, allow_mask=None,
                max_vertices: int = DEFAULT_VERTEX_CAP) -> CycleResult | None:
    """Cheapest simple cycle visiting exactly ``q`` distinct vertices.

    ``q`` must be at least 2 (a 1-cycle would need a self-loop, which the
    graph types reject).  A 2-cycle requires an antiparallel edge pair.
    Returns ``None`` when no such cycle exists.
    """
    if q < 2:
        raise ValueError("cycles need q >= 2")
    _check_args(g, q, max_vertices)
    fn = _agg_fn(agg)
    n, in_edges, vcost = _instance(g)
    allow_bits = _mask_allow(allow_mask, n)

    # anchored DP: the path is forced to start at the lowest vertex of its
    # mask, so each cycle is generated exactly once up to rotation
    dp = {}
    for u in range(n):
        if allow_bits >> u & 1:
            dp[(1 << u) * n + u] = (vcost[u], None, None)
    full = 1 << n
    for mask in range(1, full):
        if mask & ~allow_bits:
            continue
        size = bin(mask).count("1")
        if size < 2 or size > q:
            continue
        anchor = (mask & -mask).bit_length() - 1
        for i in range(n):
            if not mask >> i & 1 or i == anchor:
                continue
            prev_mask = mask ^ (1 << i)
            best = None
            for (j, cost, eidx) in in_edges[i]:
                if not prev_mask >> j & 1:
                    continue
                state = dp.get(prev_mask * n + j)
                if state is None:
                    continue
                cand = fn(state[0], cost)
                if best is None or cand < best[0]:
                    best = (cand, prev_mask * n + j, eidx)
            if best is not None:
                dp[mask * n + i] = (fn(vcost[i], best[0]), best[1], best[2])

    # closing edges j->anchor, indexed by (anchor, j)
    close = {}
    for a in range(n):
        for (j, cost, eidx) in in_edges[a]:
            key = (a, j)
            if key not in close or cost < close[key][0]:
                close[key] = (cost, eidx)

    best_val = None
    best_state = None
    best_close = None
    for key, (val, _p, _e) in dp.items():
        mask, last = key // n, key % n
        if bin(mask).count("1") != q:
            continue
        anchor = (mask & -mask).bit_length() - 1
        if last == anchor:
            continue
        hit = close.get((anchor, last))
        if hit is None:
            continue
        if allowed is not None and not allowed(_set_of(mask)):
            continue
        cand = fn(val, hit[0])
        if best_val is None or cand < best_val:
            best_val = cand
            best_state = key
            best_close = hit[1]
    if best_state is None:
        return None
    verts, eidxs = _reconstruct(dp, best_state, n)
    eidxs.append(best_close)
    return CycleResult(tuple(verts), tuple(eidxs), {"aggCost": best_val})
