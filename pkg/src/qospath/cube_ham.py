"""Hamiltonian path construction in the cube of a connected graph.

The cube G^3 joins any two vertices within distance 3 of each other.  A
Hamiltonian path of G^3 always exists for connected G: take any spanning
tree, root it, and emit vertices during a DFS -- odd-level vertices on
first entry, even-level vertices when their subtree is finished.  Any two
vertices consecutive in that emission order are within tree distance 3.
"""

from __future__ import annotations

from collections import deque

from .graphs import WeightedGraph

__all__ = ["cube_ham_path", "verify_cube_path", "consecutive_distances"]


def _sorted_neighbors(ug: WeightedGraph):
    adj = [[] for _ in range(ug.n)]
    for u, v, _ in ug.edges:
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()
    return adj


def cube_ham_path(ug: WeightedGraph, root: int | None = None) -> list:
    """Vertex order covering ``ug`` once, consecutive graph distance <= 3.

    A DFS spanning tree is grown from ``root`` (default 0) with children
    visited in ascending id, making the output deterministic.  Raises
    ``ValueError`` when the graph is disconnected.
    """
    if ug.n == 0:
        return []
    if root is None:
        root = 0
    if not 0 <= root < ug.n:
        raise ValueError("root out of range")
    adj = _sorted_neighbors(ug)
    level = [0] * ug.n
    visited = [False] * ug.n
    hp = []

    visited[root] = True
    level[root] = 1
    hp.append(root)  # level 1 is odd: emitted on entry
    stack = [(root, iter(adj[root]))]
    while stack:
        u, it = stack[-1]
        advanced = False
        for v in it:
            if visited[v]:
                continue
            visited[v] = True
            level[v] = level[u] + 1
            if level[v] % 2 == 1:
                hp.append(v)
            stack.append((v, iter(adj[v])))
            advanced = True
            break
        if advanced:
            continue
        stack.pop()
        if level[u] % 2 == 0:
            hp.append(u)

    if len(hp) != ug.n:
        raise ValueError("graph is disconnected; no spanning tree from root")
    return hp


def _bounded_distance(adj, src, dst, cap):
    if src == dst:
        return 0
    seen = {src}
    frontier = [src]
    for depth in range(1, cap + 1):
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v == dst:
                    return depth
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return None


def verify_cube_path(ug: WeightedGraph, hp) -> bool:
    """True iff ``hp`` is a permutation with consecutive distances <= 3."""
    if sorted(hp) != list(range(ug.n)):
        return False
    adj = _sorted_neighbors(ug)
    return all(
        _bounded_distance(adj, hp[i], hp[i + 1], 3) is not None
        for i in range(len(hp) - 1)
    )


def consecutive_distances(ug: WeightedGraph, hp) -> list:
    """Exact graph distance between each consecutive pair of ``hp``."""
    adj = _sorted_neighbors(ug)
    out = []
    for a, b in zip(hp, hp[1:]):
        dist = [None] * ug.n
        dist[a] = 0
        queue = deque([a])
        while queue:
            u = queue.popleft()
            if u == b:
                break
            for v in adj[u]:
                if dist[v] is None:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        out.append(dist[b])
    return out
