"""Euler cycles of edge-colored multigraphs with no two same-colored
consecutive edges.

Feasibility is exactly: the positive-degree vertices are connected, every
degree is even, and at every vertex no color occupies more than half of
the incidences.  Construction pairs the incidences at each vertex into
bichromatic partners (so entering by an edge fixes the exit as its
partner), walks partner-linked sub-cycles, and splices each sub-cycle
into the growing main cycle -- forward when the boundary colors permit,
reversed otherwise; the partner pairing guarantees one orientation always
fits.  Total time is linear in the edge count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import ColoredMultigraph, CycleResult

__all__ = [
    "FeasibilityReport",
    "check_feasible",
    "pair_objects",
    "build_alt_euler",
    "verify_alt_euler",
]


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    reason: str | None = None  # 'disconnected' | 'oddDegree' | 'colorMajority'
    vertex: int | None = None
    color: int | None = None


def check_feasible(g: ColoredMultigraph) -> FeasibilityReport:
    """Structured feasibility verdict for a color-alternating Euler cycle."""
    for x in range(g.n):
        if g.degree(x) % 2 == 1:
            return FeasibilityReport(False, "oddDegree", vertex=x)
    for x in range(g.n):
        counts = {}
        for eid in g.incident_ids(x):
            c = g.color(eid)
            counts[c] = counts.get(c, 0) + 1
        half = g.degree(x) // 2
        for c in sorted(counts):
            if counts[c] > half:
                return FeasibilityReport(False, "colorMajority", vertex=x, color=c)
    active = [x for x in range(g.n) if g.degree(x) > 0]
    if active:
        seen = {active[0]}
        stack = [active[0]]
        while stack:
            u = stack.pop()
            for eid in g.incident_ids(u):
                a, b = g.endpoints(eid)
                v = b if a == u else a
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        if len(seen) != len(active):
            missing = min(set(active) - seen)
            return FeasibilityReport(False, "disconnected", vertex=missing)
    return FeasibilityReport(True)


def pair_objects(colors) -> list:
    """Split 2P colored objects into P pairs of differing colors.

    Colors are renumbered by first occurrence, classes are count-sorted by
    size (non-increasing) and laid out contiguously; matching position i
    with position P+i then never pairs two objects of one color, because
    every class is contiguous with length at most P.  Raises ``ValueError``
    when some color occurs more than P times (or the count is odd).
    """
    objs = list(colors)
    if len(objs) % 2 == 1:
        raise ValueError("cannot pair an odd number of objects")
    half = len(objs) // 2
    if half == 0:
        return []
    renumber = {}
    compact = []
    for c in objs:
        if c not in renumber:
            renumber[c] = len(renumber)
        compact.append(renumber[c])
    n_colors = len(renumber)
    nob = [0] * n_colors
    for c in compact:
        nob[c] += 1
    for c in range(n_colors):
        if nob[c] > half:
            raise ValueError(
                "color majority: a color occurs %d times, more than P=%d"
                % (nob[c], half)
            )
    # count sort of the color classes by size, largest first
    buckets = [[] for _ in range(len(objs) + 1)]
    for c in range(n_colors):
        buckets[nob[c]].append(c)
    order = []
    for size in range(len(objs), 0, -1):
        order.extend(buckets[size])
    members = [[] for _ in range(n_colors)]
    for idx, c in enumerate(compact):
        members[c].append(idx)
    layout = []
    for c in order:
        layout.extend(members[c])
    return [(layout[i], layout[half + i]) for i in range(half)]


class _Node:
    __slots__ = ("kind", "val", "prev", "next")

    def __init__(self, kind, val):
        self.kind = kind  # 'v' or 'e'
        self.val = val
        self.prev = None
        self.next = None


def _link_chain(nodes):
    for a, b in zip(nodes, nodes[1:]):
        a.next = b
        b.prev = a


def build_alt_euler(g: ColoredMultigraph) -> CycleResult | None:
    """A color-alternating Euler cycle of ``g``, or ``None`` when infeasible.

    The cycle is reported as the vertex occurrence sequence plus the edge
    id sequence (equal lengths; edge i joins vertex i to vertex i+1,
    cyclically).  Use :func:`check_feasible` for the infeasibility reason.
    Construction never fails on feasible inputs.
    """
    if g.m == 0:
        return CycleResult((), (), {})
    if not check_feasible(g).feasible:
        return None

    # incidence tables: ascending edge id per vertex; a loop holds two slots
    mu = [sorted(g.incident_ids(x)) for x in range(g.n)]
    deg = [len(mu[x]) for x in range(g.n)]
    slot_of = [dict() for _ in range(g.n)]  # edge id -> its slots at x
    for x in range(g.n):
        for j, eid in enumerate(mu[x]):
            slot_of[x].setdefault(eid, []).append(j)
    pair = [None] * g.n
    for x in range(g.n):
        table = [0] * deg[x]
        for a, b in pair_objects([g.color(eid) for eid in mu[x]]):
            table[a] = b
            table[b] = a
        pair[x] = table

    marked = [False] * (g.m + 1)
    muidx = [0] * g.n
    color = g.color
    endpoints = g.endpoints

    def other_end(eid, x):
        a, b = endpoints(eid)
        return b if a == x else a

    def arrival_slot(v, eid, dep_slot):
        slots = slot_of[v][eid]
        if len(slots) == 1:
            return slots[0]
        return slots[1] if slots[0] == dep_slot else slots[0]

    def walk_subcycle(x, j0):
        """Mark and list the partner-linked closed trail leaving x by slot j0."""
        e0 = mu[x][j0]
        marked[e0] = True
        items = [("v", x), ("e", e0)]
        cur = other_end(e0, x)
        arr = arrival_slot(cur, e0, j0)
        home = pair[x][j0]
        while not (cur == x and arr == home):
            items.append(("v", cur))
            dep = pair[cur][arr]
            eid = mu[cur][dep]
            marked[eid] = True
            items.append(("e", eid))
            nxt = other_end(eid, cur)
            arr = arrival_slot(nxt, eid, dep)
            cur = nxt
        return items

    def splice(cur_node, items):
        """Replace this occurrence of x with the freshly walked sub-cycle."""
        if cur_node.next is cur_node:  # seeding splice: list was just [x]
            nodes = [_Node(k, v) for k, v in items]
            _link_chain(nodes)
            nodes[-1].next = nodes[0]
            nodes[0].prev = nodes[-1]
            return nodes[0]
        m1 = cur_node.prev
        m2 = cur_node.next
        first_c = color(items[1][1])
        last_c = color(items[-1][1])
        if color(m1.val) == first_c or color(m2.val) == last_c:
            # reversed orientation; partner pairing makes this always legal
            items = [items[0]] + items[:0:-1]
            assert color(m1.val) != color(items[1][1])
            assert color(m2.val) != color(items[-1][1])
        nodes = [_Node(k, v) for k, v in items]
        nodes.append(_Node("v", items[0][1]))
        _link_chain(nodes)
        m1.next = nodes[0]
        nodes[0].prev = m1
        nodes[-1].next = m2
        m2.prev = nodes[-1]
        return nodes[0]

    seed_vertex = min(x for x in range(g.n) if deg[x] > 0)
    anchor = _Node("v", seed_vertex)
    anchor.prev = anchor.next = anchor
    cur = anchor
    while True:
        x = cur.val
        while muidx[x] < deg[x]:
            eid = mu[x][muidx[x]]
            if marked[eid]:
                muidx[x] += 1
                continue
            items = walk_subcycle(x, muidx[x])
            new_head = splice(cur, items)
            if cur is anchor:
                anchor = new_head
            cur = new_head
        if cur.next is cur:  # nothing ever spliced; cannot happen past m == 0
            break
        cur = cur.next.next
        if cur is anchor:
            break

    verts = []
    eids = []
    node = anchor
    while True:
        verts.append(node.val)
        eids.append(node.next.val)
        node = node.next.next
        if node is anchor:
            break
    return CycleResult(tuple(verts), tuple(eids), {})


def verify_alt_euler(g: ColoredMultigraph, cycle) -> bool:
    """True iff ``cycle`` uses every edge once, chains correctly and the
    colors of neighbouring edges differ, including across the wrap-around."""
    if isinstance(cycle, CycleResult):
        verts, eids = list(cycle.vertices), list(cycle.edges)
    else:
        verts, eids = list(cycle[0]), list(cycle[1])
    if g.m == 0:
        return not verts and not eids
    if len(verts) != g.m or len(eids) != g.m:
        return False
    if sorted(eids) != list(range(1, g.m + 1)):
        return False
    m = g.m
    for i in range(m):
        a, b = verts[i], verts[(i + 1) % m]
        u, v = g.endpoints(eids[i])
        if (a, b) not in ((u, v), (v, u)):
            return False
    if m == 1:
        return False  # a lone loop cannot alternate with itself
    for i in range(m):
        if g.color(eids[i]) == g.color(eids[(i + 1) % m]):
            return False
    return True
