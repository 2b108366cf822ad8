"""Graph containers and the whitespace-separated text formats used by the CLI.

Vertices are dense 0-based integers everywhere.  All graph values are
immutable after construction, so they can be shared freely between threads
and reused across queries.

Four text formats are supported (UTF-8, ``#`` starts a comment line):

* ``biweighted``          -- header ``n m``, then ``u v w1 w2`` per edge.
* ``weighted``            -- header ``n m [V]``; if the ``V`` flag is present
  the next line holds n vertex costs; then ``u v w`` per edge.
* ``undirected``          -- same layout as ``weighted``, read as an
  undirected graph.
* ``colored-digraph``     -- header ``n m C``, a line of n vertex costs,
  then ``u v cost color`` per edge.
* ``colored-multigraph``  -- header ``n m C``, then ``id u v color`` per
  edge; ids must be exactly 1..m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

__all__ = [
    "GraphFormatError",
    "BiweightedDigraph",
    "WeightedDigraph",
    "WeightedGraph",
    "ColoredDigraph",
    "ColoredMultigraph",
    "PathResult",
    "CycleResult",
    "GRAPH_KINDS",
    "parse_graph",
    "serialize_graph",
    "transpose",
    "undirected_to_directed",
]

GRAPH_KINDS = (
    "biweighted",
    "weighted",
    "undirected",
    "colored-digraph",
    "colored-multigraph",
)


class GraphFormatError(ValueError):
    """A graph description violates its declared format or an invariant."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


def _require_vertex(u, n, line=None):
    if isinstance(u, bool) or not isinstance(u, int) or not 0 <= u < n:
        raise GraphFormatError("vertex %r out of range [0, %d)" % (u, n), line)


def _require_number(x, what, line=None):
    if isinstance(x, bool) or not isinstance(x, (int, float)) or x < 0:
        raise GraphFormatError("%s %r must be a non-negative number" % (what, x), line)


def _require_int(x, what, line=None):
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise GraphFormatError("%s %r must be a non-negative integer" % (what, x), line)


def _reject_parallel_and_loops(edge_pairs, line_of=None):
    seen = {}
    for idx, (u, v) in enumerate(edge_pairs):
        line = line_of[idx] if line_of else None
        if u == v:
            raise GraphFormatError("self-loop at vertex %d not allowed" % u, line)
        if (u, v) in seen:
            raise GraphFormatError("parallel edge (%d, %d)" % (u, v), line)
        seen[(u, v)] = idx


@dataclass(frozen=True)
class BiweightedDigraph:
    """Directed graph whose edges carry two non-negative integer weights."""

    n: int
    edges: tuple[tuple[int, int, int, int], ...]
    _adj: tuple[tuple[int, ...], ...] = field(
        init=False, compare=False, repr=False, default=()
    )

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        adj = [[] for _ in range(self.n)]
        for idx, (u, v, w1, w2) in enumerate(self.edges):
            _require_vertex(u, self.n)
            _require_vertex(v, self.n)
            _require_int(w1, "w1")
            _require_int(w2, "w2")
            adj[u].append(idx)
        _reject_parallel_and_loops([(u, v) for u, v, _, _ in self.edges])
        object.__setattr__(self, "_adj", tuple(tuple(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def out_edges(self, u: int) -> tuple[int, ...]:
        """Indices into ``edges`` of the edges leaving ``u``."""
        return self._adj[u]


@dataclass(frozen=True)
class WeightedDigraph:
    """Directed graph with one non-negative weight per edge.

    ``vertex_cost`` is optional; ``None`` means all vertices cost 0.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...]
    vertex_cost: tuple[float, ...] | None = None
    _adj: tuple[tuple[int, ...], ...] = field(
        init=False, compare=False, repr=False, default=()
    )

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.vertex_cost is not None:
            vc = tuple(self.vertex_cost)
            if len(vc) != self.n:
                raise GraphFormatError("vertex cost list must have length n")
            for c in vc:
                _require_number(c, "vertex cost")
            object.__setattr__(self, "vertex_cost", vc)
        adj = [[] for _ in range(self.n)]
        for idx, (u, v, w) in enumerate(self.edges):
            _require_vertex(u, self.n)
            _require_vertex(v, self.n)
            _require_number(w, "weight")
            adj[u].append(idx)
        _reject_parallel_and_loops([(u, v) for u, v, _ in self.edges])
        object.__setattr__(self, "_adj", tuple(tuple(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def out_edges(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def vcost(self, u: int):
        return 0 if self.vertex_cost is None else self.vertex_cost[u]


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected simple graph with one non-negative weight per edge."""

    n: int
    edges: tuple[tuple[int, int, float], ...]
    vertex_cost: tuple[float, ...] | None = None
    _inc: tuple[tuple[int, ...], ...] = field(
        init=False, compare=False, repr=False, default=()
    )

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.vertex_cost is not None:
            vc = tuple(self.vertex_cost)
            if len(vc) != self.n:
                raise GraphFormatError("vertex cost list must have length n")
            for c in vc:
                _require_number(c, "vertex cost")
            object.__setattr__(self, "vertex_cost", vc)
        inc = [[] for _ in range(self.n)]
        for idx, (u, v, w) in enumerate(self.edges):
            _require_vertex(u, self.n)
            _require_vertex(v, self.n)
            _require_number(w, "weight")
            inc[u].append(idx)
            inc[v].append(idx)
        # undirected: (u, v) and (v, u) describe the same pair
        _reject_parallel_and_loops(
            [(min(u, v), max(u, v)) for u, v, _ in self.edges]
        )
        object.__setattr__(self, "_inc", tuple(tuple(a) for a in inc))

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident_edges(self, u: int) -> tuple[int, ...]:
        return self._inc[u]

    def neighbors(self, u: int):
        for idx in self._inc[u]:
            a, b, _ = self.edges[idx]
            yield (b if a == u else a), idx


@dataclass(frozen=True)
class ColoredDigraph:
    """Directed graph whose edges carry a cost and a color in 1..C."""

    n: int
    edges: tuple[tuple[int, int, float, int], ...]
    colors: int
    vertex_cost: tuple[float, ...] = ()
    _adj: tuple[tuple[int, ...], ...] = field(
        init=False, compare=False, repr=False, default=()
    )

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if not self.vertex_cost:
            object.__setattr__(self, "vertex_cost", (0,) * self.n)
        else:
            vc = tuple(self.vertex_cost)
            if len(vc) != self.n:
                raise GraphFormatError("vertex cost list must have length n")
            for c in vc:
                _require_number(c, "vertex cost")
            object.__setattr__(self, "vertex_cost", vc)
        if self.colors < 0:
            raise GraphFormatError("color count must be non-negative")
        adj = [[] for _ in range(self.n)]
        for idx, (u, v, cost, color) in enumerate(self.edges):
            _require_vertex(u, self.n)
            _require_vertex(v, self.n)
            _require_number(cost, "edge cost")
            if isinstance(color, bool) or not isinstance(color, int) or not 1 <= color <= self.colors:
                raise GraphFormatError(
                    "color %r out of range [1, %d]" % (color, self.colors)
                )
            adj[u].append(idx)
        _reject_parallel_and_loops([(u, v) for u, v, _, _ in self.edges])
        object.__setattr__(self, "_adj", tuple(tuple(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def out_edges(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def vcost(self, u: int):
        return self.vertex_cost[u]


@dataclass(frozen=True)
class ColoredMultigraph:
    """Undirected multigraph with colored edges and explicit edge ids.

    Edge ids are unique and dense in 1..m.  Parallel edges and self-loops
    are permitted.  ``edges`` holds ``(id, u, v, color)`` tuples.
    """

    n: int
    edges: tuple[tuple[int, int, int, int], ...]
    colors: int
    _inc: tuple[tuple[int, ...], ...] = field(
        init=False, compare=False, repr=False, default=()
    )
    _by_id: dict = field(init=False, compare=False, repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.colors < 0:
            raise GraphFormatError("color count must be non-negative")
        m = len(self.edges)
        by_id = {}
        inc = [[] for _ in range(self.n)]
        for eid, u, v, color in self.edges:
            if isinstance(eid, bool) or not isinstance(eid, int) or not 1 <= eid <= m:
                raise GraphFormatError("edge id %r out of range [1, %d]" % (eid, m))
            if eid in by_id:
                raise GraphFormatError("duplicate edge id %d" % eid)
            _require_vertex(u, self.n)
            _require_vertex(v, self.n)
            if isinstance(color, bool) or not isinstance(color, int) or not 1 <= color <= self.colors:
                raise GraphFormatError(
                    "color %r out of range [1, %d]" % (color, self.colors)
                )
            by_id[eid] = (u, v, color)
            inc[u].append(eid)
            if v != u:
                inc[v].append(eid)
            else:
                inc[u].append(eid)  # a loop occupies two incidence slots
        object.__setattr__(self, "_inc", tuple(tuple(a) for a in inc))
        object.__setattr__(self, "_by_id", by_id)

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, eid: int) -> tuple[int, int]:
        u, v, _ = self._by_id[eid]
        return u, v

    def color(self, eid: int) -> int:
        return self._by_id[eid][2]

    def incident_ids(self, u: int) -> tuple[int, ...]:
        """Edge ids incident to ``u``; loops appear twice."""
        return self._inc[u]

    def degree(self, u: int) -> int:
        return len(self._inc[u])


@dataclass(frozen=True)
class PathResult:
    """An ordered walk: vertex sequence, the edges joining it, and named costs.

    ``edges`` holds indices into the source graph's edge tuple (or edge ids
    for multigraphs) and has one entry fewer than ``vertices``.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    costs: dict

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))


@dataclass(frozen=True)
class CycleResult:
    """A closed walk: ``edges`` has exactly as many entries as ``vertices``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    costs: dict

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))


# ---------------------------------------------------------------------------
# parsing / serialization


def _significant_lines(text):
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, stripped.split()))
    return out


def _num_token(tok, lineno, what="value"):
    try:
        return int(tok)
    except ValueError:
        pass
    try:
        val = float(tok)
    except ValueError:
        raise GraphFormatError("bad %s %r" % (what, tok), lineno) from None
    return val


def _int_token(tok, lineno, what="value"):
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError("bad %s %r (integer expected)" % (what, tok), lineno) from None


def _take(lines, pos, lineno_hint):
    if pos >= len(lines):
        raise GraphFormatError("unexpected end of input", lineno_hint)
    return lines[pos]


def parse_graph(text, kind: str):
    """Parse ``text`` (str or bytes) as one of :data:`GRAPH_KINDS`."""
    if kind not in GRAPH_KINDS:
        raise ValueError("unknown graph kind %r (expected one of %s)" % (kind, ", ".join(GRAPH_KINDS)))
    lines = _significant_lines(text)
    if not lines:
        raise GraphFormatError("empty input", 1)
    lineno, header = lines[0]
    pos = 1

    def finish(graph):
        if pos != len(lines):
            extra_lineno, _ = lines[pos]
            raise GraphFormatError("trailing data after edge list", extra_lineno)
        return graph

    if kind == "biweighted":
        if len(header) != 2:
            raise GraphFormatError("expected header 'n m'", lineno)
        n = _int_token(header[0], lineno, "n")
        m = _int_token(header[1], lineno, "m")
        edges = []
        for _ in range(m):
            eln, toks = _take(lines, pos, lineno)
            pos += 1
            if len(toks) != 4:
                raise GraphFormatError("expected 'u v w1 w2'", eln)
            u = _int_token(toks[0], eln, "u")
            v = _int_token(toks[1], eln, "v")
            w1 = _int_token(toks[2], eln, "w1")
            w2 = _int_token(toks[3], eln, "w2")
            for val, name in ((u, "u"), (v, "v")):
                if not 0 <= val < n:
                    raise GraphFormatError("vertex %s=%d out of range" % (name, val), eln)
            edges.append((u, v, w1, w2))
        return finish(BiweightedDigraph(n, tuple(edges)))

    if kind in ("weighted", "undirected"):
        if len(header) not in (2, 3) or (len(header) == 3 and header[2] != "V"):
            raise GraphFormatError("expected header 'n m [V]'", lineno)
        n = _int_token(header[0], lineno, "n")
        m = _int_token(header[1], lineno, "m")
        vertex_cost = None
        if len(header) == 3:
            cln, toks = _take(lines, pos, lineno)
            pos += 1
            if len(toks) != n:
                raise GraphFormatError("expected %d vertex costs" % n, cln)
            vertex_cost = tuple(_num_token(t, cln, "vertex cost") for t in toks)
        edges = []
        for _ in range(m):
            eln, toks = _take(lines, pos, lineno)
            pos += 1
            if len(toks) != 3:
                raise GraphFormatError("expected 'u v w'", eln)
            u = _int_token(toks[0], eln, "u")
            v = _int_token(toks[1], eln, "v")
            w = _num_token(toks[2], eln, "w")
            for val, name in ((u, "u"), (v, "v")):
                if not 0 <= val < n:
                    raise GraphFormatError("vertex %s=%d out of range" % (name, val), eln)
            edges.append((u, v, w))
        cls = WeightedGraph if kind == "undirected" else WeightedDigraph
        return finish(cls(n, tuple(edges), vertex_cost))

    if kind == "colored-digraph":
        if len(header) != 3:
            raise GraphFormatError("expected header 'n m C'", lineno)
        n = _int_token(header[0], lineno, "n")
        m = _int_token(header[1], lineno, "m")
        colors = _int_token(header[2], lineno, "C")
        cln, toks = _take(lines, pos, lineno)
        pos += 1
        if len(toks) != n:
            raise GraphFormatError("expected %d vertex costs" % n, cln)
        vertex_cost = tuple(_num_token(t, cln, "vertex cost") for t in toks)
        edges = []
        for _ in range(m):
            eln, toks = _take(lines, pos, lineno)
            pos += 1
            if len(toks) != 4:
                raise GraphFormatError("expected 'u v cost color'", eln)
            u = _int_token(toks[0], eln, "u")
            v = _int_token(toks[1], eln, "v")
            cost = _num_token(toks[2], eln, "cost")
            color = _int_token(toks[3], eln, "color")
            for val, name in ((u, "u"), (v, "v")):
                if not 0 <= val < n:
                    raise GraphFormatError("vertex %s=%d out of range" % (name, val), eln)
            if not 1 <= color <= colors:
                raise GraphFormatError("color %d out of range [1, %d]" % (color, colors), eln)
            edges.append((u, v, cost, color))
        return finish(ColoredDigraph(n, tuple(edges), colors, vertex_cost))

    # colored-multigraph
    if len(header) != 3:
        raise GraphFormatError("expected header 'n m C'", lineno)
    n = _int_token(header[0], lineno, "n")
    m = _int_token(header[1], lineno, "m")
    colors = _int_token(header[2], lineno, "C")
    edges = []
    seen_ids = set()
    for _ in range(m):
        eln, toks = _take(lines, pos, lineno)
        pos += 1
        if len(toks) != 4:
            raise GraphFormatError("expected 'id u v color'", eln)
        eid = _int_token(toks[0], eln, "id")
        u = _int_token(toks[1], eln, "u")
        v = _int_token(toks[2], eln, "v")
        color = _int_token(toks[3], eln, "color")
        if not 1 <= eid <= m:
            raise GraphFormatError("edge id %d out of range [1, %d]" % (eid, m), eln)
        if eid in seen_ids:
            raise GraphFormatError("duplicate edge id %d" % eid, eln)
        seen_ids.add(eid)
        for val, name in ((u, "u"), (v, "v")):
            if not 0 <= val < n:
                raise GraphFormatError("vertex %s=%d out of range" % (name, val), eln)
        if not 1 <= color <= colors:
            raise GraphFormatError("color %d out of range [1, %d]" % (color, colors), eln)
        edges.append((eid, u, v, color))
    return finish(ColoredMultigraph(n, tuple(edges), colors))


def _fmt(x) -> str:
    return repr(x) if isinstance(x, float) else str(x)


def serialize_graph(g) -> str:
    """Render ``g`` in the text format it parses from (round-trip identity)."""
    out = []
    if isinstance(g, BiweightedDigraph):
        out.append("%d %d" % (g.n, g.m))
        for u, v, w1, w2 in g.edges:
            out.append("%d %d %s %s" % (u, v, _fmt(w1), _fmt(w2)))
    elif isinstance(g, (WeightedDigraph, WeightedGraph)):
        if g.vertex_cost is None:
            out.append("%d %d" % (g.n, g.m))
        else:
            out.append("%d %d V" % (g.n, g.m))
            out.append(" ".join(_fmt(c) for c in g.vertex_cost))
        for u, v, w in g.edges:
            out.append("%d %d %s" % (u, v, _fmt(w)))
    elif isinstance(g, ColoredDigraph):
        out.append("%d %d %d" % (g.n, g.m, g.colors))
        out.append(" ".join(_fmt(c) for c in g.vertex_cost))
        for u, v, cost, color in g.edges:
            out.append("%d %d %s %d" % (u, v, _fmt(cost), color))
    elif isinstance(g, ColoredMultigraph):
        out.append("%d %d %d" % (g.n, g.m, g.colors))
        for eid, u, v, color in g.edges:
            out.append("%d %d %d %d" % (eid, u, v, color))
    else:
        raise TypeError("cannot serialize %r" % type(g).__name__)
    return "\n".join(out) + "\n"


def kind_of(g) -> str:
    """The parse kind matching the runtime type of ``g``."""
    if isinstance(g, BiweightedDigraph):
        return "biweighted"
    if isinstance(g, WeightedDigraph):
        return "weighted"
    if isinstance(g, WeightedGraph):
        return "undirected"
    if isinstance(g, ColoredDigraph):
        return "colored-digraph"
    if isinstance(g, ColoredMultigraph):
        return "colored-multigraph"
    raise TypeError("not a graph: %r" % type(g).__name__)


def transpose(g: WeightedDigraph) -> WeightedDigraph:
    """Reverse the direction of every edge; vertex costs are kept."""
    return WeightedDigraph(
        g.n, tuple((v, u, w) for u, v, w in g.edges), g.vertex_cost
    )


def undirected_to_directed(ug: WeightedGraph):
    """Replace each undirected edge by the two directed edges of equal weight.

    Returns ``(digraph, origin)`` where ``origin[k]`` is the index of the
    undirected edge the k-th directed edge came from, so per-edge results
    can be mapped back.
    """
    edges = []
    origin = []
    for idx, (u, v, w) in enumerate(ug.edges):
        edges.append((u, v, w))
        origin.append(idx)
        edges.append((v, u, w))
        origin.append(idx)
    return WeightedDigraph(ug.n, tuple(edges), ug.vertex_cost), tuple(origin)
