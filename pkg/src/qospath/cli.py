"""Command-line front end: one subcommand per algorithm family.

Every run prints exactly one record of ``key=value`` pairs (listings such
as per-element categories add one line per element).  Exit codes: 0 the
question was answered (including infeasible answers), 1 usage error, 2
unreadable or malformed input.  ``--verify`` cross-checks the answer
against the matching brute-force oracle when the instance is small
enough; the size gate can be moved with the ``QOSPATH_ORACLE_CAP``
environment variable (an integer vertex/item cap).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bicriteria as bc
from . import color_alt_euler as cae
from . import color_alt_path as cap
from . import cube_ham as ch
from . import knapsack_sensitivity as ks
from . import oracles
from . import path_sensitivity as ps
from . import subset_path as sp
from . import tournament as tn
from .graphs import GraphFormatError, parse_graph

__all__ = ["main", "console_main", "run"]

_DEF_ORACLE_CAP = {"paths": 10, "items": 15, "qpath": 7}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _oracle_cap(kind: str) -> int:
    env = os.environ.get("QOSPATH_ORACLE_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _UsageError("QOSPATH_ORACLE_CAP must be an integer") from None
    return _DEF_ORACLE_CAP[kind]


def _record(pairs) -> str:
    return " ".join("%s=%s" % (k, _fmt(v)) for k, v in pairs)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def _read_graph(path, kind):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphFormatError("cannot read %s: %s" % (path, exc)) from exc
    return parse_graph(text, kind)


def _build_parser() -> _Parser:
    parser = _Parser(prog="qospath", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("bicriteria", help="budget-constrained two-weight path")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--sense", choices=["atmost", "atleast"], default="atmost")
    p.add_argument("--objective", choices=["min", "max"], default="min")
    p.add_argument("--exact", action="store_true",
                   help="use the exact budget-expanded search instead of the heuristic")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("sensitivity", help="classify elements vs. all shortest paths")
    p.add_argument("--graph", required=True)
    p.add_argument("--undirected", action="store_true")
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("knapsack-classify", help="classify items vs. knapsack solutions")
    p.add_argument("--items", required=True, help="file with one 'w [cost]' pair per line")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--costs", action="store_true", help="use the minimum-cost variant")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("tournament", help="Hamiltonian path via orientation queries")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strategy", choices=list(tn.STRATEGIES), default="binaryInsertion")
    p.add_argument("--matrix", help="file with an explicit +1/-1 sign matrix")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("qpath", help="optimal path/cycle on exactly Q vertices")
    p.add_argument("--graph", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--agg", choices=["sum", "max"], default="sum")
    p.add_argument("--mode", choices=["path", "cycle"], default="path")
    p.add_argument("--allow-mask", type=int, default=None,
                   help="bitmask of vertices allowed to form the path/cycle")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("cube-ham", help="Hamiltonian path in the cube of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--root", type=int, default=None)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("alt-path", help="minimum color-alternating path")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--agg", choices=["sum", "max"], default="sum")
    p.add_argument("--method", choices=["expanded", "twobest"], default="expanded")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("alt-euler", help="color-alternating Euler cycle")
    p.add_argument("--graph", required=True)
    p.add_argument("--verify", action="store_true")
    return parser


def _cmd_bicriteria(args) -> list:
    g = _read_graph(args.graph, "biweighted")
    query = bc.ConstrainedQuery(
        args.source, args.target, args.budget,
        bc.Sense.AT_MOST if args.sense == "atmost" else bc.Sense.AT_LEAST,
        bc.Objective.MINIMIZE if args.objective == "min" else bc.Objective.MAXIMIZE,
    )
    answer = bc.exact_constrained(g, query) if args.exact else bc.solve_constrained(g, query)
    pairs = [("status", answer.status.value)]
    if answer.path is not None:
        pairs += [
            ("w1sum", answer.w1sum),
            ("w2sum", answer.w2sum),
            ("path", answer.path.vertices),
        ]
        if answer.x_star is not None:
            pairs.append(("x", answer.x_star))
    if args.verify:
        if g.n <= _oracle_cap("paths"):
            ref = bc.exact_constrained(g, query)
            if answer.status is bc.Status.INFEASIBLE:
                ok = ref.status is bc.Status.INFEASIBLE or query.sense is bc.Sense.AT_LEAST
            else:
                meets = (answer.w2sum <= query.budget
                         if query.sense is bc.Sense.AT_MOST else
                         answer.w2sum >= query.budget)
                bound = (answer.w1sum >= ref.w1sum
                         if query.objective is bc.Objective.MINIMIZE else
                         answer.w1sum <= ref.w1sum)
                ok = meets and bound
            pairs.append(("verified", ok))
        else:
            pairs.append(("verified", "skipped"))
    return [_record(pairs)]


def _cmd_sensitivity(args) -> list:
    if args.undirected:
        g = _read_graph(args.graph, "undirected")
        cls = ps.classify_undirected(g, args.source, args.target)
    else:
        g = _read_graph(args.graph, "weighted")
        uniform = len({e[2] for e in g.edges}) <= 1 and g.m > 0
        if uniform:
            cls = ps.classify_unit(g, args.source, args.target)
        else:
            cls = ps.classify_weighted(g, args.source, args.target)
    lines = [_record([("status", "ok"), ("n", g.n), ("m", g.m)])]
    for u in range(g.n):
        lines.append(_record([("vertex", u), ("category", cls.vertex_category[u])]))
    for idx, e in enumerate(g.edges):
        lines.append(_record([
            ("edge", (e[0], e[1])), ("category", cls.edge_category[idx]),
        ]))
    if args.verify:
        if g.n <= _oracle_cap("paths"):
            vcat, ecat = oracles.classify_by_enumeration(g, args.source, args.target)
            ok = (tuple(vcat) == cls.vertex_category
                  and tuple(ecat) == cls.edge_category)
            lines.append(_record([("verified", ok)]))
        else:
            lines.append(_record([("verified", "skipped")]))
    return lines


def _read_items(path, with_costs):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphFormatError("cannot read %s: %s" % (path, exc)) from exc
    weights, costs = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        try:
            weights.append(int(toks[0]))
            costs.append(int(toks[1]) if len(toks) > 1 else 0)
        except (ValueError, IndexError):
            raise GraphFormatError("bad item line %r" % raw, lineno) from None
    return weights, (costs if with_costs else None)


def _cmd_knapsack(args) -> list:
    weights, costs = _read_items(args.items, args.costs)
    inst = ks.KnapsackInstance(tuple(weights), args.target,
                               tuple(costs) if costs is not None else None)
    cats = ks.classify_mincost(inst) if args.costs else ks.classify_feasibility(inst)
    feasible = any(c != 3 for c in cats) or _knapsack_feasible(inst)
    lines = [_record([("status", "ok"), ("n", inst.n), ("feasible", feasible)])]
    for i, cat in enumerate(cats):
        lines.append(_record([("item", i), ("category", cat)]))
    if args.verify:
        if inst.n <= _oracle_cap("items"):
            ok = cats == ks.classify_by_removal(inst)
            lines.append(_record([("verified", ok)]))
        else:
            lines.append(_record([("verified", "skipped")]))
    return lines


def _knapsack_feasible(inst) -> bool:
    reach = [False] * (inst.target + 1)
    reach[0] = True
    for w in inst.weights:
        for j in range(inst.target, w - 1, -1):
            if reach[j - w]:
                reach[j] = True
    return reach[inst.target]


def _read_matrix(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            rows = [
                [int(tok) for tok in line.split()]
                for line in fh
                if line.strip() and not line.strip().startswith("#")
            ]
    except (OSError, ValueError) as exc:
        raise GraphFormatError("cannot read sign matrix %s: %s" % (path, exc)) from exc
    return rows


def _cmd_tournament(args) -> list:
    if args.matrix is not None:
        matrix = _read_matrix(args.matrix)
        oracle = tn.matrix_tournament(matrix)
        n = len(matrix)
    else:
        if args.n is None:
            raise _UsageError("tournament needs --n (or --matrix)")
        if args.n < 1:
            raise GraphFormatError("--n must be at least 1")
        oracle = tn.random_tournament(args.n, args.seed)
        n = args.n
    path = tn.ham_path(oracle, n, args.strategy)
    pairs = [("path", path), ("queries", oracle.query_count),
             ("strategy", args.strategy)]
    if args.verify:
        pairs.append(("verified", tn.verify_ham_path(oracle, path)))
    return [_record(pairs)]


def _cmd_qpath(args) -> list:
    g = _read_graph(args.graph, "weighted")
    if args.mode == "path":
        res = sp.min_q_path(g, args.q, agg=args.agg, allow_mask=args.allow_mask)
    else:
        res = sp.min_q_cycle(g, args.q, agg=args.agg, allow_mask=args.allow_mask)
    if res is None:
        pairs = [("status", "infeasible")]
    else:
        pairs = [("status", "ok"), ("cost", res.costs["aggCost"]),
                 ("vertices", res.vertices), ("edges", res.edges)]
    if args.verify:
        if g.n <= _oracle_cap("qpath"):
            allowed = None
            if args.allow_mask is not None:
                mask = args.allow_mask
                allowed = lambda fs: all(mask >> u & 1 for u in fs)
            ref = oracles.enumerate_q_paths_cycles(
                g, args.q, agg=args.agg, mode=args.mode, allowed=allowed)
            got = None if res is None else res.costs["aggCost"]
            pairs.append(("verified", got == ref))
        else:
            pairs.append(("verified", "skipped"))
    return [_record(pairs)]


def _cmd_cube_ham(args) -> list:
    g = _read_graph(args.graph, "undirected")
    hp = ch.cube_ham_path(g, args.root)
    dists = ch.consecutive_distances(g, hp)
    pairs = [("path", hp), ("distances", dists)]
    if args.verify:
        pairs.append(("verified", ch.verify_cube_path(g, hp)))
    return [_record(pairs)]


def _cmd_alt_path(args) -> list:
    g = _read_graph(args.graph, "colored-digraph")
    if args.method == "expanded":
        res = cap.alt_path_expanded(g, args.source, args.target, args.agg)
    else:
        res = cap.alt_path_two_best(g, args.source, args.target, args.agg)
    if res is None:
        pairs = [("status", "infeasible")]
    else:
        colors = [g.edges[i][3] for i in res.edges]
        pairs = [("status", "ok"), ("cost", res.costs["aggCost"]),
                 ("vertices", res.vertices), ("colors", colors)]
    if args.verify:
        ref = cap.alt_path_expanded(g, args.source, args.target, args.agg)
        got = None if res is None else res.costs["aggCost"]
        want = None if ref is None else ref.costs["aggCost"]
        pairs.append(("verified", got == want))
    return [_record(pairs)]


def _cmd_alt_euler(args) -> list:
    g = _read_graph(args.graph, "colored-multigraph")
    cycle = cae.build_alt_euler(g)
    if cycle is None:
        report = cae.check_feasible(g)
        pairs = [("status", "infeasible"), ("reason", report.reason)]
        if report.vertex is not None:
            pairs.append(("vertex", report.vertex))
        if report.color is not None:
            pairs.append(("color", report.color))
    else:
        pairs = [("status", "ok"), ("edges", cycle.edges),
                 ("vertices", cycle.vertices)]
    if args.verify and cycle is not None:
        pairs.append(("verified", cae.verify_alt_euler(g, cycle)))
    return [_record(pairs)]


_COMMANDS = {
    "bicriteria": _cmd_bicriteria,
    "sensitivity": _cmd_sensitivity,
    "knapsack-classify": _cmd_knapsack,
    "tournament": _cmd_tournament,
    "qpath": _cmd_qpath,
    "cube-ham": _cmd_cube_ham,
    "alt-path": _cmd_alt_path,
    "alt-euler": _cmd_alt_euler,
}


def run(argv) -> int:
    """Dispatch ``argv`` (no program name), print the record, return the code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise _UsageError("missing subcommand")
        lines = _COMMANDS[args.command](args)
    except _UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 1
    except (GraphFormatError, ValueError, bc.StateCapError,
            oracles.BudgetExceededError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    for line in lines:
        print(line)
    return 0


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


def console_main():
    raise SystemExit(main())
