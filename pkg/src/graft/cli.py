"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (bad parity, no extension,
rejected extension, ...), 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Sequence

from . import __version__
from .edit_number import (
    edit_number,
    check_corollary,
    lower_bound,
    oracle_search,
    oracle_vertex_limit,
    upper_bound_generic,
)
from .errors import DomainError, GraftError, ParseError, TooLarge
from .extension import ExtensionProblem, optimal_extension, rt_size, trivial_extension, validate_extension
from .graph import Graph, is_connected
from .io import read_graph, serialize, write_graph
from .regular import Mode, RegularSpec, generate
from .subgraph import find_rt_subgraph


class UsageError(GraftError):
    pass


def _num(x: int | float | None) -> int | str | None:
    if x is None:
        return None
    return "inf" if math.isinf(x) else int(x)


def _edges(es) -> list[list[int]]:
    return [list(e) for e in sorted(es)]


def _emit(record: dict[str, Any], porcelain: bool, out) -> None:
    if porcelain:
        out.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")
        return
    width = max(len(k) for k in record)
    for key, value in record.items():
        if isinstance(value, list):
            value = " ".join(f"({a},{b})" for a, b in value) or "-"
        elif value is None:
            value = "-"
        elif isinstance(value, bool):
            value = "yes" if value else "no"
        out.write(f"{key:<{width}}  {value}\n")


def _oracle_limit(args) -> int:
    limit = getattr(args, "oracle_limit", None)
    if limit is None:
        return oracle_vertex_limit()
    if not 3 <= limit <= 8:
        raise UsageError(f"--oracle-limit must lie in [3, 8], got {limit}")
    return limit


def cmd_gen_regular(args, out) -> int:
    spec = RegularSpec(args.n, args.k, Mode.NEARLY if args.nearly else Mode.EXACT)
    g = generate(spec)
    if args.output is None:
        out.write(serialize(g))
        return 0
    write_graph(g, args.output)
    _emit(
        {"command": "gen-regular", "n": g.n, "k": spec.k, "mode": spec.mode.value,
         "edges": g.m, "connected": is_connected(g), "output": args.output},
        args.porcelain, out,
    )
    return 0


def cmd_extend(args, out) -> int:
    g = read_graph(args.input)
    problem = ExtensionProblem(g, args.r, args.k)
    if args.k <= args.r - 1:
        ext, how = trivial_extension(problem), "trivial"
    else:
        w = find_rt_subgraph(g, args.r, problem.t)
        if w:
            ext, how = optimal_extension(problem, w), "optimal"
        else:
            limit = _oracle_limit(args)
            if g.n + args.r > limit:
                raise DomainError(
                    f"no ({args.r},{problem.t})-subgraph found ({'exact' if w.exact else 'heuristic'} search) "
                    f"and n+r={g.n + args.r} exceeds the oracle limit {limit}"
                )
            cost, h = oracle_search(g, args.r, args.k, limit)
            if h is None:
                raise DomainError(f"graph is not ({args.r},{args.k})-extendable")
            ext, how = validate_extension(g, h, args.r, args.k), "oracle"
    if args.output is None:
        out.write(serialize(ext.h))
        return 0
    write_graph(ext.h, args.output)
    _emit(
        {"command": "extend", "r": args.r, "k": args.k, "method": how, "cost": ext.cost,
         "removed": _edges(ext.removed), "added": _edges(ext.added),
         "cross_edges": len(ext.cross_edges), "output": args.output},
        args.porcelain, out,
    )
    return 0


def cmd_edit_number(args, out) -> int:
    g = read_graph(args.input)
    res = edit_number(g, args.r, args.k, allow_oracle=args.oracle, oracle_limit=_oracle_limit(args))
    _emit(
        {"command": "edit-number", "r": args.r, "k": args.k, "value": _num(res.value),
         "lo": _num(res.lo), "hi": _num(res.hi), "method": res.method.value,
         "lower_bound": lower_bound(args.r, args.k),
         "upper_if_extendable": upper_bound_generic(g, args.r, args.k),
         "exact_search": res.exact_search,
         "witness": _edges(res.witness.h.edges) if res.witness else None},
        args.porcelain, out,
    )
    return 0


def cmd_check_optimal(args, out) -> int:
    g = read_graph(args.input)
    case = check_corollary(g, args.r, args.k)
    record: dict[str, Any] = {"command": "check-optimal", "r": args.r, "k": args.k, "corollary_case": case}
    if args.k <= args.r - 1:
        record.update(t=0, optimal=None, witness=None, exact_search=True)
    else:
        t = rt_size(args.r, args.k)
        w = find_rt_subgraph(g, args.r, t)
        record.update(
            t=t,
            optimal=True if w else (False if w.exact else None),
            witness=_edges(w.edges) if w else None,
            exact_search=True if w else w.exact,
        )
    _emit(record, args.porcelain, out)
    return 0


def cmd_verify_extension(args, out) -> int:
    g = read_graph(args.graph)
    h = read_graph(args.extension)
    ExtensionProblem(g, args.r, args.k)
    try:
        ext = validate_extension(g, h, args.r, args.k)
    except DomainError as exc:
        _emit({"command": "verify-extension", "valid": False, "error": str(exc)}, args.porcelain, out)
        return 1
    _emit(
        {"command": "verify-extension", "valid": True, "cost": ext.cost, "trivial": ext.is_trivial,
         "removed": _edges(ext.removed), "added": _edges(ext.added),
         "cross_edges": len(ext.cross_edges)},
        args.porcelain, out,
    )
    return 0


def cmd_oracle(args, out) -> int:
    g = read_graph(args.input)
    cost, h = oracle_search(g, args.r, args.k, _oracle_limit(args))
    _emit(
        {"command": "oracle", "r": args.r, "k": args.k, "value": _num(cost),
         "witness": _edges(h.edges) if h is not None else None},
        args.porcelain, out,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--porcelain", action="store_true", help="emit one JSON record per result")

    rk = argparse.ArgumentParser(add_help=False)
    rk.add_argument("--r", type=int, required=True, help="number of new vertices")
    rk.add_argument("--k", type=int, required=True, help="degree of each new vertex")

    parser = argparse.ArgumentParser(prog="graft", description="Degree-preserving graph extensions and edit numbers.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-regular", parents=[common], help="connected k-regular graph on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nearly", action="store_true", help="one vertex of degree k-1 (odd n and k)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen_regular)

    p = sub.add_parser("extend", parents=[common, rk], help="build an (r,k)-extension")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--oracle-limit", type=int)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("edit-number", parents=[common, rk], help="compute or bound N_{r,k}(G)")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--oracle", action="store_true", help="fall back to exhaustive search when undecided")
    p.add_argument("--oracle-limit", type=int)
    p.set_defaults(func=cmd_edit_number)

    p = sub.add_parser("check-optimal", parents=[common, rk], help="matching conditions and subgraph search")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(func=cmd_check_optimal)

    p = sub.add_parser("verify-extension", parents=[common, rk], help="validate H as an extension of G")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-x", "--extension", required=True)
    p.set_defaults(func=cmd_verify_extension)

    p = sub.add_parser("oracle", parents=[common, rk], help="exhaustive edit number")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--oracle-limit", type=int)
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ParseError, UsageError, OSError) as exc:
        err.write(f"graft: error: {exc}\n")
        return 2
    except TooLarge as exc:
        err.write(f"graft: error: {exc} (see --oracle-limit)\n")
        return 1
    except (DomainError, ValueError) as exc:
        err.write(f"graft: error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
