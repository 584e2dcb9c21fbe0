"""Command-line frontend: parse graph files, run computations, emit tables or JSON."""

from __future__ import annotations

import argparse
import json
import sys

from .chains import format_vertex
from .complexes import (DiGraph, PathComplex, allowed_basis, connected_components,
                        from_digraph, from_simplicial, parse_digraph, parse_simplicial,
                        structural_report)
from .errors import InputError, ResourceLimitError
from .functors import (OrientedTriangulation, cartesian_product, cone, cylinder,
                       disjoint_union, join_graphs, make, suspension)
from .holes import minimized_generators
from .homology import homology, omega_basis
from .chains import BoundaryMode
from .reduce import reduce_fully


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")


def _load_complex(path: str, simplicial: bool) -> PathComplex:
    text = _read_source(path)
    if simplicial:
        return from_simplicial(parse_simplicial(text))
    return from_digraph(parse_digraph(text))


def _load_graph(path: str) -> DiGraph:
    return parse_digraph(_read_source(path))


def _emit_json(payload: dict):
    print(json.dumps(payload, indent=2))


def _homology_table(summary) -> str:
    headers = ("n", "dim A", "dim Omega", "rank d", "dim H")
    rows = [headers]
    for g in summary.grades:
        rows.append((str(g.n), str(g.dim_A), str(g.dim_Omega),
                     str(g.rank_boundary), str(g.dim_H)))
    widths = [max(len(r[i]) for r in rows) for i in range(len(headers))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]
    for g in summary.grades:
        for gen in g.generators:
            lines.append(f"H_{g.n} generator: {gen.to_string()}")
    lines.append(f"euler: {summary.euler.value} ({summary.euler.status})")
    return "\n".join(lines)


def _add_common(sub):
    sub.add_argument("file", help="input file, or - for stdin")
    sub.add_argument("--max-dim", type=int, default=None)
    sub.add_argument("--reduced", action="store_true", help="augmented (reduced) homology")
    sub.add_argument("--augmented", action="store_true",
                     help="like --reduced, and show the grade -1 row")
    sub.add_argument("--non-regular", action="store_true")
    sub.add_argument("--simplicial", action="store_true",
                     help="parse the input as a simplicial complex")
    sub.add_argument("--json", action="store_true")


def _resolve(args):
    p = _load_complex(args.file, args.simplicial)
    max_dim = args.max_dim if args.max_dim is not None else len(p.vertices)
    regular = not args.non_regular
    reduced = args.reduced or args.augmented
    return p, max_dim, regular, reduced


def _cmd_homology(args) -> int:
    p, max_dim, regular, reduced = _resolve(args)
    summary = homology(p, max_dim, regular=regular, reduced=reduced)
    if args.json:
        _emit_json(summary.to_json_dict())
    else:
        shown = summary
        if not args.augmented:
            from dataclasses import replace
            shown = replace(summary, grades=tuple(g for g in summary.grades if g.n >= 0))
        print(_homology_table(shown))
    return 0


def _cmd_omega(args) -> int:
    p, max_dim, regular, reduced = _resolve(args)
    mode = BoundaryMode(regular=regular, augmented=reduced)
    grades = []
    for n in range(0, max_dim + 1):
        om = omega_basis(p, n, mode)
        grades.append({
            "n": n,
            "dim_A": len(allowed_basis(p, n)),
            "dim_Omega": om.dim,
            "basis": [c.to_string() for c in om.chains()],
        })
    payload = {"mode": mode.regularity, "max_dim": max_dim, "grades": grades}
    if args.json:
        _emit_json(payload)
    else:
        for g in grades:
            print(f"n={g['n']}  dim A={g['dim_A']}  dim Omega={g['dim_Omega']}")
            for b in g["basis"]:
                print(f"  {b}")
    return 0


def _cmd_euler(args) -> int:
    p, max_dim, regular, reduced = _resolve(args)
    summary = homology(p, max_dim, regular=regular, reduced=reduced,
                       with_generators=False)
    if args.json:
        _emit_json({"euler": summary.euler.to_json_dict()})
    else:
        print(f"euler: {summary.euler.value} ({summary.euler.status})")
    return 0


def _cmd_reduce(args) -> int:
    g = _load_graph(args.file)
    reduced, ledger = reduce_fully(g)
    payload = ledger.to_json_dict()
    if args.emit_graph:
        payload["reduced_graph"] = {
            "vertices": [format_vertex(v) for v in reduced.vertices],
            "edges": [[format_vertex(u), format_vertex(v)] for u, v in reduced.edge_list],
        }
    if args.json:
        _emit_json(payload)
    else:
        for m in ledger.moves:
            extra = f" case={m.case_tag}" if m.case_tag else ""
            print(f"remove {format_vertex(m.removed_vertex)} ({m.kind}{extra})")
        print(f"delta_h1={ledger.delta_h1} delta_h0={ledger.delta_h0}")
        if args.emit_graph:
            print(reduced.to_text(), end="")
    return 0


def _cmd_op(args) -> int:
    g1 = _load_graph(args.fileA)
    op = args.operation
    if op in ("join", "product", "union"):
        if args.fileB is None:
            raise InputError(f"op {op} needs two input files")
        g2 = _load_graph(args.fileB)
        out = {"join": join_graphs, "product": cartesian_product,
               "union": disjoint_union}[op](g1, g2)
    else:
        out = {"cone": cone, "sus": suspension, "cyl": cylinder}[op](g1)
    print(out.to_text(), end="")
    return 0


def _cmd_gen(args) -> int:
    g = make(args.kind, args.params)
    print(g.to_text(), end="")
    return 0


def _cmd_holes(args) -> int:
    p, _, regular, _ = _resolve(args)
    reps = minimized_generators(p, args.dim, regular=regular)
    chains = reps.get(args.dim, [])
    payload = {"dim": args.dim,
               "representatives": [{"chain": c.to_string(), "l1": str(c.l1())}
                                   for c in chains]}
    if args.json:
        _emit_json(payload)
    else:
        if not chains:
            print(f"no holes in grade {args.dim}")
        for c in chains:
            print(f"l1={c.l1()}  {c.to_string()}")
    return 0


def _cmd_check(args) -> int:
    p, max_dim, _, _ = _resolve(args)
    depth = max(2, min(max_dim, 4))
    report = structural_report(p, depth=depth)
    payload = report.to_json_dict()
    payload["components"] = len(connected_components(p))
    if args.json:
        _emit_json(payload)
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathhom",
        description="Path homology of digraphs and path complexes, exactly over Q.")
    subs = parser.add_subparsers(dest="command", required=True)

    for name, fn in (("homology", _cmd_homology), ("omega", _cmd_omega),
                     ("euler", _cmd_euler)):
        sub = subs.add_parser(name)
        _add_common(sub)
        sub.set_defaults(fn=fn)

    sub = subs.add_parser("reduce")
    sub.add_argument("file")
    sub.add_argument("--emit-graph", action="store_true")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=_cmd_reduce)

    sub = subs.add_parser("op")
    sub.add_argument("operation", choices=["join", "product", "cone", "sus", "cyl", "union"])
    sub.add_argument("fileA")
    sub.add_argument("fileB", nargs="?")
    sub.set_defaults(fn=_cmd_op)

    sub = subs.add_parser("gen")
    sub.add_argument("kind", choices=["cycle", "simplex", "snake", "cube", "sphere", "star"])
    sub.add_argument("params", nargs="*")
    sub.set_defaults(fn=_cmd_gen)

    sub = subs.add_parser("holes")
    _add_common(sub)
    sub.add_argument("--dim", type=int, required=True)
    sub.set_defaults(fn=_cmd_holes)

    sub = subs.add_parser("check")
    _add_common(sub)
    sub.set_defaults(fn=_cmd_check)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
