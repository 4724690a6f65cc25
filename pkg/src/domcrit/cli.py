"""Command-line front end: ``domcrit <subcommand> ...``."""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import IO, Iterable

from . import families, graph6
from .closure import ClosureError, classify, closure
from .criticality import check_edge_critical, check_vertex_critical
from .families import FamilySpec
from .graph import Graph, GraphError
from .hamilton import InstanceTooLarge, LemmaHypothesisError, is_hamiltonian, verify_cycle_lemmas
from .scan import ROW_MODES, Row, ScanConfig, run_scan
from .solvers import solve
from .structure import HypothesisUnmet, connectivity
from .theorems import DEFAULT_MAX_CUT, THEOREMS

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2

# gen: family name -> (kind, parameter flag, parameter count)
GEN_FAMILIES = {
    "gk": ("Gk", "k", 1), "jl": ("Jl", "l", 1), "tl": ("Tl", "l", 1), "p333": ("P333", None, 0),
    "net": ("Net", "s", 3), "star": ("Star", "n", 1), "cycle": ("Cycle", "n", 1),
    "complete": ("Complete", "n", 1), "f1": ("F1", "q", 5), "f2": ("F2", "r", 3),
    "f3": ("F3", "k", 1), "fig5": ("Fig5", None, 0),
}
INVARIANTS = ("gamma", "gamma_c", "gamma_t", "alpha", "kappa", "hamiltonian")


# ---------------------------------------------------------------- output helpers

def _edgelist(g: Graph, labels: dict[int, str] | None, title: str) -> str:
    out = [f"# {title} n={g.n} m={g.edge_count()}"]
    for v in range(g.n):
        out.append(f"v {v} {labels[v]}" if labels else f"v {v}")
    out.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(out)


def _graph_json(g: Graph, labels: dict[int, str] | None = None, **extra) -> dict:
    obj = dict(extra)
    obj.update({"n": g.n, "m": g.edge_count(), "graph6": graph6.encode(g),
                "edges": [list(e) for e in g.edges()]})
    if labels:
        obj["labels"] = {str(v): name for v, name in labels.items()}
    return obj


class _Table:
    """Collects rows and prints them as an aligned table, JSON lines or CSV."""

    def __init__(self, fmt: str, out: IO[str]):
        self.fmt, self.out = fmt, out
        self.rows: list[dict] = []

    def add(self, row: dict) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(row) + "\n")
        else:
            self.rows.append({k: v for k, v in row.items() if k != "record"})

    def flush(self) -> None:
        if self.fmt == "json" or not self.rows:
            return
        cols: list[str] = []
        for r in self.rows:
            cols.extend(k for k in r if k not in cols)
        cells = [[_cell(r.get(c, "")) for c in cols] for r in self.rows]
        if self.fmt == "csv":
            w = csv.writer(self.out)
            w.writerow(cols)
            w.writerows(cells)
            return
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        self.out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
        for row in cells:
            self.out.write("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() + "\n")


def _cell(x) -> str:
    if isinstance(x, (list, tuple, set, frozenset)):
        return " ".join(map(str, sorted(x) if isinstance(x, (set, frozenset)) else x))
    if isinstance(x, dict):
        return json.dumps(x)
    if x is None:
        return ""
    return str(x)


def _open_input(path: str) -> IO[bytes]:
    return sys.stdin.buffer if path == "-" else open(path, "rb")


def _graphs(path: str, table: _Table, errors: list) -> Iterable[tuple[int, Graph, str]]:
    """Decoded input records; decode failures are reported and skipped."""
    fh = _open_input(path)
    try:
        for idx, g, line in graph6.read(fh):
            if isinstance(g, graph6.Graph6Error):
                errors.append(idx)
                print(f"record {idx} (line {idx + 1}): {g}", file=sys.stderr)
                table.add({"record": "error", "index": idx, "graph6": line, "error": str(g)})
                continue
            yield idx, g, line
    finally:
        if fh is not sys.stdin.buffer:
            fh.close()


# ---------------------------------------------------------------- subcommands

def cmd_gen(args) -> int:
    kind, flag, arity = GEN_FAMILIES[args.family]
    params: tuple[int, ...] = ()
    if flag:
        value = getattr(args, flag)
        if value is None:
            raise SystemExit(f"gen {args.family} needs --{flag}")
        params = tuple(value) if isinstance(value, list) else (value,)
        if len(params) != arity:
            raise SystemExit(f"gen {args.family} takes {arity} value(s) for --{flag}")
    try:
        lg = families.build(FamilySpec(kind, params))
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    g = lg.graph
    if args.format == "graph6":
        print(graph6.encode(g))
    elif args.format == "edgelist":
        print(_edgelist(g, lg.labels, str(lg.spec)))
    else:
        print(json.dumps(_graph_json(g, lg.labels, family=kind, params=list(params))))
    if args.draw:
        from .plotting import draw_graph

        draw_graph(g, args.draw, lg.labels, str(lg.spec))
    return EXIT_OK


def cmd_solve(args) -> int:
    wanted = [w.strip() for w in args.invariants.split(",") if w.strip()]
    for w in wanted:
        if w not in INVARIANTS:
            raise SystemExit(f"unknown invariant {w!r}; choose from {', '.join(INVARIANTS)}")
    table = _Table(args.format, sys.stdout)
    errors: list[int] = []
    for idx, g, line in _graphs(args.input, table, errors):
        row = {"record": "graph", "index": idx, "graph6": line, "n": g.n, "m": g.edge_count()}
        witnesses = {}
        for w in wanted:
            if w == "kappa":
                row[w] = connectivity(g)
            elif w == "hamiltonian":
                row[w] = is_hamiltonian(g)
            else:
                r = solve(g, w)
                row[w] = r.value if args.format == "json" else r.display()
                witnesses[w] = sorted(r.witness)
        if args.witness:
            row["witness"] = witnesses
        table.add(row)
    table.flush()
    return EXIT_INPUT if errors else EXIT_OK


def cmd_check_critical(args) -> int:
    table = _Table(args.format, sys.stdout)
    errors: list[int] = []
    for idx, g, line in _graphs(args.input, table, errors):
        try:
            if args.mode == "vertex":
                rep = check_vertex_critical(g, args.kind, args.k, stop_early=not args.all)
            else:
                rep = check_edge_critical(g, args.kind, args.k, stop_early=not args.all)
        except ValueError as exc:
            errors.append(idx)
            table.add({"record": "error", "index": idx, "graph6": line, "error": str(exc)})
            continue
        row = {"record": "graph", "index": idx, "graph6": line, "kind": rep.kind, "mode": rep.mode,
               "k": rep.k, "verdict": rep.verdict, "base": rep.base.value,
               "violation": None if rep.violation is None else [_jsonable(rep.violation[0]), rep.violation[1]]}
        if args.format == "json":
            row["skipped"] = rep.skipped
            row["witnesses"] = {_key(x): sorted(d) for x, d in rep.witnesses.items()}
        table.add(row)
    table.flush()
    return EXIT_INPUT if errors else EXIT_OK


def _key(x) -> str:
    return f"{x[0]}-{x[1]}" if isinstance(x, tuple) else str(x)


def _jsonable(x):
    return list(x) if isinstance(x, tuple) else x


def cmd_closure(args) -> int:
    errors: list[int] = []
    sink = _Table("json", sys.stdout) if args.format == "json" else _Table("table", sys.stderr)
    for idx, g, line in _graphs(args.input, sink, errors):
        try:
            res = closure(g)
        except (HypothesisUnmet, ClosureError) as exc:
            errors.append(idx)
            print(f"record {idx}: {exc}", file=sys.stderr)
            if args.format == "json":
                sink.add({"record": "error", "index": idx, "graph6": line, "error": str(exc)})
            continue
        cl = res.graph
        if args.format == "graph6":
            print(graph6.encode(cl))
        elif args.format == "edgelist":
            print(_edgelist(cl, None, f"closure of record {idx}"))
        else:
            obj = _graph_json(cl, record="graph", index=idx, input=line)
            obj["added_edges"] = [list(e) for e in res.added_edges]
            obj["trace"] = [[x, [list(e) for e in es]] for x, es in res.trace]
            sink.add(obj)
    return EXIT_INPUT if errors else EXIT_OK


def cmd_classify(args) -> int:
    table = _Table(args.format, sys.stdout)
    errors: list[int] = []
    for idx, g, line in _graphs(args.input, table, errors):
        m = classify(g)
        row = {"record": "graph", "index": idx, "graph6": line, "verdict": m.verdict,
               "spec": str(m.spec) if m.spec else None}
        if args.format == "json":
            row["mapping"] = {str(k): v for k, v in sorted(m.mapping.items())}
        table.add(row)
    table.flush()
    return EXIT_INPUT if errors else EXIT_OK


def cmd_cycle_lemmas(args) -> int:
    table = _Table(args.format, sys.stdout)
    errors: list[int] = []
    failed = False
    for idx, g, line in _graphs(args.input, table, errors):
        try:
            out = verify_cycle_lemmas(g, strict=args.strict)
        except (LemmaHypothesisError, InstanceTooLarge) as exc:
            errors.append(idx)
            table.add({"record": "error", "index": idx, "graph6": line, "error": str(exc)})
            continue
        reports = out if isinstance(out, list) else [out]
        for rep in reports:
            failed |= not rep.passed
            row = {"record": "graph", "index": idx, "graph6": line, "cycle": list(rep.cycle.cycle),
                   "claw_free": rep.claw_free, **rep.results}
            if args.format == "json":
                row["components"] = [
                    {"component": sorted(c.component), "attachments": c.attachments, "results": c.results,
                     "violations": {k: list(v) for k, v in c.violations.items()}}
                    for c in rep.components]
            table.add(row)
    table.flush()
    if failed:
        return EXIT_COUNTEREXAMPLE
    return EXIT_INPUT if errors else EXIT_OK


def _summary_rows(report) -> list[dict]:
    rows = []
    for v in report.verdicts.values():
        for n, s in sorted(v.by_order.items()):
            rows.append({"theorem": v.theorem, "n": n, **s})
        rows.append({"theorem": v.theorem, "n": "all", "scanned": v.scanned,
                     "hypothesis_hits": v.hypothesis_hits, "counterexamples": len(v.counterexamples),
                     "undecided": len(v.undecided)})
    return rows


def cmd_scan(args) -> int:
    theorems = []
    for spec in args.theorem or ["A"]:
        for t in spec.split(","):
            t = t.strip()
            if t == "all":
                theorems.extend(THEOREMS)
            elif t:
                theorems.append(t)
    try:
        config = ScanConfig(theorems=tuple(dict.fromkeys(theorems)), jobs=args.jobs, budget=args.budget,
                            strict=args.strict, offset=args.offset, max_cut_size=args.max_cut_size,
                            fastpath=not args.no_fastpath, rows=args.rows)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        fh = _open_input(args.input)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = sys.stdout
    grid = _Table("table", out)

    def emit(row: Row) -> None:
        if row.status == "decode-error":
            print(f"record {row.index} (line {row.index + 1}): {row.reason}", file=sys.stderr)
        if args.format == "json":
            out.write(json.dumps(row.as_dict()) + "\n")
        elif args.format == "table":
            grid.add({"index": row.index, "graph6": row.graph6, "theorem": row.theorem or "-",
                      "status": row.status, "reason": row.reason})

    try:
        report = run_scan(fh, config, emit)
    finally:
        if fh is not sys.stdin.buffer:
            fh.close()
    if args.format == "json":
        for v in report.verdicts.values():
            out.write(json.dumps(v.as_dict()) + "\n")
    elif args.format == "csv":
        t = _Table("csv", out)
        for r in _summary_rows(report):
            t.add(r)
        t.flush()
    else:
        grid.flush()
        if grid.rows:
            out.write("\n")
        t = _Table("table", out)
        for r in _summary_rows(report):
            t.add(r)
        t.flush()
        out.write(f"records {report.records}  decode errors {len(report.decode_errors)}  "
                  f"elapsed {report.elapsed:.2f}s  exit {report.exit_code}\n")
    if args.figure:
        from .plotting import scan_figure

        scan_figure(report, args.figure)
    return report.exit_code


def cmd_catalog(args) -> int:
    from .catalog import CatalogUnavailable, write_catalog

    try:
        write_catalog(sys.stdout.buffer, args.n, claw_free=args.claw_free, biconnected=args.biconnected)
    except (CatalogUnavailable, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="domcrit", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit one family member")
    g.add_argument("family", choices=sorted(GEN_FAMILIES))
    g.add_argument("--k", type=int, help="k for gk, |K| for f3")
    g.add_argument("--l", type=int, help="l for jl and tl")
    g.add_argument("--n", type=int, help="order for star, cycle, complete")
    g.add_argument("--s", type=int, nargs=3, help="path lengths for net")
    g.add_argument("--q", type=int, nargs=5, help="block orders for f1")
    g.add_argument("--r", type=int, nargs=3, help="block orders for f2")
    g.add_argument("--format", choices=("graph6", "edgelist", "json"), default="graph6")
    g.add_argument("--draw", metavar="PNG", help="also render the graph to this file")
    g.set_defaults(func=cmd_gen)

    def with_input(sp, formats=("table", "json", "csv"), default="table"):
        sp.add_argument("input", nargs="?", default="-", help="graph6 file (default: stdin)")
        sp.add_argument("--format", choices=formats, default=default)
        return sp

    s = with_input(sub.add_parser("solve", help="exact invariants per graph"))
    s.add_argument("--invariants", default=",".join(INVARIANTS))
    s.add_argument("--witness", action="store_true", help="include witness sets")
    s.set_defaults(func=cmd_solve)

    c = with_input(sub.add_parser("check-critical", help="vertex or edge criticality"))
    c.add_argument("--kind", choices=("gamma", "gamma_c", "gamma_t"), default="gamma")
    c.add_argument("--k", type=int, help="claimed order (default: the base value)")
    c.add_argument("--mode", choices=("vertex", "edge"), default="vertex")
    c.add_argument("--all", action="store_true", help="examine every vertex instead of stopping at the first failure")
    c.set_defaults(func=cmd_check_critical)

    cl = with_input(sub.add_parser("closure", help="local-completion closure"), ("graph6", "edgelist", "json"), "graph6")
    cl.set_defaults(func=cmd_closure)

    k = with_input(sub.add_parser("classify", help="match against P333 and the F1/F2/F3 classes"))
    k.set_defaults(func=cmd_classify)

    cy = with_input(sub.add_parser("cycle-lemmas", help="longest-cycle lemma checks"))
    cy.add_argument("--strict", action="store_true", help="check every longest cycle (n <= 10)")
    cy.set_defaults(func=cmd_cycle_lemmas)

    sc = with_input(sub.add_parser("scan", help="theorem scan over a graph6 stream"))
    sc.add_argument("--theorem", action="append", metavar="ID",
                    help=f"one of {', '.join(THEOREMS)} or all; repeatable or comma-separated")
    sc.add_argument("--jobs", type=int, default=1)
    sc.add_argument("--budget", type=float, default=10.0, metavar="SECONDS", help="per graph and theorem")
    sc.add_argument("--strict", action="store_true", help="re-check every kernel verdict with the library")
    sc.add_argument("--offset", type=int, default=0, help="skip this many input records")
    sc.add_argument("--max-cut-size", type=int, default=DEFAULT_MAX_CUT)
    sc.add_argument("--rows", choices=ROW_MODES, default="failures",
                    help="per-graph rows to print besides the summary")
    sc.add_argument("--no-fastpath", action="store_true", help="use the library for every graph")
    sc.add_argument("--figure", metavar="PNG", help="write a per-order summary figure")
    sc.set_defaults(func=cmd_scan)

    ca = sub.add_parser("catalog", help="stream geng's connected graphs as graph6")
    ca.add_argument("n", type=int, nargs="+")
    ca.add_argument("--claw-free", action="store_true")
    ca.add_argument("--biconnected", action="store_true")
    ca.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
