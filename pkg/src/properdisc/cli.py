"""Command-line interface: ``properdisc <subcommand> ...``.

Exit status: 0 all good, 1 a check failed (a bug by construction, or a
coloring that does not verify), 2 bad input, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Iterable, TextIO

from .bounds import classify_diameter2_outerplanar, upper_bound
from .census import TSV_COLUMNS, extremal_min_size_census, row_to_tsv, run_census
from .canon import MAX_ENUM_ORDER, enumerate_connected_graphs
from .coloring import ColoringError, first_uncut_pair, format_coloring, parse_coloring, verify_pd_coloring
from .families import FamilyError, colored_family, parse_family
from .graph import Graph, Graph6Error, GraphError, emit_graph6, parse_graph6
from .solver import BudgetExceeded, SolveBudget, pd_exact

SCHEMA = 1
EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _graphs(args) -> list[Graph]:
    if args.graph6 and args.input:
        raise InputError("give graph6 strings or --input, not both")
    if args.graph6:
        lines: Iterable[str] = args.graph6
    elif args.input:
        with open(args.input) as fh:
            lines = fh.read().splitlines()
    else:
        lines = sys.stdin.read().splitlines()
    out = []
    for line in lines:
        if line.strip():
            out.append(parse_graph6(line))
    if not out:
        raise InputError("no graphs given")
    return out


def _budget(args) -> SolveBudget:
    return SolveBudget.from_env(
        node_limit=args.node_limit, time_limit=args.time_limit, max_colors=args.max_colors,
    )


def _emit(records: list[dict], columns: Iterable[str], args, out: TextIO, command: str, extra: dict | None = None) -> None:
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": command, "records": records, **(extra or {})}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return
    cols = list(columns)
    out.write("\t".join(cols) + "\n")
    for r in records:
        out.write("\t".join(_cell(r.get(c)) for c in cols) + "\n")


def _cell(v) -> str:
    if isinstance(v, bool):
        return str(int(v))
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return ";".join(map(str, v))
    return str(v)


# ------------------------------------------------------------- commands


def cmd_exact(args, out: TextIO) -> int:
    budget = _budget(args)
    records, status = [], EXIT_OK
    for g in _graphs(args):
        try:
            res = pd_exact(g, budget, use_bounds=args.use_bounds)
        except BudgetExceeded as exc:
            res = None
            records.append({"graph6": emit_graph6(g), "n": g.n, "m": g.m, "pd": "unknown", "trace": [str(exc)]})
            status = EXIT_BUDGET
            continue
        rec = {
            "graph6": emit_graph6(g), "n": g.n, "m": g.m, "pd": res.describe(),
            "lower": res.lower, "upper": res.upper, "nodes": res.nodes,
            "time": round(res.elapsed, 4), "trace": list(res.lower_bound_trace),
        }
        if args.certificate and res.certificate:
            rec["coloring"] = format_coloring(res.certificate.coloring)
        if not res.is_exact:
            status = EXIT_BUDGET
        records.append(rec)
    _emit(records, ("graph6", "n", "m", "pd", "lower", "upper", "nodes", "time", "trace"), args, out, "exact")
    if args.certificate and args.format == "tsv":
        for r in records:
            if "coloring" in r:
                out.write(f"# {r['graph6']}\n{r['coloring']}")
    return status


def cmd_verify(args, out: TextIO) -> int:
    g = parse_graph6(args.graph6)
    with open(args.coloring) as fh:
        coloring = parse_coloring(g, fh.read())
    cert = verify_pd_coloring(coloring)
    if cert is None:
        pair = first_uncut_pair(coloring)
        rec = {"graph6": emit_graph6(g), "k": coloring.k, "verified": False, "failing_pair": list(pair)}
    else:
        rec = {
            "graph6": emit_graph6(g), "k": coloring.k, "verified": True, "failing_pair": None,
            "witnesses": {f"{u},{v}": sorted(w.side) for (u, v), w in sorted(cert.witnesses.items())},
        }
    _emit([rec], ("graph6", "k", "verified", "failing_pair"), args, out, "verify")
    return EXIT_OK if cert else EXIT_CHECK


def cmd_construct(args, out: TextIO) -> int:
    spec = parse_family(args.family)
    cf = colored_family(spec)
    status = EXIT_OK
    optimal = None
    if args.check_optimal:
        res = pd_exact(cf.graph, _budget(args))
        if not res.is_exact:
            status = EXIT_BUDGET
        else:
            optimal = res.value == cf.claimed_pd
            if not optimal and cf.optimal:
                status = EXIT_CHECK
    if args.format == "json":
        doc = {
            "schema": SCHEMA, "command": "construct", "family": str(spec),
            "graph6": emit_graph6(cf.graph), "n": cf.graph.n, "m": cf.graph.m,
            "claimed_pd": cf.claimed_pd, "k": cf.coloring.k, "labeling": cf.labeling_doc,
            "coloring": [[u, v, c] for (u, v), c in cf.coloring.as_dict().items()],
            "verified": True, "optimal": optimal,
        }
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write(emit_graph6(cf.graph) + "\n")
        out.write(format_coloring(cf.coloring))
        out.write("verified\n")
        if optimal is not None:
            out.write("optimal\n" if optimal else "not optimal\n")
    return status


def cmd_bounds(args, out: TextIO) -> int:
    budget = _budget(args)
    records, status = [], EXIT_OK
    for g in _graphs(args):
        rep = upper_bound(g, budget)
        if not rep.consistent:
            status = EXIT_CHECK
        records.append({
            "graph6": emit_graph6(g), "n": g.n, "m": g.m, "lower": rep.lower,
            "lower_reason": rep.lower_reason, "upper": rep.upper, "upper_reason": rep.upper_reason,
            "chi_prime": rep.chi_prime, "consistent": rep.consistent,
        })
    _emit(records, ("graph6", "n", "m", "lower", "lower_reason", "upper", "upper_reason", "chi_prime", "consistent"),
          args, out, "bounds")
    return status


def cmd_classify(args, out: TextIO) -> int:
    records = []
    for g in _graphs(args):
        c = classify_diameter2_outerplanar(g)
        wit = {k: (sorted(v.items()) if isinstance(v, dict) else v) for k, v in c.witness.items()}
        records.append({"graph6": emit_graph6(g), "class": c.classification, "witness": json.dumps(wit, sort_keys=True)})
    _emit(records, ("graph6", "class", "witness"), args, out, "classify")
    return EXIT_OK


def cmd_census(args, out: TextIO) -> int:
    if not 2 <= args.n <= MAX_ENUM_ORDER:
        raise InputError(f"--n must lie in 2..{MAX_ENUM_ORDER}")
    rows = run_census(list(enumerate_connected_graphs(args.n)), _budget(args), args.jobs)
    failed = sum(1 for r in rows if r.failed)
    exhausted = sum(1 for r in rows if r.exhausted)
    if args.format == "json":
        doc = {
            "schema": SCHEMA, "command": "census", "n": args.n, "rows": [r.as_json() for r in rows],
            "summary": {"graphs": len(rows), "failed": failed, "exhausted": exhausted},
        }
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\t".join(TSV_COLUMNS) + "\n")
        for r in rows:
            out.write(row_to_tsv(r) + "\n")
        out.write(f"# graphs={len(rows)} failed={failed} exhausted={exhausted}\n")
    if failed:
        return EXIT_CHECK
    return EXIT_BUDGET if exhausted else EXIT_OK


def cmd_extremal(args, out: TextIO) -> int:
    if not 2 <= args.n <= MAX_ENUM_ORDER:
        raise InputError(f"--n must lie in 2..{MAX_ENUM_ORDER}")
    budget = _budget(args)
    rows = run_census(list(enumerate_connected_graphs(args.n)), budget, args.jobs)
    table = []
    for k in range(1, math.ceil(args.n / 2) + 1):
        er = extremal_min_size_census(args.n, k, rows, budget)
        table.append({
            "n": er.n, "k": er.k, "min_size": er.min_size, "expected": er.expected,
            "witnesses": list(er.witnesses), "construction": er.construction,
            "construction_pd": er.construction_pd, "passed": er.passed,
        })
    _emit(table, ("n", "k", "min_size", "expected", "witnesses", "construction", "construction_pd", "passed"),
          args, out, "extremal")
    return EXIT_OK if all(r["passed"] for r in table) else EXIT_CHECK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="properdisc", description="Proper disconnection numbers of small graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graphs: bool = True):
        if graphs:
            sp.add_argument("graph6", nargs="*", help="graph6 strings (default: read stdin)")
            sp.add_argument("--input", help="file with one graph6 per line")
        sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
        sp.add_argument("--output", "-o", help="write the report here instead of stdout")
        sp.add_argument("--node-limit", type=int)
        sp.add_argument("--time-limit", type=float)
        sp.add_argument("--max-colors", type=int)

    sp = sub.add_parser("exact", help="exact pd with certificate")
    common(sp)
    sp.add_argument("--use-bounds", action="store_true", help="skip k below the common-neighbor bound")
    sp.add_argument("--certificate", action="store_true", help="also print the optimal coloring")
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("verify", help="check a coloring file against a graph")
    sp.add_argument("graph6")
    sp.add_argument("--coloring", required=True, help="file in 'k=<int>' + 'u v color' format")
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("construct", help="build a named family with its explicit coloring")
    sp.add_argument("family", help="e.g. wheel:6, kmn:3,5, extremal:8,3, fprime")
    common(sp, graphs=False)
    sp.add_argument("--check-optimal", action="store_true", help="confirm the claimed pd with the exact solver")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("bounds", help="lower and upper bounds")
    common(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("classify", help="diameter-2 outerplanar classification")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    for name, func, helptext in (
        ("census", cmd_census, "check every theorem on all connected graphs of order n"),
        ("extremal", cmd_extremal, "minimum size per pd value at order n"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--jobs", type=int, default=1, help="worker processes")
        common(sp, graphs=False)
        sp.set_defaults(func=func)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = open(args.output, "w") if getattr(args, "output", None) else sys.stdout
    try:
        return args.func(args, out)
    except (Graph6Error, GraphError, ColoringError, FamilyError, InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
