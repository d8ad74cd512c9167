"""Command-line front end.

Subcommands::

    tokengraphs build SPEC --k K [--out dot|edges|json]
    tokengraphs verify [SPEC ...] [--random N --seed S] [--k 1-4] [--out table|json|csv]
    tokengraphs construct SPEC --k K --X a,b,.. --Y a,b,.. [--out json|text]
    tokengraphs oracle SPEC --k K [--out text|json]

Exit status: 0 when every check passes, 1 on an invariant violation, 2 on
bad usage or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import comb

from .connectivity import (
    brute_force_edge_connectivity,
    edge_connectivity,
    edge_connectivity_adjacent,
    vertex_connectivity,
)
from .corpus import parse_graph_spec, random_corpus
from .graph import GraphError, emit_dot, emit_edge_list
from .lemma import CertificateError, LemmaError, construct_family
from .tokens import TokenGraph, format_config
from .verify import VIOLATED, verify_cell

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ORACLE_MAX_VERTICES = 20_000
BRUTE_FORCE_MAX_EDGES = 25


class UsageError(Exception):
    pass


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated vertices, got {text!r}") from None


def _k_range(text: str) -> list[int]:
    out: list[int] = []
    try:
        for part in text.split(","):
            lo, sep, hi = part.partition("-")
            out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
    except ValueError:
        raise UsageError(f"bad k range {text!r}") from None
    if not out or min(out) < 1:
        raise UsageError("k values must be positive")
    return sorted(set(out))


def cmd_build(args, out) -> int:
    g = parse_graph_spec(args.spec)
    tg = TokenGraph(g, args.k)
    if args.out == "dot":
        out.write(emit_dot(tg.graph, name="F"))
    elif args.out == "edges":
        out.write(emit_edge_list(tg.graph))
    else:
        json.dump({"schema": 1, "n": tg.graph.n, "k": args.k,
                   "vertices": [list(c) for c in tg.configs],
                   "edges": [list(e) for e in tg.graph.sorted_edges()]}, out)
        out.write("\n")
    print(f"|V|={tg.graph.n} |E|={tg.graph.m}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    entries = [(spec, parse_graph_spec(spec)) for spec in args.specs]
    if args.random:
        entries += [(e.spec, e.graph) for e in random_corpus(args.random, seed=args.seed)]
    if not entries:
        raise UsageError("verify needs at least one graph spec or --random N")
    ks = _k_range(args.k)
    records, errors = [], []
    for name, g in entries:
        try:
            if not g.is_connected():
                raise GraphError("graph is disconnected")
            lam, kappa = edge_connectivity(g), vertex_connectivity(g)
            for k in ks:
                if k <= g.n - 1:
                    records.append(verify_cell(name, g, k, lam=lam, kappa=kappa))
        except (GraphError, LemmaError) as exc:
            errors.append({"graph": name, "error": str(exc)})

    rows = [r.as_dict() for r in records]
    if args.out == "json":
        json.dump({"schema": 1, "records": rows, "errors": errors}, out, indent=2)
        out.write("\n")
    elif args.out == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        header = f"{'graph':<24} {'n':>2} {'k':>2} {'lamG':>4} {'dltG':>4} {'kapG':>4} {'lamF':>4} {'dltF':>4} {'bound':>5}  status"
        out.write(header + "\n")
        for r in records:
            out.write(f"{r.graph:<24} {r.n:>2} {r.k:>2} {r.lambda_G:>4} {r.delta_G:>4} {r.kappa_G:>4} "
                      f"{r.lambda_Fk:>4} {r.delta_Fk:>4} {r.bound:>5}  {r.status}\n")
        for e in errors:
            out.write(f"{e['graph']:<24} error: {e['error']}\n")
    bad = [r for r in records if r.status == VIOLATED]
    return EXIT_FAIL if bad or errors else EXIT_OK


def cmd_construct(args, out) -> int:
    g = parse_graph_spec(args.spec)
    X, Y = _vertex_list(args.X), _vertex_list(args.Y)
    try:
        cert = construct_family(g, args.k, X, Y)
    except CertificateError as exc:
        for p in exc.problems:
            print(f"certificate check failed: {p}", file=sys.stderr)
        return EXIT_FAIL
    except LemmaError as exc:
        raise UsageError(str(exc)) from None
    if args.out == "json":
        json.dump(cert.to_dict(), out, indent=2)
        out.write("\n")
    else:
        for mb in cert.members:
            out.write(f"{mb.tag:<3} " + " -> ".join(format_config(c) for c in mb.path.configs) + "\n")
    print(f"achieved {cert.achieved} >= bound {cert.bound}", file=sys.stderr)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    g = parse_graph_spec(args.spec)
    if not 1 <= args.k <= g.n - 1:
        raise UsageError(f"k must lie in [1, {g.n - 1}]")
    if comb(g.n, args.k) > ORACLE_MAX_VERTICES:
        raise UsageError(f"F_{args.k} would have {comb(g.n, args.k)} vertices (limit {ORACLE_MAX_VERTICES})")
    f = TokenGraph(g, args.k).graph
    standard = edge_connectivity(f)
    adjacent = edge_connectivity_adjacent(f)
    brute = brute_force_edge_connectivity(f) if f.m <= BRUTE_FORCE_MAX_EDGES else None
    values = {standard, adjacent} | ({brute} if brute is not None else set())
    report = {"schema": 1, "spec": args.spec, "k": args.k, "vertices": f.n, "edges": f.m,
              "lambda_standard": standard, "lambda_adjacent": adjacent,
              "lambda_bruteforce": brute, "agree": len(values) == 1}
    if args.out == "json":
        json.dump(report, out, indent=2)
        out.write("\n")
    else:
        for key, value in report.items():
            if key != "schema":
                out.write(f"{key}: {value}\n")
    return EXIT_OK if report["agree"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tokengraphs", description="k-token graphs and their edge-connectivity")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write F_k(G)")
    p.add_argument("spec")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", choices=("dot", "edges", "json"), default="dot")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check the connectivity bound over a corpus")
    p.add_argument("specs", nargs="*")
    p.add_argument("--random", type=int, default=0, metavar="N", help="add N seeded random connected graphs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", default="1-4", help="k values, e.g. 2 or 1-4 or 1,3")
    p.add_argument("--out", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build an edge-disjoint X-Y family and its certificate")
    p.add_argument("spec")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--X", required=True)
    p.add_argument("--Y", required=True)
    p.add_argument("--out", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("oracle", help="cross-check lambda(F_k(G)) by independent methods")
    p.add_argument("spec")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
