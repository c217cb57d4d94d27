"""Command-line driver.

Subcommands: construct | analyze | enumerate | saturate | blowup-opt |
extract-tripartite | verify {thm1|thm2|lambda|lemmas}.  Graphs travel as
graph6, one per line, on stdin or --in; JSON reports go to stdout or
--out.  Exit codes: 0 all assertions pass, 1 mathematical mismatch,
2 usage or resource error.

Reports are byte-stable across runs: keys are sorted, all numbers are
integers, and timing is only included when --timing is passed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import constructions as cons
from .deficiency import (
    blowup_bound_gap_times_r,
    deficiency,
    optimal_blowup,
)
from .enumeration import (
    EnumerationLimitError,
    enumerate_graphs,
    _LEVELS,
)
from .graph import (
    Graph,
    GraphFormatError,
    from_graph6,
    read_graph6_lines,
    to_graph6,
)
from .invariants import CliquePresentError, SearchBudgetExceeded, clique_number
from .saturation import saturate
from .tripartite import CertificateError, extract_tripartite
from .verify import (
    SCHEMA,
    analyze_graph,
    classify_extremal,
    deficiency_table,
    lemma_suite,
    verify_threshold,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _read_graphs(args: argparse.Namespace) -> list[Graph]:
    if getattr(args, "infile", None):
        with open(args.infile) as fh:
            lines = fh.readlines()
    else:
        lines = sys.stdin.readlines()
    return read_graph6_lines(lines)


def _emit_graphs(args: argparse.Namespace, graphs: list[Graph],
                 command: str, t0: float) -> None:
    if getattr(args, "format", "graph6") == "json":
        _emit_json(args, {"schema": SCHEMA, "command": command,
                          "count": len(graphs),
                          "graphs": [to_graph6(g) for g in graphs],
                          "ok": True}, t0)
    else:
        _emit(args, "".join(to_graph6(g) + "\n" for g in graphs))


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args: argparse.Namespace, payload: dict, t0: float) -> None:
    if getattr(args, "timing", False):
        payload = dict(payload)
        payload["runtime_ms"] = int((time.time() - t0) * 1000)
    _emit(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _parse_range(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(spec)]


_FAMILIES = {
    "turan": lambda a: cons.turan_graph(a.n, a.r),
    "extremal": lambda a: cons.extremal_graph(a.n, a.r),
    "family": lambda a: cons.extremal_family(a.n, a.r, a.l, a.variant),
    "groetzsch": lambda a: cons.groetzsch_graph(),
    "k4f-chi5": lambda a: cons.k4free_5chromatic(),
    "tf-chi5": lambda a: cons.trianglefree_5chromatic(include_empty=not a.no_empty_set),
    "sat3-twins": lambda a: cons.three_sat_many_twin_classes(a.f, a.n),
    "sat-non-blowup": lambda a: cons.sat_non_blowup(a.m, a.r, a.n),
    "sat3-twin-free": lambda a: cons.three_sat_twin_free(a.m),
    "sat-twin-free": lambda a: cons.sat_twin_free(a.m, a.r),
}


def _filter_q(args: argparse.Namespace) -> int | None:
    name = args.filter
    if name == "none":
        return None
    if name == "triangle-free":
        return 3
    if name == "k4-free":
        return 4
    if name == "kr1-free":
        if args.r is None:
            raise SystemExit("--filter kr1-free requires --r")
        return args.r + 1
    raise SystemExit(f"unknown filter {name!r}")


def cmd_construct(args: argparse.Namespace) -> int:
    t0 = time.time()
    g = _FAMILIES[args.family](args)
    if args.format == "json":
        _emit_json(args, {"schema": SCHEMA, "command": "construct",
                          "family": args.family, "n": g.n,
                          "edges": g.edge_count, "graph6": to_graph6(g)}, t0)
    else:
        _emit(args, to_graph6(g) + "\n")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    t0 = time.time()
    graphs = _read_graphs(args)
    entries = []
    for i, g in enumerate(graphs):
        entry = analyze_graph(g, r=args.r, q=args.q)
        entry["index"] = i
        entries.append(entry)
    _emit_json(args, {"schema": SCHEMA, "command": "analyze",
                      "graphs": entries, "ok": True}, t0)
    return EXIT_OK


def _load_resume(path: str, q: int | None) -> None:
    import os

    if not os.path.exists(path):
        return
    with open(path) as fh:
        state = json.load(fh)
    if state.get("filter") != (q if q is not None else "none"):
        raise SystemExit(f"resume file {path} was built with a different filter")
    levels = [[from_graph6(s) for s in level] for level in state["levels"]]
    if levels:
        _LEVELS[q] = levels


def _save_resume(path: str, q: int | None) -> None:
    levels = _LEVELS.get(q, [])
    state = {
        "schema": SCHEMA,
        "filter": q if q is not None else "none",
        "levels": [[to_graph6(g) for g in level] for level in levels],
    }
    with open(path, "w") as fh:
        json.dump(state, fh)


def cmd_enumerate(args: argparse.Namespace) -> int:
    q = _filter_q(args)
    if args.resume:
        _load_resume(args.resume, q)
    t0 = time.time()
    try:
        graphs = enumerate_graphs(args.n, q)
    finally:
        if args.resume:
            _save_resume(args.resume, q)
    _emit_graphs(args, graphs, "enumerate", t0)
    return EXIT_OK


def cmd_saturate(args: argparse.Namespace) -> int:
    t0 = time.time()
    graphs = _read_graphs(args)
    out = [saturate(g, args.q) for g in graphs]
    _emit_graphs(args, out, "saturate", t0)
    return EXIT_OK


def cmd_blowup_opt(args: argparse.Namespace) -> int:
    t0 = time.time()
    graphs = _read_graphs(args)
    entries = []
    for i, g in enumerate(graphs):
        weights, edges = optimal_blowup(g, args.n)
        r, _ = clique_number(g)
        entries.append({
            "index": i,
            "target_order": args.n,
            "weights": list(weights),
            "edges": edges,
            "r": r,
            "deficiency": deficiency(g, r).value,
            "bound_gap_times_r": blowup_bound_gap_times_r(g, args.n, edges),
        })
    _emit_json(args, {"schema": SCHEMA, "command": "blowup-opt",
                      "graphs": entries, "ok": True}, t0)
    return EXIT_OK


def cmd_extract_tripartite(args: argparse.Namespace) -> int:
    t0 = time.time()
    graphs = _read_graphs(args)
    entries = []
    for i, g in enumerate(graphs):
        cert = extract_tripartite(g, c_param=args.c_param)
        frac = cert.fraction
        entries.append({
            "index": i,
            "parts": [list(p) for p in cert.parts],
            "covered": cert.covered,
            "order": cert.order,
            "fraction_num": frac.numerator,
            "fraction_den": frac.denominator,
        })
    _emit_json(args, {"schema": SCHEMA, "command": "extract-tripartite",
                      "graphs": entries, "ok": True}, t0)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    t0 = time.time()
    if args.what == "thm1":
        if args.n is None:
            raise SystemExit("verify thm1 requires --n (single or lo..hi)")
        report = verify_threshold(args.r, _parse_range(args.n))
    elif args.what == "thm2":
        if args.n is None:
            raise SystemExit("verify thm2 requires --n (single or lo..hi)")
        ns = _parse_range(args.n)
        subs = [classify_extremal(args.r, n) for n in ns]
        report = {"schema": SCHEMA, "check": "classification", "r": args.r,
                  "cases": subs, "ok": all(s["ok"] for s in subs)}
    elif args.what == "lambda":
        if args.k is None:
            raise SystemExit("verify lambda requires --k")
        report = deficiency_table(args.r, args.k, max_order=args.max_order,
                                  node_budget=args.budget)
    elif args.what == "lemmas":
        report = lemma_suite()
    else:  # pragma: no cover - argparse restricts choices
        raise SystemExit(f"unknown verification {args.what!r}")
    _emit_json(args, report, t0)
    return EXIT_OK if report["ok"] else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="turanlab",
        description="Constructions and exhaustive verification for "
                    "clique-free extremal graph theory.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, graphs_in: bool = False) -> None:
        p.add_argument("--out", dest="out", help="output file (default stdout)")
        p.add_argument("--format", choices=["graph6", "json"], default="graph6")
        p.add_argument("--timing", action="store_true",
                       help="include runtime_ms in JSON reports "
                            "(off by default to keep reports byte-stable)")
        if graphs_in:
            p.add_argument("--in", dest="infile",
                           help="graph6 input file (default stdin)")

    p = sub.add_parser("construct", help="emit a named construction")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--m", type=int)
    p.add_argument("--f", type=int)
    p.add_argument("--variant", choices=["standard", "prime"], default="standard")
    p.add_argument("--no-empty-set", action="store_true",
                   help="exclude the empty independent set in tf-chi5")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="invariant report for input graphs")
    p.add_argument("--r", type=int)
    p.add_argument("--q", type=int)
    common(p, graphs_in=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="non-isomorphic graphs of an order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", default="none",
                   choices=["none", "triangle-free", "k4-free", "kr1-free"])
    p.add_argument("--r", type=int)
    p.add_argument("--resume", help="state file for checkpoint/resume")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("saturate", help="greedy clique saturation")
    p.add_argument("--q", type=int, required=True)
    common(p, graphs_in=True)
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("blowup-opt", help="optimal blow-up weights")
    p.add_argument("--n", type=int, required=True, help="target order")
    common(p, graphs_in=True)
    p.set_defaults(func=cmd_blowup_opt)

    p = sub.add_parser("extract-tripartite",
                       help="complete tripartite certificate")
    p.add_argument("--C-param", dest="c_param", type=int, default=10)
    common(p, graphs_in=True)
    p.set_defaults(func=cmd_extract_tripartite)

    p = sub.add_parser("verify", help="theorem verifications")
    p.add_argument("what", choices=["thm1", "thm2", "lambda", "lemmas"])
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--n", help="order or range lo..hi")
    p.add_argument("--k", type=int)
    p.add_argument("--max-order", type=int)
    p.add_argument("--budget", type=int, help="search node budget")
    common(p)
    p.set_defaults(func=cmd_verify)
    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CertificateError as exc:
        print(f"certificate validation failed: {exc} "
              f"(offender {exc.offender})", file=sys.stderr)
        return EXIT_MISMATCH
    except CliquePresentError as exc:
        print(f"precondition failed: {exc} (witness {exc.witness})",
              file=sys.stderr)
        return EXIT_USAGE
    except (EnumerationLimitError, SearchBudgetExceeded) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
