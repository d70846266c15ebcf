"""Command-line surface: construct, verify, decide, census, label-c4.

Census output is JSON lines with sorted keys and no whitespace so that two
runs over the same input are byte-identical; anything nondeterministic (wall
time) stays on stderr unless explicitly requested with --timings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from magus import criteria, labeling
from magus.criteria import Verdict, certificate_from_dict
from magus.graph6 import Graph6Error, parse_graph6, write_graph6
from magus.graphs import Graph, generate, parse_family
from magus.labeling import LabelingError
from magus.mycielskian import build, iterate
from magus.search import SearchBudget, decide, decide_graph

EXIT_MAGIC = 0
EXIT_NOT_MAGIC = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_base(args) -> Graph:
    if getattr(args, "family", None):
        return generate(parse_family(args.family))
    text = args.graph6
    if text == "-":
        text = sys.stdin.readline()
    return parse_graph6(text)


def _budget(args) -> SearchBudget:
    return SearchBudget(max_nodes=args.max_nodes, timeout_secs=args.timeout_secs)


def _require_t(t: int) -> int:
    if t < 2:
        raise ValueError("t must be >= 2")
    return t


# ---------------------------------------------------------------------------
# Subcommands.
# ---------------------------------------------------------------------------


def cmd_construct(args) -> int:
    base = _load_base(args)
    t = _require_t(args.t)
    myc = iterate(base, t, args.s)
    print(write_graph6(myc.graph))
    print(_dumps(myc.naming()))
    return 0


def cmd_verify(args) -> int:
    g = parse_graph6(args.graph6 if args.graph6 != "-" else sys.stdin.readline())
    raw = args.labels
    if raw == "-":
        obj = json.load(sys.stdin)
    elif raw.lstrip().startswith(("[", "{")):
        obj = json.loads(raw)
    else:
        with open(raw) as fh:
            obj = json.load(fh)
    values = labeling.labeling_from_obj(obj, g.n)
    result = labeling.verify(g, values)
    out = {"magic_constant": result.magic_constant}
    if result.witness is not None:
        a, b, wa, wb = result.witness
        out["witness"] = {"a": a, "b": b, "weight_a": wa, "weight_b": wb}
    print(_dumps(out))
    return EXIT_MAGIC if result.is_magic else EXIT_NOT_MAGIC


def cmd_decide(args) -> int:
    base = _load_base(args)
    t = _require_t(args.t)
    verdict = decide(base, t, _budget(args))
    print(_dumps(verdict.as_dict()))
    if verdict.kind == "distance_magic":
        return EXIT_MAGIC
    if verdict.kind == "not_distance_magic":
        return EXIT_NOT_MAGIC
    return EXIT_UNKNOWN


def cmd_label_c4(args) -> int:
    t = _require_t(args.t)
    myc = labeling.c4_mycielskian(t)
    values = labeling.c4_labeling(t)
    result = labeling.verify(myc.graph, values)
    if not result.is_magic:
        raise AssertionError("closed-form labeling failed verification")
    out = labeling.labeling_to_dict(values, result.magic_constant)
    out["graph6"] = write_graph6(myc.graph)
    print(_dumps(out))
    return 0


# ---------------------------------------------------------------------------
# Census.
# ---------------------------------------------------------------------------


def _census_task(task):
    """Worker: one input line -> one record per t. Must stay picklable."""
    index, line, t_list, max_nodes, timeout_secs = task
    budget = SearchBudget(max_nodes=max_nodes, timeout_secs=timeout_secs)
    started = time.monotonic()
    try:
        base = parse_graph6(line)
        if base.n < 1:
            raise Graph6Error("census needs at least one vertex", 0)
    except Graph6Error as exc:
        return index, [{"graph6": line, "line": index, "error": str(exc)}], 0.0
    base_verdict = decide_graph(base, budget).as_dict()
    records = []
    for t in t_list:
        myc_verdict = decide(base, t, budget).as_dict()
        records.append(
            {
                "graph6": write_graph6(base),
                "n": base.n,
                "m": base.m,
                "t": t,
                "base": base_verdict,
                "myc": myc_verdict,
            }
        )
    return index, records, time.monotonic() - started


def _recheck_record(record) -> bool:
    if "error" in record:
        return True
    base = parse_graph6(record["graph6"])
    t = record["t"]
    for side, graph_scope in (("base", True), ("myc", False)):
        verdict = record[side]
        kind = verdict["verdict"]
        if kind == "distance_magic":
            g = base if graph_scope else build(base, t).graph
            res = labeling.verify(g, verdict["labeling"])
            if not res.is_magic or res.magic_constant != verdict["magic_constant"]:
                return False
        elif kind == "not_distance_magic":
            cert = certificate_from_dict(verdict["certificate"])
            if graph_scope:
                ok = criteria.recheck_graph_certificate(cert, base)
            else:
                ok = criteria.recheck_myc_certificate(cert, base, t)
            if not ok:
                return False
    return True


def cmd_census(args) -> int:
    t_list = []
    for part in args.t.split(","):
        t_list.append(_require_t(int(part)))
    if args.input == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.input) as fh:
            lines = fh.read().splitlines()
    tasks = [
        (i, line.strip(), t_list, args.max_nodes, args.timeout_secs)
        for i, line in enumerate(lines)
        if line.strip()
    ]

    workers = os.cpu_count() or 1
    env_cap = os.environ.get("MAGUS_THREADS")
    if env_cap:
        workers = max(1, min(workers, int(env_cap)))
    workers = min(workers, len(tasks)) if tasks else 1

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_census_task, tasks))
    else:
        results = [_census_task(task) for task in tasks]
    results.sort(key=lambda r: r[0])

    counts: dict[str, int] = {}
    errors = 0
    all_records = []
    for _, records, elapsed in results:
        for record in records:
            if "error" in record:
                errors += 1
            else:
                tag = record["myc"]["verdict"]
                counts[tag] = counts.get(tag, 0) + 1
                if args.timings:
                    record["wall_ms"] = round(elapsed * 1000.0, 3)
            all_records.append(record)
            print(_dumps(record))

    total = sum(counts.values())
    print(f"census: {total} records, {errors} input errors", file=sys.stderr)
    for tag in sorted(counts):
        print(f"  myc {tag}: {counts[tag]}", file=sys.stderr)

    if args.recheck:
        failures = sum(0 if _recheck_record(r) else 1 for r in all_records)
        print(f"recheck: {len(all_records)} records, {failures} failures", file=sys.stderr)
        if failures:
            return 1
    return 0


# ---------------------------------------------------------------------------
# Parser.
# ---------------------------------------------------------------------------


def _add_base_arguments(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help="family name such as c4, p3, k7, w5, k2,3")
    group.add_argument("--graph6", help="graph6 string ('-' reads one line from stdin)")


def _add_budget_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, default=100_000_000, help="search node budget")
    p.add_argument("--timeout-secs", type=float, default=None, help="search wall-clock budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magus",
        description="Distance magic labelings of generalized Mycielskian graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit graph6 and naming map of M_t^s(base)")
    _add_base_arguments(p)
    p.add_argument("--t", type=int, required=True, help="level count, >= 2")
    p.add_argument("--s", type=int, default=1, help="iterate the construction s times")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a labeling against a graph")
    p.add_argument("graph6", help="graph6 string ('-' reads one line from stdin)")
    p.add_argument("labels", help="labeling JSON: inline, a file path, or '-'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decide", help="decide distance-magicness of M_t(base)")
    _add_base_arguments(p)
    p.add_argument("--t", type=int, required=True, help="level count, >= 2")
    _add_budget_arguments(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("census", help="batch decide over a file of graph6 lines")
    p.add_argument("input", help="file of graph6 lines ('-' for stdin)")
    p.add_argument("--t", default="2,3", help="comma-separated t values (default 2,3)")
    _add_budget_arguments(p)
    p.add_argument("--recheck", action="store_true", help="re-verify every stored witness")
    p.add_argument("--timings", action="store_true", help="include wall_ms in records")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("label-c4", help="closed-form labeling of M_t(C_4)")
    p.add_argument("--t", type=int, required=True, help="level count, >= 2")
    p.set_defaults(func=cmd_label_c4)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, LabelingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
