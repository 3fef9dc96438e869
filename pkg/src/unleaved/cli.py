"""Command line interface: count, verify, export-dot."""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from dataclasses import asdict, dataclass

from . import oracle, schedule, walker

CSV_FIELDS = ["genus", "mode", "count", "visited", "encoded", "trimmed",
              "wall_time_ms", "workers"]


@dataclass
class RunReport:
    genus: int
    mode: str
    count: int
    visited: int
    encoded: int
    trimmed: int
    wall_time_ms: int
    workers: int


def _append_report(path: str, report: RunReport) -> None:
    fresh = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        if fresh:
            writer.writeheader()
        writer.writerow(asdict(report))


def cmd_count(args) -> int:
    if args.genus < 1:
        print("count: --genus must be at least 1", file=sys.stderr)
        return 2
    workers = args.workers if args.workers is not None else (os.cpu_count() or 1)
    if workers < 1:
        print("count: --workers must be at least 1", file=sys.stderr)
        return 2
    mode = args.mode
    if mode == "unleaved" and args.genus < 8:
        # the trimmed walk only pays off past the closed-form threshold
        mode = "complete"
    start = time.perf_counter()
    if mode == "complete":
        stats = walker.explore_tree(args.genus)
        count = stats.leaf_count
        workers = 1
    else:
        count, stats = schedule.run_parallel(schedule.build_schedule(args.genus), workers)
    wall_ms = round((time.perf_counter() - start) * 1000)
    print(count)
    if args.stats_out:
        _append_report(args.stats_out, RunReport(
            genus=args.genus, mode=mode, count=count,
            visited=stats.visited_nodes, encoded=stats.encoded_nodes,
            trimmed=stats.trimmed_nodes, wall_time_ms=wall_ms, workers=workers))
    return 0


def cmd_verify(args) -> int:
    if args.max_genus < 1:
        print("verify: --max-genus must be at least 1", file=sys.stderr)
        return 2
    hist = oracle.genus_histogram(args.max_genus)
    n_last = 0
    for g in range(1, args.max_genus + 1):
        counts = {"oracle": hist[g], "complete": walker.explore_tree(g).leaf_count}
        if g >= 8:
            counts["unleaved"] = walker.explore_unleaved_tree(g)[0]
        shown = " ".join(f"{k}={v}" for k, v in counts.items())
        if len(set(counts.values())) == 1:
            n_last = hist[g]
            print(f"PASS genus={g} {shown}")
        else:
            print(f"FAIL genus={g} {shown}")
            return 1
    print(f"verified genera 1..{args.max_genus}; n_{args.max_genus} = {n_last}")
    return 0


def _gap_label(s: oracle.CanonicalSemigroup) -> str:
    return "{" + ",".join(str(x) for x in s.gap_list()) + "}"


def _complete_tree(genus: int):
    root = oracle.from_gaps([])
    nodes = [root]
    edges = []
    stack = [root]
    while stack:
        s = stack.pop()
        if s.genus == genus:
            continue
        for child in oracle.oracle_children(s):
            nodes.append(child)
            edges.append((s, child))
            stack.append(child)
    return nodes, edges


def _dot_text(genus: int, variant: str) -> str:
    nodes, edges = _complete_tree(genus)
    if variant != "complete":
        reach = {tuple(s.gap_list()): oracle.descendant_count(s, genus) > 0 for s in nodes}
        kept_edges = [(a, b) for a, b in edges if reach[tuple(b.gap_list())]]
        if variant == "unleaved":
            nodes = [s for s in nodes if reach[tuple(s.gap_list())]]
            edges = kept_edges
        else:
            edges = [(a, b) for a, b in edges if not reach[tuple(b.gap_list())]]
            seen = {}
            for a, b in edges:
                seen.setdefault(tuple(a.gap_list()), a)
                seen.setdefault(tuple(b.gap_list()), b)
            nodes = list(seen.values())
    nodes = sorted(nodes, key=lambda s: (s.genus, s.gap_list()))
    edges = sorted(edges, key=lambda e: (e[0].genus, e[0].gap_list(), e[1].gap_list()))
    out = ["digraph semigroup_tree {", "  rankdir=LR;"]
    out.extend(f'  "{_gap_label(s)}";' for s in nodes)
    out.extend(f'  "{_gap_label(a)}" -> "{_gap_label(b)}";' for a, b in edges)
    out.append("}")
    return "\n".join(out) + "\n"


def cmd_export_dot(args) -> int:
    if not 0 <= args.genus <= 12:
        print("export-dot: --genus must lie in 0..12", file=sys.stderr)
        return 2
    text = _dot_text(args.genus, args.variant)
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unleaved",
        description="Count and explore numerical semigroups by genus.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count semigroups of a given genus")
    p_count.add_argument("--genus", type=int, required=True)
    p_count.add_argument("--mode", choices=["complete", "unleaved"], default="unleaved")
    p_count.add_argument("--workers", type=int, default=None,
                         help="parallel workers (default: available cores)")
    p_count.add_argument("--stats-out", default=None,
                         help="append a CSV run report to this path")
    p_count.set_defaults(func=cmd_count)

    p_verify = sub.add_parser("verify", help="check walker counts against the oracle")
    p_verify.add_argument("--max-genus", type=int, required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_dot = sub.add_parser("export-dot", help="emit the tree in DOT format")
    p_dot.add_argument("--genus", type=int, required=True)
    p_dot.add_argument("--variant", choices=["complete", "unleaved", "difference"],
                       default="complete")
    p_dot.add_argument("--out", default=None, help="output path (default: stdout)")
    p_dot.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (AssertionError, OverflowError, RecursionError, ValueError,
            oracle.ResourceLimit, schedule.WorkerFailure) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
