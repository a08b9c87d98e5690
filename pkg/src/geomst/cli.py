"""Command-line front door: compute, verify, benchmark, and cluster.

Four subcommands over the same core: mst writes the exact MST of the
complete graph on the input vectors, verify replays it against the
brute-force oracle and random-subset containment checks, bench sweeps block
counts over a generated instance and tabulates the counters, dendrogram
derives the single-linkage merge tree. Exit codes: 0 ok, 1 usage error,
2 data error, 3 verification failure.

Fixed flags and a fixed input produce byte-identical edge and dendrogram
artifacts across runs and across --workers values; stats files and bench
tables embed wall-clock measurements and are reproducible in every other
column.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from .datagen import generate_instance
from .decompose import (
    MERGE_STRATEGIES,
    PARTITION_STRATEGIES,
    decomposed_mst,
    make_partition,
    redundancy_factor,
)
from .dendrogram import mst_to_dendrogram
from .errors import DataError, UsageError
from .geometry import METRIC_NAMES, Metric, PointSet
from .graph import EdgeList, edge_key
from .io import (
    POINT_FORMATS,
    fmt_real,
    format_edges,
    read_points,
    write_dendrogram,
    write_edges,
    write_stats,
)
from .oracle import check_substructure, oracle_mst
from .rng import SplitMix64
from .stats import RunStats


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _add_compute_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="point file, csv or vecbin")
    p.add_argument(
        "--format", choices=POINT_FORMATS, default=None, help="input format (default: by extension)"
    )
    p.add_argument("--metric", choices=METRIC_NAMES, default="euclidean")
    p.add_argument(
        "--partitions",
        type=int,
        default=None,
        metavar="K",
        help="block count (default: ceil(sqrt(2*workers)), clamped to the point count)",
    )
    p.add_argument("--partition-strategy", choices=PARTITION_STRATEGIES, default="contiguous")
    p.add_argument(
        "--seed", type=_u64, default=0, help="unsigned 64-bit seed for shuffled partitioning"
    )
    p.add_argument("--merge", choices=MERGE_STRATEGIES, default="gather")
    p.add_argument(
        "--workers", type=_positive, default=None, help="thread count (default: all cores)"
    )
    p.add_argument("--output", default=None, metavar="PATH", help="edge TSV (default: stdout)")
    p.add_argument("--stats", default=None, metavar="PATH", help="write run counters as key=value")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="geomst",
        description="Exact minimum spanning trees of complete graphs over vector sets.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    p = sub.add_parser("mst", help="compute the MST and write it as edge TSV")
    _add_compute_flags(p)
    p.set_defaults(func=cmd_mst)

    p = sub.add_parser("verify", help="check the decomposition against the brute-force oracle")
    _add_compute_flags(p)
    p.add_argument(
        "--trials",
        type=int,
        default=20,
        help="random-subset containment checks to run (default 20)",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="sweep block counts on a generated instance")
    p.add_argument("--n", type=int, required=True, help="points to generate (at least 2)")
    p.add_argument("--dim", type=_positive, required=True)
    p.add_argument("--metric", choices=METRIC_NAMES, default="euclidean")
    p.add_argument(
        "--partitions-list",
        default="1,2,4,8",
        metavar="K,K,...",
        help="comma-separated block counts (default 1,2,4,8)",
    )
    p.add_argument(
        "--workers", type=_positive, default=None, help="thread count (default: all cores)"
    )
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--output", default=None, metavar="PATH", help="TSV table (default: stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("dendrogram", help="compute the MST and its single-linkage dendrogram")
    _add_compute_flags(p)
    p.add_argument("--dendro-output", required=True, metavar="PATH", help="merge-step TSV")
    p.set_defaults(func=cmd_dendrogram)

    return parser


def _load(args) -> tuple[PointSet, Metric]:
    return read_points(args.input, args.format), Metric(args.metric)


def _resolve_workers(requested: int | None) -> int:
    return requested if requested is not None else (os.cpu_count() or 1)


def _compute(args, points: PointSet, metric: Metric):
    """Partition, decompose and solve; returns (tree, stats, k, workers)."""
    workers = _resolve_workers(args.workers)
    n = points.count
    if n == 0:
        return EdgeList([], 0), RunStats(merge_strategy=args.merge), 0, workers
    if args.partitions is None:
        k = min(n, max(1, math.ceil(math.sqrt(2 * workers))))
    else:
        # More blocks than points cannot help; clamp rather than refuse so
        # one flag value works across inputs of any size.
        k = min(args.partitions, n)
    part = make_partition(n, k, args.partition_strategy, args.seed)
    tree, stats = decomposed_mst(points, metric, part, args.merge, workers)
    return tree, stats, k, workers


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _maybe_write_stats(args, stats, points, k, workers) -> None:
    if args.stats is not None:
        write_stats(
            stats,
            args.stats,
            n=points.count,
            d=points.dim,
            k=k,
            metric=args.metric,
            workers=workers,
            seed=args.seed,
        )


def cmd_mst(args) -> int:
    points, metric = _load(args)
    tree, stats, k, workers = _compute(args, points, metric)
    _emit(format_edges(tree), args.output)
    _maybe_write_stats(args, stats, points, k, workers)
    return 0


def cmd_verify(args) -> int:
    points, metric = _load(args)
    tree, stats, k, workers = _compute(args, points, metric)
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    failures = 0

    reference = oracle_mst(points, metric)
    ok = sorted(tree, key=edge_key) == sorted(reference, key=edge_key)
    failures += not ok
    print(f"{'PASS' if ok else 'FAIL'} decomposed-vs-oracle (n={points.count}, k={k})")

    n = points.count
    rng = SplitMix64(args.seed)
    for t in range(args.trials if n >= 2 else 0):
        size = 2 + rng.below(n - 1)
        order = list(range(n))
        rng.shuffle(order)
        subset = sorted(order[:size])
        ok = check_substructure(points, metric, subset)
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} subset-containment trial {t} (size {size})")

    if args.output is not None:
        write_edges(tree, args.output)
    _maybe_write_stats(args, stats, points, k, workers)
    return 0 if failures == 0 else 3


def cmd_bench(args) -> int:
    if args.n < 2:
        raise UsageError("bench needs at least 2 points")
    try:
        ks = [int(s) for s in args.partitions_list.split(",")]
    except ValueError:
        raise UsageError("--partitions-list must be comma-separated integers") from None
    points = generate_instance(args.seed, args.n, args.dim, "uniform_cube")
    metric = Metric(args.metric)
    workers = _resolve_workers(args.workers)
    rows = ["k\ttasks\tdistance_evals\tredundancy_factor\tedges_gathered\twall_time_ms"]
    for k in ks:
        part = make_partition(args.n, k, "contiguous", args.seed)
        _, stats = decomposed_mst(points, metric, part, "gather", workers)
        rows.append(
            f"{k}\t{stats.tasks_executed}\t{stats.distance_evals}"
            f"\t{fmt_real(redundancy_factor(stats, args.n))}"
            f"\t{stats.edges_gathered}\t{fmt_real(stats.wall_time * 1000.0)}"
        )
    _emit("".join(r + "\n" for r in rows), args.output)
    return 0


def cmd_dendrogram(args) -> int:
    points, metric = _load(args)
    tree, stats, k, workers = _compute(args, points, metric)
    dendro = mst_to_dendrogram(tree, points.count)
    _emit(format_edges(tree), args.output)
    write_dendrogram(dendro, args.dendro_output)
    _maybe_write_stats(args, stats, points, k, workers)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # --help; argparse errors surface as UsageError instead
        return exc.code if isinstance(exc.code, int) else 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main(sys.argv[1:]))
