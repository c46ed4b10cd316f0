"""Command-line front end: decide, count, verify, bench.

Exit codes: 0 = YES (or success), 1 = NO (or failed verification),
2 = usage or input error.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import algebraic, color_coding, divide_color, homcount
from .color_coding import Coloring
from .graph import Graph, GraphParseError, enumerate_k_paths, find_k_path, parse_graph
from .harness import BENCH_ENGINES, FAMILIES, run_bench, run_verify
from .report import ALGORITHMS, U64, TrialReport, trial_rng

EXIT_YES, EXIT_NO, EXIT_USAGE = 0, 1, 2
COUNT_ALGOS = ("dfs", "ie", "colorful-ie", "appendix-a")
WITNESS_ALGOS = ("dfs", "color-coding")


class UsageError(Exception):
    pass


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value <= U64:
        raise argparse.ArgumentTypeError(f"seed {text} is not a 64-bit unsigned integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _load(path: str) -> Graph:
    try:
        with open(path) as fh:
            return parse_graph(fh.read())
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except GraphParseError as e:
        raise UsageError(f"{path}: {e}") from None


def _parse_colors(text: str, g: Graph) -> list[int]:
    try:
        colors = [int(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise UsageError(f"malformed --colors {text!r}") from None
    if len(colors) != g.n:
        raise UsageError(f"--colors has {len(colors)} entries, graph has {g.n} vertices")
    if any(c < 1 for c in colors):
        raise UsageError("colors must be positive")
    return colors


def cmd_decide(args: argparse.Namespace) -> int:
    g = _load(args.input)
    k, seed = args.k, args.seed
    start = time.perf_counter()
    if args.algo == "dfs":
        w = find_k_path(g, k)
        report = TrialReport("dfs", k, seed, 1, "YES" if w else "NO", witness=list(w) if w else None)
    elif args.algo == "color-coding":
        _, _, report = color_coding.color_coding_search(g, k, args.trials, seed)
    elif args.algo == "divide-color":
        _, report = divide_color.dc_search(g, k, seed)
    elif args.algo == "count-ie":
        c = homcount.sub_path(g, k)
        report = TrialReport("count-ie", k, seed, 1, "YES" if c else "NO", count=c)
    elif args.algo == "count-colorful":
        _, report = homcount.randomized_count_search(g, k, args.trials, seed)
    else:
        _, report = algebraic.williams_decide(g, k, args.trials or algebraic.DEFAULT_TRIALS, seed)
    if report.algorithm in ("dfs", "count-ie"):
        report.wall_time = time.perf_counter() - start
    if not args.witness:
        report.witness = None
    elif args.algo not in WITNESS_ALGOS:
        print(f"note: {args.algo} does not produce witnesses; use --algo color-coding", file=sys.stderr)
    print(report.to_json())
    return EXIT_YES if report.yes else EXIT_NO


def cmd_count(args: argparse.Namespace) -> int:
    g = _load(args.input)
    k, seed = args.k, args.seed
    colors = _parse_colors(args.colors, g) if args.colors else None
    start = time.perf_counter()
    if args.algo == "dfs":
        value, algorithm = enumerate_k_paths(g, k, cap=0)[0], "dfs"
    elif args.algo == "ie":
        value, algorithm = homcount.sub_path(g, k), "count-ie"
    else:
        if args.algo == "appendix-a":
            palette, algorithm = k, "color-coding"
            if colors and max(colors) > k:
                raise UsageError(f"appendix-a needs colors in [1, {k}]")
        else:
            palette, algorithm = homcount.count_palette(k), "count-colorful"
            if colors:
                palette = max(k, max(colors))
        if colors:
            phi = Coloring(palette, tuple(colors))
        else:
            phi = color_coding.random_coloring(g, palette, trial_rng(seed, 0))
        if args.algo == "appendix-a":
            value = color_coding.colorful_walk_count_ie(g, phi, k)
        else:
            value = homcount.col_inj(g, phi, k)
    report = TrialReport(
        algorithm, k, seed, 1, "YES" if value > 0 else "NO",
        count=value, wall_time=time.perf_counter() - start,
    )
    print(report.to_json())
    return EXIT_YES


def cmd_verify(args: argparse.Namespace) -> int:
    result = run_verify(args.max_n, args.graphs, args.seed, out=sys.stdout)
    return EXIT_YES if result.ok else EXIT_NO


def cmd_bench(args: argparse.Namespace) -> int:
    if args.reps < 1:
        raise UsageError("--reps must be at least 1")
    if args.kmax < 2:
        raise UsageError("--kmax must be at least 2")
    try:
        open(args.out, "a").close()
    except OSError as e:
        raise UsageError(f"cannot write {args.out}: {e.strerror}") from None
    run_bench(args.kmax, args.family, args.reps, args.seed, args.out, args.engines, log=sys.stdout)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kpath", description="k-path detection and counting engines")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide whether a simple k-vertex path exists")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--algo", choices=ALGORITHMS, required=True)
    p.add_argument("--trials", type=_positive)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("count", help="count k-vertex paths exactly")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--algo", choices=COUNT_ALGOS, required=True)
    p.add_argument("--colors", help="comma-separated color per vertex")
    p.add_argument("--seed", type=_seed, default=0)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="cross-check every engine on generated small graphs")
    p.add_argument("--max-n", type=_positive, default=7)
    p.add_argument("--graphs", type=_positive, default=200)
    p.add_argument("--seed", type=_seed, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the randomized engines as k grows")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--family", choices=FAMILIES, default="path")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--engines", nargs="+", choices=BENCH_ENGINES + ("dfs",), default=list(BENCH_ENGINES))
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_YES
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        print(f"kpath: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
