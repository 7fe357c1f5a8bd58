"""Command-line front end.

Subcommands: solve, gen, verify, bench, cube, rect.  Machine-readable output
(tables, CSV, reports) goes to stdout; diagnostics and timings go to stderr.
Exit codes: 0 success, 1 verification finding, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable

from .bench import (
    BenchConfig,
    PlotTarget,
    emit_plot_data,
    render_edge_csv,
    render_edge_md,
    render_grid_csv,
    render_grid_md,
    run_edge_cases,
    run_grid,
)
from .cubes import brute_force_cube, max_cube
from .grid import (
    BinaryMatrix,
    GenSpec,
    MatrixParseError,
    generate_matrix,
    generate_volume,
    parse_matrix,
    parse_volume,
    serialize_matrix,
    serialize_volume,
)
from .histogram import maximal_rectangle
from .squares import (
    SquareResult,
    brute_force_square,
    dp_full,
    dp_rows,
    freq_square,
)
from .verify import (
    EnumerationCapExceededError,
    VerifyReport,
    edge_case_suite,
    exhaustive_sweep,
    random_campaign,
    render_mismatch_csv,
    render_report,
)

SOLVE_ALGOS: dict[str, Callable[[BinaryMatrix], SquareResult]] = {
    "freq": freq_square,
    "dp": dp_rows,
    "dp2d": dp_full,
    "brute": brute_force_square,
}

BASELINE_FLAGS = {"dp": "dp_rows", "dp2d": "dp_full"}

DEFAULT_DENSITIES = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="ascii")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squarelab",
        description="Maximal-square solvers, verification campaigns, and benchmarks.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_solve = sub.add_parser("solve", help="find the largest all-ones square")
    p_solve.add_argument("path", nargs="?", default="-",
                         help="matrix file, or - for stdin (default)")
    p_solve.add_argument("--algo", choices=sorted(SOLVE_ALGOS), default="freq")

    p_gen = sub.add_parser("gen", help="generate a seeded random matrix")
    p_gen.add_argument("--rows", type=int, required=True)
    p_gen.add_argument("--cols", type=int, required=True)
    p_gen.add_argument("--density", type=float, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--depth", type=int, default=None,
                       help="emit a volume of this many layers instead")
    p_gen.add_argument("--out", default=None, help="write here instead of stdout")

    p_verify = sub.add_parser("verify", help="run differential correctness campaigns")
    p_verify.add_argument("--exhaustive-max", type=int, default=3,
                          help="enumerate all matrices up to N x N")
    p_verify.add_argument("--random-count", type=int, default=1000)
    p_verify.add_argument("--max-dim", type=int, default=32)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--mismatch-out", default="mismatches.csv",
                          help="CSV written when disagreements are found")

    p_bench = sub.add_parser("bench", help="time the frequency solver against a DP baseline")
    p_bench.add_argument("--sizes", type=_int_list, default=(10, 50, 100, 500, 1000))
    p_bench.add_argument("--densities", type=_float_list,
                         default=(0.1, 0.3, 0.5, 0.7, 0.9))
    p_bench.add_argument("--runs", type=int, default=30)
    p_bench.add_argument("--trim", type=float, default=0.1)
    p_bench.add_argument("--baseline", choices=sorted(BASELINE_FLAGS), default="dp2d")
    p_bench.add_argument("--format", choices=("csv", "md"), default="md")
    p_bench.add_argument("--edge-cases", action="store_true",
                         help="run the constant edge cases instead of the size grid")
    p_bench.add_argument("--plot", choices=[t.value for t in PlotTarget], default=None,
                         help="emit a tidy CSV data series instead of a table")
    p_bench.add_argument("--plot-size", type=int, default=500)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--warmup", type=int, default=1)

    p_cube = sub.add_parser("cube", help="find the largest all-ones cube in a volume")
    p_cube.add_argument("path", nargs="?", default="-")
    p_cube.add_argument("--algo", choices=("freq", "brute"), default="freq")

    p_rect = sub.add_parser("rect", help="find the largest all-ones rectangle")
    p_rect.add_argument("path", nargs="?", default="-")

    return parser


def _cmd_solve(args: argparse.Namespace) -> int:
    matrix = parse_matrix(_read_text(args.path))
    result = SOLVE_ALGOS[args.algo](matrix)
    print(f"side={result.side} area={result.area}")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(args.rows, args.cols, args.density, args.seed, depth=args.depth)
    if args.depth is None:
        text = serialize_matrix(generate_matrix(spec))
    else:
        text = serialize_volume(generate_volume(spec))
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="ascii")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.exhaustive_max < 1:
        raise ValueError("--exhaustive-max must be positive")
    if args.random_count < 1:
        raise ValueError("--random-count must be positive")
    if args.max_dim < 1:
        raise ValueError("--max-dim must be positive")
    sections = [
        ("exhaustive", exhaustive_sweep(args.exhaustive_max, args.exhaustive_max)),
        ("random", random_campaign(args.random_count, args.max_dim,
                                   DEFAULT_DENSITIES, args.seed)),
        ("edges", edge_case_suite()),
    ]
    findings = False
    for name, report in sections:
        print(f"[{name}]")
        sys.stdout.write(render_report(report))
        print(f"{name}: elapsed {report.elapsed:.3f}s", file=sys.stderr)
        if not report.clean:
            findings = True
    if findings:
        csv_parts = [render_mismatch_csv(report) for _, report in sections
                     if report.mismatches]
        if csv_parts:
            header, *_ = csv_parts[0].splitlines()
            rows = [line for part in csv_parts
                    for line in part.splitlines()[1:]]
            Path(args.mismatch_out).write_text(
                "\n".join([header, *rows]) + "\n", encoding="ascii")
            print(f"mismatches written to {args.mismatch_out}", file=sys.stderr)
        return 1
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    config = BenchConfig(
        sizes=args.sizes,
        densities=args.densities,
        runs=args.runs,
        trim_fraction=args.trim,
        seed=args.seed,
        baseline=BASELINE_FLAGS[args.baseline],
        warmup_runs=args.warmup,
    )
    if args.plot == PlotTarget.EDGE_SPEEDUPS.value or args.edge_cases:
        records = run_edge_cases(config)
    else:
        records = run_grid(config)
    if args.plot is not None:
        sys.stdout.write(
            emit_plot_data(records, PlotTarget(args.plot), size=args.plot_size))
    elif args.edge_cases:
        renderer = render_edge_csv if args.format == "csv" else render_edge_md
        sys.stdout.write(renderer(records))
    else:
        renderer = render_grid_csv if args.format == "csv" else render_grid_md
        sys.stdout.write(renderer(records))
    return 0


def _cmd_cube(args: argparse.Namespace) -> int:
    volume = parse_volume(_read_text(args.path))
    if args.algo == "freq":
        result = max_cube(volume)
    else:
        result = brute_force_cube(volume)
    print(f"side={result.side}")
    return 0


def _cmd_rect(args: argparse.Namespace) -> int:
    matrix = parse_matrix(_read_text(args.path))
    result = maximal_rectangle(matrix)
    print(f"area={result.area} h={result.height} w={result.width}")
    return 0


_HANDLERS = {
    "solve": _cmd_solve,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
    "cube": _cmd_cube,
    "rect": _cmd_rect,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.subcommand](args)
    except MatrixParseError as exc:
        line = f" (line {exc.line})" if exc.line else ""
        print(f"squarelab: parse error{line}: {exc}", file=sys.stderr)
        return 2
    except EnumerationCapExceededError as exc:
        print(f"squarelab: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"squarelab: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
