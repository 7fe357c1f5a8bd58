"""Differential and exhaustive verification of the square solvers.

Every case runs all four solvers and flags any disagreement on the returned
side; disagreements carry the reproducing matrix so a finding is never lost
in an aggregate.  Campaigns also recheck the per-column run-length state of
the frequency solver against direct recomputation, and that each single-pass
solver visits exactly rows*cols cells.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .grid import BinaryMatrix, EMPTY_MATRIX, EdgeKind, GenSpec, generate_edge_case, generate_matrix
from .squares import (
    SquareResult,
    brute_force_square,
    dp_full,
    dp_rows,
    freq_square,
    freq_square_traced,
)

ENUMERATION_CAP = 2**20

Solver = Callable[[BinaryMatrix], SquareResult]

# fixed comparison order; freq is the candidate, the rest are references
DEFAULT_SOLVERS: tuple[tuple[str, Solver], ...] = (
    ("freq", freq_square),
    ("dp_full", dp_full),
    ("dp_rows", dp_rows),
    ("brute", brute_force_square),
)

# solvers whose visit count must equal rows*cols exactly
SINGLE_PASS_SOLVERS = ("freq", "dp_full", "dp_rows")


class EnumerationCapExceededError(ValueError):
    """Exhaustive sweep would enumerate too many matrices."""


@dataclass(frozen=True, slots=True)
class Mismatch:
    """One disagreement: the input and every solver's claimed side."""

    case_id: str
    matrix: BinaryMatrix
    sides: tuple[tuple[str, int], ...]


@dataclass(frozen=True, slots=True)
class InvariantFailure:
    """A broken internal invariant on one case; row < 0 means not row-specific."""

    case_id: str
    row: int
    description: str


@dataclass
class VerifyReport:
    cases_run: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    invariant_failures: list[InvariantFailure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def clean(self) -> bool:
        return not self.mismatches and not self.invariant_failures


def _check_case(
    case_id: str,
    matrix: BinaryMatrix,
    solvers: tuple[tuple[str, Solver], ...],
    report: VerifyReport,
) -> None:
    results = [(name, fn(matrix)) for name, fn in solvers]
    sides = tuple((name, r.side) for name, r in results)
    if len({s for _, s in sides}) > 1:
        report.mismatches.append(Mismatch(case_id, matrix, sides))
    expected_visits = matrix.rows * matrix.cols
    for name, r in results:
        if name in SINGLE_PASS_SOLVERS and r.cells_visited != expected_visits:
            report.invariant_failures.append(
                InvariantFailure(
                    case_id,
                    -1,
                    f"{name} visited {r.cells_visited} cells, "
                    f"expected {expected_visits}",
                )
            )
    report.cases_run += 1


def _check_freq_state(case_id: str, matrix: BinaryMatrix, report: VerifyReport) -> None:
    """Recompute column run lengths per row and compare to traced snapshots."""
    _, snapshots = freq_square_traced(matrix)
    runs = [0] * matrix.cols
    for i, state in enumerate(snapshots):
        row = matrix.row(i)
        for j, cell in enumerate(row):
            runs[j] = runs[j] + 1 if cell else 0
        if state.freq != tuple(runs):
            report.invariant_failures.append(
                InvariantFailure(
                    case_id, i, f"freq {state.freq} != column runs {tuple(runs)}"
                )
            )
        if not (
            state.check_max_width
            == state.check_max_height
            == state.found_max_width + 1
        ):
            report.invariant_failures.append(
                InvariantFailure(
                    case_id,
                    i,
                    "thresholds decoupled: "
                    f"width={state.check_max_width} height={state.check_max_height} "
                    f"found={state.found_max_width}",
                )
            )


def enumeration_count(max_rows: int, max_cols: int) -> int:
    """Number of distinct matrices over all shapes r <= max_rows, c <= max_cols."""
    return sum(
        2 ** (r * c) for r in range(1, max_rows + 1) for c in range(1, max_cols + 1)
    )


_BITS8 = [bytes(((byte >> (7 - t)) & 1) for t in range(8)) for byte in range(256)]


def _pattern_cells(pattern: int, width: int) -> bytes:
    """Row-major cells for a pattern integer, most significant bit first.

    Ascending pattern order is lexicographic order on the cell string, so
    the first disagreement found per shape is the minimal reproducer.
    """
    nbytes = (width + 7) // 8
    raw = pattern.to_bytes(nbytes, "big")
    bits = b"".join(_BITS8[b] for b in raw)
    return bits[nbytes * 8 - width:]


def exhaustive_sweep(
    max_rows: int,
    max_cols: int,
    solvers: tuple[tuple[str, Solver], ...] = DEFAULT_SOLVERS,
) -> VerifyReport:
    """Run every binary matrix of every shape up to max_rows x max_cols.

    Raises EnumerationCapExceededError when the total enumeration would
    exceed ENUMERATION_CAP.
    """
    total = 0
    for r in range(1, max_rows + 1):
        for c in range(1, max_cols + 1):
            total += 2 ** (r * c)
            if total > ENUMERATION_CAP:
                raise EnumerationCapExceededError(
                    f"sweep up to {max_rows}x{max_cols} exceeds "
                    f"{ENUMERATION_CAP} enumerations"
                )
    report = VerifyReport()
    start = time.perf_counter()
    for r in range(1, max_rows + 1):
        for c in range(1, max_cols + 1):
            bits = r * c
            for pattern in range(2**bits):
                matrix = BinaryMatrix(r, c, _pattern_cells(pattern, bits))
                _check_case(f"{r}x{c}#{pattern}", matrix, solvers, report)
    report.elapsed = time.perf_counter() - start
    return report


def random_campaign(
    count: int,
    max_dim: int,
    densities: set[float],
    seed: int,
    solvers: tuple[tuple[str, Solver], ...] = DEFAULT_SOLVERS,
    state_check_stride: int = 100,
) -> VerifyReport:
    """Seeded random matrices, shapes up to max_dim x max_dim, cycling densities.

    Every case gets the four-way comparison; every state_check_stride-th case
    additionally recomputes the frequency solver's per-row state from scratch.
    Identical arguments produce an identical report.
    """
    if count < 1:
        raise ValueError("count must be positive")
    density_cycle = sorted(densities)
    rng = random.Random(seed)
    report = VerifyReport()
    start = time.perf_counter()
    for index in range(count):
        density = density_cycle[index % len(density_cycle)]
        rows = rng.randint(1, max_dim)
        cols = rng.randint(1, max_dim)
        matrix_seed = rng.getrandbits(64)
        matrix = generate_matrix(GenSpec(rows, cols, density, matrix_seed))
        case_id = f"random#{index}"
        _check_case(case_id, matrix, solvers, report)
        if index % state_check_stride == 0:
            _check_freq_state(case_id, matrix, report)
    report.elapsed = time.perf_counter() - start
    return report


def edge_case_suite() -> VerifyReport:
    """Edge-case values: constant matrices and the empty matrix.

    Compares freq_square against dp_full on each, and both against the
    analytically known area.
    """
    cases: list[tuple[str, BinaryMatrix, int]] = [
        ("all_zeros_100", generate_edge_case(EdgeKind.ALL_ZEROS, 100), 0),
        ("all_ones_100", generate_edge_case(EdgeKind.ALL_ONES, 100), 10_000),
        ("single_row_1000", generate_edge_case(EdgeKind.SINGLE_ROW, 1000), 1),
        ("single_col_1000", generate_edge_case(EdgeKind.SINGLE_COL, 1000), 1),
        ("empty", EMPTY_MATRIX, 0),
    ]
    report = VerifyReport()
    start = time.perf_counter()
    for case_id, matrix, expected_area in cases:
        a = freq_square(matrix)
        b = dp_full(matrix)
        if a.side != b.side:
            report.mismatches.append(
                Mismatch(case_id, matrix, (("freq", a.side), ("dp_full", b.side)))
            )
        for name, result in (("freq", a), ("dp_full", b)):
            if result.area != expected_area:
                report.invariant_failures.append(
                    InvariantFailure(
                        case_id,
                        -1,
                        f"{name} area {result.area}, expected {expected_area}",
                    )
                )
        report.cases_run += 1
    report.elapsed = time.perf_counter() - start
    return report


def render_report(report: VerifyReport) -> str:
    """Line-oriented report text.  Deterministic: excludes elapsed time."""
    lines = [
        f"cases_run={report.cases_run}",
        f"mismatches={len(report.mismatches)}",
        f"invariant_failures={len(report.invariant_failures)}",
    ]
    for mm in report.mismatches:
        lines.append(f"mismatch case={mm.case_id} rows={mm.matrix.rows} cols={mm.matrix.cols}")
        for i in range(mm.matrix.rows):
            lines.append("  " + "".join(str(c) for c in mm.matrix.row(i)))
        lines.append("  sides " + " ".join(f"{n}={s}" for n, s in mm.sides))
    for inv in report.invariant_failures:
        where = f" row={inv.row}" if inv.row >= 0 else ""
        lines.append(f"invariant_failure case={inv.case_id}{where}: {inv.description}")
    return "\n".join(lines) + "\n"


def render_mismatch_csv(report: VerifyReport) -> str:
    """One CSV row per mismatch; cells are the row-major 0/1 string."""
    solver_names = [n for n, _ in (report.mismatches[0].sides if report.mismatches else DEFAULT_SOLVERS)]
    header = "case,rows,cols,cells," + ",".join(f"{n}_side" for n in solver_names)
    lines = [header]
    for mm in report.mismatches:
        cells = "".join(str(c) for c in mm.matrix.cells)
        sides = ",".join(str(s) for _, s in mm.sides)
        lines.append(f"{mm.case_id},{mm.matrix.rows},{mm.matrix.cols},{cells},{sides}")
    return "\n".join(lines) + "\n"
