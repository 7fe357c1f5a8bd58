"""Maximal-square solvers for binary matrices.

Four independent routes to the same answer: a frequency-tracking single-pass
algorithm, the classic full-table DP recurrence, its row-rolling O(cols)-space
variant, and a direct window-checking oracle.  Every solver reports how many
cells it visited, and solvers can account their auxiliary allocations to an
AllocationAudit, so the single-pass and bounded-space claims are testable
rather than taken on faith.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import BinaryMatrix

ORACLE_CELL_CAP = 10_000


class OracleCapExceededError(ValueError):
    """Input too large for the brute-force oracle."""


@dataclass(frozen=True, slots=True)
class SquareResult:
    """Maximal-square answer plus the solver's cell-visit count."""

    side: int
    area: int
    cells_visited: int


@dataclass(frozen=True, slots=True)
class FreqState:
    """Frequency-solver state snapshot taken after a row finishes.

    freq[j] is the run of consecutive ones in column j ending at that row;
    the two thresholds always equal found_max_width + 1.
    """

    freq: tuple[int, ...]
    found_max_width: int
    check_max_width: int
    check_max_height: int
    counter: int


class AllocationAudit:
    """Tallies auxiliary working-storage elements a solver allocates.

    Solvers report element counts as they allocate; `peak_elements` is the
    high-water mark.  The input matrix itself is never counted.
    """

    def __init__(self) -> None:
        self.peak_elements = 0
        self._live = 0

    def add(self, count: int) -> None:
        self._live += count
        if self._live > self.peak_elements:
            self.peak_elements = self._live

    def release(self, count: int) -> None:
        self._live -= count


def _freq_core(
    m: BinaryMatrix,
    snapshots: list[FreqState] | None,
    audit: AllocationAudit | None,
) -> SquareResult:
    rows, cols, cells = m.rows, m.cols, m.cells
    if rows == 0 or cols == 0:
        return SquareResult(0, 0, 0)
    freq = [0] * cols
    if audit is not None:
        audit.add(cols)
    found_max_width = 0
    check_max_width = 1
    check_max_height = 1
    counter = 0
    visited = 0
    for i in range(rows):
        row = cells[i * cols:(i + 1) * cols]
        for j, cell in enumerate(row):
            visited += 1
            if cell:
                f = freq[j] + 1
                freq[j] = f
                if check_max_height <= f:
                    counter += 1
                    if check_max_width == counter:
                        found_max_width += 1
                        check_max_width += 1
                        check_max_height += 1
                        counter = 0
                    # a satisfied column skips the trailing reset
                    continue
            else:
                freq[j] = 0
            counter = 0
        counter = 0
        if snapshots is not None:
            snapshots.append(
                FreqState(
                    tuple(freq),
                    found_max_width,
                    check_max_width,
                    check_max_height,
                    counter,
                )
            )
    return SquareResult(found_max_width, found_max_width * found_max_width, visited)


def freq_square(m: BinaryMatrix, audit: AllocationAudit | None = None) -> SquareResult:
    """Single-pass maximal square via per-column run counts and a width counter.

    Per cell: a 1 extends its column run; if the run reaches the current
    height threshold the horizontal counter advances, and when the counter
    reaches the width threshold a square of that size is confirmed and both
    thresholds grow by one.  Any break resets the counter.  One pass, one
    O(cols) vector, no table.
    """
    return _freq_core(m, None, audit)


def freq_square_traced(
    m: BinaryMatrix, audit: AllocationAudit | None = None
) -> tuple[SquareResult, list[FreqState]]:
    """freq_square plus a FreqState snapshot after each row.

    Tracing shares the solver core, so the result is identical to
    freq_square on every input.
    """
    snapshots: list[FreqState] = []
    result = _freq_core(m, snapshots, audit)
    return result, snapshots


def dp_full(m: BinaryMatrix, audit: AllocationAudit | None = None) -> SquareResult:
    """Full-table DP: cell (i, j) holds the best square side ending there.

    A 1-cell extends the three neighbors above/left/diagonal by
    min(...) + 1; out-of-range neighbors read as 0.
    """
    rows, cols, cells = m.rows, m.cols, m.cells
    if rows == 0 or cols == 0:
        return SquareResult(0, 0, 0)
    table = [[0] * cols for _ in range(rows)]
    if audit is not None:
        audit.add(rows * cols)
    best = 0
    visited = 0
    prev: list[int] = []
    for i in range(rows):
        cur = table[i]
        row = cells[i * cols:(i + 1) * cols]
        for j, cell in enumerate(row):
            visited += 1
            if cell:
                if i == 0 or j == 0:
                    v = 1
                else:
                    v = min(prev[j], cur[j - 1], prev[j - 1]) + 1
                cur[j] = v
                if v > best:
                    best = v
        prev = cur
    return SquareResult(best, best * best, visited)


def dp_rows(m: BinaryMatrix, audit: AllocationAudit | None = None) -> SquareResult:
    """Row-rolling DP: same recurrence as dp_full, keeping only two rows."""
    rows, cols, cells = m.rows, m.cols, m.cells
    if rows == 0 or cols == 0:
        return SquareResult(0, 0, 0)
    prev = [0] * cols
    cur = [0] * cols
    if audit is not None:
        audit.add(2 * cols)
    best = 0
    visited = 0
    for i in range(rows):
        row = cells[i * cols:(i + 1) * cols]
        for j, cell in enumerate(row):
            visited += 1
            if cell:
                if i == 0 or j == 0:
                    v = 1
                else:
                    v = min(prev[j], cur[j - 1], prev[j - 1]) + 1
                cur[j] = v
                if v > best:
                    best = v
            else:
                cur[j] = 0
        prev, cur = cur, prev
    return SquareResult(best, best * best, visited)


def brute_force_square(
    m: BinaryMatrix,
    audit: AllocationAudit | None = None,
    cap: int = ORACLE_CELL_CAP,
) -> SquareResult:
    """Direct oracle: grow a square at every anchor while its border is all ones.

    Checks the (top, left, k) windows explicitly; once side k fails at an
    anchor, every larger side there contains the same zero and is skipped.
    cells_visited counts raw cell reads, which exceed rows*cols.
    """
    rows, cols, cells = m.rows, m.cols, m.cells
    if rows * cols > cap:
        raise OracleCapExceededError(
            f"{rows}x{cols} = {rows * cols} cells exceeds oracle cap {cap}"
        )
    if audit is not None:
        audit.add(0)  # no auxiliary storage
    best = 0
    visited = 0
    for top in range(rows):
        row_limit = rows - top
        for left in range(cols):
            limit = min(row_limit, cols - left)
            k = 0
            while k < limit:
                # border of the (k+1)-sided square: new bottom row + new right column
                ok = True
                base = (top + k) * cols
                for j in range(left, left + k + 1):
                    visited += 1
                    if not cells[base + j]:
                        ok = False
                        break
                if ok:
                    col = left + k
                    for i in range(top, top + k):
                        visited += 1
                        if not cells[i * cols + col]:
                            ok = False
                            break
                if not ok:
                    break
                k += 1
            if k > best:
                best = k
    return SquareResult(best, best * best, visited)
