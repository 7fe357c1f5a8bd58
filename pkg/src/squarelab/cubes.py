"""Maximal k x k x k cube detection in binary volumes.

A rolling depth-frequency matrix counts consecutive ones along the depth
axis per (row, col).  A k x k window of values >= k at depth d certifies a
cube of side k ending there, so each probe reduces to a 2D maximal-square
question on a thresholded matrix.  The search over k is a binary search,
justified by cube-existence being monotone in k.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .grid import BinaryMatrix, BinaryVolume
from .squares import OracleCapExceededError, dp_full

CUBE_ORACLE_CELL_CAP = 4096


class ShapeMismatchError(ValueError):
    """Layer shape differs from the frequency matrix shape."""


@dataclass
class DepthFreqMatrix:
    """Per-(row, col) count of consecutive ones along depth, ending at the
    last layer applied.  Updated in place as layers stream through."""

    rows: int
    cols: int
    values: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.values:
            self.values = [0] * (self.rows * self.cols)
        if len(self.values) != self.rows * self.cols:
            raise ValueError(
                f"value count {len(self.values)} != {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "DepthFreqMatrix":
        flat = [v for row in rows for v in row]
        return cls(len(rows), len(rows[0]) if rows else 0, flat)

    def get(self, i: int, j: int) -> int:
        return self.values[i * self.cols + j]


@dataclass(frozen=True, slots=True)
class CubeResult:
    """Maximal cube side plus the count of volume-cell reads performed."""

    side: int
    volume_visited: int


def depth_freq_update(f: DepthFreqMatrix, layer: BinaryMatrix) -> DepthFreqMatrix:
    """Advance f by one layer: increment counts under ones, reset under zeros.

    Mutates f in place and returns it.  Applying layer 0 to an all-zeros f
    reproduces the initial state (counts equal the layer itself).
    """
    if (f.rows, f.cols) != (layer.rows, layer.cols):
        raise ShapeMismatchError(
            f"layer is {layer.rows}x{layer.cols}, "
            f"frequency matrix is {f.rows}x{f.cols}"
        )
    values = f.values
    for idx, cell in enumerate(layer.cells):
        values[idx] = values[idx] + 1 if cell else 0
    return f


def exists_cube_at_depth(f: DepthFreqMatrix, k: int) -> bool:
    """True iff some k x k window of f has all entries >= k.

    Thresholding f at k turns the question into maximal-square detection:
    the window exists exactly when the binarized matrix holds a square of
    side >= k.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if f.rows < k or f.cols < k:
        return False
    binarized = BinaryMatrix(
        f.rows, f.cols, bytes(1 if v >= k else 0 for v in f.values)
    )
    return dp_full(binarized).side >= k


def _probe(v: BinaryVolume, k: int) -> tuple[bool, int]:
    """Sweep all depths with a rolling frequency matrix, checking for side k."""
    f = DepthFreqMatrix(v.rows, v.cols)
    layer_cells = v.rows * v.cols
    reads = 0
    for d in range(v.depth):
        depth_freq_update(f, v.layer(d))
        reads += layer_cells
        if d >= k - 1 and exists_cube_at_depth(f, k):
            return True, reads
    return False, reads


def max_cube(v: BinaryVolume) -> CubeResult:
    """Largest all-ones cube side via binary search over feasible sides.

    A cube of side k contains cubes of every smaller side, so feasibility is
    monotone and binary search over [1, min(depth, rows, cols)] is sound.
    Each probe is a fresh depth sweep in O(depth * rows * cols).
    """
    hi = min(v.depth, v.rows, v.cols)
    lo = 1
    best = 0
    visited = 0
    while lo <= hi:
        mid = (lo + hi) // 2
        found, reads = _probe(v, mid)
        visited += reads
        if found:
            best = mid
            lo = mid + 1
        else:
            hi = mid - 1
    return CubeResult(best, visited)


def brute_force_cube(
    v: BinaryVolume, cap: int = CUBE_ORACLE_CELL_CAP
) -> CubeResult:
    """Direct oracle: grow a cube at every anchor while its new shell is all ones.

    Growing side k to k+1 adds three faces; a zero in any face stops growth
    at that anchor, and larger sides there are skipped since they contain it.
    """
    depth, rows, cols, cells = v.depth, v.rows, v.cols, v.cells
    total = depth * rows * cols
    if total > cap:
        raise OracleCapExceededError(
            f"{depth}x{rows}x{cols} = {total} cells exceeds cube oracle cap {cap}"
        )
    best = 0
    visited = 0
    for d0 in range(depth):
        for i0 in range(rows):
            for j0 in range(cols):
                limit = min(depth - d0, rows - i0, cols - j0)
                k = 0
                while k < limit:
                    ok = True
                    # face at depth d0+k: full (k+1)^2 square
                    d = d0 + k
                    for i in range(i0, i0 + k + 1):
                        base = (d * rows + i) * cols
                        for j in range(j0, j0 + k + 1):
                            visited += 1
                            if not cells[base + j]:
                                ok = False
                                break
                        if not ok:
                            break
                    # face at row i0+k over earlier depths
                    if ok:
                        i = i0 + k
                        for d in range(d0, d0 + k):
                            base = (d * rows + i) * cols
                            for j in range(j0, j0 + k + 1):
                                visited += 1
                                if not cells[base + j]:
                                    ok = False
                                    break
                            if not ok:
                                break
                    # face at col j0+k over the remaining interior
                    if ok:
                        j = j0 + k
                        for d in range(d0, d0 + k):
                            base = d * rows * cols + j
                            for i in range(i0, i0 + k):
                                visited += 1
                                if not cells[base + i * cols]:
                                    ok = False
                                    break
                            if not ok:
                                break
                    if not ok:
                        break
                    k += 1
                if k > best:
                    best = k
    return CubeResult(best, visited)
