"""Column-by-column transfer counting of level-m cheesy polyominoes.

A column is one run ``(a, 0, 0)`` or two runs ``(a, g, b)``: ``a`` cells,
a gap of ``g`` cells, then ``b`` cells.  Because every run of a column
must touch the column to its left, the only state carried from one column
to the next is the shape of the previous column.

Level 0 is accepted as a synonym for column-convex (single runs only).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np


class ColumnShape(NamedTuple):
    a: int
    g: int = 0
    b: int = 0

    @property
    def cells(self) -> int:
        return self.a + self.b

    @property
    def height(self) -> int:
        return self.a + self.g + self.b

    @property
    def runs(self) -> list[tuple[int, int]]:
        """Inclusive row intervals with the bottom cell at row 0."""
        if self.g == 0:
            return [(0, self.a - 1)]
        top = self.a + self.g
        return [(0, self.a - 1), (top, top + self.b - 1)]

    def rows(self) -> list[int]:
        return [r for lo, hi in self.runs for r in range(lo, hi + 1)]

    def is_valid(self, level: int) -> bool:
        if self.a < 1 or self.g < 0 or self.b < 0:
            return False
        if (self.g == 0) != (self.b == 0):
            return False
        return self.g <= level


def shapes(level: int, max_cells: int) -> list[ColumnShape]:
    """All column shapes of a level with at most ``max_cells`` cells, by cell count."""
    out = [ColumnShape(a) for a in range(1, max_cells + 1)]
    for g in range(1, level + 1):
        for a in range(1, max_cells):
            for b in range(1, max_cells - a + 1):
                out.append(ColumnShape(a, g, b))
    out.sort(key=lambda s: (s.cells, s.g, s.a))
    return out


def placements(prev: ColumnShape, next: ColumnShape, anchor: int = 0) -> int:
    """Number of vertical offsets at which ``next`` can follow ``prev``.

    Every run of ``next`` must share an edge with an occupied cell of
    ``prev``; cell ``(c, r)`` touches rows ``r - 1`` and ``r`` of column
    ``c + 1``.  ``anchor`` shifts ``prev`` to an absolute row, which must
    not change the answer.
    """
    occupied = [r + anchor for r in prev.rows()]
    touch = {x for r in occupied for x in (r - 1, r)}
    count = 0
    for d in range(anchor - next.height - 1, anchor + prev.height + 2):
        if all(any(lo + d <= x <= hi + d for x in touch) for lo, hi in next.runs):
            count += 1
    return count


def _merge(intervals: list[tuple[np.ndarray, np.ndarray]]):
    """Two possibly overlapping interval arrays -> two disjoint ones (second may be empty)."""
    (p1, q1), (p2, q2) = intervals
    overlap = p2 <= q1 + 1
    lo2 = np.where(overlap, 1, p2)
    hi2 = np.where(overlap, 0, q2)
    hi1 = np.where(overlap, np.maximum(q1, q2), q1)
    return [(p1, hi1), (lo2, hi2)]


def _isect(x, y):
    (p1, q1), (p2, q2) = x, y
    return np.maximum(0, np.minimum(q1, q2) - np.maximum(p1, p2) + 1)


def transfer_row(prev: ColumnShape, nxt: dict[str, np.ndarray]) -> np.ndarray:
    """placements(prev, s) for every shape s described by arrays a, g, b.

    A run of length L starting at row s meets the interval [p, q] iff
    s lies in [p - L + 1, q].  The prev shadow is a union of at most two
    intervals, so the admissible offsets for each run are too, and the
    count is the size of the intersection of those two unions.
    """
    a, g, b = nxt["a"], nxt["g"], nxt["b"]
    if prev.g == 0:
        shadow = [(-1, prev.a - 1)]
    else:
        top = prev.a + prev.g
        shadow = [(-1, prev.a - 1), (top - 1, top + prev.b - 1)]
    if len(shadow) == 2 and shadow[1][0] <= shadow[0][1] + 1:
        shadow = [(shadow[0][0], shadow[1][1])]

    def offsets(length, shift):
        parts = [(p - length + 1 - shift, q - shift + 0 * length) for p, q in shadow]
        if len(parts) == 1:
            empty = (np.ones_like(length), np.zeros_like(length))
            return [parts[0], empty]
        return _merge(parts)

    lower = offsets(a, 0)
    two = g > 0
    upper = offsets(np.where(two, b, 1), np.where(two, a + g, 0))
    both = sum(_isect(x, y) for x in lower for y in upper)
    single = _isect(lower[0], lower[0]) + _isect(lower[1], lower[1])
    return np.where(two, both, single).astype(np.int64)


@lru_cache(maxsize=32)
def _transfer(level: int, max_cells: int) -> tuple[tuple[ColumnShape, ...], np.ndarray]:
    sh = shapes(level, max_cells)
    arrays = {k: np.array([getattr(s, k) for s in sh], dtype=np.int64) for k in "agb"}
    cells = arrays["a"] + arrays["b"]
    mat = np.zeros((len(sh), len(sh)), dtype=np.int64)
    for i, s in enumerate(sh):
        room = max_cells - s.cells
        if room < 1:
            continue
        k = int(np.searchsorted(cells, room, side="right"))
        mat[i, :k] = transfer_row(s, {key: arr[:k] for key, arr in arrays.items()})
    mat.setflags(write=False)
    return tuple(sh), mat


@dataclass
class Layers:
    """``table[n, i]``: polyominoes of area n whose last column is ``shapes[i]``."""

    level: int
    max_area: int
    shapes: tuple[ColumnShape, ...]
    table: np.ndarray  # object dtype, exact ints


def layers(level: int, max_area: int) -> Layers:
    if level < 0:
        raise ValueError("level must be >= 0")
    if max_area < 1:
        raise ValueError("max_area must be >= 1")
    sh, mat = _transfer(level, max_area)
    cells = np.array([s.cells for s in sh])
    bounds = [int(np.searchsorted(cells, k, side="right")) for k in range(max_area + 1)]
    objmat = mat.astype(object)
    single = {s.a: i for i, s in enumerate(sh) if s.g == 0}
    table = np.zeros((max_area + 1, len(sh)), dtype=object)
    for n in range(1, max_area + 1):
        for k in range(1, n + 1):
            cols = slice(bounds[k - 1], bounds[k])
            if cols.start == cols.stop:
                continue
            m = bounds[n - k]
            if m:
                table[n, cols] = table[n - k, :m].dot(objmat[:m, cols])
        # first column: a single run of n cells
        table[n, single[n]] += 1
    return Layers(level, max_area, sh, table)


def count(level: int, max_area: int) -> list[int]:
    """Number of level-m cheesy polyominoes of area 1..max_area."""
    lay = layers(level, max_area)
    return [int(x) for x in lay.table[1:].sum(axis=1)]


def last_column_series(
    level: int, max_area: int, weight: Callable[[ColumnShape], Fraction | int]
) -> list:
    """Coefficients of q^0..q^max_area of sum over polyominoes of q^area * weight(last column)."""
    lay = layers(level, max_area)
    w = np.array([weight(s) for s in lay.shapes], dtype=object)
    return [0] + [lay.table[n].dot(w) for n in range(1, max_area + 1)]
