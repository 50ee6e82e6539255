"""Pure-Python twin of the native enumeration kernel.

Same search order, same level codes and the same branch partitioning as
``_kernels.pyx``; used when the extension is not built and as the
reference the native kernel is tested against.
"""
from __future__ import annotations

from typing import Callable

MAXN = 31


def level_code(colmask: list[int], n: int) -> int:
    """Minimal cheesy level of the polyomino held in ``colmask``, else n + 1."""
    level = 0
    prev = 0
    for c in range(n):
        m = colmask[c]
        if not m:
            break
        comps = bin(m & ~(m << 1)).count("1")
        if comps > 2 or (c == 0 and comps != 1):
            return n + 1
        low = m & -m
        lower = m & ~(m + low)
        upper = m ^ lower
        if c:
            shadow = prev | (prev >> 1)
            if not lower & shadow or (upper and not upper & shadow):
                return n + 1
        if upper:
            gap = ((upper & -upper).bit_length() - 1) - (lower.bit_length() - 1) - 1
            level = max(level, gap)
        prev = m
    return level


def search(
    n: int,
    visit: Callable[[list[tuple[int, int]], list[int]], None],
    split_depth: int = 0,
    nparts: int = 1,
    part: int = 0,
) -> None:
    """Redelmeier search rooted at (0, 0); calls ``visit(cells, colmask)`` per node.

    Cells lexicographically below the root (col < 0, or col == 0 and
    row < 0) are never added, so each translation class is produced once,
    anchored at its normal form.
    """
    if not 1 <= n <= MAXN:
        raise ValueError(f"kernel supports 1 <= n <= {MAXN}")
    if not 0 <= part < nparts:
        raise ValueError("need 0 <= part < nparts")
    if nparts == 1:
        split_depth = 0
    offset = n
    seen: set[tuple[int, int]] = {(0, 0)}
    colmask = [0] * (n + 1)
    cells: list[tuple[int, int]] = []
    split_index = 0

    def grow(untried: list[tuple[int, int]], depth: int) -> None:
        nonlocal split_index
        untried = list(untried)
        while untried:
            cell = untried.pop()
            col, row = cell
            counted = True
            if depth + 1 == split_depth:
                counted = split_index % nparts == part
                split_index += 1
                if not counted:
                    continue
            elif depth + 1 < split_depth:
                counted = part == 0

            bit = 1 << (row + offset)
            colmask[col] |= bit
            cells.append(cell)
            if counted:
                visit(cells, colmask)
            if depth + 1 < n:
                new = []
                for nb in (
                    (col, row + 1),
                    (col, row - 1),
                    (col + 1, row),
                    (col + 1, row - 1),
                    (col - 1, row),
                    (col - 1, row + 1),
                ):
                    nc, nr = nb
                    if nc < 0 or (nc == 0 and nr < 0) or nc >= n or not -n < nr < n:
                        continue
                    if nb in seen:
                        continue
                    seen.add(nb)
                    new.append(nb)
                grow(untried + new, depth + 1)
                seen.difference_update(new)
            cells.pop()
            colmask[col] &= ~bit

    grow([(0, 0)], 0)


def tally(n: int, split_depth: int = 0, nparts: int = 1, part: int = 0) -> list[list[int]]:
    hist = [[0] * (n + 2) for _ in range(n + 1)]

    def visit(cells, colmask):
        hist[len(cells)][level_code(colmask, n)] += 1

    search(n, visit, split_depth, nparts, part)
    return hist
