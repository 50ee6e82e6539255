"""Exhaustive enumeration of fixed hexagonal polyominoes, tallied by family."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import _pykernels
from .hexgrid import ALL, Cell, FamilySpec, Polyomino, cheesy_level, normalize

try:
    from . import _kernels as _native
except ImportError:  # extension not built
    _native = None

log = logging.getLogger(__name__)

DEFAULT_CAP = 14
# depth at which the search tree is cut into independent branches for workers
SPLIT_DEPTH = 4


class EnumerationCapError(RuntimeError):
    """Requested area exceeds the configured enumeration cap."""


def native_available() -> bool:
    return _native is not None


def _kernel(backend: str):
    if backend == "auto":
        return _native if _native is not None else _pykernels
    if backend == "native":
        if _native is None:
            raise RuntimeError("native kernel not built; reinstall with Cython available")
        return _native
    if backend == "python":
        return _pykernels
    raise ValueError(f"unknown backend {backend!r}")


def _check_area(max_area: int, cap: int) -> None:
    if max_area < 1:
        raise ValueError("max_area must be >= 1")
    if max_area > cap:
        raise EnumerationCapError(f"max_area={max_area} exceeds enumeration cap {cap}")


@dataclass
class CountTable:
    """Counts per (family, area) for areas 1..max_area.

    ``levels[n][k]`` holds how many n-celled polyominoes have minimal cheesy
    level k (k = 0 means column-convex); ``levels[n][-1]`` counts those
    that are cheesy at no level.  Every family count is a partial sum.
    """

    max_area: int
    levels: list[list[int]] = field(repr=False)

    def count(self, family: FamilySpec, n: int) -> int:
        if not 1 <= n <= self.max_area:
            raise IndexError(n)
        row = self.levels[n]
        if family.kind == "all":
            return sum(row)
        if family.kind == "cc":
            return row[0]
        return sum(row[: min(family.level, len(row) - 2) + 1])

    def column(self, family: FamilySpec) -> list[int]:
        return [self.count(family, n) for n in range(1, self.max_area + 1)]

    def __getitem__(self, key: tuple[FamilySpec, int]) -> int:
        return self.count(*key)


def _run_part(args):
    backend, n, split_depth, nparts, part = args
    return _kernel(backend).tally(n, split_depth, nparts, part)


def tally_levels(
    max_area: int,
    *,
    backend: str = "auto",
    threads: int = 1,
    cap: int = DEFAULT_CAP,
) -> CountTable:
    """Enumerate every polyomino of area <= max_area once and histogram its level."""
    _check_area(max_area, cap)
    kernel = _kernel(backend)
    if threads <= 1 or max_area <= SPLIT_DEPTH:
        levels = kernel.tally(max_area)
    else:
        jobs = [(backend, max_area, SPLIT_DEPTH, threads, p) for p in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_run_part, jobs))
        levels = [[sum(col) for col in zip(*rows)] for rows in zip(*parts)]
    log.debug("enumerated %d polyominoes up to area %d", sum(map(sum, levels)), max_area)
    return CountTable(max_area, levels)


def enumerate_all(
    max_area: int,
    families: Iterable[FamilySpec] = (ALL,),
    *,
    backend: str = "auto",
    threads: int = 1,
    cap: int = DEFAULT_CAP,
) -> dict[FamilySpec, list[int]]:
    """Counts for areas 1..max_area of each requested family."""
    table = tally_levels(max_area, backend=backend, threads=threads, cap=cap)
    return {f: table.column(f) for f in families}


def enumerate_stream(
    max_area: int,
    visitor: Callable[[Polyomino], None],
    *,
    cap: int = DEFAULT_CAP,
    debug: bool = False,
) -> None:
    """Call ``visitor`` once per fixed polyomino of area <= max_area.

    Polyominoes arrive already normalized, in search order.  With
    ``debug=True`` the bitmask level computed during the search is
    checked against :func:`hexgrid.cheesy_level` for every polyomino.
    """
    _check_area(max_area, cap)

    def visit(cells, colmask):
        p = Polyomino.__new__(Polyomino)
        object.__setattr__(p, "cells", frozenset(Cell(c, r) for c, r in cells))
        if debug:
            assert normalize(p.cells) == p.cells
            code = _pykernels.level_code(colmask, max_area)
            level = cheesy_level(p)
            expected = max_area + 1 if level is None else level
            assert code == expected, (sorted(p.cells), code, expected)
        visitor(p)

    _pykernels.search(max_area, visit)


def iter_polyominoes(max_area: int, *, cap: int = DEFAULT_CAP) -> list[Polyomino]:
    out: list[Polyomino] = []
    enumerate_stream(max_area, out.append, cap=cap)
    return out
