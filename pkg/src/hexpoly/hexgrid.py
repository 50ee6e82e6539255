"""Hexagonal cell model, polyomino values and the column predicates.

Cells are addressed by ``(col, row)``.  Columns are vertical stacks of
flat-topped hexagons; neighbouring columns are offset by half a cell, so
the two right-hand neighbours of ``(c, r)`` are ``(c + 1, r)`` (upper
right) and ``(c + 1, r - 1)`` (lower right).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class Cell(NamedTuple):
    col: int
    row: int


def neighbors(c: Cell) -> set[Cell]:
    col, row = c
    return {
        Cell(col, row + 1),
        Cell(col, row - 1),
        Cell(col + 1, row),
        Cell(col + 1, row - 1),
        Cell(col - 1, row),
        Cell(col - 1, row + 1),
    }


def is_polyomino(cells: Iterable[tuple[int, int]]) -> bool:
    """True iff ``cells`` is nonempty and connected under hex adjacency."""
    todo = {Cell(*c) for c in cells}
    if not todo:
        return False
    stack = [todo.pop()]
    while stack:
        for nb in neighbors(stack.pop()):
            if nb in todo:
                todo.remove(nb)
                stack.append(nb)
    return not todo


def normalize(cells: Iterable[tuple[int, int]]) -> frozenset[Cell]:
    """Translate so that min col is 0 and the lowest cell of column 0 is row 0."""
    cells = [Cell(*c) for c in cells]
    c0 = min(c.col for c in cells)
    r0 = min(c.row for c in cells if c.col == c0)
    return frozenset(Cell(c - c0, r - r0) for c, r in cells)


@dataclass(frozen=True)
class Polyomino:
    """A translation class of hexagonal polyominoes, stored in normal form."""

    cells: frozenset[Cell]

    def __post_init__(self):
        if not is_polyomino(self.cells):
            raise ValueError("cells do not form a connected nonempty set")
        object.__setattr__(self, "cells", normalize(self.cells))

    @classmethod
    def of(cls, *cells: tuple[int, int]) -> Polyomino:
        return cls(frozenset(Cell(*c) for c in cells))

    @property
    def area(self) -> int:
        return len(self.cells)

    def reflect(self) -> Polyomino:
        """Mirror in a horizontal line.

        In skewed ``(col, row)`` coordinates the geometric flip is
        ``row -> -row - col``; plain ``row -> -row`` is not an automorphism
        of this adjacency.
        """
        return Polyomino(frozenset(Cell(c, -r - c) for c, r in self.cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))


@dataclass(frozen=True)
class FamilySpec:
    kind: str  # "all", "cc" or "cheesy"
    level: int = 0

    def __post_init__(self):
        if self.kind not in ("all", "cc", "cheesy"):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "cheesy" and self.level < 1:
            raise ValueError("cheesy level must be >= 1")
        if self.kind != "cheesy" and self.level != 0:
            raise ValueError(f"{self.kind} family takes no level")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``all``, ``cc`` or ``cheesy:m``."""
        text = text.strip().lower()
        if text in ("all", "cc"):
            return cls(text)
        kind, sep, level = text.partition(":")
        if kind == "cheesy" and sep and level.isdigit():
            return cls("cheesy", int(level))
        raise ValueError(f"bad family {text!r}; expected all, cc or cheesy:m")

    def __str__(self) -> str:
        return f"cheesy:{self.level}" if self.kind == "cheesy" else self.kind


ALL = FamilySpec("all")
CC = FamilySpec("cc")


def cheesy(m: int) -> FamilySpec:
    return FamilySpec("cheesy", m)


class Run(NamedTuple):
    start: int
    length: int

    @property
    def stop(self) -> int:
        """Last occupied row (inclusive)."""
        return self.start + self.length - 1


@dataclass(frozen=True)
class Column:
    runs: tuple[Run, ...]

    @property
    def components(self) -> int:
        return len(self.runs)

    @property
    def gaps(self) -> list[int]:
        return [b.start - a.stop - 1 for a, b in zip(self.runs, self.runs[1:])]

    @property
    def height(self) -> int:
        return self.runs[-1].stop - self.runs[0].start + 1

    @property
    def cells(self) -> int:
        return sum(r.length for r in self.runs)


def runs_of(rows: Iterable[int]) -> tuple[Run, ...]:
    """Maximal runs of consecutive integers, bottom to top."""
    runs: list[Run] = []
    for r in sorted(rows):
        if runs and runs[-1].stop == r - 1:
            runs[-1] = Run(runs[-1].start, runs[-1].length + 1)
        else:
            runs.append(Run(r, 1))
    return tuple(runs)


def column_decomposition(p: Polyomino) -> list[Column]:
    """Columns of ``p`` from left to right."""
    by_col: dict[int, list[int]] = {}
    for c, r in p.cells:
        by_col.setdefault(c, []).append(r)
    return [Column(runs_of(by_col[c])) for c in sorted(by_col)]


def run_touches(run: Run, left_rows: Iterable[int]) -> bool:
    """Does ``run`` share an edge with some occupied row of the column to its left?

    Cell ``(c, r)`` touches rows ``r - 1`` and ``r`` of column ``c + 1``.
    """
    return any(run.start <= r and run.stop >= r - 1 for r in left_rows)


def cheesy_level(p: Polyomino) -> int | None:
    """Smallest m with ``p`` level-m cheesy (0 if column-convex), or None."""
    cols = column_decomposition(p)
    if cols[0].components != 1:
        return None
    level = 0
    prev_rows: list[int] = []
    for col in cols:
        if col.components > 2:
            return None
        if prev_rows and not all(run_touches(run, prev_rows) for run in col.runs):
            return None
        level = max([level, *col.gaps])
        prev_rows = [r for run in col.runs for r in range(run.start, run.stop + 1)]
    return level


def classify(p: Polyomino, f: FamilySpec) -> bool:
    if f.kind == "all":
        return True
    if f.kind == "cc":
        return all(col.components == 1 for col in column_decomposition(p))
    level = cheesy_level(p)
    return level is not None and level <= f.level
