"""The synchronous neighborhood-growth transformation on a Hamming rectangle.

State is an occupancy pattern on an m-by-n grid (m rows, n columns).  One
step occupies every empty cell whose pair (row count + row boost, column
count + column boost) falls outside the zero-set.  Counts for an empty
cell equal the full row/column counts since the cell itself contributes
nothing.

Grids are values: step/evolve return new grids and never mutate input.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence

import numpy as np

from .diagram import YoungDiagram

INF = math.inf


class Enhancements:
    """Fixed nonnegative boosts added to every row and column count."""

    __slots__ = ("r", "c")

    def __init__(self, r: Sequence[int], c: Sequence[int]):
        rr = tuple(int(v) for v in r)
        cc = tuple(int(v) for v in c)
        if any(v < 0 for v in rr) or any(v < 0 for v in cc):
            raise ValueError("enhancements must be nonnegative")
        object.__setattr__(self, "r", rr)
        object.__setattr__(self, "c", cc)

    def __setattr__(self, name, value):
        raise AttributeError("Enhancements is immutable")

    @classmethod
    def zero(cls, m: int, n: int) -> "Enhancements":
        return cls((0,) * m, (0,) * n)

    @property
    def norm(self) -> int:
        return sum(self.r) + sum(self.c)

    def is_nonincreasing(self) -> bool:
        return all(a >= b for a, b in zip(self.r, self.r[1:])) and all(
            a >= b for a, b in zip(self.c, self.c[1:])
        )

    def __eq__(self, other):
        if not isinstance(other, Enhancements):
            return NotImplemented
        return self.r == other.r and self.c == other.c

    def __repr__(self):
        return "Enhancements(r=%r, c=%r)" % (list(self.r), list(self.c))


class Grid:
    """Occupancy on the m-by-n rectangle, with cached row/column counts.

    Cell (j, i) sits in column j (first coordinate, in [0, n-1]) and row i
    (second coordinate, in [0, m-1]).  Internally the pattern is a boolean
    array indexed [i, j].
    """

    __slots__ = ("m", "n", "_occ", "_row_counts", "_col_counts")

    def __init__(self, m: int, n: int, occ: np.ndarray):
        if m < 1 or n < 1:
            raise ValueError("grid dimensions must be positive")
        if occ.shape != (m, n):
            raise ValueError("occupancy shape %r does not match %d x %d" % (occ.shape, m, n))
        occ = occ.astype(bool, copy=True)
        occ.setflags(write=False)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_occ", occ)
        object.__setattr__(self, "_row_counts", None)
        object.__setattr__(self, "_col_counts", None)

    def __setattr__(self, name, value):
        raise AttributeError("Grid is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def empty(cls, m: int, n: int) -> "Grid":
        return cls(m, n, np.zeros((m, n), dtype=bool))

    @classmethod
    def full(cls, m: int, n: int) -> "Grid":
        return cls(m, n, np.ones((m, n), dtype=bool))

    @classmethod
    def from_cells(cls, m: int, n: int, cells: Iterable[tuple[int, int]]) -> "Grid":
        occ = np.zeros((m, n), dtype=bool)
        for j, i in cells:
            if not (0 <= j < n and 0 <= i < m):
                raise ValueError("cell (%d, %d) outside the %d x %d grid" % (j, i, m, n))
            occ[i, j] = True
        return cls(m, n, occ)

    @classmethod
    def from_bitmask(cls, m: int, n: int, mask: int) -> "Grid":
        """Bit i*n + j encodes cell (j, i)."""
        occ = np.zeros((m, n), dtype=bool)
        for i in range(m):
            for j in range(n):
                if (mask >> (i * n + j)) & 1:
                    occ[i, j] = True
        return cls(m, n, occ)

    @classmethod
    def from_json_dict(cls, d: dict) -> "Grid":
        try:
            m, n, cells = int(d["m"]), int(d["n"]), d["cells"]
            return cls.from_cells(m, n, [(int(j), int(i)) for j, i in cells])
        except (KeyError, TypeError) as exc:
            raise ValueError("grid JSON needs m, n, and a cells list of [j, i] pairs") from exc

    # -- views ----------------------------------------------------------------

    @property
    def occupancy(self) -> np.ndarray:
        return self._occ

    @property
    def row_counts(self) -> np.ndarray:
        if self._row_counts is None:
            rc = self._occ.sum(axis=1).astype(np.int64)
            rc.setflags(write=False)
            object.__setattr__(self, "_row_counts", rc)
        return self._row_counts

    @property
    def col_counts(self) -> np.ndarray:
        if self._col_counts is None:
            cc = self._occ.sum(axis=0).astype(np.int64)
            cc.setflags(write=False)
            object.__setattr__(self, "_col_counts", cc)
        return self._col_counts

    @property
    def count(self) -> int:
        return int(self._occ.sum())

    def is_full(self) -> bool:
        return bool(self._occ.all())

    def cell(self, j: int, i: int) -> bool:
        return bool(self._occ[i, j])

    def cells(self) -> list[tuple[int, int]]:
        """Occupied cells as (j, i) pairs in lexicographic order."""
        out = [(int(j), int(i)) for i, j in zip(*np.nonzero(self._occ))]
        out.sort()
        return out

    def to_bitmask(self) -> int:
        mask = 0
        for i, j in zip(*np.nonzero(self._occ)):
            mask |= 1 << (int(i) * self.n + int(j))
        return mask

    def to_json_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "cells": [[j, i] for j, i in self.cells()]}

    # -- set-style operations --------------------------------------------------

    def union(self, other: "Grid") -> "Grid":
        self._require_same_shape(other)
        return Grid(self.m, self.n, self._occ | other._occ)

    def issubset(self, other: "Grid") -> bool:
        self._require_same_shape(other)
        return bool((~self._occ | other._occ).all())

    def transpose(self) -> "Grid":
        """Swap coordinates: cell (j, i) becomes (i, j) on an n-by-m grid."""
        return Grid(self.n, self.m, self._occ.T)

    def permute(self, row_perm: Sequence[int] | None = None, col_perm: Sequence[int] | None = None) -> "Grid":
        occ = self._occ
        if row_perm is not None:
            occ = occ[np.asarray(row_perm), :]
        if col_perm is not None:
            occ = occ[:, np.asarray(col_perm)]
        return Grid(self.m, self.n, occ)

    def is_young_diagram(self) -> bool:
        """True iff the occupied set is downward closed in both coordinates."""
        rc = self.row_counts
        for i in range(self.m):
            if not self._occ[i, : rc[i]].all():
                return False
        return bool((rc[:-1] >= rc[1:]).all())

    def _require_same_shape(self, other: "Grid"):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("grid dimensions differ")

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and bool((self._occ == other._occ).all())

    def __repr__(self):
        return "Grid(%d x %d, %d occupied)" % (self.m, self.n, self.count)


# -- the transformation --------------------------------------------------------


def _check_instance(g: Grid, zero: YoungDiagram, enh: Optional[Enhancements]):
    if not zero.fits(g.m, g.n):
        raise ValueError("zero-set exceeds the grid box; clip it first")
    if enh is not None and (len(enh.r) != g.m or len(enh.c) != g.n):
        raise ValueError("enhancement lengths do not match the grid")


def step(g: Grid, zero: YoungDiagram, enh: Optional[Enhancements] = None) -> Grid:
    """One synchronous update; occupied cells stay occupied."""
    _check_instance(g, zero, enh)
    occ = g.occupancy
    r = np.asarray(enh.r, dtype=np.int64) if enh is not None else 0
    c = np.asarray(enh.c, dtype=np.int64) if enh is not None else 0
    x = g.row_counts + r
    y = g.col_counts + c
    # (x, y) escapes the zero-set iff y >= height of column x (0 past the width).
    w = zero.width
    hpad = zero.heights_padded(w + 1)
    thresh = hpad[np.minimum(x, w)]
    newly = ~occ & (y[None, :] >= thresh[:, None])
    if not newly.any():
        return g
    out = Grid(g.m, g.n, occ | newly)
    # counts shift only by the additions; carry them over instead of resumming
    rc = g.row_counts + newly.sum(axis=1)
    cc = g.col_counts + newly.sum(axis=0)
    rc.setflags(write=False)
    cc.setflags(write=False)
    object.__setattr__(out, "_row_counts", rc)
    object.__setattr__(out, "_col_counts", cc)
    return out


def evolve(g: Grid, zero: YoungDiagram, enh: Optional[Enhancements] = None, latency=INF) -> Grid:
    """Iterate the update ``latency`` times, or to the fixpoint when infinite.

    Every non-fixpoint step adds at least one cell, so the fixpoint is
    reached within m*n steps; exceeding that cap is a defect.
    """
    _check_instance(g, zero, enh)
    if latency != INF:
        latency = int(latency)
        if latency < 0:
            raise ValueError("latency must be nonnegative")
    cur = g
    steps = 0
    cap = g.m * g.n + 1
    while latency == INF or steps < latency:
        nxt = step(cur, zero, enh)
        if nxt is cur or nxt == cur:
            break
        cur = nxt
        steps += 1
        assert steps <= cap, "fixpoint not reached within m*n steps"
    return cur


def is_dominating(g: Grid, zero: YoungDiagram, latency=1) -> bool:
    """True iff the grid is fully occupied after ``latency`` steps."""
    return evolve(g, zero, latency=latency).is_full()


def latency_of(g: Grid, zero: YoungDiagram) -> Optional[int]:
    """Smallest L with the L-step image full, or None if growth stalls short."""
    _check_instance(g, zero, None)
    cur = g
    steps = 0
    while True:
        if cur.is_full():
            return steps
        nxt = step(cur, zero)
        if nxt == cur:
            return None
        cur = nxt
        steps += 1


def realize_enhancements(g: Grid, enh: Enhancements) -> Grid:
    """A superset of g whose counts meet count + boost, capped at capacity.

    Adds boost-many cells per row into the leftmost empty cells, then per
    column into the lowest empty cells.  Any valid filling would do; this
    one is fixed so results are reproducible.
    """
    if len(enh.r) != g.m or len(enh.c) != g.n:
        raise ValueError("enhancement lengths do not match the grid")
    occ = g.occupancy.copy()
    row_need = np.minimum(g.row_counts + np.asarray(enh.r, dtype=np.int64), g.n)
    col_need = np.minimum(g.col_counts + np.asarray(enh.c, dtype=np.int64), g.m)
    for i in range(g.m):
        have = int(occ[i].sum())
        for j in range(g.n):
            if have >= row_need[i]:
                break
            if not occ[i, j]:
                occ[i, j] = True
                have += 1
    for j in range(g.n):
        have = int(occ[:, j].sum())
        for i in range(g.m):
            if have >= col_need[j]:
                break
            if not occ[i, j]:
                occ[i, j] = True
                have += 1
    return Grid(g.m, g.n, occ)
