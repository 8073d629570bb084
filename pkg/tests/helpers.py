"""Shared test utilities: random instances and definitional re-implementations.

The naive_* functions re-derive the dynamics straight from the definition
(scan neighborhoods cell by cell, test membership point by point) so the
production code is checked against something with no shared machinery.
"""

from __future__ import annotations

import numpy as np

from ydom.diagram import YoungDiagram
from ydom.dynamics import Enhancements, Grid


def rand_diagram(rng, max_w, max_h) -> YoungDiagram:
    w = rng.randint(0, max_w)
    hs = []
    cap = max_h
    for _ in range(w):
        cap = rng.randint(0, cap)
        hs.append(cap)
    return YoungDiagram(hs)


def rand_grid(rng, m, n, density=0.4) -> Grid:
    occ = np.zeros((m, n), dtype=bool)
    for i in range(m):
        for j in range(n):
            if rng.random() < density:
                occ[i, j] = True
    return Grid(m, n, occ)


def point_in_diagram(zero: YoungDiagram, x: int, y: int) -> bool:
    # membership by scanning the point list, no height profile involved
    return (x, y) in set(zero.points())


def naive_step(g: Grid, zero: YoungDiagram, enh: Enhancements | None = None) -> Grid:
    m, n = g.m, g.n
    r = enh.r if enh is not None else (0,) * m
    c = enh.c if enh is not None else (0,) * n
    occ = g.occupancy
    out = occ.copy()
    for i in range(m):
        for j in range(n):
            if occ[i, j]:
                continue
            row_neighbors = sum(1 for jj in range(n) if jj != j and occ[i, jj])
            col_neighbors = sum(1 for ii in range(m) if ii != i and occ[ii, j])
            if not point_in_diagram(zero, row_neighbors + r[i], col_neighbors + c[j]):
                out[i, j] = True
    return Grid(m, n, out)


def naive_is_dominating(g: Grid, zero: YoungDiagram, latency: int) -> bool:
    cur = g
    for _ in range(latency):
        if cur.is_full():
            return True
        cur = naive_step(cur, zero)
    return cur.is_full()
