"""Ground-truth computation on small instances.

Four independent routes: exhaustive bitset search over initial sets,
a profile search over row/column margin pairs with a flow feasibility
check, brute-force minimization over boost vectors, and brute-force
bipartite extremal edge counts.  These are the reference values every
formula and algorithm in the package is tested against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from . import _kernels
from .diagram import YoungDiagram
from .dynamics import INF, Grid
from .errors import BudgetExceededError, LimitExceededError

DEFAULT_MAX_CELLS = 25


def _steps_cap(m: int, n: int, latency) -> int:
    if latency == INF:
        return m * n + 1
    latency = int(latency)
    if latency < 0:
        raise ValueError("latency must be nonnegative")
    return latency


@dataclass
class OracleResult:
    value: int
    witness: Grid
    nodes: int


def exact_gammaL_bruteforce(
    zero: YoungDiagram,
    m: int,
    n: int,
    latency=1,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
    lower_bound: int = 0,
    jobs: int = 1,
) -> OracleResult:
    """Minimum dominating-set size by increasing-cardinality subset search.

    Subsets are machine-word bitsets scanned in ascending numeric order, so
    the witness is the first optimum in subset-rank order.  ``lower_bound``
    skips cardinalities below a proven bound; it never affects the result.
    """
    mn = m * n
    if mn > max_cells:
        raise LimitExceededError("grid has %d cells; limit is %d" % (mn, max_cells))
    if mn > 60:
        raise LimitExceededError("bitset oracle needs m*n <= 60")
    if not zero.fits(m, n):
        raise ValueError("zero-set does not fit the grid")
    if latency == 0:
        return OracleResult(mn, Grid.full(m, n), 1)
    cap = _steps_cap(m, n, latency)
    one_step = cap == 1
    hpad = zero.heights_padded(n + 1)
    nodes = 0
    for k in range(max(0, lower_bound), mn + 1):
        found = _kernels.search_cardinality(hpad, m, n, cap, one_step, k, jobs=jobs)
        if found >= 0:
            nodes += _kernels.colex_rank(found) + 1
            return OracleResult(k, Grid.from_bitmask(m, n, found), nodes)
        nodes += comb(mn, k)
    raise AssertionError("the full grid always dominates")


# -- profile-based exact latency-1 value ---------------------------------------


def _bounded_partitions(total: int, parts: int, maxval: int):
    """Nonincreasing length-``parts`` vectors of sum ``total``, entries <= maxval."""
    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining, slots, cap):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        lo = (remaining + slots - 1) // slots  # first entry must be >= the average
        for v in range(min(cap, remaining), lo - 1, -1):
            prefix.append(v)
            rec(prefix, remaining - v, slots - 1, v)
            prefix.pop()

    if 0 <= total <= parts * maxval:
        rec([], total, parts, maxval)
    return out


def exact_gamma1_profile(zero: YoungDiagram, m: int, n: int, with_witness: bool = False):
    """Exact latency-1 value via sorted margin profiles plus flow feasibility.

    A set dominates in one step iff every cell whose (row sum, column sum)
    pair lies inside the zero-set is itself occupied, so only the sorted
    margin profiles matter.  For each candidate size s, ascending, we test
    whether some nonincreasing profile pair of sum s admits a 0-1 matrix
    with those margins and the forced cells; the first feasible s is the
    answer.  Sorting both profiles at once loses no generality because the
    update commutes with row and column permutations.

    With ``with_witness`` an OracleResult is returned instead, carrying a
    realized matrix and the number of profile pairs examined.
    """
    if not zero.fits(m, n):
        raise ValueError("zero-set does not fit the grid")
    hpad = zero.heights_padded(n + 1)
    pairs_seen = 0
    for s in range(m * n + 1):
        rows = _bounded_partitions(s, m, n)
        if not rows:
            continue
        cols = _bounded_partitions(s, n, m)
        if not cols:
            continue
        rarr = np.array(rows, dtype=np.int64).reshape(len(rows), m)
        carr = np.array(cols, dtype=np.int64).reshape(len(cols), n)
        hit = _kernels.profile_scan(hpad, rarr, carr)
        if hit >= 0:
            if not with_witness:
                return s
            r = rows[hit // len(cols)]
            c = cols[hit % len(cols)]
            return OracleResult(s, _realize_profile(r, c, hpad, m, n), pairs_seen + hit + 1)
        pairs_seen += len(rows) * len(cols)
    raise AssertionError("the full grid profile is always feasible")


def _realize_profile(r, c, hpad, m, n) -> Grid:
    """A 0-1 matrix with margins (r, c) covering every forced cell.

    Forced cells go in first; the remaining quota is routed one unit at a
    time with augmenting paths over the unforced cells.
    """
    occ = np.zeros((m, n), dtype=bool)
    rres = list(r)
    cres = list(c)
    for i in range(m):
        t = hpad[r[i]]
        for j in range(n):
            if c[j] < t:
                occ[i, j] = True
                rres[i] -= 1
                cres[j] -= 1
    assert min(rres, default=0) >= 0 and min(cres, default=0) >= 0
    # residual transport: row i supplies rres[i], column j demands cres[j],
    # unit arcs on unforced cells; cap[i][j] = 1 while unused
    used = np.zeros((m, n), dtype=bool)
    for i in range(m):
        while rres[i] > 0:
            parent = {("r", i): None}
            queue = [("r", i)]
            goal = None
            while queue and goal is None:
                kind, idx = queue.pop(0)
                if kind == "r":
                    t = hpad[r[idx]]
                    for j in range(n):
                        if c[j] >= t and not used[idx, j] and ("c", j) not in parent:
                            parent[("c", j)] = ("r", idx)
                            if cres[j] > 0:
                                goal = ("c", j)
                                break
                            queue.append(("c", j))
                else:
                    for i2 in range(m):
                        if used[i2, idx] and ("r", i2) not in parent:
                            parent[("r", i2)] = ("c", idx)
                            queue.append(("r", i2))
            assert goal is not None, "feasible profile must admit an augmenting path"
            node = goal
            while parent[node] is not None:
                kind, idx = node
                pkind, pidx = parent[node]
                if kind == "c":
                    used[pidx, idx] = True
                else:
                    used[idx, pidx] = False
                node = parent[node]
            rres[i] -= 1
            cres[goal[1]] -= 1
    occ |= used
    g = Grid(m, n, occ)
    assert list(g.row_counts) == list(r) and list(g.col_counts) == list(c)
    return g


# -- boost-vector brute forces ---------------------------------------------------


def _nonincreasing_vectors(length: int, maxval: int):
    out: list[tuple[int, ...]] = []

    def rec(prefix, slots, cap):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for v in range(cap, -1, -1):
            prefix.append(v)
            rec(prefix, slots - 1, v)
            prefix.pop()

    rec([], length, maxval)
    return out


def _budget() -> int:
    raw = os.environ.get("YDOM_BUDGET", "")
    if raw.strip():
        return int(raw)
    return 10**9


def exact_hat_gamma1_bruteforce(
    zero: YoungDiagram, m: int, n: int, *, max_candidates: Optional[int] = None
) -> int:
    """Exact one-step boosted objective by tame enumeration.

    Enumerates boost profiles whose values are corner coordinates of the
    zero-set (restriction to such profiles never loses the optimum); the
    objective charges total boost plus the cells still empty after one
    boosted step from the empty grid.  Vectorized as two composition
    tables and a membership matrix.
    """
    if not zero.fits(m, n):
        raise ValueError("zero-set does not fit the grid")
    corners = zero.concave_corners()
    p = len(corners) - 1
    avals = np.array([cr.x for cr in corners], dtype=np.int64)
    # Column segment j carries the corner y in x-increasing order, so the
    # largest column value comes first.
    bvals_rev = np.array([cr.y for cr in corners], dtype=np.int64)
    xs = _compositions(m, p + 1)
    ys = _compositions(n, p + 1)
    limit = max_candidates if max_candidates is not None else _budget()
    if len(xs) * len(ys) > limit:
        raise BudgetExceededError(
            "tame enumeration needs %d candidates; budget %d" % (len(xs) * len(ys), limit)
        )
    X = np.array(xs, dtype=np.int64).reshape(len(xs), p + 1)
    Y = np.array(ys, dtype=np.int64).reshape(len(ys), p + 1)
    member = np.zeros((p + 1, p + 1), dtype=np.int64)
    for i in range(p + 1):
        for j in range(p + 1):
            member[i, j] = 1 if zero.contains(int(avals[i]), int(bvals_rev[j])) else 0
    boost = (X @ avals)[:, None] + (Y @ bvals_rev)[None, :]
    uncovered = X @ member @ Y.T
    return int((boost + uncovered).min())


def _compositions(total: int, parts: int):
    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for v in range(remaining + 1):
            prefix.append(v)
            rec(prefix, remaining - v, slots - 1)
            prefix.pop()

    rec([], total, parts)
    return out


def hat_gammaL_bruteforce(zero: YoungDiagram, m: int, n: int, latency: int = 1) -> int:
    """Boosted objective at any finite latency by full profile enumeration.

    Tiny instances only: scans every nonincreasing boost pair with row
    values up to the zero-set width and column values up to its height
    (larger values change nothing), simulating ``latency`` boosted steps
    from the empty grid.
    """
    if not zero.fits(m, n):
        raise ValueError("zero-set does not fit the grid")
    if latency < 1:
        raise ValueError("latency must be at least 1")
    a = zero.width
    b = zero.height
    hpadl = zero.heights_padded(n + a + 2)
    best = None
    for r in _nonincreasing_vectors(m, a):
        for c in _nonincreasing_vectors(n, b):
            y = _simulate_boosted(hpadl, m, n, r, c, latency)
            val = sum(r) + sum(c) + (m * n - y)
            if best is None or val < best:
                best = val
    return best


def bar_gammaL_bruteforce(zero: YoungDiagram, m: int, n: int, latency: int) -> int:
    """Minimum total boost that covers the grid from empty in ``latency`` steps.

    Unrestricted reference search: every nonincreasing boost pair with the
    same value caps as hat_gammaL_bruteforce, simulated on the full grid.
    """
    if not zero.fits(m, n):
        raise ValueError("zero-set does not fit the grid")
    if latency < 1:
        raise ValueError("latency must be at least 1")
    a = zero.width
    b = zero.height
    hpadl = zero.heights_padded(n + a + 2)
    best = None
    for r in _nonincreasing_vectors(m, a):
        for c in _nonincreasing_vectors(n, b):
            if best is not None and sum(r) + sum(c) >= best:
                continue
            if _simulate_boosted(hpadl, m, n, r, c, latency) == m * n:
                best = sum(r) + sum(c)
    assert best is not None, "uniform row boosts always span by step 2"
    return best


def _simulate_boosted(hpadl, m, n, r, c, steps):
    """Occupied-cell count after ``steps`` boosted updates from empty."""
    occ = np.zeros((m, n), dtype=bool)
    rb = np.asarray(r, dtype=np.int64)
    cb = np.asarray(c, dtype=np.int64)
    for _ in range(steps):
        thr = hpadl[occ.sum(axis=1) + rb]
        reach = (occ.sum(axis=0) + cb)[None, :] >= thr[:, None]
        new = occ | reach
        if (new == occ).all():
            break
        occ = new
        if occ.all():
            break
    return int(occ.sum())


# -- bipartite extremal edge counts ----------------------------------------------


def exact_ex_double_stars(m: int, n: int, pairs, *, max_cells: int = DEFAULT_MAX_CELLS) -> int:
    """Maximum edges of an m-by-n bipartite graph avoiding every S_{p,q}.

    A graph contains S_{p,q} respecting the bipartition iff some edge (x, y)
    has deg(x) >= p+1 on the m-side and deg(y) >= q+1 on the n-side.  Edge
    sets are scanned as bitsets, largest edge count first.
    """
    if m * n > max_cells:
        raise LimitExceededError("graph has %d potential edges; limit is %d" % (m * n, max_cells))
    plist = [(int(p), int(q)) for p, q in pairs]
    for p, q in plist:
        if p < 0 or q < 0:
            raise ValueError("star parameters must be nonnegative")
    return _kernels.max_starfree_edges(m, n, plist)
