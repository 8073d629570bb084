"""Polynomial-time approximation of the domination numbers.

Two relaxations over row/column boost vectors: the one-step objective
(total boost plus uncovered cells), solved exactly by dynamic programming
over the zero-set's corners and sandwiching the latency-1 value within a
factor of 3; and the pure-boost spanning objective for a fixed finite
latency, solved by enumerating step-shaped boost vectors and giving a
constant-factor certificate.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional

import numpy as np

from . import _kernels
from .diagram import YoungDiagram
from .dynamics import Enhancements, Grid, evolve, realize_enhancements, step
from .errors import BudgetExceededError

MAX_BAR_LATENCY = 4


@dataclass(frozen=True)
class CornerLedger:
    """Concave corners (a_i, b_{p-i}) of a zero-set, split into the two
    coordinate ladders a_0 < ... < a_p and b_0 < ... < b_p."""

    p: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    @classmethod
    def from_diagram(cls, zero: YoungDiagram) -> "CornerLedger":
        corners = zero.concave_corners()
        p = len(corners) - 1
        a = tuple(cr.x for cr in corners)
        b = tuple(corners[p - j].y for j in range(p + 1))
        assert a[0] == 0 and b[0] == 0
        return cls(p, a, b)


class DPState(NamedTuple):
    """Subproblem index: corners up to q, k rows and ell columns left to
    assign, and the accumulated cross-term offset carried inward."""

    q: int
    k: int
    ell: int
    c: int


def hat_gamma1_dp(zero: YoungDiagram, m: int, n: int) -> int:
    """Exact one-step boost objective via corner-indexed dynamic programming."""
    return _hat_dp(zero, m, n)[0]


def _hat_dp(zero: YoungDiagram, m: int, n: int):
    """Returns (value, xs, ys, transposed) for the normalized instance."""
    if not zero.fits(m, n):
        raise ValueError("zero-set does not fit the grid")
    transposed = m > n
    if transposed:
        zero, m, n = zero.conjugate(), n, m
    led = CornerLedger.from_diagram(zero)
    p, a, b = led.p, led.a, led.b

    memo: dict[DPState, tuple[int, int, int]] = {}

    def f(q: int, k: int, ell: int, c: int) -> int:
        if q == 0:
            return (a[0] + c) * k + b[p] * ell
        key = DPState(q, k, ell, c)
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        best = None
        arg = (0, 0)
        for aa in range(k + 1):
            head = (a[q] + c) * aa
            if best is not None and head >= best:
                break  # every remaining cost term is nonnegative
            for bb in range(ell + 1):
                val = head + b[p - q] * bb + f(q - 1, k - aa, ell - bb, bb + c)
                if best is None or val < best:
                    best = val
                    arg = (aa, bb)
        memo[key] = (best, arg[0], arg[1])
        return best

    value = f(p, m, n, 0)
    xs = [0] * (p + 1)
    ys = [0] * (p + 1)
    k, ell, c = m, n, 0
    for q in range(p, 0, -1):
        _, aa, bb = memo[DPState(q, k, ell, c)]
        xs[q] = aa
        ys[q] = bb
        k, ell, c = k - aa, ell - bb, bb + c
    xs[0] = k
    ys[0] = ell
    return value, xs, ys, transposed, led


def approx3_gamma1(zero: YoungDiagram, m: int, n: int) -> tuple[int, Grid]:
    """The DP value (within [gamma, 3*gamma]) plus a dominating set of at
    most that size, built from the optimal boosts.

    The set is the realized boost cells joined with whatever one boosted
    step from empty leaves uncovered.
    """
    value, xs, ys, transposed, led = _hat_dp(zero, m, n)
    if transposed:
        zero2, m2, n2 = zero.conjugate(), n, m
    else:
        zero2, m2, n2 = zero, m, n
    p, a, b = led.p, led.a, led.b
    r: list[int] = []
    for i in range(p, -1, -1):
        r.extend([a[i]] * xs[i])
    c: list[int] = []
    for j in range(p + 1):
        c.extend([b[p - j]] * ys[j])
    enh = Enhancements(r, c)
    covered = step(Grid.empty(m2, n2), zero2, enh)
    base = realize_enhancements(Grid.empty(m2, n2), enh)
    witness = Grid(m2, n2, base.occupancy | ~covered.occupancy)
    if transposed:
        witness = witness.transpose()
    assert witness.count <= value
    assert evolve(witness, zero, latency=1).is_full()
    return value, witness


# -- fixed-latency boost enumeration ---------------------------------------------


def _budget(budget: Optional[int]) -> int:
    if budget is not None:
        return int(budget)
    raw = os.environ.get("YDOM_BUDGET", "")
    if raw.strip():
        return int(raw)
    return 10**9


def _step_vectors(length: int, maxval: int, max_distinct: int):
    """Nonincreasing vectors with at most max_distinct distinct values,
    entries in [0, maxval], sorted by (sum, entries)."""
    out = []
    values = list(range(maxval, -1, -1))
    for segs in range(1, min(max_distinct, length) + 1):
        for divs in combinations(range(1, length), segs - 1):
            bounds = (0,) + divs + (length,)
            widths = [bounds[t + 1] - bounds[t] for t in range(segs)]
            for vals in combinations(values, segs):
                vec = []
                for w, v in zip(widths, vals):
                    vec.extend([v] * w)
                out.append(tuple(vec))
    out.sort(key=lambda v: (sum(v), v))
    return out


@dataclass
class LatencyApproxResult:
    upper_bound: int
    bar_value: int
    enhancements: Enhancements
    initial_set: Grid


def bar_gammaL(
    zero: YoungDiagram, m: int, n: int, latency: int, budget: Optional[int] = None
) -> tuple[int, Enhancements]:
    """Minimum total boost spanning the grid from empty within the latency.

    Minimal optimal boost vectors are step-shaped with at most 2**latency
    distinct values and fit inside a reduced grid whose sides are capped
    at width*height + 1, so the scan runs there; the resulting vectors,
    zero-extended, span the full grid.  Raises when the simulation budget
    runs out, carrying width*height as a safe fallback bound.
    """
    if not (2 <= latency <= MAX_BAR_LATENCY):
        raise ValueError("latency must be in [2, %d]" % MAX_BAR_LATENCY)
    if not zero.fits(m, n):
        raise ValueError("zero-set does not fit the grid")
    if zero.is_empty():
        return 0, Enhancements.zero(m, n)
    a = zero.width
    b = zero.height
    mp = min(m, a * b + 1)
    np_ = min(n, a * b + 1)
    distinct = 1 << latency
    rows = _step_vectors(mp, a, distinct)
    cols = _step_vectors(np_, b, distinct)
    rv = np.array(rows, dtype=np.int64).reshape(len(rows), mp)
    cv = np.array(cols, dtype=np.int64).reshape(len(cols), np_)
    rn = rv.sum(axis=1)
    cn = cv.sum(axis=1)
    hpadl = zero.heights_padded(np_ + a + 2)
    best, bi, bj, _used = _kernels.bar_scan(
        hpadl, mp, np_, latency, rv, rn, cv, cn, a * b + 1, _budget(budget)
    )
    if best == -2:
        raise BudgetExceededError("boost enumeration budget exhausted", fallback=a * b)
    assert 0 <= best <= a * b and bi >= 0
    r = list(rows[bi]) + [0] * (m - mp)
    c = list(cols[bj]) + [0] * (n - np_)
    return best, Enhancements(r, c)


def approxC_gammaL(
    zero: YoungDiagram, m: int, n: int, latency: int, budget: Optional[int] = None
) -> LatencyApproxResult:
    """A certified initial set for the given latency, of size at most
    latency times the boost optimum (itself within a constant factor of
    the true value for fixed latency)."""
    bar_value, enh = bar_gammaL(zero, m, n, latency, budget=budget)
    empty = Grid.empty(m, n)
    blocks = [realize_enhancements(empty, enh)]
    seed = blocks[0]
    for _ in range(1, latency):
        img = step(blocks[-1], zero)
        blocks.append(realize_enhancements(img, enh))
        extra = blocks[-1].occupancy & ~img.occupancy
        seed = Grid(m, n, seed.occupancy | extra)
    assert evolve(seed, zero, latency=latency).is_full()
    assert seed.count <= latency * bar_value or bar_value == 0
    return LatencyApproxResult(seed.count, bar_value, enh, seed)
