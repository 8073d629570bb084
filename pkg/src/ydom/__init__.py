"""Growth-process domination numbers on Hamming rectangles.

The grid is the Cartesian product of two complete graphs; one synchronous
step occupies every empty cell whose occupied row/column counts escape a
fixed staircase-shaped zero-set.  This package computes minimum seed sets
for covering the grid within a latency bound: exact closed forms where
known, certified constructions, approximation algorithms, exhaustive
oracles, and the complementation transform tying the latency-1 case to
bipartite extremal edge counts.
"""

from dataclasses import dataclass

from .diagram import (
    Corner,
    YoungDiagram,
    diagram_from_corners,
    format_zero_set,
    from_heights,
    parse_zero_set,
    rect,
    reflect,
    triangle,
    vshape,
)
from .dynamics import (
    INF,
    Enhancements,
    Grid,
    evolve,
    is_dominating,
    latency_of,
    realize_enhancements,
    step,
)
from .errors import BudgetExceededError, LimitExceededError, YdomError
from . import approx, construct, diagram, dynamics, exact, oracle, turan

__version__ = "0.1.0"


@dataclass(frozen=True)
class Problem:
    """One domination instance: zero-set, grid shape, and latency."""

    zero_set: YoungDiagram
    m: int
    n: int
    latency: float = 1

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("grid dimensions must be positive")
        if self.latency != INF and (int(self.latency) != self.latency or self.latency < 0):
            raise ValueError("latency must be a nonnegative integer or INF")
        if not self.zero_set.fits(self.m, self.n):
            raise ValueError("zero-set does not fit the grid; clip it first")
