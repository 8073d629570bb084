"""Double-star families and the complementation identity.

A latency-1 dominating set and its bipartite complement trade places:
the complement avoids exactly the double stars indexed by the concave
corners of the dual diagram, so the domination number and the extremal
edge count sum to m*n.  The (p, q) star parameters sit on the diagram
axes with p along x (degrees on the n-vertex side) and q along y; the
orientation is locked by identity tests against both brute forces, not
by convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .diagram import YoungDiagram, diagram_from_corners, format_zero_set
from .exact import dispatch_exact
from .oracle import DEFAULT_MAX_CELLS, exact_gamma1_profile, exact_gammaL_bruteforce


class DoubleStarFamily:
    """A minimal antichain of (p, q) pairs naming forbidden double stars.

    S_{p,q} has adjacent centers of degree p+1 (on the m-vertex side) and
    q+1 (on the n-vertex side), each padded with leaves.
    """

    __slots__ = ("pairs",)

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        ps = frozenset((int(p), int(q)) for p, q in pairs)
        for p, q in ps:
            if p < 0 or q < 0:
                raise ValueError("star parameters must be nonnegative")
        for p1, q1 in ps:
            for p2, q2 in ps:
                if (p1, q1) != (p2, q2) and p1 <= p2 and q1 <= q2:
                    raise ValueError("family is not a minimal antichain")
        object.__setattr__(self, "pairs", ps)

    def __setattr__(self, name, value):
        raise AttributeError("DoubleStarFamily is immutable")

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, DoubleStarFamily):
            return NotImplemented
        return self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return "DoubleStarFamily(%r)" % (self.sorted_pairs(),)


def minimalize(pairs: Iterable[tuple[int, int]]) -> DoubleStarFamily:
    """Keep only the componentwise-minimal pairs."""
    ps = {(int(p), int(q)) for p, q in pairs}
    keep = [
        (p, q)
        for p, q in ps
        if not any((p2, q2) != (p, q) and p2 <= p and q2 <= q for p2, q2 in ps)
    ]
    return DoubleStarFamily(keep)


def family_to_diagram(fam: DoubleStarFamily, m: int, n: int) -> YoungDiagram:
    """The diagram whose concave corners are the family's (p, q) pairs,
    materialized inside the n-by-m box."""
    return diagram_from_corners(fam.sorted_pairs(), m=m, n=n)


def diagram_to_family(y: YoungDiagram, m: int, n: int) -> DoubleStarFamily:
    """Inverse of family_to_diagram up to stars too large to embed.

    Corners on the box boundary (p = n or q = m) name stars no m-by-n
    bipartite graph can contain; they are dropped.
    """
    pairs = [(c.x, c.y) for c in y.concave_corners() if c.x <= n - 1 and c.y <= m - 1]
    return DoubleStarFamily(pairs)


@dataclass
class ExResult:
    ex: Optional[int]
    method: str
    dual: YoungDiagram
    interval: Optional[tuple[int, int]] = None

    def to_json_dict(self) -> dict:
        out = {"ex": self.ex, "method": self.method, "dual": format_zero_set(self.dual)}
        if self.interval is not None:
            out["interval"] = list(self.interval)
        return out


def ex_via_duality(m: int, n: int, fam: DoubleStarFamily) -> ExResult:
    """Extremal edge count as m*n minus the domination number of the dual.

    Dispatches to a closed form when the dual has one, falls back to an
    exhaustive value on small grids, and otherwise reports an interval
    from the 3-approximation.
    """
    for p, q in fam.pairs:
        if p > n or q > m:
            raise ValueError("star (%d, %d) is out of range for an %d x %d host" % (p, q, m, n))
    yf = family_to_diagram(fam, m, n)
    dual = yf.dual(m, n)
    hit = dispatch_exact(dual, m, n, latency=1)
    if hit is not None:
        return ExResult(m * n - hit["value"], "closed-form:" + hit["family"], dual)
    if max(m, n) <= 12 or m * n <= DEFAULT_MAX_CELLS:
        if max(m, n) <= 12:
            gamma = exact_gamma1_profile(dual, m, n)
        else:
            gamma = exact_gammaL_bruteforce(dual, m, n, 1).value
        return ExResult(m * n - gamma, "oracle", dual)
    from .approx import hat_gamma1_dp

    hat = hat_gamma1_dp(dual, m, n)
    lo = m * n - hat
    hi = m * n - (hat + 2) // 3
    return ExResult(None, "interval", dual, interval=(lo, hi))
