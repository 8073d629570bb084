"""Young diagrams, used both as growth-rule zero-sets and as occupied regions.

A diagram is stored as its column-height profile (a partition written
left to right), so membership is O(1) and both corner sets come out of a
single scan.  Points are (x, y) with x the column index and y the row
index; a point (x, y) belongs to the diagram iff y < heights[x].

The same coordinate convention is used for grid cells (j, i): first
coordinate horizontal in [0, n-1], second vertical in [0, m-1].
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

import numpy as np


class Corner(NamedTuple):
    """A lattice point marking a corner of a diagram."""

    x: int
    y: int


class YoungDiagram:
    """A downward-closed finite subset of the nonnegative quadrant.

    Instances are immutable; ``heights`` is a tuple of nonincreasing
    positive column heights with trailing zeros trimmed.
    """

    __slots__ = ("heights",)

    def __init__(self, heights: Iterable[int] = ()):
        hs = tuple(int(h) for h in heights)
        while hs and hs[-1] == 0:
            hs = hs[:-1]
        for h in hs:
            if h < 0:
                raise ValueError("column heights must be nonnegative")
        for a, b in zip(hs, hs[1:]):
            if a < b:
                raise ValueError(
                    "heights must be nonincreasing (pass a profile, not a multiset)"
                )
        object.__setattr__(self, "heights", hs)

    def __setattr__(self, name, value):
        raise AttributeError("YoungDiagram is immutable")

    # -- basic geometry ----------------------------------------------------

    @property
    def width(self) -> int:
        return len(self.heights)

    @property
    def height(self) -> int:
        return self.heights[0] if self.heights else 0

    @property
    def size(self) -> int:
        return sum(self.heights)

    def is_empty(self) -> bool:
        return not self.heights

    def height_at(self, x: int) -> int:
        """Height of column x (0 beyond the width)."""
        return self.heights[x] if 0 <= x < len(self.heights) else 0

    def contains(self, x: int, y: int) -> bool:
        return x >= 0 and y >= 0 and x < len(self.heights) and y < self.heights[x]

    def __contains__(self, point) -> bool:
        x, y = point
        return self.contains(x, y)

    def points(self):
        """Iterate all member points (x, y)."""
        for x, h in enumerate(self.heights):
            for y in range(h):
                yield (x, y)

    def heights_padded(self, length: int) -> np.ndarray:
        """Heights as an int64 array zero-padded to ``length`` entries."""
        if length < len(self.heights):
            raise ValueError("pad length shorter than diagram width")
        out = np.zeros(length, dtype=np.int64)
        out[: len(self.heights)] = self.heights
        return out

    # -- corners -----------------------------------------------------------

    def concave_corners(self) -> list[Corner]:
        """Minimal points of the complement, sorted by increasing x.

        The empty diagram has the single concave corner (0, 0); a nonempty
        diagram always has (0, h0) first and (width, 0) last.
        """
        hs = self.heights
        if not hs:
            return [Corner(0, 0)]
        corners = [Corner(0, hs[0])]
        for x in range(1, len(hs)):
            if hs[x] < hs[x - 1]:
                corners.append(Corner(x, hs[x]))
        corners.append(Corner(len(hs), 0))
        return corners

    def convex_corners(self) -> list[Corner]:
        """Maximal points of the diagram; empty sequence for the empty diagram."""
        hs = self.heights
        corners = []
        for x in range(len(hs)):
            nxt = hs[x + 1] if x + 1 < len(hs) else 0
            if hs[x] > nxt:
                corners.append(Corner(x, hs[x] - 1))
        return corners

    # -- transforms --------------------------------------------------------

    def conjugate(self) -> "YoungDiagram":
        """Transpose across the main diagonal (swap x and y axes)."""
        hs = self.heights
        if not hs:
            return YoungDiagram()
        out = [0] * hs[0]
        for h in hs:
            for y in range(h):
                out[y] += 1
        return YoungDiagram(out)

    def clip(self, m: int, n: int) -> "YoungDiagram":
        """Intersect with the box of n columns and m rows."""
        return YoungDiagram(min(h, m) for h in self.heights[:n])

    def fits(self, m: int, n: int) -> bool:
        return self.width <= n and self.height <= m

    def dual(self, m: int, n: int) -> "YoungDiagram":
        """The diagram complementary to this one inside the n-by-m box,
        reflected through the box centroid.

        An involution on diagrams contained in the box: the point (x, y)
        belongs to the dual iff (n-1-x, m-1-y) is outside this diagram.
        """
        if not self.fits(m, n):
            raise ValueError("diagram does not fit inside the %d x %d box" % (n, m))
        return YoungDiagram(m - self.height_at(n - 1 - x) for x in range(n))

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, YoungDiagram):
            return NotImplemented
        return self.heights == other.heights

    def __hash__(self) -> int:
        return hash(self.heights)

    def __repr__(self) -> str:
        return "YoungDiagram(%r)" % (list(self.heights),)


# -- constructors -----------------------------------------------------------


def from_heights(hs: Sequence[int]) -> YoungDiagram:
    """Diagram from a nonincreasing height profile; rejects other sequences."""
    return YoungDiagram(hs)


def triangle(a: int) -> YoungDiagram:
    """The staircase of points with x + y <= a - 1; empty when a = 0."""
    if a < 0:
        raise ValueError("a must be nonnegative")
    return YoungDiagram(range(a, 0, -1))


def rect(a: int, b: int) -> YoungDiagram:
    """The a-by-b rectangle of points: a columns of height b."""
    if a < 0 or b < 0:
        raise ValueError("sides must be nonnegative")
    if a == 0 or b == 0:
        return YoungDiagram()
    return YoungDiagram([b] * a)


def vshape(a: int, b: int, m: int, n: int) -> YoungDiagram:
    """The set of points with x < a or y < b, clipped to the n-by-m box.

    Outside the set a point needs x >= a and y >= b, so as a zero-set it
    demands at least a occupied row neighbors and b occupied column
    neighbors at once.  Clipping loses nothing for the growth dynamics.
    """
    if not (0 <= a <= n and 0 <= b <= m):
        raise ValueError("require 0 <= a <= n and 0 <= b <= m")
    return YoungDiagram([m] * a + [b] * (n - a))


def diagram_from_corners(corners, m: int | None = None, n: int | None = None) -> YoungDiagram:
    """Diagram whose complement is the up-closure of the given antichain.

    The corner points must be pairwise incomparable.  If the resulting
    region is unbounded (no corner on an axis) a clipping box (m, n) is
    required.
    """
    pts = sorted({(int(x), int(y)) for x, y in corners})
    for i, (x1, y1) in enumerate(pts):
        for x2, y2 in pts[i + 1 :]:
            if (x1 <= x2 and y1 <= y2) or (x2 <= x1 and y2 <= y1):
                raise ValueError("corner list is not an antichain")
    if not pts:
        if m is None or n is None:
            raise ValueError("empty corner set needs a clipping box")
        return rect(n, m)
    # ys decrease strictly as xs increase, so min-y over corners with
    # x_c <= x is the height at x.
    width_bound = None
    for x, y in pts:
        if y == 0:
            width_bound = x
    if width_bound is None:
        if n is None:
            raise ValueError("no corner on the x-axis; clipping width n required")
        width_bound = n
    heights = []
    for x in range(min(width_bound, n) if n is not None else width_bound):
        applicable = [y for (cx, y) in pts if cx <= x]
        if applicable:
            h = min(applicable)
        else:
            if m is None:
                raise ValueError("no corner on the y-axis; clipping height m required")
            h = m
        heights.append(min(h, m) if m is not None else h)
    return YoungDiagram(heights)


# -- point-set reflection ----------------------------------------------------


def reflect(points, m: int, n: int) -> set[tuple[int, int]]:
    """Reflect a set of points of the n-by-m box through its centroid."""
    out = set()
    for x, y in points:
        if not (0 <= x < n and 0 <= y < m):
            raise ValueError("point (%d, %d) outside the %d x %d box" % (x, y, n, m))
        out.add((n - 1 - x, m - 1 - y))
    return out


# -- textual grammar ---------------------------------------------------------
#
#   T:a | R:a,b | V:a,b | H:h0,h1,... | C:(x0,y0);(x1,y1);...
#
# V requires grid context (m, n); every form round-trips to canonical H.


def parse_zero_set(text: str, m: int | None = None, n: int | None = None) -> YoungDiagram:
    """Parse the textual zero-set grammar, clipping to (m, n) when given."""
    s = text.strip()
    if len(s) < 2 or s[1] != ":":
        raise ValueError("zero-set %r: expected a form like T:a, R:a,b, V:a,b, H:..., C:..." % text)
    tag, body = s[0].upper(), s[2:]
    try:
        if tag == "T":
            d = triangle(int(body))
        elif tag == "R":
            a, b = (int(t) for t in body.split(","))
            d = rect(a, b)
        elif tag == "V":
            if m is None or n is None:
                raise ValueError("V-form zero-set needs grid dimensions")
            a, b = (int(t) for t in body.split(","))
            return vshape(a, b, m, n)
        elif tag == "H":
            d = from_heights([int(t) for t in body.split(",")] if body else [])
        elif tag == "C":
            pts = []
            for chunk in body.split(";"):
                chunk = chunk.strip()
                if not (chunk.startswith("(") and chunk.endswith(")")):
                    raise ValueError("corner %r: expected (x,y)" % chunk)
                x, y = (int(t) for t in chunk[1:-1].split(","))
                pts.append((x, y))
            d = diagram_from_corners(pts, m=m, n=n)
        else:
            raise ValueError("unknown zero-set form %r" % tag)
    except ValueError:
        raise
    except Exception as exc:  # int() failures, bad arity
        raise ValueError("cannot parse zero-set %r: %s" % (text, exc)) from exc
    if m is not None and n is not None:
        d = d.clip(m, n)
    return d


def format_zero_set(d: YoungDiagram) -> str:
    """Canonical H: form; parse_zero_set(format_zero_set(d)) == d."""
    return "H:" + ",".join(str(h) for h in d.heights)
