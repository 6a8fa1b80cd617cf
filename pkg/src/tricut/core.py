"""Exact primitives: colors, points, lines, duality, arcs, lattice curves.

Everything here is exact.  Coordinates are `fractions.Fraction` (aliased Rat),
predicates return integer signs, and nothing ever rounds.  Floats appear
nowhere below; rendering code does its own presentation rounding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    BoundaryPoint,
    OriginOnCurve,
    PreconditionViolated,
    VerticalLine,
)

Rat = Fraction


class Color(enum.Enum):
    R = "R"
    G = "G"
    B = "B"
    K = "K"  # neutral: shield lines, uncolored boundaries

    def __repr__(self) -> str:  # keeps test diffs short
        return self.value


RGB = (Color.R, Color.G, Color.B)


def sign(x: Rat | int) -> int:
    return (x > 0) - (x < 0)


def as_rat(x) -> Rat:
    """Coerce ints, strings like '3/4', and Fractions. Floats are rejected."""
    if isinstance(x, float):
        raise PreconditionViolated("float coordinates are not accepted, pass exact rationals")
    return Fraction(x)


@dataclass(frozen=True)
class ColoredPoint:
    x: Rat
    y: Rat
    color: Color


def pt(x, y, color: Color | str) -> ColoredPoint:
    """Convenience constructor coercing coordinates and color."""
    return ColoredPoint(as_rat(x), as_rat(y), Color(color))


@dataclass(frozen=True)
class ColoredLine:
    """Line a*x + b*y + c = 0, normalized so the first nonzero of (a, b) is 1.

    The normalization makes equal lines compare equal.  Note it can flip the
    sign of the functional relative to how the caller wrote the equation;
    code that cares about which side is which must fix sides after
    construction (see wedges.wedge_from_functionals).
    """

    a: Rat
    b: Rat
    c: Rat
    color: Color

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise PreconditionViolated("line needs a nonzero normal")
        lead = self.a if self.a != 0 else self.b
        if lead != 1:
            object.__setattr__(self, "a", self.a / lead)
            object.__setattr__(self, "b", self.b / lead)
            object.__setattr__(self, "c", self.c / lead)

    def eval_at(self, p: ColoredPoint | tuple[Rat, Rat]) -> Rat:
        x, y = (p.x, p.y) if isinstance(p, ColoredPoint) else p
        return self.a * x + self.b * y + self.c

    def side(self, p: ColoredPoint | tuple[Rat, Rat]) -> int:
        return sign(self.eval_at(p))

    @property
    def is_vertical(self) -> bool:
        return self.b == 0

    @property
    def slope(self) -> Rat:
        if self.b == 0:
            raise VerticalLine("vertical line has no slope")
        return -self.a / self.b

    @property
    def intercept(self) -> Rat:
        if self.b == 0:
            raise VerticalLine("vertical line has no intercept")
        return -self.c / self.b


def line(a, b, c, color: Color | str = Color.K) -> ColoredLine:
    return ColoredLine(as_rat(a), as_rat(b), as_rat(c), Color(color))


def line_through(p: ColoredPoint, q: ColoredPoint, color: Color | str = Color.K) -> ColoredLine:
    if (p.x, p.y) == (q.x, q.y):
        raise PreconditionViolated("two distinct points are needed to span a line")
    a = p.y - q.y
    b = q.x - p.x
    c = -(a * p.x + b * p.y)
    return ColoredLine(a, b, c, Color(color))


def line_slope_intercept(m, k, color: Color | str = Color.K) -> ColoredLine:
    """y = m*x + k."""
    return line(as_rat(m), -1, as_rat(k), color)


def intersect(l1: ColoredLine, l2: ColoredLine) -> tuple[Rat, Rat] | None:
    """Intersection point, or None for parallel (or equal) lines."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l1.c * l2.a - l2.c * l1.a) / det
    return (x, y)


def orient(p, q, r) -> int:
    """Sign of the area of triangle pqr: +1 ccw, -1 cw, 0 collinear."""
    px, py = (p.x, p.y) if isinstance(p, ColoredPoint) else p
    qx, qy = (q.x, q.y) if isinstance(q, ColoredPoint) else q
    rx, ry = (r.x, r.y) if isinstance(r, ColoredPoint) else r
    return sign((qx - px) * (ry - py) - (qy - py) * (rx - px))


# -- point/line duality ------------------------------------------------------
#
# point (a, b)  <->  line y = a*x - b.  Incidence and above/below order are
# preserved both ways; vertical lines have no dual point.


def dual_point_to_line(p: ColoredPoint) -> ColoredLine:
    return line_slope_intercept(p.x, -p.y, p.color)


def dual_line_to_point(l: ColoredLine) -> ColoredPoint:
    if l.is_vertical:
        raise VerticalLine("vertical line has no dual point")
    return ColoredPoint(l.slope, -l.intercept, l.color)


# -- general position checks -------------------------------------------------


class GeneralPosition(enum.Enum):
    NO_THREE_COLLINEAR = "no-three-collinear"
    DISTINCT_XY = "distinct-xy"


def check_general_position(points: Sequence[ColoredPoint], mode: GeneralPosition) -> None:
    """Raise PreconditionViolated naming the offending indices."""
    n = len(points)
    if mode is GeneralPosition.DISTINCT_XY:
        seen_x: dict[Rat, int] = {}
        seen_y: dict[Rat, int] = {}
        for i, p in enumerate(points):
            if p.x in seen_x:
                raise PreconditionViolated(f"points {seen_x[p.x]} and {i} share x = {p.x}")
            if p.y in seen_y:
                raise PreconditionViolated(f"points {seen_y[p.y]} and {i} share y = {p.y}")
            seen_x[p.x] = i
            seen_y[p.y] = i
        return
    if mode is GeneralPosition.NO_THREE_COLLINEAR:
        for i in range(n):
            for j in range(i + 1, n):
                if (points[i].x, points[i].y) == (points[j].x, points[j].y):
                    raise PreconditionViolated(f"points {i} and {j} coincide")
                for k in range(j + 1, n):
                    if orient(points[i], points[j], points[k]) == 0:
                        raise PreconditionViolated(f"points {i}, {j}, {k} are collinear")
        return
    raise ValueError(mode)


# -- arcs on the unit-perimeter circle ---------------------------------------
#
# The circle is parameterized by [0, 1) with wraparound.  An arc is stored as
# (lo, hi) with 0 <= lo < 1 and lo < hi <= lo + 1; hi > 1 encodes an arc that
# wraps through 0.  Arcs are half open: parameter t belongs to (lo, hi) read
# modulo 1, endpoints belong to no arc and color counting reports them as
# boundary hits.  The full circle is canonically ((0, 1),).


@dataclass(frozen=True)
class ArcSet:
    arcs: tuple[tuple[Rat, Rat], ...]

    def __post_init__(self):
        prev_end = None
        for lo, hi in self.arcs:
            if not (0 <= lo < 1 and lo < hi <= lo + 1):
                raise PreconditionViolated(f"arc ({lo}, {hi}) out of canonical range")
            if prev_end is not None and lo <= prev_end:
                raise PreconditionViolated("arcs must be sorted and disjoint")
            prev_end = hi
        if len(self.arcs) > 1:
            first_lo, _ = self.arcs[0]
            _, last_hi = self.arcs[-1]
            if last_hi > 1 and last_hi - 1 >= first_lo:
                raise PreconditionViolated("wrapping arc overlaps the first arc")

    @property
    def is_full_circle(self) -> bool:
        return self.arcs == ((Fraction(0), Fraction(1)),)

    @property
    def is_empty(self) -> bool:
        return self.arcs == ()

    def component_count(self) -> int:
        return len(self.arcs)

    def total_length(self) -> Rat:
        return sum((hi - lo for lo, hi in self.arcs), Fraction(0))

    def contains(self, t: Rat) -> bool:
        """Membership of parameter t (taken mod 1). Endpoints raise."""
        if self.is_full_circle:
            return True
        t = t % 1
        for lo, hi in self.arcs:
            if t == lo % 1 or t == hi % 1:
                raise BoundaryPoint(f"parameter {t} is an arc endpoint")
            if lo < t < hi or (hi > 1 and t < hi - 1):
                return True
        return False


def arcset(intervals: Iterable[tuple[Rat, Rat]]) -> ArcSet:
    """Normalize arbitrary (lo, hi) intervals (hi > lo, hi - lo <= 1) into an ArcSet.

    Arcs are reduced mod 1, overlapping or touching arcs merge, and a run
    covering everything becomes the full circle.
    """
    pieces: list[tuple[Rat, Rat]] = []
    total = Fraction(0)
    for lo, hi in intervals:
        lo, hi = as_rat(lo), as_rat(hi)
        if hi <= lo:
            raise PreconditionViolated(f"arc ({lo}, {hi}) has nonpositive length")
        if hi - lo > 1:
            raise PreconditionViolated(f"arc ({lo}, {hi}) is longer than the circle")
        total += hi - lo
        lo_m = lo % 1
        hi_m = lo_m + (hi - lo)
        if hi_m <= 1:
            pieces.append((lo_m, hi_m))
        else:
            pieces.append((lo_m, Fraction(1)))
            pieces.append((Fraction(0), hi_m - 1))
    if not pieces:
        return ArcSet(())
    if total >= 1:
        # only legal when the pieces tile the whole circle
        pieces.sort()
        cover = pieces[0][0] == 0
        end = pieces[0][1] if cover else None
        for lo, hi in pieces[1:]:
            if not cover or lo > end:
                cover = False
                break
            end = max(end, hi)
        if cover and end == 1 and total == 1:
            return full_circle()
        raise PreconditionViolated("arcs overlap (total length exceeds the circle)")
    pieces.sort()
    merged: list[list[Rat]] = [list(pieces[0])]
    for lo, hi in pieces[1:]:
        if lo < merged[-1][1]:
            raise PreconditionViolated("arcs overlap")
        if lo == merged[-1][1]:
            merged[-1][1] = hi
        else:
            merged.append([lo, hi])
    # re-wrap a piece ending at 1 into a piece starting at 0
    if len(merged) > 1 and merged[0][0] == 0 and merged[-1][1] == 1:
        lo0, hi0 = merged.pop(0)
        merged[-1][1] = 1 + hi0
    return ArcSet(tuple((lo, hi) for lo, hi in merged))


def full_circle() -> ArcSet:
    return ArcSet(((Fraction(0), Fraction(1)),))


def empty_arcset() -> ArcSet:
    return ArcSet(())


def arcset_complement(a: ArcSet) -> ArcSet:
    if a.is_full_circle:
        return empty_arcset()
    if a.is_empty:
        return full_circle()
    gaps = []
    for i, (lo, hi) in enumerate(a.arcs):
        nxt_lo = a.arcs[i + 1][0] if i + 1 < len(a.arcs) else a.arcs[0][0] + 1
        gaps.append((hi % 1, (hi % 1) + (nxt_lo - hi)))
    return arcset(gaps)


def arcset_component_count(a: ArcSet) -> int:
    return a.component_count()


def arcset_rotate(a: ArcSet, delta: Rat) -> ArcSet:
    """Rotate every arc by +delta (mod 1)."""
    if a.is_empty or a.is_full_circle:
        return a
    delta = as_rat(delta)
    return arcset([(lo + delta, hi + delta) for lo, hi in a.arcs])


@dataclass(frozen=True)
class CirclePoint:
    t: Rat
    color: Color


def circle_point(t, color: Color | str) -> CirclePoint:
    t = as_rat(t)
    if not (0 <= t < 1):
        raise PreconditionViolated(f"circle parameter {t} outside [0, 1)")
    return CirclePoint(t, Color(color))


def arcset_color_counts(a: ArcSet, points: Sequence[CirclePoint]) -> dict[Color, int]:
    """Count member points per color.  A point on an arc endpoint raises."""
    counts = {c: 0 for c in RGB}
    for p in points:
        if a.contains(p.t):
            counts[p.color] = counts.get(p.color, 0) + 1
    return counts


@dataclass(frozen=True)
class Segment:
    p: tuple[Rat, Rat]
    q: tuple[Rat, Rat]

    def __post_init__(self):
        if self.p == self.q:
            raise PreconditionViolated("degenerate segment")

    def point_at(self, t: Rat) -> tuple[Rat, Rat]:
        return (
            self.p[0] + t * (self.q[0] - self.p[0]),
            self.p[1] + t * (self.q[1] - self.p[1]),
        )


# -- lattice polygons and winding --------------------------------------------


@dataclass(frozen=True)
class LatticePolygon:
    """Closed polygon with integer vertices; edge i joins vertex i to i+1 mod m.

    Zero-length edges (repeated vertices) are allowed; winding skips them.
    """

    vertices: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for v in self.vertices:
            if not (isinstance(v[0], int) and isinstance(v[1], int)):
                raise PreconditionViolated("lattice polygon needs integer vertices")
        if len(self.vertices) < 2:
            raise PreconditionViolated("polygon needs at least 2 vertices")


def winding_number(poly: LatticePolygon) -> int:
    """Winding number of the closed curve around the origin.

    Counts signed crossings of the positive x axis.  Raises OriginOnCurve if
    a vertex is the origin or the origin is interior to an edge.
    """
    verts = [v for v in poly.vertices]
    m = len(verts)
    w = 0
    for i in range(m):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % m]
        if (ax, ay) == (0, 0):
            raise OriginOnCurve("vertex at origin")
        if (ax, ay) == (bx, by):
            continue
        cross = ax * by - ay * bx
        if cross == 0 and ax * bx + ay * by < 0:
            raise OriginOnCurve("origin interior to an edge")
        if ay <= 0 < by and cross > 0:
            w += 1
        elif by <= 0 < ay and cross < 0:
            w -= 1
    return w
