"""Balanced double wedges and halving segments for 3-colored data.

A double wedge is the union of two opposite sectors cut out by two crossing
lines.  `sweep_balanced_wedge` finds one containing exactly n points of each
color among 6n given points; `halving_segment` is its projective dual and
finds a segment crossing exactly n lines of each color among 6n lines.

The sweep slides an apex down a vertical line far left of the points and
watches the slope ordering.  Each window of 3n consecutive points gives a
deficit vector (blue - n, green - n); all 6n of them form a closed
centrally symmetric lattice polygon that winds an odd number of times
around the origin.  Swapping two adjacent points (an event) moves single
vertices by unit-ish steps, and flipping the ordering end to end reverses
the winding, so some intermediate ordering puts a vertex on the origin.
That vertex is the balanced window.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cells import (
    build_arrangement,
    cevian_111_segment,
    extract_111_segment,
    find_complete_face,
    is_complete,
    validate_simple,
)
from .core import (
    Color,
    ColoredLine,
    ColoredPoint,
    LatticePolygon,
    Rat,
    RGB,
    Segment,
    dual_line_to_point,
    dual_point_to_line,
    intersect,
    line_through,
    orient,
    sign,
    winding_number,
)
from .errors import (
    DegenerateApex,
    InternalError,
    MissingColor,
    OnBoundary,
    PreconditionViolated,
)

SECTOR_AGREE = "pair-1"     # sectors where the two line functionals share sign
SECTOR_DISAGREE = "pair-2"  # sectors where they differ


# -- slope orderings and the window curve -------------------------------------


@dataclass(frozen=True)
class SlopeOrdering:
    apex: tuple[Rat, Rat]
    points: tuple[ColoredPoint, ...]  # sorted by increasing slope from apex
    slopes: tuple[Rat, ...]

    @property
    def colors(self) -> tuple[Color, ...]:
        return tuple(p.color for p in self.points)


def ordering_at(apex: tuple[Rat, Rat], points: Sequence[ColoredPoint]) -> SlopeOrdering:
    """Order points by slope of the ray from apex.  The apex must not share an
    x coordinate with any point, and no two points may look collinear from it.
    """
    ax, ay = apex
    slopes = []
    for i, p in enumerate(points):
        if p.x == ax:
            raise DegenerateApex(f"point {i} is vertically aligned with the apex")
        slopes.append(((p.y - ay) / (p.x - ax), i))
    slopes.sort()
    for (s1, i1), (s2, i2) in zip(slopes, slopes[1:]):
        if s1 == s2:
            raise DegenerateApex(f"points {i1} and {i2} are collinear with the apex")
    return SlopeOrdering(
        apex=(ax, ay),
        points=tuple(points[i] for _, i in slopes),
        slopes=tuple(s for s, _ in slopes),
    )


_COLOR_VEC = {Color.R: (0, 0), Color.B: (1, 0), Color.G: (0, 1)}


@dataclass(frozen=True)
class WedgeCurve:
    """Deficit curve of all 3n-windows of a cyclic 6n-coloring.

    vertices[k] = (blue count - n, green count - n) of the window starting at
    position k.  Closed 6n-gon; vertices[k + 3n] == -vertices[k] because
    complementary windows have complementary counts.
    """

    n: int
    vertices: tuple[tuple[int, int], ...]

    def zeros(self) -> tuple[int, ...]:
        return tuple(k for k, v in enumerate(self.vertices) if v == (0, 0))

    def polygon(self) -> LatticePolygon:
        return LatticePolygon(self.vertices)

    def winding(self) -> int:
        return winding_number(self.polygon())


def wedge_curve(colors: Sequence[Color]) -> WedgeCurve:
    m = len(colors)
    if m % 6 != 0 or m == 0:
        raise PreconditionViolated("need 6n colors")
    n = m // 6
    got = {c: sum(1 for x in colors if x is c) for c in RGB}
    for c in RGB:
        if got[c] == 0:
            raise MissingColor(f"no point of color {c.value}")
    for c in RGB:
        if got[c] != 2 * n:
            raise PreconditionViolated(f"color {c.value} has {got[c]} points, want {2 * n}")
    b = g = 0
    for c in colors[: 3 * n]:
        v = _COLOR_VEC[c]
        b, g = b + v[0], g + v[1]
    verts = []
    for k in range(m):
        verts.append((b - n, g - n))
        out_v = _COLOR_VEC[colors[k]]
        in_v = _COLOR_VEC[colors[(k + 3 * n) % m]]
        b += in_v[0] - out_v[0]
        g += in_v[1] - out_v[1]
    return WedgeCurve(n, tuple(verts))


_STEPS = {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}


def check_curve_invariants(curve: WedgeCurve) -> None:
    """Central symmetry, unit-ish steps, odd winding when the origin is free."""
    m = len(curve.vertices)
    h = m // 2
    for k in range(m):
        vk = curve.vertices[k]
        va = curve.vertices[(k + h) % m]
        if (va[0] + vk[0], va[1] + vk[1]) != (0, 0):
            raise InternalError("curve is not centrally symmetric", {"k": k})
        nxt = curve.vertices[(k + 1) % m]
        if (nxt[0] - vk[0], nxt[1] - vk[1]) not in _STEPS:
            raise InternalError("illegal curve step", {"k": k})
    if not curve.zeros():
        if curve.winding() % 2 != 1:
            raise InternalError("origin-free curve with even winding")


# -- double wedges -------------------------------------------------------------


@dataclass(frozen=True)
class DoubleWedge:
    """Two crossing lines; the region is one pair of opposite sectors.

    sector "pair-1" holds the points where line1 and line2 evaluate with the
    same sign, "pair-2" those where the signs differ.
    """

    apex: tuple[Rat, Rat]
    line1: ColoredLine
    line2: ColoredLine
    sector: str

    def __post_init__(self):
        if self.sector not in (SECTOR_AGREE, SECTOR_DISAGREE):
            raise PreconditionViolated(f"unknown sector {self.sector!r}")
        x = intersect(self.line1, self.line2)
        if x is None:
            raise PreconditionViolated("wedge boundary lines are parallel")
        if x != self.apex:
            raise PreconditionViolated("apex is not the boundary intersection")


def wedge_from_functionals(
    apex: tuple[Rat, Rat],
    f1: tuple[Rat, Rat, Rat],
    f2: tuple[Rat, Rat, Rat],
    contains_disagree: bool,
) -> DoubleWedge:
    """Build a DoubleWedge from raw functionals a*x + b*y + c.

    `contains_disagree` says whether the intended region is where the RAW
    functionals have opposite signs.  Line normalization may flip either
    functional; the stored sector label compensates.
    """
    flips = 0
    ls = []
    for a, b, c in (f1, f2):
        lead = a if a != 0 else b
        if lead < 0:
            flips ^= 1
        ls.append(ColoredLine(a, b, c, Color.K))
    disagree = contains_disagree ^ (flips == 1)
    return DoubleWedge(apex, ls[0], ls[1], SECTOR_DISAGREE if disagree else SECTOR_AGREE)


def wedge_contains(w: DoubleWedge, p: ColoredPoint | tuple[Rat, Rat]) -> bool:
    s1, s2 = w.line1.side(p), w.line2.side(p)
    if s1 == 0 or s2 == 0:
        raise OnBoundary("point on a wedge boundary line")
    return (s1 == s2) == (w.sector == SECTOR_AGREE)


def wedge_color_counts(w: DoubleWedge, points: Sequence[ColoredPoint]) -> dict[Color, int]:
    counts = {c: 0 for c in RGB}
    for p in points:
        if wedge_contains(w, p):
            counts[p.color] = counts.get(p.color, 0) + 1
    return counts


def wedge_dual_segment(w: DoubleWedge) -> Segment:
    """Segment joining the dual points of the two boundary lines.

    A line crosses this segment exactly when its dual point lies in the
    double wedge, so crossing counts mirror membership counts.  Requires
    both boundary lines non-vertical (their duals must exist) and the wedge
    to avoid the vertical direction: the sector pair containing it is dual
    to the complement of the segment, not to the segment.
    """
    b1, b2 = w.line1.b, w.line2.b
    vertical_in = ((b1 > 0) == (b2 > 0)) == (w.sector == SECTOR_AGREE)
    if b1 == 0 or b2 == 0 or vertical_in:
        raise PreconditionViolated(
            "wedge contains the vertical direction; no finite segment is dual to it"
        )
    s1 = dual_line_to_point(w.line1)
    s2 = dual_line_to_point(w.line2)
    return Segment((s1.x, s1.y), (s2.x, s2.y))


# -- the sweep -----------------------------------------------------------------


def _validate_wedge_input(points: Sequence[ColoredPoint]) -> int:
    m = len(points)
    if m % 6 != 0 or m == 0:
        raise PreconditionViolated(f"need 6n points, got {m}")
    n = m // 6
    got = {c: sum(1 for p in points if p.color is c) for c in RGB}
    for c in RGB:
        if got[c] == 0:
            raise MissingColor(f"no point of color {c.value}")
    for c in RGB:
        if got[c] != 2 * n:
            raise PreconditionViolated(f"color {c.value} has {got[c]} points, want {2 * n}")
    xs = {}
    for i, p in enumerate(points):
        if p.x in xs:
            raise PreconditionViolated(f"points {xs[p.x]} and {i} share x = {p.x}")
        xs[p.x] = i
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                if orient(points[i], points[j], points[k]) == 0:
                    raise PreconditionViolated(f"points {i}, {j}, {k} are collinear")
    return n


def _event_intercepts(points: Sequence[ColoredPoint], x0: Rat):
    """y-intercepts on the vertical x = x0 of every point-pair line."""
    events = []
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            pi, pj = points[i], points[j]
            y = pi.y + (pj.y - pi.y) * (x0 - pi.x) / (pj.x - pi.x)
            events.append((y, i, j))
    return events


def sweep_balanced_wedge(points: Sequence[ColoredPoint], validate: bool = False) -> DoubleWedge:
    """Double wedge containing exactly n points of each color, of 6n given.

    Preconditions: 6n points, 2n per color, pairwise distinct x, no three
    collinear.  Deterministic; raises InternalError (with a trace payload) if
    a guaranteed sweep invariant fails, which would be a library bug.
    """
    pts = tuple(points)
    n = _validate_wedge_input(pts)
    m = 6 * n
    h = 3 * n

    # a bad x0 is one where two pair lines share an intercept; there are
    # finitely many such lines' crossings, so stepping left escapes them
    x0 = min(p.x for p in pts) - 1
    n_pairs = m * (m - 1) // 2
    for _attempt in range(n_pairs * (n_pairs - 1) // 2 + 2):
        events = _event_intercepts(pts, x0)
        ys = sorted(e[0] for e in events)
        if all(a != b for a, b in zip(ys, ys[1:])):
            break
        x0 -= Fraction(1, 2)
    else:
        raise InternalError("no vertical line separates all events")
    events.sort(key=lambda e: e[0], reverse=True)

    top = ordering_at((x0, events[0][0] + 1), pts)
    order = list(top.points)
    pos = {id(p): r for r, p in enumerate(order)}

    q: list[tuple[int, int]] = []
    b = g = 0
    for p in order[:h]:
        v = _COLOR_VEC[p.color]
        b, g = b + v[0], g + v[1]
    for k in range(m):
        q.append((b - n, g - n))
        ov = _COLOR_VEC[order[k].color]
        iv = _COLOR_VEC[order[(k + h) % m].color]
        b, g = b + iv[0] - ov[0], g + iv[1] - ov[1]

    def found_zero() -> int | None:
        for k in range(m):
            if q[k] == (0, 0):
                return k
        return None

    def curve() -> WedgeCurve:
        return WedgeCurve(n, tuple(q))

    if validate:
        check_curve_invariants(curve())
        w0 = curve().winding() if not curve().zeros() else None

    stage = 0
    zero_at = found_zero()
    while zero_at is None and stage < len(events):
        _, i, j = events[stage]
        a_pos, b_pos = pos[id(pts[i])], pos[id(pts[j])]
        if a_pos > b_pos:
            a_pos, b_pos = b_pos, a_pos
        if b_pos != a_pos + 1:
            raise InternalError(
                "event pair is not adjacent in the ordering",
                {"stage": stage, "pair": (i, j), "positions": (a_pos, b_pos)},
            )
        u, v = order[a_pos], order[b_pos]
        order[a_pos], order[b_pos] = v, u
        pos[id(u)], pos[id(v)] = b_pos, a_pos

        w1 = (a_pos + 1) % m
        w2 = (w1 + h) % m
        du = _COLOR_VEC[u.color]
        dv = _COLOR_VEC[v.color]
        delta = (du[0] - dv[0], du[1] - dv[1])
        old1, old2 = q[w1], q[w2]
        q[w1] = (old1[0] + delta[0], old1[1] + delta[1])
        q[w2] = (old2[0] - delta[0], old2[1] - delta[1])
        stage += 1

        if validate:
            _validate_event(curve(), n, order, w1, w2, old1, old2)
        if q[w1] == (0, 0):
            zero_at = w1
        elif q[w2] == (0, 0):
            zero_at = w2
        else:
            zero_at = None

    if zero_at is None:
        trace = {"stages": stage, "final": [list(v) for v in q]}
        if validate and w0 is not None:
            trace["initial_winding"] = w0
        raise InternalError("sweep exhausted all events without a zero vertex", trace)

    k0 = zero_at if zero_at <= h else zero_at - h
    if q[(k0 + h) % m] != (0, 0):
        raise InternalError("zero vertex without its antipode", {"k": k0})

    if stage == 0:
        apex_y = events[0][0] + 1
    elif stage == len(events):
        apex_y = events[-1][0] - 1
    else:
        apex_y = (events[stage - 1][0] + events[stage][0]) / 2
    apex = (x0, apex_y)

    slopes = [(p.y - apex_y) / (p.x - x0) for p in order]
    if validate:
        reordered = ordering_at(apex, pts)
        if list(reordered.points) != order:
            raise InternalError("ordering drifted from slope order", {"stage": stage})
    m_lo = slopes[0] - 1 if k0 == 0 else (slopes[k0 - 1] + slopes[k0]) / 2
    m_hi = slopes[-1] + 1 if k0 + h == m else (slopes[k0 + h - 1] + slopes[k0 + h]) / 2

    w = wedge_from_functionals(
        apex,
        (-m_lo, Fraction(1), m_lo * x0 - apex_y),
        (-m_hi, Fraction(1), m_hi * x0 - apex_y),
        contains_disagree=True,
    )
    counts = wedge_color_counts(w, pts)
    if any(counts[c] != n for c in RGB):
        raise InternalError("balanced window did not verify", {"counts": str(counts)})
    return w


def _validate_event(curve: WedgeCurve, n, order, w1, w2, old1, old2) -> None:
    check_curve_invariants(curve)
    m = 6 * n
    b = g = 0
    for p in order[: 3 * n]:
        vec = _COLOR_VEC[p.color]
        b, g = b + vec[0], g + vec[1]
    for k in range(m):
        if curve.vertices[k] != (b - n, g - n):
            raise InternalError("incremental counts drifted", {"k": k})
        ov = _COLOR_VEC[order[k].color]
        iv = _COLOR_VEC[order[(k + 3 * n) % m].color]
        b, g = b + iv[0] - ov[0], g + iv[1] - ov[1]
    for w, old in ((w1, old1), (w2, old2)):
        prev = curve.vertices[(w - 1) % m]
        nxt = curve.vertices[(w + 1) % m]
        new = curve.vertices[w]
        _check_quad_lattice_free(prev, old, nxt, new)


def _point_in_closed_triangle(p, a, b, c) -> bool:
    d1 = orient(a, b, p)
    d2 = orient(b, c, p)
    d3 = orient(c, a, p)
    if orient(a, b, c) == 0:
        # degenerate: the triangle is a segment; containment means on it
        if d1 != 0 or d2 != 0 or d3 != 0:
            return False
        xs = sorted((a[0], b[0], c[0]))
        ys = sorted((a[1], b[1], c[1]))
        return xs[0] <= p[0] <= xs[2] and ys[0] <= p[1] <= ys[2]
    neg = any(d < 0 for d in (d1, d2, d3))
    pos = any(d > 0 for d in (d1, d2, d3))
    return not (neg and pos)


def _check_quad_lattice_free(prev, old, nxt, new) -> None:
    """No lattice point other than the four corners may lie in the region
    swept when a curve vertex moves from `old` to `new` (Property 3)."""
    corners = {prev, old, nxt, new}
    xs = [v[0] for v in corners]
    ys = [v[1] for v in corners]
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if p in corners:
                continue
            if _point_in_closed_triangle(p, prev, old, nxt) or _point_in_closed_triangle(
                p, prev, new, nxt
            ):
                raise InternalError("lattice point inside a swept cell", {"point": p})


# -- exhaustive oracle ---------------------------------------------------------


def wedge_point_indices(w: DoubleWedge, points: Sequence[ColoredPoint]) -> tuple[int, ...]:
    """Sorted indices of the points a wedge contains; its combinatorial type."""
    return tuple(i for i, p in enumerate(points) if wedge_contains(w, p))


def brute_oracle_wedges(
    points: Sequence[ColoredPoint], target: tuple[int, int, int]
) -> list[tuple[int, ...]]:
    """Every double-wedge type whose per-color counts (R, G, B) hit `target`.

    A type is the sorted index tuple of the contained points.  Any wedge can
    be rotated boundary line by boundary line, without changing its contents,
    until each line rests on input points; so enumerating all pairs of
    point-pair lines (a line paired with itself covers the empty and the
    near-everything wedges), both sector pairs, and every in/out resolution
    of the up-to-4 points on the chosen lines is exhaustive.  Deterministic,
    sorted by (size, indices).
    """
    pts = tuple(points)
    m = len(pts)
    if m == 0 or m > 18:
        raise PreconditionViolated(f"oracle is limited to 1..18 points, got {m}")
    if len(target) != 3 or any(t < 0 for t in target):
        raise PreconditionViolated(f"bad target {target}")
    for i in range(m):
        for j in range(i + 1, m):
            if (pts[i].x, pts[i].y) == (pts[j].x, pts[j].y):
                raise PreconditionViolated(f"points {i} and {j} coincide")
            for k in range(j + 1, m):
                if orient(pts[i], pts[j], pts[k]) == 0:
                    raise PreconditionViolated(f"points {i}, {j}, {k} are collinear")

    color_ix = {Color.R: 0, Color.G: 1, Color.B: 2}
    onehot = np.zeros((m, 3), dtype=np.int32)
    for i, p in enumerate(pts):
        onehot[i, color_ix[p.color]] = 1
    tgt = np.asarray(target, dtype=np.int32)

    # side matrix of every point-pair line, exact signs
    lines = []
    for i in range(m):
        for j in range(i + 1, m):
            lines.append(line_through(pts[i], pts[j]))
    side = np.array(
        [[l.side(p) for p in pts] for l in lines], dtype=np.int8
    )
    n_lines = len(lines)

    ii, jj = np.triu_indices(n_lines)  # includes the diagonal
    prod = side[ii].astype(np.int16) * side[jj].astype(np.int16)

    out: set[tuple[int, ...]] = set()
    for mask in (prod == -1, prod == 1):
        base = mask.astype(np.int32) @ onehot
        bound = (prod == 0).astype(np.int32) @ onehot
        rows = np.nonzero(
            np.all(base <= tgt, axis=1) & np.all(base + bound >= tgt, axis=1)
        )[0]
        for r in rows:
            inside = np.nonzero(mask[r])[0]
            need = tgt - base[r]
            bidx = np.nonzero(prod[r] == 0)[0]
            for sub in range(1 << len(bidx)):
                chosen = [bidx[t] for t in range(len(bidx)) if sub >> t & 1]
                add = np.zeros(3, dtype=np.int32)
                for c in chosen:
                    add += onehot[c]
                if np.array_equal(add, need):
                    out.add(tuple(sorted(inside.tolist() + [int(c) for c in chosen])))
    return sorted(out, key=lambda t: (len(t), t))


# -- duals: 111 wedges and halving segments ------------------------------------


def _rotation(t: Rat) -> tuple[Rat, Rat]:
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)  # cos, sin of a rational rotation


def _rot_point(p: tuple[Rat, Rat], cs: tuple[Rat, Rat]) -> tuple[Rat, Rat]:
    c, s = cs
    return (c * p[0] - s * p[1], s * p[0] + c * p[1])


def _unrot_point(p: tuple[Rat, Rat], cs: tuple[Rat, Rat]) -> tuple[Rat, Rat]:
    c, s = cs
    return (c * p[0] + s * p[1], -s * p[0] + c * p[1])


def _rot_functional(f: tuple[Rat, Rat, Rat], cs: tuple[Rat, Rat]) -> tuple[Rat, Rat, Rat]:
    # g(q) = f(R^-1 q): the rotated line's functional
    a, b, c0 = f
    c, s = cs
    return (a * c - b * s, a * s + b * c, c0)


def _unrot_functional(f: tuple[Rat, Rat, Rat], cs: tuple[Rat, Rat]) -> tuple[Rat, Rat, Rat]:
    c, s = cs
    return _rot_functional(f, (c, -s))


def find_111_wedge(points: Sequence[ColoredPoint]) -> DoubleWedge:
    """Double wedge containing exactly one point of each color.

    Needs at least one point per color and no three collinear points.  Works
    through duality: dualize, find a complete cell, pull a segment crossing
    one line per color back to a double wedge.
    """
    pts = tuple(points)
    present = {p.color for p in pts}
    for c in RGB:
        if c not in present:
            raise MissingColor(f"no point of color {c.value}")
    if not present <= set(RGB):
        raise PreconditionViolated("only colors R, G, B are allowed")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if (pts[i].x, pts[i].y) == (pts[j].x, pts[j].y):
                raise PreconditionViolated(f"points {i} and {j} coincide")
            for k in range(j + 1, len(pts)):
                if orient(pts[i], pts[j], pts[k]) == 0:
                    raise PreconditionViolated(f"points {i}, {j}, {k} are collinear")

    if len({p.x for p in pts}) == len(pts):
        frames: list[tuple[Rat, Rat] | None] = [None]
    else:
        # shared x-coordinates make dual lines parallel, so work in a rotated
        # copy; several angles are kept because the wedge pulled back from a
        # rotated frame must still avoid the original vertical direction, or
        # no finite segment is dual to it
        frames = []
        for den in range(1, 65):
            for num in (1, -1):
                cand = _rotation(Fraction(num, den))
                rp = [_rot_point((p.x, p.y), cand) for p in pts]
                if len({x for x, _ in rp}) == len(rp):
                    frames.append(cand)

    for cs in frames:
        if cs is None:
            work = pts
            sigma = None
        else:
            work = tuple(
                ColoredPoint(*_rot_point((p.x, p.y), cs), p.color) for p in pts
            )
            # dual x-coordinate of the original vertical direction in this
            # frame; a segment touching it pulls back to a wedge with no
            # finite dual segment
            sigma = -cs[0] / cs[1]
        duals = [dual_point_to_line(p) for p in work]

        def candidate_faces():
            first = find_complete_face(duals)
            yield first
            ident = frozenset(first.vertices)
            for f in build_arrangement(duals).faces:
                if f.bounded and is_complete(f) and frozenset(f.vertices) != ident:
                    yield f

        for face in candidate_faces():
            for seg in _frame_segments(duals, face, sigma):
                e1, e2 = seg.p, seg.q
                if e1[0] == e2[0]:
                    continue  # boundary lines would be parallel

                # primal boundary line of dual point e: y = e_x * x - e_y,
                # functional f(q) = q.y - e_x * q.x + e_y; a point's dual
                # line crosses the segment exactly when f_1, f_2 disagree
                # in sign
                f1 = (-e1[0], Fraction(1), e1[1])
                f2 = (-e2[0], Fraction(1), e2[1])
                if cs is not None:
                    f1 = _unrot_functional(f1, cs)
                    f2 = _unrot_functional(f2, cs)
                # the wedge dualizes back to a finite segment only if it
                # avoids the vertical direction: y-coefficients of one sign
                if f1[1] == 0 or f2[1] == 0 or (f1[1] > 0) != (f2[1] > 0):
                    continue
                l1 = ColoredLine(*f1, Color.K)
                l2 = ColoredLine(*f2, Color.K)
                apex = intersect(l1, l2)
                if apex is None:
                    raise InternalError("wedge boundary lines are parallel")
                w = wedge_from_functionals(apex, f1, f2, contains_disagree=True)
                counts = wedge_color_counts(w, pts)
                if any(counts[c] != 1 for c in RGB):
                    raise InternalError(
                        "111 wedge did not verify", {"counts": str(counts)}
                    )
                return w
    raise InternalError("no rotation left a segment-realizable wedge")


def _lambda_candidates(a_x: Rat, b_x: Rat, v_x: Rat, sigma: Rat) -> list[Rat]:
    """Edge parameters keeping the edge point on v_x's side of sigma.

    Two candidates are offered because one parameter can put the edge point
    directly above or below the corner, degenerating the cevian direction.
    """
    want = v_x > sigma
    if a_x == b_x:
        if a_x != sigma and (a_x > sigma) == want and a_x != v_x:
            return [Fraction(1, 2)]
        return []
    lam_sigma = (sigma - a_x) / (b_x - a_x)
    if (b_x > a_x) == want:
        lo, hi = max(Fraction(0), lam_sigma), Fraction(1)
    else:
        lo, hi = Fraction(0), min(Fraction(1), lam_sigma)
    if lo >= hi:
        return []
    mid = (lo + hi) / 2
    return [mid, (mid + hi) / 2]


def _frame_segments(duals, face, sigma):
    """Candidate dual-plane segments for one complete face.

    The canonical extraction comes first.  When the frame is a rotated copy
    (sigma set), it may touch the forbidden x-coordinate, so every other
    corner/edge/parameter choice that stays clear of sigma follows.
    """
    yield extract_111_segment(duals, face)
    if sigma is None:
        return
    m = len(face.vertices)
    for j in range(m):
        cj1 = face.boundary_colors[(j - 1) % m]
        cj2 = face.boundary_colors[j]
        if cj1 == cj2:
            continue
        v_x = face.vertices[j][0]
        if v_x == sigma:
            continue
        third = next(c for c in RGB if c not in (cj1, cj2))
        for k in range(m):
            if face.boundary_colors[k] is not third:
                continue
            a_x = face.vertices[k][0]
            b_x = face.vertices[(k + 1) % m][0]
            for lam in _lambda_candidates(a_x, b_x, v_x, sigma):
                seg = cevian_111_segment(duals, face, j, k, lam, x_avoid=sigma)
                if seg is not None:
                    yield seg


def halving_segment(lines: Sequence[ColoredLine]) -> Segment:
    """Segment crossing exactly n lines of each color, of 6n given lines.

    Preconditions: simple arrangement, 2n lines per color.  Vertical input
    lines are handled by an internal rational rotation.  Dual of
    sweep_balanced_wedge.
    """
    ls = tuple(lines)
    m = len(ls)
    if m % 6 != 0 or m == 0:
        raise PreconditionViolated(f"need 6n lines, got {m}")
    n = m // 6
    got = {c: sum(1 for l in ls if l.color is c) for c in RGB}
    for c in RGB:
        if got[c] == 0:
            raise MissingColor(f"no line of color {c.value}")
    for c in RGB:
        if got[c] != 2 * n:
            raise PreconditionViolated(f"color {c.value} has {got[c]} lines, want {2 * n}")
    validate_simple(ls)

    cs = None
    work = ls
    if any(l.is_vertical for l in ls):
        den = 2
        while True:
            cand = _rotation(Fraction(1, den))
            fs = [_rot_functional((l.a, l.b, l.c), cand) for l in ls]
            if all(b != 0 for _, b, _ in fs):
                cs = cand
                work = tuple(ColoredLine(a, b, c0, l.color) for (a, b, c0), l in zip(fs, ls))
                break
            den += 1

    dual_pts = tuple(dual_line_to_point(l) for l in work)
    w = sweep_balanced_wedge(dual_pts)
    s1 = dual_line_to_point(w.line1)
    s2 = dual_line_to_point(w.line2)
    p1, p2 = (s1.x, s1.y), (s2.x, s2.y)
    if cs is not None:
        p1, p2 = _unrot_point(p1, cs), _unrot_point(p2, cs)
    seg = Segment(p1, p2)

    counts = {c: 0 for c in RGB}
    for l in ls:
        a, b = sign(l.eval_at(seg.p)), sign(l.eval_at(seg.q))
        if a == 0 or b == 0:
            raise InternalError("segment endpoint on an input line")
        if a != b:
            counts[l.color] += 1
    if any(counts[c] != n for c in RGB):
        raise InternalError("halving segment did not verify", {"counts": str(counts)})
    return seg
