"""Simple line arrangements, complete cells, and the simplicial parity audit.

A bounded cell of a simple arrangement of 3-colored lines is "complete" when
walking its boundary meets an odd number of red/green, red/blue, and
green/blue color changes.  `find_complete_face` constructs one such cell
incrementally; `build_arrangement` builds the whole subdivision so oracles
can scan every cell independently.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Color, ColoredLine, Rat, RGB, Segment, intersect, line, sign
from .errors import (
    InternalError,
    MissingColor,
    MixedParity,
    NotPseudomanifold,
    NotSimple,
    PreconditionViolated,
    UnboundedFace,
)


@dataclass(frozen=True)
class Face:
    """One cell.  Edge i joins vertices[i] to vertices[i+1] (cyclic), runs on
    input line boundary_lines[i], and has color boundary_colors[i].  Box edges
    of unbounded cells use line index -1 and color K.  Bounded cells are ccw.
    """

    bounded: bool
    vertices: tuple[tuple[Rat, Rat], ...]
    boundary_lines: tuple[int, ...]
    boundary_colors: tuple[Color, ...]


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[ColoredLine, ...]
    vertices: tuple[tuple[Rat, Rat], ...]
    faces: tuple[Face, ...]
    box: tuple[Rat, Rat, Rat, Rat]  # xmin, ymin, xmax, ymax


def validate_simple(lines: Sequence[ColoredLine]) -> dict[tuple[Rat, Rat], tuple[int, int]]:
    """Check pairwise non-parallel, distinct, and no three concurrent.

    Returns {intersection point: (i, j)}.  Raises NotSimple with the offending
    index pair or triple.
    """
    seen: dict[tuple[Rat, Rat], tuple[int, int]] = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = intersect(lines[i], lines[j])
            if p is None:
                raise NotSimple((i, j), f"lines {i} and {j} are parallel or equal")
            if p in seen:
                a, b = seen[p]
                trio = tuple(sorted(set((a, b, i, j))))
                raise NotSimple(trio, f"lines {trio} are concurrent at {p}")
            seen[p] = (i, j)
    return seen


def _dir_cmp(d1: tuple[Rat, Rat], d2: tuple[Rat, Rat]) -> int:
    # ccw order starting at the positive x axis; directions are never equal here
    h1 = 0 if (d1[1] > 0 or (d1[1] == 0 and d1[0] > 0)) else 1
    h2 = 0 if (d2[1] > 0 or (d2[1] == 0 and d2[0] > 0)) else 1
    if h1 != h2:
        return -1 if h1 < h2 else 1
    cr = d1[0] * d2[1] - d1[1] * d2[0]
    if cr == 0:
        raise InternalError("equal directions at a vertex", {"d1": str(d1), "d2": str(d2)})
    return -1 if cr > 0 else 1


def build_arrangement(lines: Sequence[ColoredLine]) -> Arrangement:
    """Subdivision of the plane induced by a simple arrangement.

    Unbounded cells are clipped to a box that strictly contains every vertex
    (margin 1), so every cell is a finite polygon; cells touching the box are
    flagged unbounded.  Face count must equal 1 + n + n*(n-1)/2.
    """
    lines = tuple(lines)
    n = len(lines)
    crossings = validate_simple(lines)

    anchors: list[tuple[Rat, Rat]] = list(crossings.keys())
    if not anchors:
        for l in lines:
            if l.is_vertical:
                anchors.append((-l.c / l.a, Fraction(0)))
            else:
                anchors.append((Fraction(0), l.eval_at((Fraction(0), Fraction(0))) / -l.b))
    if not anchors:
        anchors = [(Fraction(0), Fraction(0))]
    xmin = min(a[0] for a in anchors) - 1
    xmax = max(a[0] for a in anchors) + 1
    ymin = min(a[1] for a in anchors) - 1
    ymax = max(a[1] for a in anchors) + 1

    corners = [(xmin, ymin), (xmax, ymin), (xmax, ymax), (xmin, ymax)]
    sides = [line(0, 1, -ymin), line(1, 0, -xmax), line(0, 1, -ymax), line(1, 0, -xmin)]
    in_side_range = [
        lambda p: xmin <= p[0] <= xmax and p[1] == ymin,
        lambda p: ymin <= p[1] <= ymax and p[0] == xmax,
        lambda p: xmin <= p[0] <= xmax and p[1] == ymax,
        lambda p: ymin <= p[1] <= ymax and p[0] == xmin,
    ]

    node_id: dict[tuple[Rat, Rat], int] = {}
    coords: list[tuple[Rat, Rat]] = []

    def node(p: tuple[Rat, Rat]) -> int:
        if p not in node_id:
            node_id[p] = len(coords)
            coords.append(p)
        return node_id[p]

    for c in corners:
        node(c)
    border_hits: list[list[tuple[Rat, Rat]]] = [[] for _ in range(4)]
    line_endpoints: list[list[tuple[Rat, Rat]]] = [[] for _ in range(n)]
    for i, l in enumerate(lines):
        hits: list[tuple[Rat, Rat]] = []
        for s in range(4):
            p = intersect(l, sides[s])
            if p is not None and in_side_range[s](p):
                if p not in hits:
                    hits.append(p)
                border_hits[s].append(p)
        if len(hits) != 2:
            raise InternalError("line does not cross the box twice", {"line": i})
        line_endpoints[i] = hits

    # undirected edges (u, v, line index); -1 marks box sides
    edges: list[tuple[int, int, int]] = []
    for i, l in enumerate(lines):
        pts = line_endpoints[i] + [p for p, pr in crossings.items() if i in pr]
        pts.sort(key=lambda p: l.b * p[0] - l.a * p[1])
        for a, b in zip(pts, pts[1:]):
            edges.append((node(a), node(b), i))
    for s in range(4):
        pts = [corners[s], corners[(s + 1) % 4]] + border_hits[s]
        pts = sorted(set(pts), key=lambda p: (p[0], p[1]))
        for a, b in zip(pts, pts[1:]):
            edges.append((node(a), node(b), -1))

    # half-edges 2k (u->v) and 2k+1 (v->u); twin of h is h ^ 1
    out: dict[int, list[int]] = {u: [] for u in range(len(coords))}
    he_from: list[int] = []
    he_to: list[int] = []
    he_line: list[int] = []
    for (u, v, li) in edges:
        he_from += [u, v]
        he_to += [v, u]
        he_line += [li, li]
        out[u].append(len(he_from) - 2)
        out[v].append(len(he_from) - 1)

    def he_dir(h: int) -> tuple[Rat, Rat]:
        a, b = coords[he_from[h]], coords[he_to[h]]
        return (b[0] - a[0], b[1] - a[1])

    key = functools.cmp_to_key(_dir_cmp)
    pos_in_out: dict[int, int] = {}
    for u in out:
        out[u].sort(key=lambda h: key(he_dir(h)))
        for idx, h in enumerate(out[u]):
            pos_in_out[h] = idx

    def next_he(h: int) -> int:
        ring = out[he_to[h]]
        return ring[(pos_in_out[h ^ 1] - 1) % len(ring)]

    faces: list[Face] = []
    outer_seen = 0
    visited = [False] * len(he_from)
    for h0 in range(len(he_from)):
        if visited[h0]:
            continue
        cycle = []
        h = h0
        while not visited[h]:
            visited[h] = True
            cycle.append(h)
            h = next_he(h)
        if h != h0:
            raise InternalError("face walk did not close", {"start": h0})
        vs = [coords[he_from[x]] for x in cycle]
        area2 = sum(vs[i][0] * vs[(i + 1) % len(vs)][1] - vs[(i + 1) % len(vs)][0] * vs[i][1]
                    for i in range(len(vs)))
        if area2 < 0:
            outer_seen += 1
            continue
        if area2 == 0:
            raise InternalError("degenerate face", {"start": h0})
        lids = tuple(he_line[x] for x in cycle)
        faces.append(Face(
            bounded=all(li >= 0 for li in lids),
            vertices=tuple(vs),
            boundary_lines=lids,
            boundary_colors=tuple(lines[li].color if li >= 0 else Color.K for li in lids),
        ))
    if outer_seen != 1:
        raise InternalError("expected exactly one outer walk", {"count": outer_seen})
    expected = 1 + n + n * (n - 1) // 2
    if len(faces) != expected:
        raise InternalError("face count mismatch", {"got": len(faces), "expected": expected})
    return Arrangement(lines, tuple(coords), tuple(faces), (xmin, ymin, xmax, ymax))


def cycle_parity(colors: Sequence[Color]) -> tuple[int, int, int]:
    """Parities (mod 2) of bichromatic RG, RB, GB adjacencies along a cycle."""
    pairs = {frozenset(p): 0 for p in ((Color.R, Color.G), (Color.R, Color.B), (Color.G, Color.B))}
    m = len(colors)
    for i in range(m):
        k = frozenset((colors[i], colors[(i + 1) % m]))
        if k in pairs:
            pairs[k] += 1
    return (
        pairs[frozenset((Color.R, Color.G))] % 2,
        pairs[frozenset((Color.R, Color.B))] % 2,
        pairs[frozenset((Color.G, Color.B))] % 2,
    )


def is_complete(face: Face) -> bool:
    """A bounded cell is complete iff all three bichromatic parities are odd."""
    if not face.bounded:
        raise UnboundedFace("completeness is defined for bounded cells only")
    return cycle_parity(face.boundary_colors) == (1, 1, 1)


def _require_rgb(lines: Sequence[ColoredLine]) -> None:
    present = {l.color for l in lines}
    if not present <= set(RGB):
        raise PreconditionViolated("only colors R, G, B are allowed here")
    missing = [c.value for c in RGB if c not in present]
    if missing:
        raise MissingColor(f"no line of color {','.join(missing)}")


def find_complete_face(lines: Sequence[ColoredLine]) -> Face:
    """Locate a complete cell by incremental insertion.

    Start from the triangle cut out by the first line of each color, then add
    the remaining lines one at a time.  A line crossing the tracked cell
    splits it into two sub-cells, exactly one of which is complete; keep it.
    The result is a cell of the full arrangement.
    """
    lines = tuple(lines)
    _require_rgb(lines)
    validate_simple(lines)

    first = {}
    for i, l in enumerate(lines):
        first.setdefault(l.color, i)
    seed = [first[c] for c in RGB]

    # triangle of the three seed lines, oriented ccw; verts[i] -> verts[i+1]
    # runs on supports[i]
    i_r, i_g, i_b = seed
    v_rg = intersect(lines[i_r], lines[i_g])
    v_rb = intersect(lines[i_r], lines[i_b])
    v_gb = intersect(lines[i_g], lines[i_b])
    verts = [v_rg, v_rb, v_gb]
    owners = [{i_r, i_g}, {i_r, i_b}, {i_g, i_b}]
    area2 = sum(verts[i][0] * verts[(i + 1) % 3][1] - verts[(i + 1) % 3][0] * verts[i][1]
                for i in range(3))
    if area2 < 0:
        verts.reverse()
        owners.reverse()
    supports = [next(iter(owners[i] & owners[(i + 1) % 3])) for i in range(3)]

    for idx in range(len(lines)):
        if idx in seed:
            continue
        l = lines[idx]
        s = [sign(l.eval_at(v)) for v in verts]
        if any(x == 0 for x in s):
            raise InternalError("tracked cell vertex on a new line", {"line": idx})
        if all(x == s[0] for x in s):
            continue
        plus: list[tuple[tuple[Rat, Rat], int]] = []
        minus: list[tuple[tuple[Rat, Rat], int]] = []
        m = len(verts)
        for i in range(m):
            j = (i + 1) % m
            (plus if s[i] > 0 else minus).append((verts[i], supports[i]))
            if s[i] * s[j] < 0:
                x = intersect(l, lines[supports[i]])
                if s[i] > 0:
                    plus.append((x, idx))
                    minus.append((x, supports[i]))
                else:
                    minus.append((x, idx))
                    plus.append((x, supports[i]))
        keep = None
        for cand in (plus, minus):
            cols = tuple(lines[sp].color for _, sp in cand)
            if cycle_parity(cols) == (1, 1, 1):
                if keep is not None:
                    raise InternalError("both sub-cells complete", {"line": idx})
                keep = cand
        if keep is None:
            raise InternalError("no complete sub-cell after split", {"line": idx})
        verts = [v for v, _ in keep]
        supports = [sp for _, sp in keep]

    return Face(
        bounded=True,
        vertices=tuple(verts),
        boundary_lines=tuple(supports),
        boundary_colors=tuple(lines[sp].color for sp in supports),
    )


def cevian_111_segment(
    lines: Sequence[ColoredLine],
    face: Face,
    corner_v: int,
    edge_k: int,
    t_edge: Rat,
    x_avoid: Rat | None = None,
) -> Segment | None:
    """One explicit candidate for `extract_111_segment`.

    Runs from a point at fraction `t_edge` along edge `edge_k`, through the
    face vertex `corner_v` (where the two other target colors meet), extended
    a little past both contacts.  The caller picks a bichromatic corner and a
    third-color edge; this builds the segment or returns None when the
    direction degenerates to vertical.  With `x_avoid` set, both endpoints
    keep their x-coordinates strictly on the one side of `x_avoid` that the
    two contact points share (None when they sit on opposite sides); callers
    use this to dodge the dual image of a forbidden direction.
    """
    m = len(face.vertices)
    v = face.vertices[corner_v]
    a, b = face.vertices[edge_k], face.vertices[(edge_k + 1) % m]
    base = (a[0] + t_edge * (b[0] - a[0]), a[1] + t_edge * (b[1] - a[1]))
    if base[0] == v[0]:
        return None
    if x_avoid is not None:
        if base[0] == x_avoid or v[0] == x_avoid:
            return None
        if (base[0] > x_avoid) != (v[0] > x_avoid):
            return None

    # param 0 at the edge point, 1 at the corner; find every other crossing
    u = (v[0] - base[0], v[1] - base[1])
    targets = {
        face.boundary_lines[(corner_v - 1) % m],
        face.boundary_lines[corner_v],
        face.boundary_lines[edge_k],
    }
    lo_gap = hi_gap = Fraction(1)
    for li, l in enumerate(lines):
        den = l.a * u[0] + l.b * u[1]
        if den == 0:
            continue  # parallel to the segment direction, never crossed
        t = -l.eval_at(base) / den
        if li in targets:
            if t != 0 and t != 1:
                raise InternalError("target line param off its contact", {"line": li})
            continue
        if 0 <= t <= 1:
            raise InternalError("foreign line crosses the core segment", {"line": li})
        if t < 0:
            lo_gap = min(lo_gap, -t)
        else:
            hi_gap = min(hi_gap, t - 1)
    t0, t1 = -lo_gap / 2, 1 + hi_gap / 2
    if x_avoid is not None:
        # shrink so the x-coordinate never reaches x_avoid; the crossing
        # parameter sits outside [0, 1] because both contacts share a side
        t_cross = (x_avoid - base[0]) / u[0]
        if t_cross < 0:
            t0 = max(t0, t_cross) / 2
        elif t_cross > 1:
            t1 = (1 + min(t1, t_cross)) / 2
    return Segment(
        (base[0] + t0 * u[0], base[1] + t0 * u[1]),
        (base[0] + t1 * u[0], base[1] + t1 * u[1]),
    )


def extract_111_segment(lines: Sequence[ColoredLine], face: Face) -> Segment:
    """Segment crossing exactly one line of each color, from a complete cell.

    Runs from just outside an edge of one color, through that edge, to just
    past a corner where the other two colors meet.  Never vertical, and no
    endpoint lies on any input line.
    """
    if not is_complete(face):
        raise PreconditionViolated("cell is not complete")
    m = len(face.vertices)

    corner = None
    for i in range(m):
        j = (i + 1) % m
        if face.boundary_colors[i] != face.boundary_colors[j]:
            corner = j  # vertex between edges j-1 and j
            break
    if corner is None:
        raise InternalError("complete cell with monochromatic boundary")
    c1 = face.boundary_colors[(corner - 1) % m]
    c2 = face.boundary_colors[corner]
    third = next(c for c in RGB if c not in (c1, c2))
    edge_k = next(k for k in range(m) if face.boundary_colors[k] is third)

    for t_edge in (Fraction(1, 2), Fraction(1, 3)):
        seg = cevian_111_segment(lines, face, corner, edge_k, t_edge)
        if seg is not None:
            return seg
    raise InternalError("segment direction is forced vertical")


def gen_shielded_counterexample() -> tuple[ColoredLine, ...]:
    """Nine lines, one R, one G, one B and six neutral shields, arranged so no
    cell touches all of R, G, and B.  Removing the shields leaves the RGB
    triangle, which is complete.  Shows the 3-color guarantee has no 4-color
    analogue: recolor the shields to a fourth color and no cell is 4-colored.
    """
    e = Fraction(1, 10 ** 6)
    h = Fraction(1, 4)
    return (
        line(0, 1, 0, Color.R),                       # y = 0
        line(1, 0, 0, Color.G),                       # x = 0
        line(1, 1, -4, Color.B),                      # x + y = 4
        line(1 * e, -1, h, Color.K),                  # y = ex + h, shadows R
        line(2 * e, -1, -h, Color.K),                 # y = 2ex - h
        line(1, -3 * e, -h, Color.K),                 # x = 3ey + h, shadows G
        line(1, -4 * e, h, Color.K),                  # x = 4ey - h
        line(5 * e - 1, -1, 4 + h, Color.K),          # shadows B, outside
        line(6 * e - 1, -1, 4 - h, Color.K),          # shadows B, inside
    )


# -- simplicial parity audit ---------------------------------------------------


class ParityClass(enum.Enum):
    ALL_EVEN = "all-even"
    ALL_ODD = "all-odd"


@dataclass(frozen=True)
class ColoredTriangulation:
    """Pure (d-1)-dimensional simplicial complex with vertices colored 0..d.

    Simplices are d-tuples of vertex ids.  `parity_audit` requires the complex
    to be a closed pseudomanifold: every (d-2)-face lies in exactly 2
    simplices.
    """

    dim: int
    simplices: tuple[tuple[int, ...], ...]
    vertex_colors: tuple[int, ...]

    def __post_init__(self):
        if self.dim < 2:
            raise PreconditionViolated("dim must be at least 2")
        for c in self.vertex_colors:
            if not 0 <= c <= self.dim:
                raise PreconditionViolated(f"vertex color {c} outside 0..{self.dim}")
        norm = []
        seen = set()
        for s in self.simplices:
            ss = tuple(sorted(s))
            if len(set(ss)) != self.dim:
                raise PreconditionViolated(f"simplex {s} needs {self.dim} distinct vertex ids")
            if any(v >= len(self.vertex_colors) or v < 0 for v in ss):
                raise PreconditionViolated(f"simplex {s} references an unknown vertex")
            if ss in seen:
                raise PreconditionViolated(f"duplicate simplex {s}")
            seen.add(ss)
            norm.append(ss)
        object.__setattr__(self, "simplices", tuple(norm))


def good_type_counts(t: ColoredTriangulation) -> tuple[int, ...]:
    """counts[m] = number of simplices whose colors are exactly {0..d} - {m}."""
    counts = [0] * (t.dim + 1)
    all_colors = set(range(t.dim + 1))
    for s in t.simplices:
        cols = {t.vertex_colors[v] for v in s}
        if len(cols) == t.dim:
            (m,) = all_colors - cols
            counts[m] += 1
    return tuple(counts)


def parity_audit(t: ColoredTriangulation) -> ParityClass:
    """Verify the closed pseudomanifold property and the equal-parity law.

    The counts of good simplices per missing color are all even or all odd.
    MixedParity is unreachable for valid input (it would contradict the
    double-counting argument), so reaching it means a bug.
    """
    ridge_count: dict[tuple[int, ...], int] = {}
    for s in t.simplices:
        for r in itertools.combinations(s, t.dim - 1):
            ridge_count[r] = ridge_count.get(r, 0) + 1
    for r, c in ridge_count.items():
        if c != 2:
            raise NotPseudomanifold(f"face {r} lies in {c} simplices, want 2")
    counts = good_type_counts(t)
    parities = {c % 2 for c in counts}
    if len(parities) != 1:
        raise MixedParity(f"good-type counts {counts} have mixed parity")
    return ParityClass.ALL_ODD if parities == {1} else ParityClass.ALL_EVEN
