"""Balanced subsets of 3-colored circle points using at most two arcs.

Given n points of each color on a circle and any k between 1 and n, there is
a set of at most 2 disjoint circular arcs whose union contains exactly k
points of each color.  The construction composes two operations, starting
from the full circle:

  f: halve.  Split the current set by a "degree 3" cut (at most 3 cut
     parameters, the sign pattern of a cubic in the circle parameter), so
     that each side keeps floor(c/2) points per color.  Such a cut always
     exists and at least one side has at most 2 arcs.
  g: complement.  c per color becomes n - c.

An f/g word driving the per-color count from n to k always exists with
length O(log n); `plan_ops` builds one greedily by expanding the target
interval backward, `moment_halve` performs one halving step exactly, and
`find_k_arcset` runs the whole pipeline.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from .core import (
    ArcSet,
    CirclePoint,
    Color,
    Rat,
    RGB,
    arcset,
    arcset_complement,
    arcset_rotate,
    full_circle,
)
from .errors import (
    BoundaryPoint,
    InternalError,
    MissingColor,
    NoCutFound,
    PreconditionViolated,
)

OP_HALVE = "f"
OP_COMPLEMENT = "g"


# -- op plans ------------------------------------------------------------------


@dataclass(frozen=True)
class OpPlan:
    n: int
    k: int
    ops: tuple[str, ...]

    def __post_init__(self):
        for o in self.ops:
            if o not in (OP_HALVE, OP_COMPLEMENT):
                raise PreconditionViolated(f"unknown op {o!r}")

    def counts_path(self) -> tuple[int, ...]:
        """Per-color counts after each op, starting at n."""
        path = [self.n]
        for o in self.ops:
            path.append(path[-1] // 2 if o == OP_HALVE else self.n - path[-1])
        return tuple(path)


def plan_ops(n: int, k: int) -> OpPlan:
    """f/g word sending n to k, never using g twice in a row.

    Built backward: grow the target interval {k} by preimages (f doubles it,
    g mirrors it) until it captures floor(n/2), then lead with one f.  Every
    intermediate interval stays inside [1, n-1], so evaluation never touches
    0 or n mid-plan.
    """
    if n < 1 or not 1 <= k <= n:
        raise PreconditionViolated(f"need 1 <= k <= n, got k={k}, n={n}")
    if k == n:
        return OpPlan(n, k, ())
    h = n // 2
    lo = hi = k
    rev = []  # ops in backward (prepend) order
    while True:
        if hi < h:
            rev.append(OP_HALVE)
            lo, hi = 2 * lo, 2 * hi + 1
        elif lo > h:
            rev.append(OP_COMPLEMENT)
            lo, hi = n - hi, n - lo
        else:
            rev.append(OP_HALVE)  # leading op: n -> floor(n/2) lands in [lo, hi]
            break
    plan = OpPlan(n, k, tuple(reversed(rev)))
    if plan.counts_path()[-1] != k:
        raise InternalError("op plan does not evaluate to k", {"n": n, "k": k})
    return plan


def bfs_shortest(n: int, k: int) -> int:
    """Length of a shortest f/g word from n to k (reference oracle)."""
    if k == n:
        return 0
    dist = {n: 0}
    frontier = [n]
    while frontier:
        nxt = []
        for x in frontier:
            for y in (x // 2, n - x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == k:
                        return dist[y]
                    nxt.append(y)
        frontier = nxt
    raise InternalError("state space exhausted", {"n": n, "k": k})


def bfs_shortest_lengths(n: int) -> np.ndarray:
    """dist[k] = shortest f/g word length from n to k, for every k in 0..n."""
    dist = np.full(n + 1, -1, dtype=np.int16)
    dist[n] = 0
    frontier = np.array([n], dtype=np.int64)
    d = 0
    while frontier.size:
        d += 1
        nxt = np.unique(np.concatenate([frontier // 2, n - frontier]))
        nxt = nxt[dist[nxt] == -1]
        dist[nxt] = d
        frontier = nxt
    return dist


def plan_ops_batch(n: int) -> np.ndarray:
    """Vectorized plan_ops for every k at once.

    Returns an int8 matrix with rows k = 0..n; entry 0 = no op, 1 = f,
    2 = g.  Row k's plan reads left to right skipping zeros (rows are
    right-aligned).  Row 0 is all zeros (k = 0 is not a valid target).
    """
    h = n // 2
    lo = np.arange(n + 1, dtype=np.int64)
    hi = lo.copy()
    active = np.ones(n + 1, dtype=bool)
    active[0] = False
    active[n] = False
    rev_cols = []
    while active.any():
        stop = active & (lo <= h) & (hi >= h)
        fmask = active & (hi < h)
        gmask = active & (lo > h)
        col = np.zeros(n + 1, dtype=np.int8)
        col[fmask | stop] = 1
        col[gmask] = 2
        rev_cols.append(col)
        lo2 = np.where(fmask, 2 * lo, lo)
        hi2 = np.where(fmask, 2 * hi + 1, hi)
        lo = np.where(gmask, n - hi2, lo2)
        hi = np.where(gmask, n - lo2, hi2)
        active &= ~stop
    if not rev_cols:
        return np.zeros((n + 1, 0), dtype=np.int8)
    return np.stack(rev_cols[::-1], axis=1)


def eval_plans_batch(n: int, ops: np.ndarray) -> np.ndarray:
    """Apply every row of a plan matrix to the starting count n."""
    vals = np.full(ops.shape[0], n, dtype=np.int64)
    for j in range(ops.shape[1]):
        col = ops[:, j]
        vals = np.where(col == 1, vals // 2, vals)
        vals = np.where(col == 2, n - vals, vals)
    return vals


# -- one halving step ----------------------------------------------------------


@dataclass(frozen=True)
class CutProfile:
    """At most 3 cut parameters plus a polarity.

    The side of parameter t is polarity * (-1)**(number of cuts above t).
    `on_points` says the cuts sit exactly on point parameters (odd k), in
    which case those points belong to neither side.
    """

    cuts: tuple[Rat, ...]
    polarity: int
    on_points: bool


@dataclass(frozen=True)
class HalveResult:
    m1: ArcSet
    m2: ArcSet
    profile: CutProfile


def _point_side(t: Rat, profile: CutProfile) -> int:
    above = sum(1 for c in profile.cuts if c > t)
    return profile.polarity * (-1 if above % 2 else 1)


def moment_halve(a: ArcSet, points: Sequence[CirclePoint], k: int) -> HalveResult:
    """Split the points of `a` so each side keeps floor(k/2) per color.

    Preconditions: `a` has at most 2 arcs (or is the full circle); `a`
    contains exactly k points of each color; no point parameter is 0 or on
    an arc boundary; 0 lies outside `a` unless `a` is the full circle.
    For odd k the three cuts land on one point of each color, and those
    points end up in neither side.
    """
    if k < 1:
        raise PreconditionViolated("k must be positive")
    if not a.is_full_circle:
        if a.component_count() > 2:
            raise PreconditionViolated("input set must have at most 2 arcs")
        try:
            if a.contains(Fraction(0)):
                raise PreconditionViolated("parameter 0 must lie outside the set")
        except BoundaryPoint:
            raise PreconditionViolated("parameter 0 must lie outside the set")
    seen = set()
    for p in points:
        if p.t == 0:
            raise PreconditionViolated("point parameter 0 is not allowed here")
        if p.t in seen:
            raise PreconditionViolated(f"duplicate parameter {p.t}")
        seen.add(p.t)

    active = {c: [] for c in RGB}
    for p in points:
        if a.contains(p.t):  # BoundaryPoint propagates: point on an arc boundary
            active[p.color].append(p.t)
    for c in RGB:
        if len(active[c]) != k:
            raise PreconditionViolated(
                f"set holds {len(active[c])} {c.value} points, want {k}"
            )
        active[c].sort()

    # linear interval view; arcs never wrap here since 0 is outside
    if a.is_full_circle:
        intervals = [(Fraction(0), Fraction(1))]
    else:
        intervals = list(a.arcs)

    sensitive = sorted(
        {p.t for p in points}
        | {lo for lo, _ in intervals}
        | {hi for _, hi in intervals}
        | {Fraction(0), Fraction(1)}
    )
    profile = _search_profile(active, sensitive, k)
    if profile is None:
        raise NoCutFound(f"no admissible cut profile for k={k}")

    halves = {1: [], -1: []}
    bounds, dropped = _piece_bounds(profile, sensitive)
    for lo, hi in intervals:
        inner = sorted({c for c in bounds if lo < c < hi})
        edges = [lo] + inner + [hi]
        for plo, phi in zip(edges, edges[1:]):
            mid = (plo + phi) / 2
            if any(zlo <= mid <= zhi for zlo, zhi in dropped):
                continue  # excised sliver around an on-point cut: neither side
            halves[_point_side(mid, profile)].append((plo, phi))
    m1 = arcset(halves[1]) if halves[1] else ArcSet(())
    m2 = arcset(halves[-1]) if halves[-1] else ArcSet(())

    want = k // 2
    for m in (m1, m2):
        got = {c: 0 for c in RGB}
        for p in points:
            if m.contains(p.t):
                got[p.color] = got.get(p.color, 0) + 1
        if any(got[c] != want for c in RGB):
            raise InternalError("halve sides are unbalanced", {"got": str(got)})
    total = m1.component_count() + m2.component_count()
    if total > 5 or min(m1.component_count(), m2.component_count()) > 2:
        raise InternalError("halve produced too many arcs", {"total": total})
    return HalveResult(m1, m2, profile)


def _piece_bounds(profile: CutProfile, sensitive: list[Rat]):
    """Where the output arcs start and stop, plus slivers belonging to neither.

    Gap cuts are already safely between sensitive parameters and bound both
    sides.  An on-point cut excises its point: the left side stops at the
    midpoint just below the point, the right side starts at the midpoint
    just above, so no output boundary ever hits a point parameter.  The
    sliver between those two midpoints holds only the excised point and is
    dropped from both sides.
    """
    if not profile.on_points:
        return sorted(profile.cuts), []
    bounds = []
    dropped = []
    for c in profile.cuts:
        i = bisect_left(sensitive, c)
        zlo = (sensitive[i - 1] + c) / 2
        zhi = (c + sensitive[i + 1]) / 2
        bounds.extend((zlo, zhi))
        dropped.append((zlo, zhi))
    return sorted(bounds), dropped


def _search_profile(active, sensitive, k: int) -> CutProfile | None:
    """First admissible profile: fewest cuts, then lexicographic."""
    if k % 2 == 1:
        return _search_on_point(active, k)
    return _search_gap_cuts(active, sensitive, k)


def _int_scale(values: list[list[Rat]], extra: list[Rat]):
    """Common integer grid for exact numpy work, or None if it would overflow."""
    den = 1
    for vs in values:
        for v in vs:
            den = lcm(den, v.denominator)
    for v in extra:
        den = lcm(den, v.denominator)
    if den > 10**9:
        return None
    hi = max((abs(v) for vs in values for v in vs), default=Fraction(1))
    if den * hi.numerator * 4 > 2**62:
        return None
    return den


def _search_gap_cuts(active, sensitive, k: int) -> CutProfile | None:
    # candidate cut values: midpoints of consecutive sensitive parameters,
    # which can never collide with a point or an arc boundary
    cands = []
    for a, b in zip(sensitive, sensitive[1:]):
        if a != b:
            cands.append((a + b) / 2)
    cands = sorted(set(cands))
    want = k // 2

    den = _int_scale([active[c] for c in RGB], cands)
    if den is not None:
        ts = {c: np.array([int(v * den) for v in active[c]], dtype=np.int64) for c in RGB}
        cv = np.array([int(v * den) for v in cands], dtype=np.int64)
        idx = {c: np.searchsorted(ts[c], cv) for c in RGB}
    else:
        idx = {
            c: np.array([bisect_left(active[c], v) for v in cands], dtype=np.int64)
            for c in RGB
        }
    m = len(cands)

    # r = 0: valid only when there is nothing to split
    if k == 0:
        return CutProfile((), 1, False)
    # r = 1: points above the cut are side +;  want k - idx == k/2
    ok = None
    for c in RGB:
        cond = (k - idx[c]) == want
        ok = cond if ok is None else (ok & cond)
    hits = np.flatnonzero(ok)
    if hits.size:
        return CutProfile((cands[int(hits[0])],), 1, False)
    # r = 2: side + is below the first cut and above the second
    ok = None
    for c in RGB:
        cond = (idx[c][None, :] - idx[c][:, None]) == want  # [i, j] = idx[j]-idx[i]
        ok = cond if ok is None else (ok & cond)
    iu = np.triu_indices(m, 1)
    flat = ok[iu]
    hits = np.flatnonzero(flat)
    if hits.size:
        h = int(hits[0])
        i, j = int(iu[0][h]), int(iu[1][h])
        return CutProfile((cands[i], cands[j]), 1, False)
    # r = 3: side + is between cut 1 and 2, or above cut 3
    diff = {c: idx[c][None, :] - idx[c][:, None] for c in RGB}  # [a, b] = idx[b]-idx[a]
    for ai in range(m):
        ok = None
        for c in RGB:
            # count+ = (idx[b] - idx[ai]) + (k - idx[c2])
            cond = (diff[c][ai][:, None] + k - idx[c][None, :]) == want
            ok = cond if ok is None else (ok & cond)
        bi, ci = np.nonzero(ok)
        keep = (bi > ai) & (ci > bi)
        if keep.any():
            pos = int(np.argmax(keep))
            b, c2 = int(bi[pos]), int(ci[pos])
            return CutProfile((cands[ai], cands[b], cands[c2]), 1, False)
    return None


def _search_on_point(active, k: int) -> CutProfile | None:
    """Odd k: one cut on a point of each color; remaining k-1 split evenly."""
    want = (k - 1) // 2
    tr, tg, tb = (active[c] for c in RGB)

    den = _int_scale([tr, tg, tb], [])
    if den is None:
        return _search_on_point_scalar(active, k)
    arr = {
        c: np.array([int(v * den) for v in active[c]], dtype=np.int64) for c in RGB
    }
    # lexicographic combos over (red cut, green cut, blue cut)
    rr = np.repeat(arr[Color.R], k * k)
    gg = np.tile(np.repeat(arr[Color.G], k), k)
    bb = np.tile(arr[Color.B], k * k)
    cuts = np.sort(np.stack([rr, gg, bb], axis=1), axis=1)
    own = {Color.R: rr, Color.G: gg, Color.B: bb}
    ok = None
    for c in RGB:
        i1 = np.searchsorted(arr[c], cuts[:, 0])
        i2 = np.searchsorted(arr[c], cuts[:, 1])
        i3 = np.searchsorted(arr[c], cuts[:, 2])
        plus = i2 - i1 + k - i3
        # own cut point gets excised; it was tallied in + iff it is the
        # lowest or highest cut (even number of cuts strictly above it)
        excised_plus = (cuts[:, 0] == own[c]) | (cuts[:, 2] == own[c])
        # careful when cuts collide in value across colors: they never do,
        # parameters are globally distinct
        plus = plus - excised_plus.astype(np.int64)
        cond = plus == want
        ok = cond if ok is None else (ok & cond)
    hits = np.flatnonzero(ok)
    if not hits.size:
        return None
    h = int(hits[0])
    fr = Fraction(int(rr[h]), den)
    fg = Fraction(int(gg[h]), den)
    fb = Fraction(int(bb[h]), den)
    return CutProfile(tuple(sorted((fr, fg, fb))), 1, True)


def _search_on_point_scalar(active, k: int) -> CutProfile | None:
    want = (k - 1) // 2
    for fr in active[Color.R]:
        for fg in active[Color.G]:
            for fb in active[Color.B]:
                cuts = sorted((fr, fg, fb))
                good = True
                for c in RGB:
                    own = {Color.R: fr, Color.G: fg, Color.B: fb}[c]
                    i1 = bisect_left(active[c], cuts[0])
                    i2 = bisect_left(active[c], cuts[1])
                    i3 = bisect_left(active[c], cuts[2])
                    plus = i2 - i1 + k - i3
                    if cuts[0] == own or cuts[2] == own:
                        plus -= 1
                    if plus != want:
                        good = False
                        break
                if good:
                    return CutProfile(tuple(cuts), 1, True)
    return None


# -- the driver ----------------------------------------------------------------


def rotate_parameters(
    points: Sequence[CirclePoint], a: ArcSet, delta: Rat
) -> tuple[tuple[CirclePoint, ...], ArcSet]:
    """Rotate every parameter and the arc set by +delta (mod 1)."""
    moved = tuple(CirclePoint((p.t + delta) % 1, p.color) for p in points)
    return moved, arcset_rotate(a, delta)


def _safe_zero_delta(a: ArcSet, points: Sequence[CirclePoint]) -> Rat:
    """Rotation sending 0 to the middle of a parameter-free gap outside `a`."""
    sensitive = sorted({p.t for p in points} | {lo % 1 for lo, _ in a.arcs} | {hi % 1 for _, hi in a.arcs})
    if a.is_full_circle:
        allowed = list(sensitive)
    else:
        comp = arcset_complement(a)
        allowed = []
        for i, s in enumerate(sensitive):
            nxt = sensitive[(i + 1) % len(sensitive)]
            gap_mid = (s + (nxt if nxt > s else nxt + 1)) / 2 % 1
            try:
                if comp.contains(gap_mid):
                    allowed.append(s)
            except BoundaryPoint:
                continue
    if not allowed:
        raise InternalError("no safe gap for the zero parameter")
    s = allowed[0]
    i = sensitive.index(s)
    nxt = sensitive[(i + 1) % len(sensitive)]
    mid = (s + (nxt if nxt > s else nxt + 1)) / 2 % 1
    return -mid % 1


def find_k_arcset(points: Sequence[CirclePoint], k: int) -> ArcSet:
    """Union of at most 2 arcs holding exactly k points of each color.

    Input: n points per color with globally distinct parameters, 0 <= k <= n.
    k = 0 and k = n short-circuit to the empty set and the full circle; the
    rest runs the op plan, rotating before each halve so the parameter
    origin sits in a safe gap.
    """
    counts = {c: 0 for c in RGB}
    seen = set()
    for p in points:
        if p.t in seen:
            raise PreconditionViolated(f"duplicate parameter {p.t}")
        seen.add(p.t)
        counts[p.color] = counts.get(p.color, 0) + 1
    for c in RGB:
        if counts[c] == 0:
            raise MissingColor(f"no point of color {c.value}")
    n = counts[RGB[0]]
    if any(counts[c] != n for c in RGB):
        raise PreconditionViolated(f"unbalanced colors {counts}")
    if not 0 <= k <= n:
        raise PreconditionViolated(f"need 0 <= k <= n, got k={k}")
    if k == 0:
        return ArcSet(())
    if k == n:
        return full_circle()

    plan = plan_ops(n, k)
    a = full_circle()
    cur = n
    for op in plan.ops:
        if op == OP_COMPLEMENT:
            a = arcset_complement(a)
            cur = n - cur
            continue
        delta = _safe_zero_delta(a, points)
        moved, a_rot = rotate_parameters(points, a, delta)
        res = moment_halve(a_rot, moved, cur)
        sides = [res.m1, res.m2]
        sides = [s for s in sides if s.component_count() <= 2]
        if not sides:
            raise InternalError("no side with at most 2 arcs")
        pick = min(sides, key=lambda s: s.arcs)
        a = arcset_rotate(pick, -delta)
        cur //= 2
        if a.component_count() > 2:
            raise InternalError("kept side has too many arcs")

    got = {c: 0 for c in RGB}
    for p in points:
        if a.contains(p.t):
            got[p.color] = got.get(p.color, 0) + 1
    if any(got[c] != k for c in RGB):
        raise InternalError("final arc set is unbalanced", {"got": str(got)})
    if a.component_count() > 2:
        raise InternalError("final arc set has too many arcs")
    return a
