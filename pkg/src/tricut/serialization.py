"""Exact JSON encoding for every CLI-facing structure.

Rationals travel as strings ("5" or "5/2"), so persisted data never loses
precision; lattice coordinates are plain JSON integers.  Decoders validate
through the normal constructors, so a hand-edited file fails the same way a
bad argument would.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cells import Arrangement, Face
from .core import (
    ArcSet,
    CirclePoint,
    Color,
    ColoredLine,
    ColoredPoint,
    Rat,
    Segment,
    arcset,
    as_rat,
    circle_point,
    line,
    pt,
)
from .errors import PreconditionViolated
from .llines import LatticePointSet, LLine, RayDir
from .wedges import DoubleWedge

# -- scalars ---------------------------------------------------------------------


def enc_rat(x: Rat) -> str:
    return str(as_rat(x))


def dec_rat(v) -> Fraction:
    if isinstance(v, bool):
        raise PreconditionViolated(f"not a rational: {v!r}")
    if isinstance(v, (int, str)):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as e:
            raise PreconditionViolated(f"not a rational: {v!r}") from e
    raise PreconditionViolated(f"not a rational: {v!r}")


# -- geometry --------------------------------------------------------------------


def enc_point(p: ColoredPoint) -> dict:
    return {"x": enc_rat(p.x), "y": enc_rat(p.y), "color": p.color.value}


def dec_point(d: dict) -> ColoredPoint:
    return pt(dec_rat(d["x"]), dec_rat(d["y"]), d["color"])


def enc_line(l: ColoredLine) -> dict:
    return {
        "a": enc_rat(l.a),
        "b": enc_rat(l.b),
        "c": enc_rat(l.c),
        "color": l.color.value,
    }


def dec_line(d: dict) -> ColoredLine:
    return line(dec_rat(d["a"]), dec_rat(d["b"]), dec_rat(d["c"]), d["color"])


def enc_xy(p: tuple[Rat, Rat]) -> list:
    return [enc_rat(p[0]), enc_rat(p[1])]


def dec_xy(v) -> tuple[Fraction, Fraction]:
    return (dec_rat(v[0]), dec_rat(v[1]))


def enc_segment(s: Segment) -> dict:
    return {"p": enc_xy(s.p), "q": enc_xy(s.q)}


def dec_segment(d: dict) -> Segment:
    return Segment(dec_xy(d["p"]), dec_xy(d["q"]))


def enc_circle_point(p: CirclePoint) -> dict:
    return {"t": enc_rat(p.t), "color": p.color.value}


def dec_circle_point(d: dict) -> CirclePoint:
    return circle_point(dec_rat(d["t"]), d["color"])


def enc_arcset(a: ArcSet) -> list:
    return [[enc_rat(lo), enc_rat(hi)] for lo, hi in a.arcs]


def dec_arcset(v) -> ArcSet:
    return arcset([(dec_rat(lo), dec_rat(hi)) for lo, hi in v])


def enc_lattice_point(p: ColoredPoint) -> dict:
    return {"x": int(p.x), "y": int(p.y), "color": p.color.value}


def enc_lattice_set(s: LatticePointSet) -> list:
    return [enc_lattice_point(p) for p in s.points]


def dec_lattice_set(v) -> LatticePointSet:
    return LatticePointSet(tuple(dec_point(d) for d in v))


def enc_lline(l: LLine) -> dict:
    return {"corner": enc_xy(l.corner), "rays": [r.value for r in l.rays]}


def dec_lline(d: dict) -> LLine:
    return LLine(dec_xy(d["corner"]), tuple(RayDir(r) for r in d["rays"]))


def enc_wedge(w: DoubleWedge) -> dict:
    return {
        "apex": enc_xy(w.apex),
        "line1": enc_line(w.line1),
        "line2": enc_line(w.line2),
        "sector": w.sector,
    }


def dec_wedge(d: dict) -> DoubleWedge:
    return DoubleWedge(
        dec_xy(d["apex"]), dec_line(d["line1"]), dec_line(d["line2"]), d["sector"]
    )


def enc_face(f: Face) -> dict:
    return {
        "bounded": f.bounded,
        "vertices": [enc_xy(v) for v in f.vertices],
        "boundary_lines": list(f.boundary_lines),
        "boundary_colors": [c.value for c in f.boundary_colors],
    }


def enc_arrangement(a: Arrangement) -> dict:
    return {
        "lines": [enc_line(l) for l in a.lines],
        "vertices": [enc_xy(v) for v in a.vertices],
        "faces": [enc_face(f) for f in a.faces],
        "box": [enc_rat(x) for x in a.box],
    }


# -- instances -------------------------------------------------------------------


def enc_instance(kind: str, n: int, seed: int, obj) -> dict:
    """Envelope written by the gen command; `obj` is what generate() returned."""
    if isinstance(obj, LatticePointSet):
        payload = {"points": enc_lattice_set(obj)}
    elif obj and isinstance(obj[0], ColoredLine):
        payload = {"lines": [enc_line(l) for l in obj]}
    elif obj and isinstance(obj[0], CirclePoint):
        payload = {"points": [enc_circle_point(p) for p in obj]}
    else:
        payload = {"points": [enc_point(p) for p in obj]}
    return {"kind": kind, "n": n, "seed": seed, "instance": payload}


def unwrap_instance(d: dict) -> dict:
    """Accept either a bare instance payload or a gen/solve envelope."""
    return d["instance"] if isinstance(d, dict) and "instance" in d else d





def dec_lines_payload(d: dict) -> tuple[ColoredLine, ...]:
    body = unwrap_instance(d)
    if "lines" not in body:
        raise PreconditionViolated("expected a {\"lines\": [...]} instance")
    return tuple(dec_line(x) for x in body["lines"])


def dec_points_payload(d: dict) -> tuple[ColoredPoint, ...]:
    body = unwrap_instance(d)
    if "points" not in body or any("x" not in p for p in body["points"]):
        raise PreconditionViolated("expected a {\"points\": [{\"x\"...}]} instance")
    return tuple(dec_point(x) for x in body["points"])


def dec_circle_payload(d: dict) -> tuple[CirclePoint, ...]:
    body = unwrap_instance(d)
    if "points" not in body or any("t" not in p for p in body["points"]):
        raise PreconditionViolated("expected a {\"points\": [{\"t\"...}]} instance")
    return tuple(dec_circle_point(x) for x in body["points"])


def dec_lattice_payload(d: dict) -> LatticePointSet:
    body = unwrap_instance(d)
    if "points" not in body:
        raise PreconditionViolated("expected a {\"points\": [...]} instance")
    return dec_lattice_set(body["points"])
