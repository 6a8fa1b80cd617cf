"""Command line front end.

    tricut gen KIND [--n N] [--seed S] [--out PATH]
    tricut solve {cell,wedge111,wedge,segment,arcs,lline}
                 [--in PATH | --n N --seed S] [--k K] [--verify] [--out PATH]
    tricut verify --in SOLUTION [--out PATH]
    tricut render --in FILE [--out PATH] [--format svg]

Solve commands read an instance file, or generate one themselves from --n
and --seed.  Every solver output is a JSON envelope carrying the instance,
so it can be re-verified or rendered from the file alone.  Exit codes:
0 success, 2 a precondition failed (bad input, bad flags), 3 an internal
guarantee broke (the contradiction trace is dumped to stderr).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import serialization as ser
from .arcs import find_k_arcset
from .cells import (
    Face,
    build_arrangement,
    cycle_parity,
    find_complete_face,
)
from .core import (
    Color,
    arcset_color_counts,
    dual_line_to_point,
    dual_point_to_line,
    empty_arcset,
    intersect,
    pt,
)
from .errors import (
    GenerationFailed,
    InternalError,
    PreconditionViolated,
    TricutError,
    VerticalLine,
)
from .generators import GenKind, GenSpec, generate
from .llines import brute_oracle_llines, find_balanced_lline, lline_counts
from .oracles import (
    VerificationReport,
    arcset_points_key,
    count_segment_crossings,
    enumerate_2arc_sets,
    scan_all_complete_faces,
)
from .svg import (
    render_arcset,
    render_arrangement,
    render_lline,
    render_wedge,
)
from .wedges import (
    brute_oracle_wedges,
    find_111_wedge,
    halving_segment,
    sweep_balanced_wedge,
    wedge_color_counts,
    wedge_dual_segment,
    wedge_from_functionals,
    wedge_point_indices,
)

SOLVE_KINDS = ("cell", "wedge111", "wedge", "segment", "arcs", "lline")

# oracle enumeration is exponential in places; cap it at desk scale
_ORACLE_MAX_POINTS = 18

_DEFAULT_N = {
    "cell": 7,
    "wedge111": 9,
    "wedge": 2,
    "segment": 2,
    "arcs": 5,
    "lline": 4,
}


# -- plumbing --------------------------------------------------------------------


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise PreconditionViolated(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise PreconditionViolated(f"{path} is not valid JSON: {e}") from e


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _instance_id(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True).encode("utf-8")
    return hashlib.sha1(blob).hexdigest()[:12]


def _default_instance(kind: str, n: int, seed: int) -> dict:
    """Instance payload a solve command generates for itself."""
    if kind == "cell":
        lines = generate(GenSpec(GenKind.SimpleLines3C, n, seed))
        return {"lines": [ser.enc_line(l) for l in lines]}
    if kind == "wedge111":
        points = generate(GenSpec(GenKind.Points3C, n, seed))
        return {"points": [ser.enc_point(p) for p in points]}
    if kind == "wedge":
        points = generate(GenSpec(GenKind.Points3CConvex, n, seed))
        return {"points": [ser.enc_point(p) for p in points]}
    if kind == "segment":
        # duals of convex-position points: simple, 2n lines per color
        points = generate(GenSpec(GenKind.Points3CConvex, n, seed))
        return {"lines": [ser.enc_line(dual_point_to_line(p)) for p in points]}
    if kind == "arcs":
        points = generate(GenSpec(GenKind.CirclePoints3C, n, seed))
        return {"points": [ser.enc_circle_point(p) for p in points]}
    if kind == "lline":
        s = generate(GenSpec(GenKind.LatticeRedHull, n, seed))
        return {"points": ser.enc_lattice_set(s)}
    raise PreconditionViolated(f"unknown solve kind {kind!r}")


# -- solving ---------------------------------------------------------------------


def _solve(kind: str, payload: dict, k: int | None) -> dict:
    """Run one solver on a decoded instance; answers come back as JSON data."""
    if kind == "cell":
        lines = ser.dec_lines_payload(payload)
        face = find_complete_face(lines)
        return {"face": ser.enc_face(face)}
    if kind == "wedge111":
        points = ser.dec_points_payload(payload)
        w = find_111_wedge(points)
        return {"wedge": ser.enc_wedge(w), "dual_segment": _try_dual(w)}
    if kind == "wedge":
        points = ser.dec_points_payload(payload)
        w = sweep_balanced_wedge(points)
        return {"wedge": ser.enc_wedge(w), "dual_segment": _try_dual(w)}
    if kind == "segment":
        lines = ser.dec_lines_payload(payload)
        seg = halving_segment(lines)
        return {"segment": ser.enc_segment(seg)}
    if kind == "arcs":
        points = ser.dec_circle_payload(payload)
        if k is None:
            raise PreconditionViolated("solve arcs requires --k")
        a = find_k_arcset(points, k)
        return {"arcs": ser.enc_arcset(a)}
    if kind == "lline":
        s = ser.dec_lattice_payload(payload)
        l, kk = find_balanced_lline(s)
        return {"lline": ser.enc_lline(l), "k": kk}
    raise PreconditionViolated(f"unknown solve kind {kind!r}")


def _try_dual(w) -> dict | None:
    try:
        return ser.enc_segment(wedge_dual_segment(w))
    except VerticalLine:
        return None


def _counts_tuple(cc: dict) -> tuple[int, int, int]:
    return (cc[Color.R], cc[Color.G], cc[Color.B])


def _report(kind: str, payload: dict, answer: dict, k: int | None) -> VerificationReport:
    """Recompute the oracle check from JSON data alone (what verify re-runs)."""
    t0 = time.perf_counter()
    iid = _instance_id(payload)

    if kind == "cell":
        lines = ser.dec_lines_payload(payload)
        arr = build_arrangement(lines)
        complete = scan_all_complete_faces(arr)
        # cells are convex; the vertex set identifies one regardless of the
        # rotation the two construction paths chose
        verts = frozenset(ser.dec_xy(v) for v in answer["face"]["vertices"])
        oracle = tuple(
            sorted(ser.enc_xy(v) for v in f.vertices) for f in complete
        )
        member = any(frozenset(f.vertices) == verts for f in complete)
        colors = [Color(c) for c in answer["face"]["boundary_colors"]]
        counts, target = cycle_parity(colors), (1, 1, 1)

    elif kind in ("wedge111", "wedge"):
        points = ser.dec_points_payload(payload)
        w = ser.dec_wedge(answer["wedge"])
        counts = _counts_tuple(wedge_color_counts(w, points))
        n = 1 if kind == "wedge111" else len(points) // 6
        target = (n, n, n)
        if len(points) <= _ORACLE_MAX_POINTS:
            oracle_sets = brute_oracle_wedges(points, target)
            member = wedge_point_indices(w, points) in oracle_sets
            oracle = tuple(list(t) for t in oracle_sets)
        else:
            oracle, member = (), counts == target

    elif kind == "segment":
        lines = ser.dec_lines_payload(payload)
        seg = ser.dec_segment(answer["segment"])
        counts = _counts_tuple(count_segment_crossings(seg, lines))
        n = len(lines) // 6
        target = (n, n, n)
        oracle, member = (), counts == target
        if len(lines) <= _ORACLE_MAX_POINTS and not any(l.is_vertical for l in lines):
            f1 = dual_point_to_line(pt(seg.p[0], seg.p[1], Color.K))
            f2 = dual_point_to_line(pt(seg.q[0], seg.q[1], Color.K))
            apex = intersect(f1, f2)
            if apex is not None:
                w = wedge_from_functionals(
                    apex, (f1.a, f1.b, f1.c), (f2.a, f2.b, f2.c), contains_disagree=True
                )
                duals = tuple(dual_line_to_point(l) for l in lines)
                oracle_sets = brute_oracle_wedges(duals, target)
                member = wedge_point_indices(w, duals) in oracle_sets
                oracle = tuple(list(t) for t in oracle_sets)

    elif kind == "arcs":
        points = ser.dec_circle_payload(payload)
        if k is None:
            raise PreconditionViolated("verify arcs requires the k parameter")
        a = ser.dec_arcset(answer["arcs"])
        counts = _counts_tuple(arcset_color_counts(a, points))
        target = (k, k, k)
        oracle_sets = enumerate_2arc_sets(points, k)
        keys = {arcset_points_key(o, points) for o in oracle_sets}
        member = a.component_count() <= 2 and arcset_points_key(a, points) in keys
        oracle = tuple(sorted(list(kk) for kk in keys))

    elif kind == "lline":
        s = ser.dec_lattice_payload(payload)
        l = ser.dec_lline(answer["lline"])
        kk = int(answer["k"])
        counts = lline_counts(l, s)[0]
        target = (kk, kk, kk)
        oracle_pairs = brute_oracle_llines(s)
        member = (l, kk) in oracle_pairs
        oracle = tuple(
            {"lline": ser.enc_lline(ol), "k": ok} for ol, ok in oracle_pairs
        )

    else:
        raise PreconditionViolated(f"unknown solve kind {kind!r}")

    return VerificationReport(
        instance_id=iid,
        solver_answer=answer,
        oracle_answers=oracle,
        member=member,
        counts=counts,
        target=target,
        elapsed_s=time.perf_counter() - t0,
    )


def _report_as_dict(r: VerificationReport) -> dict:
    return json.loads(r.to_json_line())


# -- commands --------------------------------------------------------------------


def _cmd_gen(args) -> int:
    spec = GenSpec(args.kind, args.n, args.seed)
    obj = generate(spec)
    env = ser.enc_instance(spec.kind.value, args.n, args.seed, obj)
    _emit(json.dumps(env, indent=2, sort_keys=True), args.out)
    return 0


def _cmd_solve(args) -> int:
    kind = args.what
    if args.infile is not None:
        payload = ser.unwrap_instance(_load_json(args.infile))
    else:
        n = args.n if args.n is not None else _DEFAULT_N[kind]
        payload = _default_instance(kind, n, args.seed)
    k = args.k
    answer = _solve(kind, payload, k)
    if kind == "lline":
        k = int(answer["k"])
    env = {
        "command": f"solve {kind}",
        "params": {"k": k},
        "instance": payload,
        "answer": answer,
        "verification": None,
    }
    if args.verify:
        env["verification"] = _report_as_dict(_report(kind, payload, answer, k))
        if not env["verification"]["member"]:
            raise InternalError(
                "solver answer rejected by its oracle", env["verification"]
            )
    if args.format == "svg":
        _emit(_render(env), args.out)
    else:
        _emit(json.dumps(env, indent=2, sort_keys=True), args.out)
    return 0


def _cmd_verify(args) -> int:
    env = _load_json(args.infile)
    for key in ("command", "instance", "answer"):
        if key not in env:
            raise PreconditionViolated(f"solution file lacks {key!r}")
    kind = env["command"].split()[-1]
    if kind not in SOLVE_KINDS:
        raise PreconditionViolated(f"unknown command {env['command']!r}")
    k = (env.get("params") or {}).get("k")
    report = _report(kind, env["instance"], env["answer"], k)
    got = _report_as_dict(report)
    if not got["member"]:
        raise InternalError("solution rejected by its oracle", got)
    embedded = env.get("verification")
    if embedded is not None:
        a = {key: v for key, v in embedded.items() if key != "elapsed_s"}
        b = {key: v for key, v in got.items() if key != "elapsed_s"}
        if a != b:
            raise InternalError(
                "re-verification differs from the embedded report",
                {"embedded": a, "recomputed": b},
            )
    _emit(report.to_json_line(), args.out)
    return 0


def _dec_face(d: dict) -> Face:
    return Face(
        bounded=bool(d["bounded"]),
        vertices=tuple(ser.dec_xy(v) for v in d["vertices"]),
        boundary_lines=tuple(int(i) for i in d["boundary_lines"]),
        boundary_colors=tuple(Color(c) for c in d["boundary_colors"]),
    )


def _render(env: dict) -> str:
    command = env.get("command", "")
    payload = ser.unwrap_instance(env)
    answer = env.get("answer", {})

    if command.endswith("cell") and "face" in answer:
        lines = ser.dec_lines_payload(payload)
        return render_arrangement(build_arrangement(lines), _dec_face(answer["face"]))
    if "wedge" in answer:
        points = ser.dec_points_payload(payload)
        return render_wedge(points, ser.dec_wedge(answer["wedge"]))
    if "arcs" in answer:
        points = ser.dec_circle_payload(payload)
        return render_arcset(points, ser.dec_arcset(answer["arcs"]))
    if "lline" in answer:
        s = ser.dec_lattice_payload(payload)
        return render_lline(s, ser.dec_lline(answer["lline"]))
    if "segment" in answer:
        lines = ser.dec_lines_payload(payload)
        arr = build_arrangement(lines)
        return render_arrangement(arr)

    # bare or generated instances, no solution overlay
    if "lines" in payload:
        return render_arrangement(build_arrangement(ser.dec_lines_payload(payload)))
    if "points" in payload and payload["points"] and "t" in payload["points"][0]:
        return render_arcset(ser.dec_circle_payload(payload), empty_arcset())
    raise PreconditionViolated("nothing renderable in this file")


def _cmd_render(args) -> int:
    if args.format == "json":
        raise PreconditionViolated("render emits SVG; use --format svg")
    env = _load_json(args.infile)
    _emit(_render(env), args.out)
    return 0


# -- argument parsing --------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="tricut",
        description="Balanced bipartitions of 3-colored geometric data.",
    )
    sub = top.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate an instance")
    g.add_argument("kind", choices=[k.value for k in GenKind])
    g.add_argument("--n", type=int, default=6)
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--out", dest="out", default=None)
    g.set_defaults(func=_cmd_gen)

    s = sub.add_parser("solve", help="run a solver")
    s.add_argument("what", choices=SOLVE_KINDS)
    s.add_argument("--in", dest="infile", default=None)
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--format", choices=("json", "svg"), default="json")
    s.add_argument("--out", dest="out", default=None)
    s.set_defaults(func=_cmd_solve)

    v = sub.add_parser("verify", help="re-check a solution file against oracles")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--out", dest="out", default=None)
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("render", help="draw an instance or solution as SVG")
    r.add_argument("--in", dest="infile", required=True)
    r.add_argument("--format", choices=("json", "svg"), default="svg")
    r.add_argument("--out", dest="out", default=None)
    r.set_defaults(func=_cmd_render)
    return top


def run(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalError as e:
        trace = {"error": "internal", "message": str(e), "trace": e.trace}
        sys.stderr.write(json.dumps(trace, default=str, sort_keys=True) + "\n")
        return 3
    except (PreconditionViolated, GenerationFailed) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except TricutError as e:
        # remaining family members are invariant breaches (odd winding lost,
        # parity mixed, no cut found): report as internal
        sys.stderr.write(json.dumps({"error": "internal", "message": str(e)}) + "\n")
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
