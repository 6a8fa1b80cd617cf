import random
from fractions import Fraction as F

import pytest

from tricut.cells import (
    Arrangement,
    ColoredTriangulation,
    Face,
    ParityClass,
    build_arrangement,
    cycle_parity,
    extract_111_segment,
    find_complete_face,
    gen_shielded_counterexample,
    good_type_counts,
    is_complete,
    parity_audit,
    validate_simple,
)
from tricut.core import Color, RGB, line, line_slope_intercept, sign
from tricut.errors import (
    MissingColor,
    NotPseudomanifold,
    NotSimple,
    PreconditionViolated,
    UnboundedFace,
)


def rand_simple_lines(n, seed, colors=None):
    """n lines with distinct integer slopes, retrying until simple."""
    for attempt in range(50):
        rng = random.Random(seed * 1000 + attempt)
        slopes = rng.sample(range(-4 * n - 2, 4 * n + 3), n)
        lines = []
        for i, m in enumerate(slopes):
            c = (colors[i] if colors else RGB[i % 3])
            lines.append(line_slope_intercept(m, F(rng.randint(-40, 40)), c))
        try:
            validate_simple(lines)
            return lines
        except NotSimple:
            continue
    raise AssertionError("could not build a simple arrangement")


def scan_complete(arr: Arrangement):
    return [f for f in arr.faces if f.bounded and is_complete(f)]


def crossing_counts(seg, lines):
    counts = {c: 0 for c in RGB}
    for l in lines:
        s1, s2 = l.side(seg.p), l.side(seg.q)
        assert s1 != 0 and s2 != 0, "segment endpoint on a line"
        if s1 != s2:
            counts[l.color] += 1
    return counts


TRIANGLE = (
    line(0, 1, 0, Color.R),    # y = 0
    line(1, 0, 0, Color.G),    # x = 0
    line(1, 1, -4, Color.B),   # x + y = 4
)


class TestValidateSimple:
    def test_parallel_pair(self):
        with pytest.raises(NotSimple) as e:
            validate_simple([line_slope_intercept(2, 0), line_slope_intercept(2, 5)])
        assert e.value.witness == (0, 1)

    def test_equal_lines(self):
        with pytest.raises(NotSimple):
            validate_simple([line(1, 2, 3), line(2, 4, 6)])

    def test_concurrent_triple(self):
        ls = [
            line_slope_intercept(0, 0),
            line_slope_intercept(1, 0),
            line_slope_intercept(-1, 0),
        ]
        with pytest.raises(NotSimple) as e:
            validate_simple(ls)
        assert e.value.witness == (0, 1, 2)

    def test_ok(self):
        assert len(validate_simple(TRIANGLE)) == 3


class TestBuildArrangement:
    def test_empty_and_single(self):
        assert len(build_arrangement([]).faces) == 1
        arr = build_arrangement([line(1, 0, -2, Color.R)])
        assert len(arr.faces) == 2
        assert all(not f.bounded for f in arr.faces)

    def test_triangle_faces(self):
        arr = build_arrangement(TRIANGLE)
        assert len(arr.faces) == 7
        bounded = [f for f in arr.faces if f.bounded]
        assert len(bounded) == 1
        assert sorted(bounded[0].vertices) == [(F(0), F(0)), (F(0), F(4)), (F(4), F(0))]

    @pytest.mark.parametrize("n,seed", [(4, 1), (6, 2), (9, 3), (12, 4)])
    def test_face_count_formula(self, n, seed):
        lines = rand_simple_lines(n, seed)
        arr = build_arrangement(lines)
        assert len(arr.faces) == 1 + n + n * (n - 1) // 2
        assert len(arr.vertices) >= n * (n - 1) // 2  # plus box nodes
        bounded = [f for f in arr.faces if f.bounded]
        assert len(bounded) == (n - 1) * (n - 2) // 2

    def test_bounded_faces_are_ccw_and_on_their_lines(self):
        lines = rand_simple_lines(7, 11)
        arr = build_arrangement(lines)
        for f in arr.faces:
            if not f.bounded:
                continue
            m = len(f.vertices)
            area2 = sum(
                f.vertices[i][0] * f.vertices[(i + 1) % m][1]
                - f.vertices[(i + 1) % m][0] * f.vertices[i][1]
                for i in range(m)
            )
            assert area2 > 0
            for i in range(m):
                l = lines[f.boundary_lines[i]]
                assert l.eval_at(f.vertices[i]) == 0
                assert l.eval_at(f.vertices[(i + 1) % m]) == 0


class TestCycleParity:
    def test_frozen_examples(self):
        R, G, B = Color.R, Color.G, Color.B
        assert cycle_parity((R, R, G, G)) == (0, 0, 0)
        assert cycle_parity((R, G, R, B)) == (0, 0, 0)
        assert cycle_parity((R, R, G, B)) == (1, 1, 1)
        assert cycle_parity((R, G, B)) == (1, 1, 1)

    def test_unbounded_rejected(self):
        arr = build_arrangement([line(1, 0, -2, Color.R)])
        with pytest.raises(UnboundedFace):
            is_complete(arr.faces[0])


class TestFindCompleteFace:
    def test_three_lines_give_the_triangle(self):
        f = find_complete_face(TRIANGLE)
        assert is_complete(f)
        assert sorted(f.vertices) == [(F(0), F(0)), (F(0), F(4)), (F(4), F(0))]

    def test_missing_color(self):
        with pytest.raises(MissingColor):
            find_complete_face([
                line_slope_intercept(0, 0, Color.R),
                line_slope_intercept(1, 2, Color.R),
                line_slope_intercept(2, 1, Color.G),
            ])

    def test_wrong_palette(self):
        ls = TRIANGLE + (line(1, -1, 7, Color.K),)
        with pytest.raises(PreconditionViolated):
            find_complete_face(ls)

    @pytest.mark.parametrize("n,seed", [(3, 5), (5, 6), (8, 7), (11, 8), (15, 9)])
    def test_result_is_a_complete_cell_of_the_arrangement(self, n, seed):
        lines = rand_simple_lines(n, seed)
        face = find_complete_face(lines)
        assert is_complete(face)
        arr = build_arrangement(lines)
        matches = [f for f in arr.faces if set(f.vertices) == set(face.vertices)]
        assert len(matches) == 1
        assert is_complete(matches[0])

    @pytest.mark.parametrize("seed", range(20, 30))
    def test_scan_always_finds_at_least_one(self, seed):
        lines = rand_simple_lines(9, seed)
        arr = build_arrangement(lines)
        found = scan_complete(arr)
        assert len(found) >= 1
        face = find_complete_face(lines)
        assert any(set(f.vertices) == set(face.vertices) for f in found)


class TestExtract111Segment:
    @pytest.mark.parametrize("n,seed", [(3, 31), (6, 32), (9, 33), (12, 34)])
    def test_segment_crosses_one_line_per_color(self, n, seed):
        lines = rand_simple_lines(n, seed)
        face = find_complete_face(lines)
        seg = extract_111_segment(lines, face)
        assert crossing_counts(seg, lines) == {Color.R: 1, Color.G: 1, Color.B: 1}

    def test_never_vertical(self):
        for seed in range(40, 52):
            lines = rand_simple_lines(6, seed)
            seg = extract_111_segment(lines, find_complete_face(lines))
            assert seg.p[0] != seg.q[0]

    def test_incomplete_face_rejected(self):
        lines = rand_simple_lines(7, 53)
        arr = build_arrangement(lines)
        other = next(f for f in arr.faces if f.bounded and not is_complete(f))
        with pytest.raises(PreconditionViolated):
            extract_111_segment(lines, other)


class TestShieldedCounterexample:
    def test_is_simple_and_has_nine_lines(self):
        ls = gen_shielded_counterexample()
        assert len(ls) == 9
        validate_simple(ls)
        assert [l.color for l in ls[:3]] == [Color.R, Color.G, Color.B]
        assert all(l.color is Color.K for l in ls[3:])

    def test_no_cell_meets_all_three_colors(self):
        ls = gen_shielded_counterexample()
        arr = build_arrangement(ls)
        for f in arr.faces:
            cols = set(f.boundary_colors) - {Color.K}
            assert not {Color.R, Color.G, Color.B} <= cols

    def test_removing_shields_restores_a_complete_cell(self):
        ls = gen_shielded_counterexample()[:3]
        f = find_complete_face(ls)
        assert is_complete(f)


class TestParityAudit:
    def test_tricolored_triangle_cycle(self):
        t = ColoredTriangulation(2, ((0, 1), (1, 2), (0, 2)), (0, 1, 2))
        assert good_type_counts(t) == (1, 1, 1)
        assert parity_audit(t) is ParityClass.ALL_ODD

    def test_two_colored_square_cycle(self):
        t = ColoredTriangulation(2, ((0, 1), (1, 2), (2, 3), (0, 3)), (0, 1, 0, 1))
        assert good_type_counts(t) == (0, 0, 4)
        assert parity_audit(t) is ParityClass.ALL_EVEN

    def test_rainbow_tetrahedron_boundary(self):
        t = ColoredTriangulation(
            3,
            ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)),
            (0, 1, 2, 3),
        )
        assert good_type_counts(t) == (1, 1, 1, 1)
        assert parity_audit(t) is ParityClass.ALL_ODD

    def test_octahedron_with_antipodal_colors(self):
        faces = (
            (0, 1, 2), (0, 2, 4), (0, 4, 3), (0, 3, 1),
            (5, 1, 2), (5, 2, 4), (5, 4, 3), (5, 3, 1),
        )
        t = ColoredTriangulation(3, faces, (0, 1, 2, 2, 1, 0))
        assert good_type_counts(t) == (0, 0, 0, 8)
        assert parity_audit(t) is ParityClass.ALL_EVEN

    def test_open_surface_rejected(self):
        with pytest.raises(NotPseudomanifold):
            parity_audit(ColoredTriangulation(3, ((0, 1, 2),), (0, 1, 2)))

    def test_duplicate_simplex_rejected(self):
        with pytest.raises(PreconditionViolated):
            ColoredTriangulation(2, ((0, 1), (0, 1), (1, 2), (0, 2)), (0, 1, 2))

    def test_random_cycles_never_mix_parity(self):
        rng = random.Random(99)
        for _ in range(60):
            m = rng.randint(3, 24)
            colors = tuple(rng.randint(0, 2) for _ in range(m))
            simplices = tuple((i, (i + 1) % m) for i in range(m))
            parity_audit(ColoredTriangulation(2, simplices, colors))

    def test_random_bipyramids_never_mix_parity(self):
        # bipyramid over an m-cycle: a closed 2-sphere for every m >= 3
        rng = random.Random(7)
        for _ in range(30):
            m = rng.randint(3, 12)
            north, south = m, m + 1
            tris = []
            for i in range(m):
                j = (i + 1) % m
                tris.append((i, j, north))
                tris.append((i, j, south))
            colors = tuple(rng.randint(0, 3) for _ in range(m + 2))
            parity_audit(ColoredTriangulation(3, tuple(tris), colors))
