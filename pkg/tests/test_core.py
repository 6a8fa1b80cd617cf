import random
from fractions import Fraction as F

import pytest

from tricut.core import (
    ArcSet,
    Color,
    GeneralPosition,
    LatticePolygon,
    arcset,
    arcset_color_counts,
    arcset_complement,
    arcset_rotate,
    check_general_position,
    circle_point,
    dual_line_to_point,
    dual_point_to_line,
    empty_arcset,
    full_circle,
    intersect,
    line,
    line_slope_intercept,
    line_through,
    orient,
    pt,
    winding_number,
)
from tricut.errors import (
    BoundaryPoint,
    OriginOnCurve,
    PreconditionViolated,
    VerticalLine,
)


class TestRationals:
    def test_fraction_is_reduced_with_positive_denominator(self):
        q = F(6, -8)
        assert q.numerator == -3 and q.denominator == 4

    def test_floats_rejected(self):
        with pytest.raises(PreconditionViolated):
            pt(0.5, 1, "R")


class TestLines:
    def test_normalization_makes_equal_lines_equal(self):
        assert line(2, 4, 6) == line(1, 2, 3)
        assert line(-2, 4, 6) == line(1, -2, -3)
        assert line(0, -5, 10) == line(0, 1, -2)

    def test_zero_normal_rejected(self):
        with pytest.raises(PreconditionViolated):
            line(0, 0, 1)

    def test_line_through_contains_both_points(self):
        p, q = pt(1, 2, "R"), pt(3, -5, "R")
        l = line_through(p, q)
        assert l.eval_at(p) == 0 and l.eval_at(q) == 0

    def test_side_signs_split_the_plane(self):
        l = line_slope_intercept(2, -3)  # y = 2x - 3
        assert l.side(pt(0, 0, "R")) != 0
        assert l.side(pt(0, 0, "R")) == -l.side(pt(0, -10, "R"))
        assert l.side(pt(1, -1, "R")) == 0

    def test_intersection_is_exact(self):
        l1 = line_slope_intercept(F(1, 3), F(1, 7))
        l2 = line_slope_intercept(F(-2, 5), F(3, 11))
        p = intersect(l1, l2)
        assert p is not None
        x, y = p
        assert l1.a * x + l1.b * y + l1.c == 0
        assert l2.a * x + l2.b * y + l2.c == 0

    def test_parallel_lines_do_not_intersect(self):
        assert intersect(line_slope_intercept(2, 1), line_slope_intercept(2, 5)) is None

    def test_vertical_slope_raises(self):
        with pytest.raises(VerticalLine):
            _ = line(1, 0, -4).slope


class TestOrient:
    def test_ccw_cw_collinear(self):
        a, b = (F(0), F(0)), (F(2), F(0))
        assert orient(a, b, (F(1), F(1))) == 1
        assert orient(a, b, (F(1), F(-1))) == -1
        assert orient(a, b, (F(7), F(0))) == 0


class TestDuality:
    def test_roundtrip(self):
        p = pt(2, 3, "G")
        l = dual_point_to_line(p)
        assert (l.slope, l.intercept) == (2, -3)
        q = dual_line_to_point(l)
        assert (q.x, q.y, q.color) == (p.x, p.y, p.color)

    def test_vertical_line_has_no_dual(self):
        with pytest.raises(VerticalLine):
            dual_line_to_point(line(1, 0, -2))

    def test_incidence_and_above_below_preserved(self):
        rng = random.Random(7)
        for _ in range(200):
            px, py = F(rng.randint(-20, 20)), F(rng.randint(-20, 20))
            m, k = F(rng.randint(-20, 20)), F(rng.randint(-20, 20))
            p = pt(px, py, "R")
            l = line_slope_intercept(m, k, "B")
            # p above l  <=>  dual point of l above dual line of p
            primal = py - (m * px + k)
            lstar = dual_line_to_point(l)
            pstar = dual_point_to_line(p)
            dual_diff = lstar.y - (pstar.slope * lstar.x + pstar.intercept)
            assert (primal > 0) == (dual_diff > 0)
            assert (primal == 0) == (dual_diff == 0)


class TestGeneralPosition:
    def test_collinear_triple_detected(self):
        pts = [pt(0, 0, "R"), pt(1, 1, "G"), pt(5, 5, "B")]
        with pytest.raises(PreconditionViolated):
            check_general_position(pts, GeneralPosition.NO_THREE_COLLINEAR)

    def test_distinct_xy_detected(self):
        pts = [pt(0, 0, "R"), pt(0, 3, "G")]
        with pytest.raises(PreconditionViolated):
            check_general_position(pts, GeneralPosition.DISTINCT_XY)
        pts = [pt(0, 1, "R"), pt(2, 3, "G"), pt(4, 1, "B")]
        with pytest.raises(PreconditionViolated):
            check_general_position(pts, GeneralPosition.DISTINCT_XY)

    def test_good_inputs_pass(self):
        pts = [pt(0, 0, "R"), pt(1, 3, "G"), pt(2, 1, "B")]
        check_general_position(pts, GeneralPosition.NO_THREE_COLLINEAR)
        check_general_position(pts, GeneralPosition.DISTINCT_XY)


class TestArcSet:
    def test_canonical_forms(self):
        a = arcset([(F(1, 2), F(3, 2))])
        assert a == full_circle() or a.arcs == ((F(1, 2), F(3, 2)),)
        assert arcset([(0, F(1, 2)), (F(1, 2), 1)]) == full_circle()
        assert arcset([(F(1, 4), F(1, 2)), (F(1, 2), F(3, 4))]).arcs == ((F(1, 4), F(3, 4)),)

    def test_wraparound_canonicalized(self):
        a = arcset([(F(3, 4), 1), (0, F(1, 4))])
        assert a.arcs == ((F(3, 4), F(5, 4)),)
        b = arcset([(F(7, 8), F(9, 8))])
        assert b.arcs == ((F(7, 8), F(9, 8)),)

    def test_full_circle_from_single_wrapping_arc(self):
        assert arcset([(F(1, 3), F(4, 3))]) == full_circle()

    def test_overlap_rejected(self):
        with pytest.raises(PreconditionViolated):
            arcset([(0, F(1, 2)), (F(1, 4), F(3, 4))])
        with pytest.raises(PreconditionViolated):
            arcset([(0, F(3, 4)), (F(1, 2), F(5, 4))])

    def test_direct_construction_validates(self):
        with pytest.raises(PreconditionViolated):
            ArcSet(((F(1, 2), F(1, 4)),))
        with pytest.raises(PreconditionViolated):
            ArcSet(((F(0), F(1, 2)), (F(1, 4), F(3, 4))))

    def test_contains_and_boundary(self):
        a = arcset([(F(3, 4), F(5, 4))])
        assert a.contains(F(7, 8))
        assert a.contains(F(1, 8))
        assert not a.contains(F(1, 2))
        with pytest.raises(BoundaryPoint):
            a.contains(F(3, 4))
        with pytest.raises(BoundaryPoint):
            a.contains(F(1, 4))

    def test_full_circle_contains_everything(self):
        assert full_circle().contains(F(0))
        assert full_circle().contains(F(99, 100))

    def test_complement_involution(self):
        cases = [
            arcset([(F(1, 4), F(1, 2))]),
            arcset([(F(3, 4), F(9, 8)), (F(1, 4), F(1, 2))]),
            full_circle(),
            empty_arcset(),
        ]
        for a in cases:
            c = arcset_complement(a)
            assert arcset_complement(c) == a
            assert a.total_length() + c.total_length() == 1

    def test_rotate_preserves_length_and_components(self):
        a = arcset([(F(1, 8), F(1, 4)), (F(1, 2), F(7, 8))])
        b = arcset_rotate(a, F(1, 3))
        assert b.total_length() == a.total_length()
        assert b.component_count() == a.component_count()
        assert arcset_rotate(b, F(-1, 3)) == a

    def test_color_counts(self):
        a = arcset([(F(1, 8), F(3, 8))])
        pts = [
            circle_point(F(1, 4), "R"),
            circle_point(F(5, 16), "G"),
            circle_point(F(1, 2), "B"),
            circle_point(F(15, 16), "B"),
        ]
        counts = arcset_color_counts(a, pts)
        assert counts[Color.R] == 1 and counts[Color.G] == 1 and counts[Color.B] == 0

    def test_color_counts_boundary_raises(self):
        a = arcset([(F(1, 4), F(1, 2))])
        with pytest.raises(BoundaryPoint):
            arcset_color_counts(a, [circle_point(F(1, 4), "R")])


class TestWinding:
    def test_square_around_origin(self):
        sq = LatticePolygon(((1, 1), (-1, 1), (-1, -1), (1, -1)))
        assert winding_number(sq) == 1
        rev = LatticePolygon(tuple(reversed(sq.vertices)))
        assert winding_number(rev) == -1

    def test_square_missing_origin(self):
        sq = LatticePolygon(((3, 1), (2, 1), (2, 2), (3, 2)))
        assert winding_number(sq) == 0

    def test_double_loop(self):
        loop = ((2, 0), (0, 2), (-2, 0), (0, -2)) * 2
        assert winding_number(LatticePolygon(loop)) == 2

    def test_zero_length_edges_skipped(self):
        sq = LatticePolygon(((1, 1), (1, 1), (-1, 1), (-1, -1), (1, -1)))
        assert winding_number(sq) == 1

    def test_origin_vertex_raises(self):
        with pytest.raises(OriginOnCurve):
            winding_number(LatticePolygon(((0, 0), (1, 0), (0, 1))))

    def test_origin_on_edge_interior_raises(self):
        with pytest.raises(OriginOnCurve):
            winding_number(LatticePolygon(((-2, 0), (3, 0), (0, 5))))

    def test_crossing_at_vertex_counted_once(self):
        # vertex exactly on the positive x axis
        hexagon = ((2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2))
        assert winding_number(LatticePolygon(hexagon)) == 1
