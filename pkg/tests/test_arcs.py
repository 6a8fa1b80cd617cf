"""Op plans, exact halving cuts, and the 2-arc driver."""

import math
import random
from fractions import Fraction as F

import numpy as np
import pytest

from tricut.arcs import (
    OP_COMPLEMENT,
    OP_HALVE,
    OpPlan,
    bfs_shortest,
    bfs_shortest_lengths,
    eval_plans_batch,
    find_k_arcset,
    moment_halve,
    plan_ops,
    plan_ops_batch,
    rotate_parameters,
)
from tricut.core import (
    Color,
    RGB,
    arcset,
    arcset_color_counts,
    circle_point,
    full_circle,
)
from tricut.errors import MissingColor, PreconditionViolated


def batch_row_ops(mat, k):
    return tuple(OP_HALVE if v == 1 else OP_COMPLEMENT for v in mat[k] if v != 0)


class TestPlanOps:
    def test_frozen_small_plans(self):
        assert plan_ops(2, 1).ops == ("f",)
        assert plan_ops(5, 5).ops == ()
        assert plan_ops(7, 2).ops == ("f", "g", "f")

    def test_identity_when_k_equals_n(self):
        for n in (1, 2, 9, 100):
            assert plan_ops(n, n).ops == ()

    def test_counts_path(self):
        p = plan_ops(7, 2)
        assert p.counts_path() == (7, 3, 4, 2)

    def test_rejects_bad_k(self):
        with pytest.raises(PreconditionViolated):
            plan_ops(5, 0)
        with pytest.raises(PreconditionViolated):
            plan_ops(5, 6)
        with pytest.raises(PreconditionViolated):
            plan_ops(0, 0)

    def test_exhaustive_small(self):
        # every plan evaluates to k, never doubles g, stays within the bound,
        # and mid-plan counts avoid 0 and n
        for n in range(1, 201):
            bound = 2 * math.ceil(math.log2(n)) + 4 if n > 1 else 4
            for k in range(1, n + 1):
                p = plan_ops(n, k)
                word = "".join(p.ops)
                assert "gg" not in word, (n, k)
                assert len(p.ops) <= bound, (n, k)
                path = p.counts_path()
                assert path[-1] == k
                for v in path[1:]:
                    assert 1 <= v <= n - 1 or v == k == n, (n, k, path)

    def test_near_shortest(self):
        for n in range(1, 65):
            for k in range(1, n + 1):
                assert len(plan_ops(n, k).ops) <= bfs_shortest(n, k) + 4, (n, k)

    def test_batch_matches_scalar(self):
        for n in (1, 2, 3, 7, 16, 40, 257):
            mat = plan_ops_batch(n)
            for k in range(1, n + 1):
                assert batch_row_ops(mat, k) == plan_ops(n, k).ops, (n, k)

    def test_batch_eval(self):
        for n in (5, 64, 1000):
            mat = plan_ops_batch(n)
            vals = eval_plans_batch(n, mat)
            assert (vals[1:] == np.arange(1, n + 1)).all()

    def test_bfs_lengths_match_scalar(self):
        for n in (2, 9, 40):
            dist = bfs_shortest_lengths(n)
            for k in range(1, n + 1):
                assert int(dist[k]) == bfs_shortest(n, k)

    def test_plan_rejects_unknown_op(self):
        with pytest.raises(PreconditionViolated):
            OpPlan(3, 1, ("f", "x"))


def interleaved_points(n, denom_pad=0):
    """R, G, B repeating, evenly spread, origin-free parameters."""
    m = 3 * n
    d = 2 * m + denom_pad
    return [
        circle_point(F(2 * i + 1, d), RGB[i % 3])
        for i in range(m)
    ]


def block_points(n):
    """All reds, then all greens, then all blues."""
    m = 3 * n
    pts = []
    for i in range(m):
        color = RGB[i // n]
        pts.append(circle_point(F(2 * i + 1, 2 * m), color))
    return pts


def side_counts(a, pts):
    return arcset_color_counts(a, pts)


class TestMomentHalve:
    def test_even_full_circle(self):
        pts = interleaved_points(2)
        res = moment_halve(full_circle(), pts, 2)
        for side in (res.m1, res.m2):
            assert set(side_counts(side, pts).values()) == {1}
        assert res.m1.component_count() + res.m2.component_count() <= 5
        assert min(res.m1.component_count(), res.m2.component_count()) <= 2

    def test_odd_excises_one_per_color(self):
        pts = interleaved_points(3)
        res = moment_halve(full_circle(), pts, 3)
        assert res.profile.on_points
        assert len(res.profile.cuts) == 3
        for side in (res.m1, res.m2):
            assert set(side_counts(side, pts).values()) == {1}
        neither = [
            p for p in pts if not res.m1.contains(p.t) and not res.m2.contains(p.t)
        ]
        assert sorted(p.color.value for p in neither) == ["B", "G", "R"]
        assert {p.t for p in neither} == set(res.profile.cuts)

    def test_k_one(self):
        pts = interleaved_points(1)
        res = moment_halve(full_circle(), pts, 1)
        for side in (res.m1, res.m2):
            assert set(side_counts(side, pts).values()) == {0}

    def test_two_arc_input(self):
        a = arcset([(F(1, 10), F(3, 10)), (F(6, 10), F(8, 10))])
        inside = [
            circle_point(F(11, 100), "R"),
            circle_point(F(15, 100), "G"),
            circle_point(F(22, 100), "B"),
            circle_point(F(61, 100), "R"),
            circle_point(F(70, 100), "G"),
            circle_point(F(77, 100), "B"),
        ]
        noise = [circle_point(F(45, 100), "R"), circle_point(F(50, 100), "G")]
        res = moment_halve(a, inside + noise, 2)
        for side in (res.m1, res.m2):
            counts = side_counts(side, inside + noise)
            assert set(counts.values()) == {1}
            # sides never leak outside the input set
            for lo, hi in side.arcs:
                assert a.contains((lo + hi) / 2)

    def test_rejects_three_arcs(self):
        a = arcset([(F(1, 10), F(2, 10)), (F(4, 10), F(5, 10)), (F(7, 10), F(8, 10))])
        with pytest.raises(PreconditionViolated):
            moment_halve(a, interleaved_points(1), 1)

    def test_rejects_zero_inside(self):
        a = arcset([(F(9, 10), F(11, 10))])  # wraps through 0
        with pytest.raises(PreconditionViolated):
            moment_halve(a, interleaved_points(1), 1)

    def test_rejects_param_zero(self):
        pts = [
            circle_point(0, "R"),
            circle_point(F(1, 3), "G"),
            circle_point(F(2, 3), "B"),
        ]
        with pytest.raises(PreconditionViolated):
            moment_halve(full_circle(), pts, 1)

    def test_rejects_point_on_boundary(self):
        a = arcset([(F(1, 4), F(3, 4))])
        pts = [
            circle_point(F(1, 4), "R"),
            circle_point(F(1, 3), "G"),
            circle_point(F(2, 3), "B"),
        ]
        with pytest.raises(PreconditionViolated):
            moment_halve(a, pts, 1)

    def test_rejects_count_mismatch(self):
        with pytest.raises(PreconditionViolated):
            moment_halve(full_circle(), interleaved_points(2), 1)

    def test_rejects_duplicate_params(self):
        pts = [
            circle_point(F(1, 3), "R"),
            circle_point(F(1, 3), "G"),
            circle_point(F(2, 3), "B"),
        ]
        with pytest.raises(PreconditionViolated):
            moment_halve(full_circle(), pts, 1)

    def test_deterministic(self):
        pts = block_points(4)
        r1 = moment_halve(full_circle(), pts, 4)
        r2 = moment_halve(full_circle(), pts, 4)
        assert r1 == r2

    def test_random_full_circle(self):
        rng = random.Random(11)
        for trial in range(60):
            n = rng.randint(1, 8)
            d = 997
            params = rng.sample(range(1, d), 3 * n)
            pts = [
                circle_point(F(t, d), RGB[i % 3]) for i, t in enumerate(params)
            ]
            res = moment_halve(full_circle(), pts, n)
            want = n // 2
            for side in (res.m1, res.m2):
                assert set(side_counts(side, pts).values()) == {want}, trial
            total = res.m1.component_count() + res.m2.component_count()
            assert total <= 5
            assert min(res.m1.component_count(), res.m2.component_count()) <= 2

    def test_random_two_arc_inputs(self):
        rng = random.Random(23)
        for trial in range(40):
            k = rng.randint(1, 6)
            d = 1009
            # two disjoint arcs that avoid 0, then k points per color inside
            cuts = sorted(rng.sample(range(1, d), 4))
            a = arcset([(F(cuts[0], d), F(cuts[1], d)), (F(cuts[2], d), F(cuts[3], d))])
            slots = [
                t for t in range(1, d)
                if t not in cuts
                and (cuts[0] < t < cuts[1] or cuts[2] < t < cuts[3])
            ]
            if len(slots) < 3 * k:
                continue
            chosen = rng.sample(slots, 3 * k)
            pts = [
                circle_point(F(t, d), RGB[i % 3]) for i, t in enumerate(chosen)
            ]
            res = moment_halve(a, pts, k)
            want = k // 2
            for side in (res.m1, res.m2):
                assert set(side_counts(side, pts).values()) == {want}, trial
            assert res.m1.component_count() + res.m2.component_count() <= 5
            assert min(res.m1.component_count(), res.m2.component_count()) <= 2


class TestFindKArcset:
    def test_full_circle_when_k_is_n(self):
        pts = interleaved_points(3)
        assert find_k_arcset(pts, 3).is_full_circle

    def test_blocks_need_two_arcs(self):
        # R R G G B B: no single arc holds exactly one point of each color
        pts = block_points(2)
        m = len(pts)
        params = sorted(p.t for p in pts)
        for i in range(m):
            for w in range(1, m):
                lo = params[i]
                hi = params[(i + w) % m]
                arc = arcset([(lo + F(1, 1000), (hi if hi > lo else hi + 1) - F(1, 1000))])
                counts = side_counts(arc, pts)
                assert set(counts.values()) != {1}, "single arc should not suffice"
        a = find_k_arcset(pts, 1)
        assert a.component_count() == 2
        assert set(side_counts(a, pts).values()) == {1}

    def test_all_k_for_interleaved(self):
        pts = interleaved_points(5)
        for k in range(1, 6):
            a = find_k_arcset(pts, k)
            assert a.component_count() <= 2, k
            assert set(side_counts(a, pts).values()) == {k}, k

    def test_all_k_for_blocks(self):
        pts = block_points(5)
        for k in range(1, 6):
            a = find_k_arcset(pts, k)
            assert a.component_count() <= 2, k
            assert set(side_counts(a, pts).values()) == {k}, k

    def test_random_instances(self):
        rng = random.Random(5)
        for trial in range(50):
            n = rng.randint(1, 8)
            k = rng.randint(1, n)
            d = 1013
            params = rng.sample(range(d), 3 * n)  # 0 allowed here
            colors = [RGB[i % 3] for i in range(3 * n)]
            rng.shuffle(colors)
            pts = [circle_point(F(t, d), c) for t, c in zip(params, colors)]
            a = find_k_arcset(pts, k)
            assert a.component_count() <= 2, trial
            assert set(side_counts(a, pts).values()) == {k}, trial

    def test_deterministic(self):
        pts = block_points(4)
        assert find_k_arcset(pts, 2) == find_k_arcset(pts, 2)

    def test_missing_color(self):
        pts = [circle_point(F(1, 4), "R"), circle_point(F(2, 4), "G")]
        with pytest.raises(MissingColor):
            find_k_arcset(pts, 1)

    def test_unbalanced(self):
        pts = [
            circle_point(F(1, 5), "R"),
            circle_point(F(2, 5), "R"),
            circle_point(F(3, 5), "G"),
            circle_point(F(4, 5), "B"),
        ]
        with pytest.raises(PreconditionViolated):
            find_k_arcset(pts, 1)

    def test_duplicate_parameter(self):
        pts = [
            circle_point(F(1, 5), "R"),
            circle_point(F(1, 5), "G"),
            circle_point(F(3, 5), "B"),
        ]
        with pytest.raises(PreconditionViolated):
            find_k_arcset(pts, 1)

    def test_k_out_of_range(self):
        pts = interleaved_points(2)
        with pytest.raises(PreconditionViolated):
            find_k_arcset(pts, 3)
        with pytest.raises(PreconditionViolated):
            find_k_arcset(pts, -1)

    def test_k_zero_is_empty(self):
        pts = interleaved_points(2)
        assert find_k_arcset(pts, 0).is_empty

    def test_complement_count_identity(self):
        pts = block_points(5)
        for k in range(1, 5):
            ck = side_counts(find_k_arcset(pts, k), pts)
            cnk = side_counts(find_k_arcset(pts, 5 - k), pts)
            assert all(cnk[c] == 5 - ck[c] for c in cnk)

    def test_cubic_sign_pattern(self):
        # the side of parameter t is the sign of a cubic with roots at the
        # cuts: prod(t - c_i) is positive exactly when an even number of
        # cuts lie above t
        for pts, k in ((block_points(3), 3), (interleaved_points(4), 4)):
            res = moment_halve(full_circle(), pts, k)
            prof = res.profile
            for p in pts:
                prod = prof.polarity
                for c in prof.cuts:
                    prod *= p.t - c
                if prod == 0:
                    assert not res.m1.contains(p.t)
                    assert not res.m2.contains(p.t)
                elif prod > 0:
                    assert res.m1.contains(p.t)
                else:
                    assert res.m2.contains(p.t)


class TestRotateParameters:
    def test_roundtrip(self):
        pts = interleaved_points(2)
        a = arcset([(F(1, 10), F(2, 10))])
        moved, a2 = rotate_parameters(pts, a, F(1, 3))
        back, a3 = rotate_parameters(moved, a2, -F(1, 3))
        assert [p.t for p in back] == [p.t for p in pts]
        assert a3 == a

    def test_wraps_mod_one(self):
        pts = [circle_point(F(3, 4), "R")]
        moved, _ = rotate_parameters(pts, full_circle(), F(1, 2))
        assert moved[0].t == F(1, 4)
