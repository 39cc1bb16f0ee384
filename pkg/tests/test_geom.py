import math

import pytest
from hypothesis import given, strategies as st

from covline.geom import (
    DegenerateInput,
    Disk,
    InfeasibleInstance,
    Metric,
    MetricMismatch,
    NonPositiveWeight,
    PointP,
    count_intersecting_pairs,
    covers,
    normalize,
    window,
)


def mkdisk(cx, r, w=1.0, id=0):
    return Disk(cx, r, w, id)


def mkpoint(x, y, id=0):
    return PointP(x, y, id)


class TestCovers:
    def test_l2_inside(self):
        assert covers(mkdisk(2, 1.2), mkpoint(2, 0.5), Metric.L2)

    def test_l1_outside(self):
        # |2-1| + 0.5 = 1.5 > 1.2
        assert not covers(mkdisk(2, 1.2), mkpoint(1, 0.5), Metric.L1)

    def test_linf_inside(self):
        # max(1, 0.5) = 1 < 1.2
        assert covers(mkdisk(2, 1.2), mkpoint(1, 0.5), Metric.LINF)

    def test_boundary_is_covered(self):
        assert covers(mkdisk(0, 1), mkpoint(1, 0), Metric.L2)
        assert covers(mkdisk(0, 1), mkpoint(0, 1), Metric.LINF)
        assert covers(mkdisk(0, 1), mkpoint(0.5, 0.5), Metric.L1)

    @given(
        cx=st.floats(-5, 5), r=st.floats(0.1, 4), extra=st.floats(0.01, 3),
        px=st.floats(-9, 9), py=st.floats(0, 9),
        metric=st.sampled_from([Metric.L1, Metric.L2, Metric.LINF]),
    )
    def test_monotone_in_radius(self, cx, r, extra, px, py, metric):
        small, big = mkdisk(cx, r), mkdisk(cx, r + extra)
        p = mkpoint(px, py)
        if covers(small, p, metric):
            assert covers(big, p, metric)

    @given(
        cx=st.floats(-5, 5), r=st.floats(0.1, 4),
        px=st.floats(-9, 9), py=st.floats(0, 9),
        metric=st.sampled_from([Metric.L1, Metric.L2, Metric.LINF, Metric.ONED]),
    )
    def test_covered_implies_in_extent(self, cx, r, px, py, metric):
        d = mkdisk(cx, r)
        if covers(d, mkpoint(px, py), metric):
            assert d.lx <= px <= d.rx


class TestNormalize:
    def test_reflects_below_axis(self):
        inst = normalize([(1, -0.5)], [(1, 1, 1)], Metric.L2)
        assert inst.points[0].y == 0.5

    def test_sorts_points(self):
        inst = normalize([(3, 1), (1, 1)], [(2, 3, 1)], Metric.L2)
        assert [p.x for p in inst.points] == [1, 3]
        assert [p.id for p in inst.points] == [1, 0]

    def test_infeasible_rejected(self):
        with pytest.raises(InfeasibleInstance):
            normalize([(10, 10)], [(0, 1, 1)], Metric.L2)

    def test_nonpositive_weight(self):
        with pytest.raises(NonPositiveWeight):
            normalize([(0, 0)], [(0, 1, 0.0)], Metric.L2)

    def test_duplicate_point_rejected(self):
        with pytest.raises(DegenerateInput):
            normalize([(1, 1), (1, 1)], [(1, 5, 1)], Metric.L2)

    def test_equal_x_allowed_with_index_tiebreak(self):
        inst = normalize([(1, 2), (1, 1)], [(1, 5, 1)], Metric.L2)
        assert [p.id for p in inst.points] == [0, 1]

    def test_unit_requires_equal_radii(self):
        with pytest.raises(MetricMismatch):
            normalize([(0, 0.5)], [(0, 1, 1), (1, 2, 1)], Metric.UNIT)

    def test_sentinels_strictly_outside(self):
        inst = normalize([(0, 1), (9, 1)], [(4, 6, 1)], Metric.L2)
        assert inst.x_left < min(-2.0, 0.0)
        assert inst.x_right > max(10.0, 9.0)

    def test_idempotent(self):
        inst = normalize([(3, -1), (1, 2)], [(2, 4, 1), (0, 3, 2)], Metric.L2)
        again = normalize(
            [(p.x, p.y) for p in inst.points],
            [(d.cx, d.r, d.w) for d in inst.disks],
            Metric.L2,
            point_ids=[p.id for p in inst.points],
            disk_ids=[d.id for d in inst.disks],
        )
        assert again == inst

    def test_window_with_sentinels(self):
        inst = normalize([(1, 0.1), (2, 0.1), (3, 0.1)], [(2, 5, 1)], Metric.L2)
        assert window(inst, 1.5, 2.5) == (1, 3)
        assert window(inst, 0.0, 10.0) == (0, 4)
        assert window(inst, 1.0, 3.0) == (0, 4)  # strict inequalities on both sides


class TestKappa:
    def test_disjoint(self):
        assert count_intersecting_pairs([mkdisk(0, 1), mkdisk(5, 1)], Metric.L2) == 0

    def test_overlapping_pair(self):
        assert count_intersecting_pairs([mkdisk(0, 2), mkdisk(1, 2)], Metric.L2) == 1

    def test_identical_disks_all_pairs(self):
        m = 7
        disks = [mkdisk(1.0, 1.0, id=k) for k in range(m)]
        assert count_intersecting_pairs(disks, Metric.L2) == m * (m - 1) // 2

    def test_matches_quadratic_scan(self):
        import random

        rng = random.Random(0)
        disks = [mkdisk(rng.uniform(0, 10), rng.uniform(0.1, 2), id=k) for k in range(40)]
        slow = sum(
            1
            for i in range(len(disks))
            for j in range(i + 1, len(disks))
            if abs(disks[i].cx - disks[j].cx) <= disks[i].r + disks[j].r
        )
        assert count_intersecting_pairs(disks, Metric.L2) == slow

    @given(st.lists(st.tuples(st.floats(-5, 5), st.floats(0.1, 3)), min_size=2, max_size=12))
    def test_above_line_never_exceeds_plain(self, raw):
        disks = [mkdisk(cx, r, id=k) for k, (cx, r) in enumerate(raw)]
        plain = count_intersecting_pairs(disks, Metric.L2)
        above = count_intersecting_pairs(disks, Metric.L2, above_line_only=True)
        assert above <= plain

    def test_above_line_for_sunken_circles(self):
        class C:
            def __init__(self, cx, cy, r):
                self.cx, self.cy, self.r = cx, cy, r

        # overlap region is entirely below the axis
        low = [C(0, -5, 1), C(1, -5, 1)]
        assert count_intersecting_pairs(low, Metric.L2, above_line_only=True) == 0
        # same pair lifted so the lens pokes above the axis
        high = [C(0, -0.5, 1), C(1, -0.5, 1)]
        assert count_intersecting_pairs(high, Metric.L2, above_line_only=True) == 1

    def test_tangent_on_axis_does_not_meet_open_upper(self):
        disks = [mkdisk(0, 1), mkdisk(2, 1)]
        assert count_intersecting_pairs(disks, Metric.L2, above_line_only=True) == 0
        assert count_intersecting_pairs(disks, Metric.L2) == 1

    def test_nested_circles_count(self):
        disks = [mkdisk(0, 3), mkdisk(0.1, 1)]
        assert count_intersecting_pairs(disks, Metric.L2) == 1
        assert count_intersecting_pairs(disks, Metric.L2, above_line_only=True) == 1
