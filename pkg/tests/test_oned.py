import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from covline.geom import InfeasibleInstance
from covline.oned import WeightedSegment, compute_f, dp_state, solve_1d
from covline.oracle import brute_force_cover, coverage_matrix, element_uniqueness_instance

S = WeightedSegment


class TestComputeF:
    def test_definitional_scan(self):
        points = [1.0, 2.0, 3.0]
        f = compute_f([S(1.6, 3.2, 1.0)], points)
        assert f == [1]

    def test_segment_left_of_everything(self):
        assert compute_f([S(0.0, 0.5, 1.0)], [1.0, 2.0]) == [0]

    def test_segment_right_of_everything(self):
        assert compute_f([S(9.0, 9.5, 1.0)], [1.0, 2.0]) == [2]

    def test_point_at_left_endpoint_is_covered(self):
        # x(p) < l is strict, so a point exactly at l does not advance f
        assert compute_f([S(2.0, 3.0, 1.0)], [1.0, 2.0]) == [1]


class TestSolve1d:
    def test_single_point_single_segment(self):
        sol = solve_1d([1.0], [S(0.0, 2.0, 4.0)])
        assert sol.weight == 4.0
        assert sol.chosen == (0,)

    def test_three_point_example(self):
        segs = [S(0.5, 1.5, 2.0), S(1.6, 3.2, 3.0), S(0.0, 3.5, 6.0)]
        sol = solve_1d([1.0, 2.0, 3.0], segs)
        assert sol.weight == 5.0
        assert sol.chosen == (0, 1)

    def test_infeasible(self):
        with pytest.raises(InfeasibleInstance):
            solve_1d([1.0, 2.0], [S(0.0, 0.5, 1.0)])

    def test_zero_length_segment_covers_its_point(self):
        sol = solve_1d([1.0], [S(1.0, 1.0, 2.5)])
        assert sol.weight == 2.5

    def test_touching_endpoints_count_as_covering(self):
        sol = solve_1d([1.0, 2.0], [S(0.0, 1.0, 1.0), S(2.0, 3.0, 1.0)])
        assert sol.weight == 2.0
        assert sol.chosen == (0, 1)

    def test_no_points_costs_nothing(self):
        sol = solve_1d([], [S(0.0, 1.0, 1.0)])
        assert sol.weight == 0.0 and sol.chosen == ()


def _random_1d(rng, n, m):
    points = sorted(rng.uniform(0, 10) for _ in range(n))
    segs = []
    for _ in range(m):
        l = rng.uniform(-1, 9)
        segs.append(S(l, l + rng.uniform(0.5, 6), round(rng.uniform(0.1, 5), 3)))
    return points, segs


def test_matches_brute_force_on_random_instances():
    rng = random.Random(42)
    solved = 0
    for _ in range(300):
        n, m = rng.randint(1, 12), rng.randint(1, 10)
        points, segs = _random_1d(rng, n, m)
        mat = coverage_matrix(n, m, lambda i, k: segs[k].l <= points[i] <= segs[k].r)
        try:
            want, _ = brute_force_cover(mat, [s.w for s in segs])
        except InfeasibleInstance:
            with pytest.raises(InfeasibleInstance):
                solve_1d(points, segs)
            continue
        sol = solve_1d(points, segs)
        assert sol.weight == want
        solved += 1
    assert solved > 100


def test_chosen_segments_certify_the_cover():
    rng = random.Random(7)
    for _ in range(200):
        n, m = rng.randint(1, 15), rng.randint(1, 12)
        points, segs = _random_1d(rng, n, m)
        try:
            sol = solve_1d(points, segs)
        except InfeasibleInstance:
            continue
        for x in points:
            assert any(segs[j].l <= x <= segs[j].r for j in sol.chosen)
        total = 0.0
        for j in sol.chosen:
            total += segs[j].w
        assert abs(total - sol.weight) <= 1e-9 * max(1.0, abs(total))


@settings(max_examples=80, deadline=None)
@given(
    xs=st.lists(st.floats(0, 10), min_size=1, max_size=10, unique=True),
    raw=st.lists(st.tuples(st.floats(-1, 10), st.floats(0, 5), st.floats(0.1, 5)),
                 min_size=1, max_size=8),
)
def test_prefix_weights_are_nondecreasing(xs, raw):
    points = sorted(xs)
    segs = [S(l, l + d, w) for l, d, w in raw]
    try:
        state = dp_state(points, segs)
    except InfeasibleInstance:
        return
    assert all(state.W[i] <= state.W[i + 1] for i in range(len(points)))


class TestElementUniqueness:
    @pytest.mark.parametrize(
        "values,expected",
        [([1.0, 2.0, 3.0], 3.0), ([1.0, 1.0, 2.0], 2.0), ([5.0], 1.0)],
    )
    def test_reduction_weight_counts_distinct_values(self, values, expected):
        points, segs = element_uniqueness_instance(values)
        assert solve_1d(points, segs).weight == expected

    def test_distinct_iff_weight_equals_size(self):
        rng = random.Random(3)
        for _ in range(50):
            size = rng.randint(1, 12)
            values = [float(rng.randint(0, 20)) for _ in range(size)]
            points, segs = element_uniqueness_instance(values)
            w = solve_1d(points, segs).weight
            assert (w == size) == (len(set(values)) == size)

    def test_agrees_with_exhaustive_cover(self):
        values = [2.0, 2.0, 3.0, 7.0]
        points, segs = element_uniqueness_instance(values)
        mat = coverage_matrix(len(points), len(segs), lambda i, k: segs[k].l == points[i])
        want, _ = brute_force_cover(mat, [s.w for s in segs])
        assert solve_1d(points, segs).weight == want
