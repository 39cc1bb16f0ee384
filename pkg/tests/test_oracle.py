import numpy as np
import pytest

from covline.geom import InfeasibleInstance, Metric, normalize
from covline.oracle import (
    TooLarge,
    brute_force_cover,
    coverage_matrix,
    instance_matrix,
    oracle_a_indices,
    oracle_couples,
)


class TestBruteForce:
    def test_single_point_single_set(self):
        w, subset = brute_force_cover([[True]], [4.0])
        assert (w, subset) == (4.0, (0,))

    def test_identity_matrix_needs_everything(self):
        n = 5
        mat = np.eye(n, dtype=bool)
        w, subset = brute_force_cover(mat, [1.0] * n)
        assert w == n
        assert subset == tuple(range(n))

    def test_solver_1d_example_value(self):
        # points 1,2,3; segments A=[0.5,1.5] w2, B=[1.6,3.2] w3, C=[0,3.5] w6
        mat = [[True, False, True], [False, True, True], [False, True, True]]
        w, subset = brute_force_cover(mat, [2.0, 3.0, 6.0])
        assert w == 5.0
        assert subset == (0, 1)

    def test_ties_break_to_smallest_bitmask(self):
        mat = [[True, True]]
        w, subset = brute_force_cover(mat, [1.0, 1.0])
        assert subset == (0,)

    def test_deterministic(self):
        mat = [[True, True, True], [True, True, False]]
        weights = [2.0, 2.0, 1.0]
        results = {brute_force_cover(mat, weights) for _ in range(5)}
        assert len(results) == 1

    def test_infeasible(self):
        with pytest.raises(InfeasibleInstance):
            brute_force_cover([[False, False]], [1.0, 1.0])

    def test_too_large(self):
        mat = np.ones((1, 25), dtype=bool)
        with pytest.raises(TooLarge):
            brute_force_cover(mat, [1.0] * 25)

    def test_empty_point_set_is_free(self):
        mat = np.zeros((0, 3), dtype=bool)
        w, subset = brute_force_cover(mat, [1.0, 2.0, 3.0])
        assert (w, subset) == (0.0, ())

    def test_many_rows_multiword_masks(self):
        n = 130
        mat = np.zeros((n, 2), dtype=bool)
        mat[: n // 2, 0] = True
        mat[n // 2 :, 1] = True
        w, subset = brute_force_cover(mat, [1.0, 5.0])
        assert (w, subset) == (6.0, (0, 1))


class TestOracleCouples:
    def test_paper_figure_pattern(self):
        # window outside-point sequence 2,3,5,7,10,11 with p_l=2 and p_r=11
        xs = list(range(1, 13))
        pts = []
        for i in xs:
            if i in (3, 5, 7, 10):
                pts.append((float(i), 5.0))  # above the square's upper edge
            else:
                pts.append((float(i), 0.5))
        lo, hi = 3 - 0.4, 10 + 0.4
        disk = ((lo + hi) / 2, (hi - lo) / 2, 1.0)  # width 7.8, upper edge at y=3.9
        big = (6.5, 40.0, 50.0)  # keeps the instance feasible without touching the window
        inst = normalize(pts, [disk, big], Metric.LINF)
        cs = oracle_couples(inst)
        got = {(c.i, c.j) for c in cs.couples() if c.origin == 0}
        assert got == {(2, 3), (3, 5), (5, 7), (7, 10), (10, 11)}
        assert cs.get(2, 3)[2] == cs.LEFT
        assert cs.get(10, 11)[2] == cs.RIGHT
        for pair in ((3, 5), (5, 7), (7, 10)):
            assert cs.get(*pair)[2] == 0

    def test_disk_covering_every_window_point_gives_single_couple(self):
        inst = normalize([(0.0, 0.1), (1.0, 0.1)], [(0.5, 2.0, 1.0)], Metric.L2)
        cs = oracle_couples(inst)
        assert {(c.i, c.j) for c in cs.couples()} == {(0, 3)}
        assert cs.get(0, 3)[2] == cs.LEFT | cs.RIGHT

    def test_instance_matrix_columns_follow_input_order(self):
        inst = normalize([(0.0, 0.1)], [(5.0, 10.0, 1.0), (0.0, 1.0, 1.0)], Metric.L2)
        mat = instance_matrix(inst)
        assert mat.shape == (1, 2)
        assert mat[0, 0] and mat[0, 1]


class TestOracleAIndices:
    def test_three_points_middle_disk(self):
        inst = normalize(
            [(1, 0.5), (2, 0.5), (3, 0.5)],
            [(2, 1, 1), (2, 10, 1)],
            Metric.L2,
        )
        a_l, a_r = oracle_a_indices(inst)
        assert a_l[0] == 1 and a_r[0] == 3  # covers only the middle point
        assert a_l[1] == 0 and a_r[1] == 4  # covers everything: sentinels
