"""Metric-generic bounding-couple machinery and the general solver.

A bounding couple of a disk is an adjacent pair in the x-sorted list of
points outside the disk between its extreme window points p_l and p_r
(sentinels included). Couples with a gap between them correspond one-to-one
to maximal covered subsequences and hence to segments of the derived 1D
instance; deduplicating couples by minimum weight keeps the 1D segment set
small.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .aggtree import audits_enabled
from .geom import (
    Instance,
    Metric,
    MetricMismatch,
    Solution,
    covers,
    weight_of,
    window,
)
from .oned import WeightedSegment, solve_1d


@dataclass(frozen=True, slots=True)
class BoundingCouple:
    i: int
    j: int
    w: float
    origin: int
    kind: int  # bitmask of CoupleSet.LEFT / CoupleSet.RIGHT; 0 means middle


class CoupleSet:
    """Couples keyed by (i, j), keeping the minimum weight per key.

    Kind flags accumulate across all defining disks: the same (i, j) can be
    a left couple for one disk and a middle couple for another. Weight ties
    keep the smaller origin id so the content is deterministic.
    """

    LEFT = 1
    RIGHT = 2

    def __init__(self):
        self._d: dict[tuple[int, int], tuple[float, int, int]] = {}

    def add(self, i: int, j: int, w: float, origin: int, kind: int = 0) -> None:
        cur = self._d.get((i, j))
        if cur is None:
            self._d[(i, j)] = (w, origin, kind)
            return
        cw, co, ck = cur
        if (w, origin) < (cw, co):
            self._d[(i, j)] = (w, origin, ck | kind)
        else:
            self._d[(i, j)] = (cw, co, ck | kind)

    def update(self, other: "CoupleSet") -> None:
        for (i, j), (w, origin, kind) in other._d.items():
            self.add(i, j, w, origin, kind)

    def couples(self) -> list[BoundingCouple]:
        return [
            BoundingCouple(i, j, w, origin, kind)
            for (i, j), (w, origin, kind) in sorted(self._d.items())
        ]

    def __len__(self) -> int:
        return len(self._d)

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self._d

    def get(self, i: int, j: int) -> tuple[float, int, int]:
        return self._d[(i, j)]

    def weight_set(self) -> set[tuple[int, int, float]]:
        return {(i, j, w) for (i, j), (w, _o, _k) in self._d.items()}

    def full_set(self) -> set[tuple[int, int, float, int]]:
        return {(i, j, w, k) for (i, j), (w, _o, k) in self._d.items()}

    def middle_count(self) -> int:
        return sum(1 for (_k, (_w, _o, kind)) in self._d.items() if kind == 0)


def maximal_subsequences(
    n: int, covered: Callable[[int], bool]
) -> list[tuple[int, int]]:
    """Maximal runs [i, j] (1-based, inclusive) of consecutively covered points."""
    runs = []
    start = None
    for i in range(1, n + 1):
        if covered(i):
            if start is None:
                start = i
        elif start is not None:
            runs.append((start, i - 1))
            start = None
    if start is not None:
        runs.append((start, n))
    return runs


def baseline_couples_generic(
    points_x: Sequence[float],
    n: int,
    objs: Sequence,
    covered: Callable[[int, int], bool],
    window_of: Callable[[int], tuple[int, int]],
) -> CoupleSet:
    """O(nm) couple builder: per object, scan its window for outside points."""
    cs = CoupleSet()
    for k, obj in enumerate(objs):
        pl, pr = window_of(k)
        prev = pl
        first = True
        for i in range(pl + 1, pr):
            if not covered(i, k):
                kind = CoupleSet.LEFT if first else 0
                cs.add(prev, i, obj.w, obj.id, kind)
                prev = i
                first = False
        kind = (CoupleSet.LEFT if first else 0) | CoupleSet.RIGHT
        cs.add(prev, pr, obj.w, obj.id, kind)
    return cs


def baseline_couples(inst: Instance) -> CoupleSet:
    if inst.metric not in (Metric.LINF, Metric.L2):
        raise MetricMismatch("bounding couples apply to the Linf and L2 metrics")
    return baseline_couples_generic(
        inst.xs,
        inst.n,
        inst.disks,
        covered=lambda i, k: covers(inst.disks[k], inst.points[i - 1], inst.metric),
        window_of=lambda k: window(inst, inst.disks[k].lx, inst.disks[k].rx),
    )


def couples_to_segments(cs: CoupleSet, points_x: Sequence[float]) -> list[WeightedSegment]:
    """One segment per couple (i, j) with j > i + 1, spanning points i+1..j-1."""
    segs = []
    for c in cs.couples():
        if c.j > c.i + 1:
            segs.append(WeightedSegment(points_x[c.i], points_x[c.j - 2], c.w, origin=c.origin))
    return segs


def solve_from_couples(
    cs: CoupleSet, points_x: Sequence[float], weights_by_id: dict[int, float], stats: dict | None = None
) -> Solution:
    """Run the 1D reduction on a couple set and map segments back to disks."""
    segs = couples_to_segments(cs, points_x)
    sol = solve_1d(points_x, segs)
    origins = [segs[j].origin for j in sol.chosen]
    ids = sorted(set(origins))
    if audits_enabled():
        assert len(ids) == len(origins), "two chosen segments share a defining disk"
    weight = weight_of(ids, weights_by_id)
    if stats is not None:
        stats["couples"] = len(cs)
        stats["segments"] = len(segs)
    return Solution(weight=weight, chosen=tuple(ids), stats=stats)


def solve_general(inst: Instance, builder: str = "sweep") -> Solution:
    """Optimal disk cover for the Linf or L2 metric.

    ``builder`` picks how the couple set is computed: "sweep" for the
    near-linearithmic sweeps, "baseline" for the O(nm) scan.
    """
    if inst.metric not in (Metric.LINF, Metric.L2):
        raise MetricMismatch(f"solve_general expects linf or l2, got {inst.metric.value}")
    stats: dict = {}
    if builder == "baseline":
        cs = baseline_couples(inst)
    elif builder == "sweep":
        if inst.metric is Metric.LINF:
            from .sweep_linf import left_right_couples_linf, middle_couples_linf

            cs = left_right_couples_linf(inst)
            cs.update(middle_couples_linf(inst, stats=stats))
        else:
            from .sweep_l2 import left_right_couples_l2, middle_couples_l2

            cs = left_right_couples_l2(inst)
            cs.update(middle_couples_l2(inst, stats=stats))
    else:
        raise ValueError(f"unknown builder {builder!r}")
    weights = {d.id: d.w for d in inst.disks}
    return solve_from_couples(cs, inst.xs, weights, stats=stats)
