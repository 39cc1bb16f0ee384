"""Reductions for the unit-disk and L1 (diamond) metrics.

Per disk, a_r is the leftmost point at or right of the center that the disk
misses, a_l the rightmost strictly-left point it misses (sentinels make both
total). A disk is useful when at least one point sits strictly between
them; each useful disk becomes one 1D segment spanning exactly that block.
Both index sweeps run left to right; the a_l side reuses the a_r sweep on a
mirrored instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .aggtree import AggregateOrderedSet
from .geom import (
    Disk,
    Instance,
    Metric,
    MetricMismatch,
    PointP,
    Solution,
    covers,
    weight_of,
)
from .oned import WeightedSegment, solve_1d

_CENTER, _POINT = 0, 1


@dataclass
class AIndexTable:
    a_l: list[int]  # per disk (sorted order), in [0, n]
    a_r: list[int]  # per disk (sorted order), in [1, n+1]

    def useful(self, k: int) -> bool:
        return self.a_l[k] + 1 < self.a_r[k]


def _mirror(inst: Instance) -> tuple[list[PointP], list[Disk]]:
    pts = [PointP(-p.x, p.y, p.id) for p in reversed(inst.points)]
    dks = [Disk(-d.cx, d.r, d.w, d.id) for d in reversed(inst.disks)]
    return pts, dks


def _sweep_ar_unit(points: Sequence[PointP], disks: Sequence[Disk], metric: Metric,
                   centers_first: bool) -> list[int]:
    """FIFO sweep: equal-radius disks leave the queue front-first.

    ``centers_first`` decides whether a point sharing the x-coordinate of a
    center counts as lying to the right of that center.
    """
    n = len(points)
    center_rank = _CENTER if centers_first else _POINT + 1
    events = [(d.cx, center_rank, k) for k, d in enumerate(disks)]
    events += [(p.x, _POINT, i) for i, p in enumerate(points)]
    events.sort()
    a_r = [n + 1] * len(disks)
    queue: list[int] = []
    head = 0
    for _x, kind, idx in events:
        if kind == _POINT:
            p = points[idx]
            while head < len(queue):
                k = queue[head]
                if covers(disks[k], p, metric):
                    break  # the front disk is the farthest; all pending cover p
                a_r[k] = idx + 1
                head += 1
        else:
            queue.append(idx)
    return a_r


def _sweep_ar_l1(points: Sequence[PointP], disks: Sequence[Disk],
                 centers_first: bool) -> list[int]:
    """Ordered sweep for diamonds: the pending diamond whose right tip is
    leftmost is the hardest to satisfy, so coverage is monotone in that key."""
    n = len(points)
    center_rank = _CENTER if centers_first else _POINT + 1
    events = [(d.cx, center_rank, k) for k, d in enumerate(disks)]
    events += [(p.x, _POINT, i) for i, p in enumerate(points)]
    events.sort()
    a_r = [n + 1] * len(disks)
    tip = [d.cx + d.r for d in disks]
    pending = AggregateOrderedSet(key_of=lambda k: tip[k])
    for _x, kind, idx in events:
        if kind == _POINT:
            p = points[idx]
            while len(pending):
                node = pending.min_node()
                k = node.payload
                if covers(disks[k], p, Metric.L1):
                    break  # smallest right tip covers p, hence all pending do
                a_r[k] = idx + 1
                pending.delete(node)
        else:
            pending.insert(idx, 0.0)
    return a_r


def _a_table(inst: Instance, sweep) -> AIndexTable:
    n, m = inst.n, inst.m
    a_r = sweep(inst.points, inst.disks, centers_first=True)
    mpts, mdks = _mirror(inst)
    mirrored = sweep(mpts, mdks, centers_first=False)
    # mirrored disk position m-1-k is original disk k; mirrored point index
    # i maps back to n+1-i, and the sentinels swap roles.
    a_l = [0] * m
    for mk in range(m):
        k = m - 1 - mk
        a_l[k] = n + 1 - mirrored[mk]
    return AIndexTable(a_l=a_l, a_r=a_r)


def a_indices_unit(inst: Instance) -> AIndexTable:
    if inst.metric is not Metric.UNIT:
        raise MetricMismatch(f"a_indices_unit expects unit metric, got {inst.metric.value}")
    return _a_table(inst, lambda p, d, centers_first: _sweep_ar_unit(p, d, inst.metric, centers_first))


def a_indices_l1(inst: Instance) -> AIndexTable:
    if inst.metric is not Metric.L1:
        raise MetricMismatch(f"a_indices_l1 expects l1 metric, got {inst.metric.value}")
    return _a_table(inst, lambda p, d, centers_first: _sweep_ar_l1(p, d, centers_first))


def build_1d_from_a(inst: Instance, table: AIndexTable) -> tuple[list[float], list[WeightedSegment]]:
    """Project points to L and emit one segment per useful disk."""
    points_x = list(inst.xs)
    segments = []
    for k, d in enumerate(inst.disks):
        if table.useful(k):
            segments.append(
                WeightedSegment(inst.px(table.a_l[k] + 1), inst.px(table.a_r[k] - 1), d.w, origin=d.id)
            )
    return points_x, segments


def _solve_axis(inst: Instance, table: AIndexTable) -> Solution:
    points_x, segments = build_1d_from_a(inst, table)
    sol = solve_1d(points_x, segments)
    ids = sorted({segments[j].origin for j in sol.chosen})
    weights = {d.id: d.w for d in inst.disks}
    return Solution(weight=weight_of(ids, weights), chosen=tuple(ids))


def solve_unit(inst: Instance) -> Solution:
    return _solve_axis(inst, a_indices_unit(inst))


def solve_l1(inst: Instance) -> Solution:
    return _solve_axis(inst, a_indices_l1(inst))
