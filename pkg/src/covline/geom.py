"""Core domain types, metric predicates and instance normalization.

All disks are centered on the x-axis L. Points live in the closed upper
half-plane after normalization. Containment is closed (a point exactly on
a boundary counts as covered) and all L2 tests compare squared quantities,
so inputs that are exactly representable compare exactly.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence


class InstanceError(ValueError):
    """Invalid input data (parse- or normalize-time rejection)."""


class NonPositiveWeight(InstanceError):
    pass


class DegenerateInput(InstanceError):
    pass


class MetricMismatch(InstanceError):
    pass


class InfeasibleInstance(Exception):
    """Some point is covered by no available disk/segment/half-plane."""


class Metric(Enum):
    ONED = "1d"
    UNIT = "unit"
    L1 = "l1"
    L2 = "l2"
    LINF = "linf"

    @classmethod
    def from_tag(cls, tag: str) -> "Metric":
        for m in cls:
            if m.value == tag:
                return m
        raise InstanceError(f"unknown metric tag {tag!r}")


@dataclass(frozen=True, slots=True)
class PointP:
    x: float
    y: float
    id: int


@dataclass(frozen=True, slots=True)
class Disk:
    cx: float
    r: float
    w: float
    id: int

    @property
    def lx(self) -> float:
        return self.cx - self.r

    @property
    def rx(self) -> float:
        return self.cx + self.r


@dataclass(frozen=True, slots=True)
class Solution:
    """A chosen subset of covering objects with its total weight.

    `chosen` holds original input indices, sorted ascending; `weight` is
    the sum of their weights accumulated in that order (so it compares
    exactly against oracles that sum in input-index order).
    """

    weight: float
    chosen: tuple[int, ...]
    feasible: bool = True
    stats: dict | None = None


def weight_of(ids: Iterable[int], weights_by_id: dict[int, float]) -> float:
    """Sum weights in ascending id order (the canonical summation order)."""
    total = 0.0
    for i in sorted(ids):
        total += weights_by_id[i]
    return total


@dataclass(frozen=True)
class Instance:
    metric: Metric
    points: tuple[PointP, ...]     # sorted by (x, id)
    disks: tuple[Disk, ...]        # sorted by (cx, id)
    x_left: float                  # sentinel p_0 coordinate
    x_right: float                 # sentinel p_{n+1} coordinate
    xs: tuple[float, ...] = field(default=())  # point x's, for bisection

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return len(self.disks)

    def px(self, i: int) -> float:
        """x-coordinate of 1-based point index; 0 and n+1 are the sentinels."""
        if i == 0:
            return self.x_left
        if i == self.n + 1:
            return self.x_right
        return self.points[i - 1].x


def covers(d: Disk, p: PointP, metric: Metric) -> bool:
    """Closed containment of point p in disk d under the given metric."""
    dx = p.x - d.cx
    dy = abs(p.y)
    if metric in (Metric.L2, Metric.UNIT):
        return dx * dx + dy * dy <= d.r * d.r
    if metric is Metric.L1:
        return abs(dx) + dy <= d.r
    if metric is Metric.LINF:
        return abs(dx) <= d.r and dy <= d.r
    # ONED: the disk is the segment [cx-r, cx+r] on L
    return abs(dx) <= d.r


def normalize(
    raw_points: Sequence[tuple[float, float]],
    raw_disks: Sequence[tuple[float, float, float]],
    metric: Metric,
    point_ids: Sequence[int] | None = None,
    disk_ids: Sequence[int] | None = None,
) -> Instance:
    """Build a validated Instance from raw (x, y) points and (cx, r, w) disks.

    Points below L are reflected; points are sorted by x with ties broken
    by id; feasibility (every point covered by some disk) is checked
    eagerly by a full scan. Ids default to input positions; passing the ids
    of an already-normalized instance makes normalization idempotent.
    """
    if not raw_disks:
        raise InstanceError("instance needs at least one disk")
    pts = []
    for i, (x, y) in enumerate(raw_points):
        pid = point_ids[i] if point_ids is not None else i
        pts.append(PointP(float(x), abs(float(y)), pid))
    seen: set[tuple[float, float]] = set()
    for p in pts:
        key = (p.x, p.y)
        if key in seen:
            raise DegenerateInput(
                f"duplicate point ({p.x}, {p.y}); index tie-break cannot separate identical points"
            )
        seen.add(key)
    if len({p.id for p in pts}) != len(pts):
        raise DegenerateInput("point ids must be unique for the tie-break to be total")
    pts.sort(key=lambda p: (p.x, p.id))

    dks = []
    for i, (cx, r, w) in enumerate(raw_disks):
        cx, r, w = float(cx), float(r), float(w)
        if w <= 0.0:
            raise NonPositiveWeight(f"disk {i} has weight {w}")
        if r < 0.0 or (r == 0.0 and metric is not Metric.ONED):
            raise InstanceError(f"disk {i} has non-positive radius {r}")
        dks.append(Disk(cx, r, w, disk_ids[i] if disk_ids is not None else i))
    if metric is Metric.UNIT:
        r0 = dks[0].r
        if any(d.r != r0 for d in dks):
            raise MetricMismatch("unit metric requires all radii equal")
    dks.sort(key=lambda d: (d.cx, d.id))

    for p in pts:
        if not any(covers(d, p, metric) for d in dks):
            raise InfeasibleInstance(f"point {p.id} at ({p.x}, {p.y}) is covered by no disk")

    lo = min(d.lx for d in dks)
    hi = max(d.rx for d in dks)
    if pts:
        lo = min(lo, pts[0].x)
        hi = max(hi, pts[-1].x)
    return Instance(
        metric=metric,
        points=tuple(pts),
        disks=tuple(dks),
        x_left=lo - 1.0,
        x_right=hi + 1.0,
        xs=tuple(p.x for p in pts),
    )


def window(inst: Instance, lx: float, rx: float) -> tuple[int, int]:
    """(p_l, p_r) 1-based indices: rightmost point strictly left of lx and
    leftmost point strictly right of rx, with 0 / n+1 as sentinels."""
    pl = bisect.bisect_left(inst.xs, lx)
    pr = bisect.bisect_right(inst.xs, rx) + 1
    return pl, pr


def _cy(d) -> float:
    return getattr(d, "cy", 0.0)


def _inside_circle(cx: float, cy: float, r: float, x: float, y: float) -> bool:
    dx = x - cx
    dy = y - cy
    return dx * dx + dy * dy <= r * r


def _pair_meets_upper(a, b) -> bool:
    """Do the two (possibly off-axis) L2 disks intersect in a region that
    meets the open upper half-plane?"""
    ax, ay, bx, by = a.cx, _cy(a), b.cx, _cy(b)
    dx, dy = bx - ax, by - ay
    d2 = dx * dx + dy * dy
    rsum = a.r + b.r
    if d2 > rsum * rsum:
        return False
    # Highest point of the lens: the top of one circle if it lies in the
    # other disk, else the upper circle-circle intersection point.
    if _inside_circle(bx, by, b.r, ax, ay + a.r):
        return ay + a.r > 0.0
    if _inside_circle(ax, ay, a.r, bx, by + b.r):
        return by + b.r > 0.0
    if d2 == 0.0:
        return False  # concentric and neither top inside: impossible, but be total
    d = math.sqrt(d2)
    along = (d2 + a.r * a.r - b.r * b.r) / (2.0 * d)
    h2 = a.r * a.r - along * along
    if h2 < 0.0:
        return False
    h = math.sqrt(h2)
    my = ay + along * dy / d
    # intersection points are M +- h * (-dy, dx) / d; take the higher branch
    return my + h * abs(dx) / d > 0.0


def count_intersecting_pairs(disks: Sequence, metric: Metric, above_line_only: bool = False) -> int:
    """Number of intersecting disk pairs (kappa).

    With ``above_line_only`` the pair counts only if the intersection region
    meets the open upper half-plane (line-separable semantics); this path
    accepts off-axis centers and is quadratic. The plain count for disks
    centered on L reduces to extent-interval overlap and is measured with a
    sort-based sweep.
    """
    m = len(disks)
    if above_line_only:
        total = 0
        for i in range(m):
            for j in range(i + 1, m):
                if _pair_meets_upper(disks[i], disks[j]):
                    total += 1
        return total
    # On-axis disks in every metric project to [cx-r, cx+r]; the y-extents
    # always overlap, so pairs intersect iff their x-extents do.
    events = []
    for d in disks:
        events.append((d.cx - d.r, 0))
        events.append((d.cx + d.r, 1))
    events.sort()
    active = 0
    total = 0
    for _, kind in events:
        if kind == 0:
            total += active
            active += 1
        else:
            active -= 1
    return total
