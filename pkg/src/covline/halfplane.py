"""Line-separable unit-disk coverage and weighted half-plane coverage.

The separable solver translates the separator to the x-axis and runs the
circular-arc couple machinery on the visible portions of the disk
boundaries (equal radii guarantee at most one crossing per pair above the
separator). Lower half-planes behave as disks of infinite radius: their
boundary lines are x-monotone, pairwise cross at most once, and the same
machinery applies unchanged. The general solver enumerates plane-covering
subsets of size up to three plus every linearly separable bipartition of
the points, solving a lower-only subproblem on each side.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import linprog

from .couples import CoupleSet, baseline_couples_generic, solve_from_couples
from .geom import DegenerateInput, InfeasibleInstance, InstanceError, Solution
from .sweep_l2 import (
    CircleArc,
    _windows,
    left_right_couples_arcs,
    middle_couples_arcs,
)


class MixedRadii(InstanceError):
    pass


class NotLower(InstanceError):
    pass


@dataclass(frozen=True, slots=True)
class HalfPlane:
    """The closed half-plane a*x + b*y <= c with weight w."""

    a: float
    b: float
    c: float
    w: float
    id: int

    @property
    def is_lower(self) -> bool:
        return self.b > 0

    @property
    def is_upper(self) -> bool:
        return self.b < 0

    @property
    def is_vertical(self) -> bool:
        return self.b == 0

    def covers(self, x: float, y: float) -> bool:
        return self.a * x + self.b * y <= self.c


class LineCurve:
    """Boundary line of a lower half-plane, acting as an infinite-radius arc."""

    __slots__ = ("id", "a", "b", "c", "w")

    def __init__(self, id: int, a: float, b: float, c: float, w: float):
        assert b > 0
        self.id = id
        self.a = a
        self.b = b
        self.c = c
        self.w = w

    def extent(self) -> None:
        return None  # alive across the whole sweep

    def key(self, x: float) -> float:
        return (self.c - self.a * x) / self.b

    def covers(self, px: float, py: float) -> bool:
        return self.a * px + self.b * py <= self.c

    def above(self, px: float, py: float) -> bool:
        return not self.covers(px, py)

    def mirror(self) -> "LineCurve":
        return LineCurve(self.id, -self.a, self.b, self.c, self.w)

    def crossing_x(self, other: "LineCurve") -> Optional[float]:
        den = self.b * other.a - other.b * self.a
        if den == 0.0:
            return None
        return (self.b * other.c - other.b * self.c) / den


def reflect_point(p: tuple[float, float]) -> tuple[float, float]:
    return (p[0], -p[1])


def reflect_halfplane(h: HalfPlane) -> HalfPlane:
    return HalfPlane(h.a, -h.b, h.c, h.w, h.id)


def _ident(y: float) -> float:
    return y


def _solve_with_curves(
    points_xy: Sequence[tuple[float, float]],
    curves: Sequence,
    weights_by_id: dict[int, float],
    builder: str = "sweep",
) -> Solution:
    n = len(points_xy)
    if n == 0:
        return Solution(0.0, (), stats={})
    pts = sorted(points_xy)
    xs = [p[0] for p in pts]
    lo, hi = xs[0], xs[-1]
    for c in curves:
        ext = c.extent()
        if ext is not None:
            lo = min(lo, ext[0])
            hi = max(hi, ext[1])
    x_left, x_right = lo - 1.0, hi + 1.0
    stats: dict = {}
    if builder == "sweep":
        cs = left_right_couples_arcs(pts, curves, _ident, x_left, x_right, order_tol=1e-12)
        cs.update(
            middle_couples_arcs(pts, curves, _ident, x_left, x_right, stats=stats, order_tol=1e-12)
        )
    elif builder == "baseline":
        windows = _windows(pts, curves)
        cs = baseline_couples_generic(
            xs,
            n,
            curves,
            covered=lambda i, k: curves[k].covers(pts[i - 1][0], pts[i - 1][1]),
            window_of=lambda k: windows[k],
        )
    else:
        raise ValueError(f"unknown builder {builder!r}")
    return solve_from_couples(cs, xs, weights_by_id, stats=stats)


def solve_line_separable(
    points_xy: Sequence[tuple[float, float]],
    disks: Sequence[tuple[float, float, float, float]],
    separator_y: float = 0.0,
    builder: str = "sweep",
) -> Solution:
    """Optimal cover of points by equal-radius disks across a horizontal separator.

    ``disks`` entries are (cx, cy, r, w) with every center strictly below
    ``separator_y`` and every point strictly above it.
    """
    if not disks:
        raise InstanceError("instance needs at least one disk")
    radii = {d[2] for d in disks}
    if len(radii) != 1:
        raise MixedRadii(f"line-separable case requires equal radii, got {sorted(radii)}")
    pts = [(x, y - separator_y) for x, y in points_xy]
    if any(y <= 0 for _x, y in pts):
        raise DegenerateInput("every point must lie strictly above the separator")
    if any(cy >= separator_y for _cx, cy, _r, _w in disks):
        raise DegenerateInput("every disk center must lie strictly below the separator")
    arcs = []
    for k, (cx, cy, r, w) in enumerate(disks):
        cy_t = cy - separator_y
        if cy_t + r > 0:  # disks that never reach above the separator cover nothing
            arcs.append(CircleArc(k, cx, r, w, cy=cy_t))
    if not arcs:
        raise InfeasibleInstance("no disk reaches above the separator")
    weights = {k: disks[k][3] for k in range(len(disks))}
    return _solve_with_curves(pts, arcs, weights, builder=builder)


def solve_lower_only(
    points_xy: Sequence[tuple[float, float]],
    halfplanes: Sequence[HalfPlane],
    builder: str = "sweep",
) -> Solution:
    """Optimal cover of points by lower half-planes."""
    for h in halfplanes:
        if not h.is_lower:
            raise NotLower(f"half-plane {h.id} is not a lower half-plane")
    if not points_xy:
        return Solution(0.0, (), stats={})
    if not halfplanes:
        raise InfeasibleInstance("no half-planes available")
    curves = [LineCurve(h.id, h.a, h.b, h.c, h.w) for h in halfplanes]
    weights = {h.id: h.w for h in halfplanes}
    return _solve_with_curves(points_xy, curves, weights, builder=builder)


_EPS = 1e-9


def _max_slack(a_rows: list[list[float]], b_vals: list[float], nvars: int) -> float:
    """Largest t with A v >= b + t componentwise (capped at 1), via an LP."""
    cols = nvars + 1
    A_ub = [[-row[i] for i in range(nvars)] + [1.0] for row in a_rows]
    b_ub = [-b for b in b_vals]
    A_ub.append([0.0] * nvars + [1.0])
    b_ub.append(1.0)
    res = linprog(
        c=[0.0] * nvars + [-1.0],
        A_ub=np.array(A_ub),
        b_ub=np.array(b_ub),
        bounds=[(None, None)] * nvars + [(None, 1.0)],
        method="highs",
    )
    if res.status == 3:
        return 1.0  # unbounded: certainly feasible
    if res.status != 0:
        return -1.0
    return float(-res.fun)


def covers_plane(halfplanes: Sequence[HalfPlane]) -> bool:
    """Does the union of at most three half-planes cover the whole plane?

    True iff the intersection of the open complements is empty, decided by
    maximizing the joint slack of the complement inequalities.
    """
    if not 1 <= len(halfplanes) <= 3:
        raise ValueError("covers_plane expects between one and three half-planes")
    rows = [[h.a, h.b] for h in halfplanes]
    vals = [h.c for h in halfplanes]
    return _max_slack(rows, vals, nvars=2) <= _EPS


def _strictly_separable(points, below_idx, above_idx) -> bool:
    """Is there a line with the first group strictly below and the second
    strictly above it?"""
    if not below_idx or not above_idx:
        return True
    rows = []
    vals = []
    for i in below_idx:  # c - g*x - h*y >= t
        rows.append([-points[i][0], -points[i][1], 1.0])
        vals.append(0.0)
    for i in above_idx:  # g*x + h*y - c >= t
        rows.append([points[i][0], points[i][1], -1.0])
        vals.append(0.0)
    cols = 3
    A_ub = [[-r[k] for k in range(cols)] + [1.0] for r in rows]
    b_ub = [-v for v in vals]
    res = linprog(
        c=[0.0] * cols + [-1.0],
        A_ub=np.array(A_ub),
        b_ub=np.array(b_ub),
        bounds=[(-1.0, 1.0), (-1.0, 1.0), (None, None), (None, 1.0)],
        method="highs",
    )
    if res.status == 3:
        return True
    if res.status != 0:
        return False
    return float(-res.fun) > _EPS


def enumerate_bipartitions(points: Sequence[tuple[float, float]]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All ordered (below, above) bipartitions of the points realizable by a line.

    Candidates come from lines through every point pair with each on-line
    point tried on both sides; in degenerate (collinear) configurations the
    candidates are filtered by an explicit strict-separability test.
    """
    n = len(points)
    if n == 0:
        raise ValueError("need at least one point")
    every = frozenset(range(n))
    candidates: set[frozenset] = {frozenset(), every}
    checked: dict[frozenset, bool] = {}
    for u, v in itertools.combinations(range(n), 2):
        ux, uy = points[u]
        vx, vy = points[v]
        on, neg = [], []
        for w in range(n):
            wx, wy = points[w]
            cross = (vx - ux) * (wy - uy) - (vy - uy) * (wx - ux)
            if cross == 0.0:
                on.append(w)
            elif cross < 0.0:
                neg.append(w)
        generic = len(on) == 2
        base = frozenset(neg)
        for bits in range(1 << len(on)):
            side = base | {on[t] for t in range(len(on)) if bits >> t & 1}
            if side in candidates:
                continue
            if generic:
                candidates.add(side)
                continue
            ok = checked.get(side)
            if ok is None:
                ok = _strictly_separable(points, tuple(side), tuple(every - side))
                checked[side] = ok
            if ok:
                candidates.add(side)
    out = []
    for side in candidates:
        below = tuple(sorted(side))
        above = tuple(sorted(every - side))
        out.append((below, above))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def _rotate_instance(points, halfplanes):
    """Rotate everything by a small fixed angle until no half-plane is vertical."""
    theta = 1e-3
    for _ in range(64):
        c, s = math.cos(theta), math.sin(theta)
        hs = [HalfPlane(h.a * c - h.b * s, h.a * s + h.b * c, h.c, h.w, h.id) for h in halfplanes]
        if all(not h.is_vertical for h in hs):
            pts = [(x * c - y * s, x * s + y * c) for x, y in points]
            return pts, hs
        theta *= 0.5
    raise InstanceError("could not rotate away vertical half-planes")


def solve_halfplane_general(
    points_xy: Sequence[tuple[float, float]],
    halfplanes: Sequence[HalfPlane],
    builder: str = "sweep",
) -> Solution:
    """Optimal cover of points by arbitrary weighted half-planes.

    Takes the minimum over (a) subsets of up to three half-planes whose
    union is the whole plane and (b) per linear bipartition of the points,
    a lower-only solve below plus a reflected lower-only solve above.
    """
    if not halfplanes:
        raise InstanceError("instance needs at least one half-plane")
    if not points_xy:
        return Solution(0.0, (), stats={})
    if any(h.is_vertical for h in halfplanes):
        points_xy, halfplanes = _rotate_instance(points_xy, halfplanes)

    weights = {h.id: h.w for h in halfplanes}
    best: tuple[float, tuple[int, ...]] | None = None

    def offer(ids: tuple[int, ...]) -> None:
        nonlocal best
        total = 0.0
        for i in sorted(ids):
            total += weights[i]
        cand = (total, tuple(sorted(ids)))
        if best is None or cand < best:
            best = cand

    for size in (1, 2, 3):
        for combo in itertools.combinations(halfplanes, size):
            if covers_plane(combo):
                offer(tuple(h.id for h in combo))

    lowers = [h for h in halfplanes if h.is_lower]
    uppers = [h for h in halfplanes if h.is_upper]
    reflected_uppers = [reflect_halfplane(h) for h in uppers]
    for below, above in enumerate_bipartitions(points_xy):
        try:
            if below:
                s1 = solve_lower_only([points_xy[i] for i in below], lowers, builder=builder)
            else:
                s1 = Solution(0.0, ())
            if above:
                s2 = solve_lower_only(
                    [reflect_point(points_xy[i]) for i in above], reflected_uppers, builder=builder
                )
            else:
                s2 = Solution(0.0, ())
        except InfeasibleInstance:
            continue
        offer(s1.chosen + s2.chosen)

    if best is None:
        raise InfeasibleInstance("no branch yields a feasible cover")
    return Solution(weight=best[0], chosen=best[1], stats={})
