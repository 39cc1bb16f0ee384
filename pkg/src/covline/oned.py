"""1D weighted segment cover: dynamic programming over a left-to-right sweep.

Points and segments live on the axis. A sweep keeps the segments covering
the current position in an ordered set keyed by their DP cost; each point
takes the cheapest active segment. Closed endpoints: a segment whose
endpoint coincides with a point covers it, which is enforced by processing
left endpoints before points before right endpoints at equal coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .aggtree import AggregateOrderedSet, audits_enabled
from .geom import InfeasibleInstance, Solution, weight_of


@dataclass(frozen=True, slots=True)
class WeightedSegment:
    l: float
    r: float
    w: float
    origin: int | None = None  # defining disk id, if any

    def __post_init__(self):
        if self.l > self.r:
            raise ValueError(f"segment endpoints out of order: {self.l} > {self.r}")
        if self.w <= 0:
            raise ValueError(f"segment weight must be positive, got {self.w}")


@dataclass
class DpState:
    W: list[float]       # W[0] = 0 is the sentinel; W[i] covers points 1..i
    cost: list[float]    # per segment, w_j + W[f(j)]
    choice: list[int]    # segment picked at each point (1-based), -1 before
    f: list[int]         # per segment, rightmost point index strictly left of l_j


def compute_f(segments: Sequence[WeightedSegment], points_x: Sequence[float]) -> list[int]:
    """f[j] = largest i in [0, n] with x(p_i) < l_j, by one merged scan."""
    order = sorted(range(len(segments)), key=lambda j: segments[j].l)
    f = [0] * len(segments)
    i = 0
    n = len(points_x)
    for j in order:
        while i < n and points_x[i] < segments[j].l:
            i += 1
        f[j] = i
    return f


_LEFT, _POINT, _RIGHT = 0, 1, 2


def dp_state(points_x: Sequence[float], segments: Sequence[WeightedSegment]) -> DpState:
    """Run the sweep and return the full DP state (raises on infeasibility)."""
    n = len(points_x)
    m = len(segments)
    f = compute_f(segments, points_x)
    events: list[tuple[float, int, int]] = []
    for j, s in enumerate(segments):
        events.append((s.l, _LEFT, j))
        events.append((s.r, _RIGHT, j))
    for i, x in enumerate(points_x):
        events.append((x, _POINT, i))
    events.sort()

    cost = [0.0] * m
    W = [0.0] * (n + 1)
    choice = [-1] * (n + 1)
    active = AggregateOrderedSet(key_of=lambda j: cost[j])
    node_of: dict[int, object] = {}

    for x, kind, idx in events:
        if kind == _LEFT:
            cost[idx] = segments[idx].w + W[f[idx]]
            node_of[idx] = active.insert(idx, cost[idx])
        elif kind == _RIGHT:
            active.delete(node_of.pop(idx))
        else:
            i = idx + 1  # 1-based point index
            best = active.min_node()
            if best is None:
                raise InfeasibleInstance(f"point at x={x} has no covering segment")
            W[i] = cost[best.payload]
            choice[i] = best.payload
    return DpState(W=W, cost=cost, choice=choice, f=f)


def solve_1d(points_x: Sequence[float], segments: Sequence[WeightedSegment]) -> Solution:
    """Minimum-weight subset of segments covering all points, with back-tracking."""
    state = dp_state(points_x, segments)
    n = len(points_x)
    chosen: list[int] = []
    i = n
    while i > 0:
        j = state.choice[i]
        chosen.append(j)
        i = state.f[j]
    ids = sorted(set(chosen))
    if audits_enabled():
        assert len(ids) == len(chosen), "back-tracking chain revisited a segment"
    weight = weight_of(ids, {j: segments[j].w for j in ids})
    if audits_enabled() and n:
        assert abs(weight - state.W[n]) <= 1e-9 * max(1.0, abs(weight))
    return Solution(weight=weight, chosen=tuple(ids))
