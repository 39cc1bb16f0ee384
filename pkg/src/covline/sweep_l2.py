"""Bounding-couple sweeps over circular arcs (and other x-monotone curves).

Each disk contributes the portion of its boundary above L, an x-monotone
arc; any two such arcs cross at most once above L. A Bentley-Ottmann event
queue (endpoints, points, lazily scheduled crossings) keeps a global status
tree ordered by arc height at the sweep line. The middle-couple sweep
additionally maintains the per-active-point partition of alive arcs, the
set of lowest arcs of the partition classes, and repairs class trees at
crossings; out-of-order arcs met while rebuilding a class tree are counted
as order violations, bounded by the number of intersecting disk pairs.

For disks centered on L all height comparisons are done on squared heights
(exact for representable inputs); off-axis centers fall back to float
heights, which the instance generators keep safely separated.
"""

from __future__ import annotations

import heapq
import math
from typing import Callable, Optional, Sequence

from .aggtree import AggregateOrderedSet, NotAdjacent, audits_enabled
from .couples import CoupleSet
from .geom import Instance, Metric, MetricMismatch

RANK_LEFT, RANK_CROSS, RANK_POINT, RANK_RIGHT = 0, 1, 2, 3


class CircleArc:
    """Upper boundary arc of a disk centered at (cx, cy), cy <= 0."""

    __slots__ = ("id", "cx", "cy", "r", "w")

    def __init__(self, id: int, cx: float, r: float, w: float, cy: float = 0.0):
        self.id = id
        self.cx = cx
        self.cy = cy
        self.r = r
        self.w = w

    @property
    def exact(self) -> bool:
        return self.cy == 0.0

    def extent(self) -> tuple[float, float]:
        if self.cy == 0.0:
            return self.cx - self.r, self.cx + self.r
        half = math.sqrt(max(self.r * self.r - self.cy * self.cy, 0.0))
        return self.cx - half, self.cx + half

    def key(self, x: float):
        """Arc height at x: squared when centered on L, float otherwise."""
        dx = x - self.cx
        rest = self.r * self.r - dx * dx
        if self.cy == 0.0:
            return rest
        return self.cy + math.sqrt(max(rest, 0.0))

    def covers(self, px: float, py: float) -> bool:
        dx = px - self.cx
        dy = py - self.cy
        return dx * dx + dy * dy <= self.r * self.r

    def above(self, px: float, py: float) -> bool:
        """Is (px, py) vertically above this arc (outside, within x-span)?"""
        lx, rx = self.extent()
        return lx <= px <= rx and not self.covers(px, py)

    def mirror(self) -> "CircleArc":
        return CircleArc(self.id, -self.cx, self.r, self.w, self.cy)

    def crossing_x(self, other: "CircleArc") -> Optional[float]:
        return arc_crossing(self, other)


def arc_crossing(a: CircleArc, b: CircleArc) -> Optional[float]:
    """x-coordinate of the unique crossing of the two arcs above L, if any.

    On-axis arcs use the radical-axis x and an exact squared positivity
    test. Off-axis (equal-radius, below-L) circles can meet above L at most
    once; two above-L intersections would break the sweep order and raise.
    """
    if a.cy == 0.0 and b.cy == 0.0:
        if a.cx == b.cx:
            return None  # concentric: no boundary intersection
        x = (a.r * a.r - b.r * b.r + b.cx * b.cx - a.cx * a.cx) / (2.0 * (b.cx - a.cx))
        dx = x - a.cx
        if a.r * a.r - dx * dx > 0.0:
            return x
        return None
    dx = b.cx - a.cx
    dy = b.cy - a.cy
    d2 = dx * dx + dy * dy
    if d2 == 0.0:
        return None
    rsum = a.r + b.r
    rdif = a.r - b.r
    if d2 >= rsum * rsum or d2 <= rdif * rdif:
        return None  # disjoint or nested boundaries
    d = math.sqrt(d2)
    along = (d2 + a.r * a.r - b.r * b.r) / (2.0 * d)
    h = math.sqrt(max(a.r * a.r - along * along, 0.0))
    mx = a.cx + along * dx / d
    my = a.cy + along * dy / d
    pts = [(mx - h * dy / d, my + h * dx / d), (mx + h * dy / d, my - h * dx / d)]
    above = [(px, py) for px, py in pts if py > 0.0]
    if not above:
        return None
    if len(above) == 2:
        raise AssertionError("two boundary intersections above the separator; input violates the sweep premise")
    return above[0][0]


class _Status:
    """Alive-curve order plus the event queue and crossing scheduling."""

    def __init__(self, curves: Sequence, x0: float, x_limit: float = math.inf):
        self.curves = curves
        self.x = x0
        self.x_limit = x_limit
        self.tree = AggregateOrderedSet(key_of=lambda pos: curves[pos].key(self.x))
        self.node: dict[int, object] = {}
        self.heap: list = []
        self._seq = 0
        self._scheduled: set[frozenset] = set()

    def push(self, x: float, rank: int, payload) -> None:
        heapq.heappush(self.heap, (x, rank, self._seq, payload))
        self._seq += 1

    def alive(self, pos: int) -> bool:
        return pos in self.node

    def insert(self, pos: int) -> None:
        node = self.tree.insert(pos, self.curves[pos].w)
        self.node[pos] = node
        self._consider(AggregateOrderedSet.predecessor(node), node)
        self._consider(node, AggregateOrderedSet.successor(node))

    def remove(self, pos: int) -> None:
        node = self.node.pop(pos)
        below = AggregateOrderedSet.predecessor(node)
        above = AggregateOrderedSet.successor(node)
        self.tree.delete(node)
        self._consider(below, above)

    def swap(self, a: int, b: int) -> None:
        na, nb = self.node[a], self.node[b]
        if AggregateOrderedSet.successor(na) is nb:
            low, high = na, nb
        elif AggregateOrderedSet.successor(nb) is na:
            low, high = nb, na
        else:
            raise NotAdjacent(f"crossing event for non-adjacent arcs {a} and {b}")
        self.tree.swap_adjacent(low, high)
        self.node[a], self.node[b] = nb, na
        self._consider(AggregateOrderedSet.predecessor(low), low)
        self._consider(high, AggregateOrderedSet.successor(high))

    def _consider(self, nlow, nhigh) -> None:
        if nlow is None or nhigh is None:
            return
        a, b = nlow.payload, nhigh.payload
        pair = frozenset((a, b))
        if pair in self._scheduled:
            return
        xc = self.curves[a].crossing_x(self.curves[b])
        if xc is None or xc < self.x or xc > self.x_limit:
            return
        self._scheduled.add(pair)
        self.push(xc, RANK_CROSS, ("x", a, b))


def _windows(pts: Sequence[tuple[float, float]], curves: Sequence) -> list[tuple[int, int]]:
    import bisect

    xs = [p[0] for p in pts]
    n = len(xs)
    out = []
    for c in curves:
        ext = c.extent()
        if ext is None:
            out.append((0, n + 1))
        else:
            lx, rx = ext
            out.append((bisect.bisect_left(xs, lx), bisect.bisect_right(xs, rx) + 1))
    return out


def _run_first_above(pts, curves, qkey, x0, x_limit, order_tol: float = 0.0) -> list[Optional[int]]:
    """Per curve: 1-based index of the first point above it while alive, else None."""
    audit = audits_enabled()
    st = _Status(curves, x0, x_limit)
    for k, c in enumerate(curves):
        ext = c.extent()
        if ext is None:
            st.insert(k)
        else:
            st.push(ext[0], RANK_LEFT, ("L", k))
            st.push(ext[1], RANK_RIGHT, ("R", k))
    for i0, (px, _py) in enumerate(pts):
        st.push(px, RANK_POINT, ("P", i0))

    p_of: list[Optional[int]] = [None] * len(curves)
    while st.heap:
        x, _rank, _seq, ev = heapq.heappop(st.heap)
        st.x = x
        kind = ev[0]
        if kind == "L":
            st.insert(ev[1])
        elif kind == "R":
            if st.alive(ev[1]):
                st.remove(ev[1])
        elif kind == "P":
            i0 = ev[1]
            qy = qkey(pts[i0][1])
            while len(st.tree):
                node = st.tree.min_node()
                pos = node.payload
                if not (curves[pos].key(x) < qy):
                    break
                p_of[pos] = i0 + 1
                st.remove(pos)
        else:
            a, b = ev[1], ev[2]
            if st.alive(a) and st.alive(b):
                st.swap(a, b)
        if audit:
            st.tree.check(order_tol)
    return p_of


def left_right_couples_arcs(
    pts: Sequence[tuple[float, float]],
    curves: Sequence,
    qkey: Callable[[float], float],
    x_left: float,
    x_right: float,
    order_tol: float = 0.0,
) -> CoupleSet:
    """Left and right bounding couples of every curve, by two mirror sweeps."""
    n = len(pts)
    cs = CoupleSet()

    windows = _windows(pts, curves)
    p_of = _run_first_above(pts, curves, qkey, x_left, x_right, order_tol)
    for k, c in enumerate(curves):
        pl, pr = windows[k]
        j = p_of[k] if p_of[k] is not None else pr
        cs.add(pl, j, c.w, c.id, CoupleSet.LEFT)

    mpts = [(-x, y) for x, y in reversed(pts)]
    mcurves = [c.mirror() for c in curves]
    mwindows = _windows(mpts, mcurves)
    mp_of = _run_first_above(mpts, mcurves, qkey, -x_right, -x_left, order_tol)
    for k, c in enumerate(curves):
        mpl, mpr = mwindows[k]
        mj = mp_of[k] if mp_of[k] is not None else mpr
        cs.add(n + 1 - mj, n + 1 - mpl, c.w, c.id, CoupleSet.RIGHT)
    return cs


def middle_couples_arcs(
    pts: Sequence[tuple[float, float]],
    curves: Sequence,
    qkey: Callable[[float], float],
    x_left: float,
    x_right: float,
    stats: dict | None = None,
    order_tol: float = 0.0,
) -> CoupleSet:
    """All middle bounding couples with their minimum weights.

    ``order_tol`` is forwarded to the debug order audits; float-height
    regimes pass a small epsilon since two arcs sit at equal height exactly
    when a crossing fires.
    """
    audit = audits_enabled()
    st = _Status(curves, x_left, x_right)
    key_at = lambda pos: curves[pos].key(st.x)  # noqa: E731 - shared by all class trees

    h0 = AggregateOrderedSet(key_at, label=0)
    hset_of: dict[int, AggregateOrderedSet] = {}
    hnode: dict[int, object] = {}
    pl = AggregateOrderedSet(key_of=lambda idx: pts[idx - 1][0])
    plnode: dict[int, object] = {}
    hstar = AggregateOrderedSet(key_at)
    starnode: dict[int, object] = {}
    star_set: dict[int, int] = {}      # arc pos -> owning point index
    star_of_set: dict[int, int] = {}   # point index -> its lowest arc pos

    couples = CoupleSet()
    events = 0
    violations = 0
    drained = 0
    removed_points = 0

    def star_add(pos: int, idx: int) -> None:
        starnode[pos] = hstar.insert(pos, curves[pos].w)
        star_set[pos] = idx
        star_of_set[idx] = pos

    def star_drop(pos: int) -> None:
        hstar.delete(starnode.pop(pos))
        idx = star_set.pop(pos)
        del star_of_set[idx]

    def drop_point(idx: int) -> None:
        nonlocal removed_points
        pl.delete(plnode.pop(idx))
        del hset_of[idx]
        removed_points += 1

    def swap_in(tree: AggregateOrderedSet, mapping: dict, a: int, b: int) -> None:
        na, nb = mapping[a], mapping[b]
        if AggregateOrderedSet.successor(na) is nb:
            tree.swap_adjacent(na, nb)
        elif AggregateOrderedSet.successor(nb) is na:
            tree.swap_adjacent(nb, na)
        else:
            raise NotAdjacent(f"arcs {a} and {b} not adjacent in their class structure")
        mapping[a], mapping[b] = nb, na

    for k, c in enumerate(curves):
        ext = c.extent()
        if ext is None:
            st.insert(k)
            hnode[k] = h0.insert(k, c.w)
        else:
            st.push(ext[0], RANK_LEFT, ("L", k))
            st.push(ext[1], RANK_RIGHT, ("R", k))
    for i0, (px, _py) in enumerate(pts):
        st.push(px, RANK_POINT, ("P", i0))

    while st.heap:
        x, _rank, _seq, ev = heapq.heappop(st.heap)
        st.x = x
        events += 1
        kind = ev[0]
        if kind == "L":
            pos = ev[1]
            st.insert(pos)
            hnode[pos] = h0.insert(pos, curves[pos].w)
        elif kind == "R":
            pos = ev[1]
            st.remove(pos)
            node = hnode.pop(pos)
            owner = AggregateOrderedSet.owner_of(node)
            owner.delete(node)
            if owner.label != 0:
                idx = owner.label
                if pos in starnode:
                    star_drop(pos)
                    if len(owner):
                        star_add(owner.min_node().payload, idx)
                if len(owner) == 0:
                    drop_point(idx)
        elif kind == "x":
            a, b = ev[1], ev[2]
            if not (st.alive(a) and st.alive(b)):
                continue
            st.swap(a, b)
            oa = AggregateOrderedSet.owner_of(hnode[a])
            ob = AggregateOrderedSet.owner_of(hnode[b])
            if oa is ob:
                swap_in(oa, hnode, a, b)
                if oa.label != 0:
                    idx = oa.label
                    newlow = oa.min_node().payload
                    if newlow != star_of_set[idx]:
                        star_drop(star_of_set[idx])
                        star_add(newlow, idx)
            elif a in starnode and b in starnode:
                swap_in(hstar, starnode, a, b)
        else:
            i0 = ev[1]
            h = i0 + 1
            qy = qkey(pts[i0][1])
            scratch: list[tuple[int, AggregateOrderedSet]] = []
            while len(hstar):
                node = hstar.min_node()
                pos = node.payload
                if not (curves[pos].key(x) < qy):
                    break
                idx = star_set[pos]
                hs = hset_of[idx]
                mw = hs.min_weight_lt(qy)
                couples.add(idx, h, mw[0], curves[mw[1]].id, 0)
                below, above = hs.split_lt(qy)
                star_drop(pos)
                if len(above):
                    above.label = idx
                    hset_of[idx] = above
                    star_add(above.min_node().payload, idx)
                else:
                    drop_point(idx)
                scratch.append((idx, below))

            scratch.sort(key=lambda item: -item[0])
            accum = AggregateOrderedSet(key_at)
            for _idx, btree in scratch:
                if len(accum) == 0:
                    accum = btree
                    continue
                while len(btree):
                    smin = btree.min_node()
                    shigh = accum.max_node()
                    if curves[smin.payload].key(x) > curves[shigh.payload].key(x):
                        accum = AggregateOrderedSet.merge(accum, btree)
                        break
                    violations += 1
                    pos_s = smin.payload
                    w_s = smin.weight
                    btree.delete(smin)
                    hnode[pos_s] = accum.insert(pos_s, w_s)
            while len(h0):
                node = h0.min_node()
                if not (curves[node.payload].key(x) < qy):
                    break
                pos = node.payload
                h0.delete(node)
                hnode[pos] = accum.insert(pos, curves[pos].w)
                drained += 1
            if len(accum):
                accum.label = h
                hset_of[h] = accum
                plnode[h] = pl.insert(h, 0.0)
                star_add(accum.min_node().payload, h)

        if audit:
            _audit_middle_state(pts, curves, st, h0, hset_of, hnode, pl, hstar, star_of_set, order_tol)

    if stats is not None:
        stats["events"] = stats.get("events", 0) + events
        stats["order_violations"] = stats.get("order_violations", 0) + violations
        stats["drained"] = stats.get("drained", 0) + drained
        stats["removed_points"] = stats.get("removed_points", 0) + removed_points
    return couples


def _audit_middle_state(pts, curves, st, h0, hset_of, hnode, pl, hstar, star_of_set,
                        order_tol: float = 0.0) -> None:
    """Recompute every maintained invariant from scratch (debug builds)."""
    st.tree.check(order_tol)
    h0.check(order_tol)
    pl.check()
    hstar.check(order_tol)
    for hs in hset_of.values():
        hs.check(order_tol)

    alive = set(st.node)
    assert alive == set(hnode), "partition does not cover exactly the alive arcs"
    members: set[int] = set()
    for hs in hset_of.values():
        members |= {n.payload for n in hs}
    members |= {n.payload for n in h0}
    assert members == alive, "class trees disagree with the alive arc set"

    active = sorted(hset_of)  # point indices currently tracked, ascending x
    for pos in alive:
        expected = 0
        for idx in active:
            if curves[pos].above(pts[idx - 1][0], pts[idx - 1][1]):
                expected = idx
        owner = AggregateOrderedSet.owner_of(hnode[pos]).label
        assert owner == expected, f"arc {pos} assigned to class {owner}, expected {expected}"

    # invariants (3) and (4): no point strictly between an active point (or
    # anywhere left of the sweep for class 0) is above a class member
    for idx in active:
        for b in range(idx + 1, len(pts) + 1):
            bx, by = pts[b - 1]
            if not (pts[idx - 1][0] < bx < st.x):
                continue
            for node in hset_of[idx]:
                assert not curves[node.payload].above(bx, by), (
                    f"invariant 3 violated: point {b} above arc {node.payload} of class {idx}"
                )
    for b in range(1, len(pts) + 1):
        bx, by = pts[b - 1]
        if bx >= st.x:
            continue
        for node in h0:
            assert not curves[node.payload].above(bx, by), (
                f"invariant 4 violated: point {b} above unclaimed arc {node.payload}"
            )

    stars = {star_of_set[idx] for idx in star_of_set}
    assert stars == {n.payload for n in hstar}
    for idx, hs in hset_of.items():
        assert star_of_set[idx] == hs.min_node().payload, "stale lowest-arc entry"


def arcs_of_instance(inst: Instance) -> list[CircleArc]:
    return [CircleArc(d.id, d.cx, d.r, d.w) for d in inst.disks]


def _sq(y: float) -> float:
    return y * y


_ORDER_TOL = 1e-12  # crossing events land on rounded x, leaving ulp-level key skew


def left_right_couples_l2(inst: Instance) -> CoupleSet:
    if inst.metric is not Metric.L2:
        raise MetricMismatch(f"expected l2 metric, got {inst.metric.value}")
    pts = [(p.x, p.y) for p in inst.points]
    return left_right_couples_arcs(
        pts, arcs_of_instance(inst), _sq, inst.x_left, inst.x_right, order_tol=_ORDER_TOL
    )


def middle_couples_l2(inst: Instance, stats: dict | None = None) -> CoupleSet:
    if inst.metric is not Metric.L2:
        raise MetricMismatch(f"expected l2 metric, got {inst.metric.value}")
    pts = [(p.x, p.y) for p in inst.points]
    return middle_couples_arcs(
        pts, arcs_of_instance(inst), _sq, inst.x_left, inst.x_right, stats=stats, order_tol=_ORDER_TOL
    )
