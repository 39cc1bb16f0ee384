"""Bounding-couple sweeps for squares (the L-infinity metric).

Upper edges of squares centered on L are horizontal, so the alive squares
admit a static order by edge height and never cross. The left/right sweep
finds, per square, the first point above it while alive. The middle sweep
maintains the active point sequence P(l) (northwest to southeast) and the
partition of alive squares into per-point classes plus the unclaimed pool;
point events cut a suffix of P(l), report one couple per cut class at the
class minimum weight, and rebuild the new point's class by merges, one
split and a bottom-up drain of the pool.
"""

from __future__ import annotations

import bisect
from typing import Sequence

from .aggtree import AggregateOrderedSet, audits_enabled
from .couples import CoupleSet
from .geom import Disk, Instance, Metric, MetricMismatch, PointP

_LEFT, _POINT, _RIGHT = 0, 1, 2


def _square_above(d: Disk, px: float, py: float) -> bool:
    return d.lx <= px <= d.rx and py > d.r


def _events(points: Sequence, squares: Sequence[Disk]):
    ev = []
    for k, d in enumerate(squares):
        ev.append((d.lx, _LEFT, k))
        ev.append((d.rx, _RIGHT, k))
    for i0, p in enumerate(points):
        ev.append((p.x, _POINT, i0))
    ev.sort()
    return ev


def _first_above_squares(points, squares) -> list[int | None]:
    """Per square, the 1-based index of the leftmost point above it while
    alive, or None if it left the sweep unresolved."""
    alive = AggregateOrderedSet(key_of=lambda k: squares[k].r)
    node_of: dict[int, object] = {}
    p_of: list[int | None] = [None] * len(squares)
    for x, kind, idx in _events(points, squares):
        if kind == _LEFT:
            node_of[idx] = alive.insert(idx, squares[idx].w)
        elif kind == _RIGHT:
            if idx in node_of:
                alive.delete(node_of.pop(idx))
        else:
            y = points[idx].y
            while len(alive):
                node = alive.min_node()
                k = node.payload
                if not (squares[k].r < y):
                    break
                p_of[k] = idx + 1
                alive.delete(node)
                del node_of[k]
    return p_of


def left_right_couples_linf(inst: Instance) -> CoupleSet:
    if inst.metric is not Metric.LINF:
        raise MetricMismatch(f"expected linf metric, got {inst.metric.value}")
    n = inst.n
    cs = CoupleSet()

    windows = [
        (bisect.bisect_left(inst.xs, d.lx), bisect.bisect_right(inst.xs, d.rx) + 1)
        for d in inst.disks
    ]
    p_of = _first_above_squares(inst.points, inst.disks)
    for k, d in enumerate(inst.disks):
        pl, pr = windows[k]
        j = p_of[k] if p_of[k] is not None else pr
        cs.add(pl, j, d.w, d.id, CoupleSet.LEFT)

    mpoints = [PointP(-p.x, p.y, p.id) for p in reversed(inst.points)]
    msquares = [Disk(-d.cx, d.r, d.w, d.id) for d in inst.disks]
    mxs = [p.x for p in mpoints]
    mwindows = [
        (bisect.bisect_left(mxs, d.lx), bisect.bisect_right(mxs, d.rx) + 1)
        for d in msquares
    ]
    mp_of = _first_above_squares(mpoints, msquares)
    for k, d in enumerate(inst.disks):
        mpl, mpr = mwindows[k]
        mj = mp_of[k] if mp_of[k] is not None else mpr
        cs.add(n + 1 - mj, n + 1 - mpl, d.w, d.id, CoupleSet.RIGHT)
    return cs


def middle_couples_linf(inst: Instance, stats: dict | None = None) -> CoupleSet:
    if inst.metric is not Metric.LINF:
        raise MetricMismatch(f"expected linf metric, got {inst.metric.value}")
    audit = audits_enabled()
    points = inst.points
    squares = inst.disks
    edge = lambda k: squares[k].r  # noqa: E731 - key of every class tree

    h0 = AggregateOrderedSet(edge, label=0)
    hset_of: dict[int, AggregateOrderedSet] = {}
    node_of: dict[int, object] = {}
    # P(l) ordered northwest to southeast: decreasing y, ties by arrival (x)
    pl = AggregateOrderedSet(key_of=lambda idx: -points[idx - 1].y)
    plnode: dict[int, object] = {}

    couples = CoupleSet()
    events = drained = removed_points = 0

    for x, kind, idx in _events(points, squares):
        events += 1
        if kind == _LEFT:
            node_of[idx] = h0.insert(idx, squares[idx].w)
        elif kind == _RIGHT:
            node = node_of.pop(idx)
            owner = AggregateOrderedSet.owner_of(node)
            owner.delete(node)
            if owner.label != 0 and len(owner) == 0:
                pidx = owner.label
                pl.delete(plnode.pop(pidx))
                del hset_of[pidx]
                removed_points += 1
        else:
            h = idx + 1
            y = points[idx].y
            above_part, below_part = pl.split_lt(-y)
            pl = above_part
            suffix = [node.payload for node in below_part]
            accum = AggregateOrderedSet(edge)
            for pidx in reversed(suffix):
                hs = hset_of.pop(pidx)
                w, wpos = hs.global_min()
                couples.add(pidx, h, w, squares[wpos].id, 0)
                accum = AggregateOrderedSet.merge(accum, hs)
                del plnode[pidx]
                removed_points += 1
            lowest = pl.max_node()
            if lowest is not None:
                pidx = lowest.payload
                hs = hset_of[pidx]
                below, above = hs.split_lt(y)
                if len(below):
                    w, wpos = below.global_min()
                    couples.add(pidx, h, w, squares[wpos].id, 0)
                    accum = AggregateOrderedSet.merge(accum, below)
                if len(above) == 0:
                    pl.delete(plnode.pop(pidx))
                    del hset_of[pidx]
                    removed_points += 1
                else:
                    above.label = pidx
                    hset_of[pidx] = above
            while len(h0):
                node = h0.min_node()
                if not (squares[node.payload].r < y):
                    break
                k = node.payload
                h0.delete(node)
                node_of[k] = accum.insert(k, squares[k].w)
                drained += 1
            if len(accum):
                accum.label = h
                hset_of[h] = accum
                plnode[h] = pl.insert(h, 0.0)

        if audit:
            _audit_state(points, squares, x, kind, h0, hset_of, node_of, pl)

    if stats is not None:
        stats["events"] = stats.get("events", 0) + events
        stats["drained"] = stats.get("drained", 0) + drained
        stats["removed_points"] = stats.get("removed_points", 0) + removed_points
    assert drained <= inst.m, "pool drain exceeded the disk count"
    assert removed_points <= inst.n, "active-point removals exceeded the point count"
    return couples


def _audit_state(points, squares, x, kind, h0, hset_of, node_of, pl) -> None:
    h0.check()
    pl.check()
    for hs in hset_of.values():
        hs.check()

    sweep_x = x
    alive = set(node_of)
    members = {n.payload for n in h0}
    for hs in hset_of.values():
        members |= {n.payload for n in hs}
    assert members == alive, "class trees disagree with the alive square set"

    active = sorted(hset_of)
    for pos in alive:
        expected = 0
        for idx in active:
            if _square_above(squares[pos], points[idx - 1].x, points[idx - 1].y):
                expected = idx
        got = AggregateOrderedSet.owner_of(node_of[pos]).label
        assert got == expected, f"square {pos} in class {got}, expected {expected}"

    for idx in active:
        for b in range(idx + 1, len(points) + 1):
            bx, by = points[b - 1].x, points[b - 1].y
            if not (points[idx - 1].x < bx < sweep_x):
                continue
            for node in hset_of[idx]:
                assert not _square_above(squares[node.payload], bx, by), (
                    f"invariant 3 violated at class {idx}"
                )
    for b in range(1, len(points) + 1):
        bx, by = points[b - 1].x, points[b - 1].y
        if bx >= sweep_x:
            continue
        for node in h0:
            assert not _square_above(squares[node.payload], bx, by), "invariant 4 violated"
