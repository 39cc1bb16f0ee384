"""Independent brute-force references for testing every solver and sweep.

Nothing here shares scan logic with the production algorithms; only the
basic containment predicates from :mod:`covline.geom` are reused, so a bug
in a sweep or in the baseline builder cannot hide in its oracle.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .couples import CoupleSet
from .geom import InfeasibleInstance, Instance, Metric, covers
from .oned import WeightedSegment

MAX_ORACLE_SETS = 24


class TooLarge(Exception):
    """brute_force_cover refuses instances with more than 24 sets."""


def coverage_matrix(n_points: int, n_sets: int, covered: Callable[[int, int], bool]) -> np.ndarray:
    """n x m boolean matrix; entry (i, k) true iff set k covers point i."""
    mat = np.zeros((n_points, n_sets), dtype=bool)
    for i in range(n_points):
        for k in range(n_sets):
            mat[i, k] = covered(i, k)
    return mat


def instance_matrix(inst: Instance) -> np.ndarray:
    """Coverage matrix with columns in original disk-id order, so subset
    indices and weight summation order match the solvers' conventions."""
    by_id = sorted(inst.disks, key=lambda d: d.id)
    return coverage_matrix(
        inst.n, inst.m, lambda i, k: covers(by_id[k], inst.points[i], inst.metric)
    )


def brute_force_cover(matrix, weights: Sequence[float]) -> tuple[float, tuple[int, ...]]:
    """Exact minimum over all 2^m subsets whose rows cover every point.

    Ties are broken by the lexicographically smallest subset bitmask, so the
    result is deterministic. Weights are accumulated in ascending column
    order, matching the canonical summation order used by the solvers.
    """
    mat = np.asarray(matrix, dtype=bool)
    n, m = mat.shape
    if m > MAX_ORACLE_SETS:
        raise TooLarge(f"{m} sets exceeds the 2^{MAX_ORACLE_SETS} enumeration cap")
    words = max(1, (n + 63) // 64)
    col_bits = np.zeros((m, words), dtype=np.uint64)
    for k in range(m):
        for i in range(n):
            if mat[i, k]:
                col_bits[k, i >> 6] |= np.uint64(1) << np.uint64(i & 63)
    full = np.zeros(words, dtype=np.uint64)
    for i in range(n):
        full[i >> 6] |= np.uint64(1) << np.uint64(i & 63)

    size = 1 << m
    or_table = np.zeros((size, words), dtype=np.uint64)
    w_table = np.zeros(size, dtype=np.float64)
    for j in range(m):
        lo = 1 << j
        hi = lo << 1
        or_table[lo:hi] = or_table[:lo] | col_bits[j]
        w_table[lo:hi] = w_table[:lo] + weights[j]
    feasible = (or_table == full).all(axis=1)
    if not feasible.any():
        raise InfeasibleInstance("no subset covers all points")
    idx = np.flatnonzero(feasible)
    ws = w_table[idx]
    best_w = ws.min()
    mask = int(idx[ws == best_w].min())
    subset = tuple(j for j in range(m) if mask >> j & 1)
    return float(best_w), subset


def oracle_a_indices(inst: Instance) -> tuple[list[int], list[int]]:
    """Definitional O(nm) computation of (a_l, a_r) per disk.

    a_r(k): leftmost point of P (plus sentinel n+1) at or right of the
    center and outside the disk; a_l(k): rightmost point strictly left of
    the center and outside the disk, with sentinel 0.
    """
    n = inst.n
    a_l = []
    a_r = []
    for d in inst.disks:
        ar = n + 1
        for i in range(1, n + 1):
            p = inst.points[i - 1]
            if p.x >= d.cx and not covers(d, p, inst.metric):
                ar = i
                break
        al = 0
        for i in range(n, 0, -1):
            p = inst.points[i - 1]
            if p.x < d.cx and not covers(d, p, inst.metric):
                al = i
                break
        a_l.append(al)
        a_r.append(ar)
    return a_l, a_r


def oracle_couples_generic(
    points_x: Sequence[float],
    n: int,
    objs: Sequence,
    outside: Callable[[int, int], bool],
    extent: Callable[[int], tuple[float | None, float | None]],
) -> CoupleSet:
    """Bounding couples straight from the definitions, by full scans.

    ``outside(i, k)`` is true when 1-based point i lies outside object k;
    ``extent(k)`` gives the x-projection of object k (None means unbounded
    on that side).
    """
    cs = CoupleSet()
    for k, obj in enumerate(objs):
        lx, rx = extent(k)
        pl = 0
        for i in range(1, n + 1):
            if lx is not None and points_x[i - 1] < lx:
                pl = i
        pr = n + 1
        for i in range(n, 0, -1):
            if rx is not None and points_x[i - 1] > rx:
                pr = i
        seq = [pl]
        for i in range(pl + 1, pr):
            if outside(i, k):
                seq.append(i)
        seq.append(pr)
        for a, b in zip(seq, seq[1:]):
            kind = (CoupleSet.LEFT if a == pl else 0) | (CoupleSet.RIGHT if b == pr else 0)
            cs.add(a, b, obj.w, obj.id, kind)
    return cs


def oracle_couples(inst: Instance) -> CoupleSet:
    """Bounding couples of a line-constrained Linf/L2 instance, by definition."""
    if inst.metric not in (Metric.LINF, Metric.L2):
        raise ValueError("bounding couples are defined for the Linf and L2 metrics")
    return oracle_couples_generic(
        inst.xs,
        inst.n,
        inst.disks,
        outside=lambda i, k: not covers(inst.disks[k], inst.points[i - 1], inst.metric),
        extent=lambda k: (inst.disks[k].lx, inst.disks[k].rx),
    )


def element_uniqueness_instance(values: Sequence[float]) -> tuple[list[float], list[WeightedSegment]]:
    """1D instance whose optimal weight equals the number of distinct values.

    Each value contributes one point and one zero-length unit-weight segment
    at the same coordinate.
    """
    if not values:
        raise ValueError("need at least one value")
    xs = sorted(float(v) for v in values)
    segments = [WeightedSegment(x, x, 1.0, origin=i) for i, x in enumerate(xs)]
    return xs, segments
