"""Command line: solve, generate, cross-check and benchmark coverage instances.

Instance files are JSON with a "metric" tag, a "points" list and exactly one
of "disks" / "segments" / "halfplanes" (plus "separator_y" for the separable
metric). Unknown fields are rejected and numbers must be finite, so a file
round-trips bit-for-bit through parse/serialize.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from typing import Sequence

from . import geom
from .axis import a_indices_l1, a_indices_unit, solve_l1, solve_unit
from .couples import baseline_couples, solve_general
from .geom import (
    InfeasibleInstance,
    Instance,
    InstanceError,
    Metric,
    Solution,
    count_intersecting_pairs,
    normalize,
)
from .halfplane import HalfPlane, solve_halfplane_general, solve_line_separable, solve_lower_only
from .oned import WeightedSegment, solve_1d
from .oracle import (
    MAX_ORACLE_SETS,
    brute_force_cover,
    coverage_matrix,
    instance_matrix,
    oracle_a_indices,
    oracle_couples,
    oracle_couples_generic,
)
from .sweep_l2 import CircleArc, left_right_couples_l2, middle_couples_l2
from .sweep_linf import left_right_couples_linf, middle_couples_linf

METRICS = ("1d", "unit", "l1", "l2", "linf", "separable", "halfplane")


class GenerationFailure(Exception):
    pass


# --------------------------------------------------------------------------
# instance files


def _require_finite(value, what: str) -> float:
    try:
        out = float(value)
    except (TypeError, ValueError):
        raise InstanceError(f"{what} is not a number: {value!r}") from None
    if not math.isfinite(out):
        raise InstanceError(f"{what} must be finite, got {value!r}")
    return out


def _check_record(rec, fields: tuple[str, ...], what: str) -> dict:
    if not isinstance(rec, dict):
        raise InstanceError(f"{what} must be an object with fields {fields}")
    extra = set(rec) - set(fields)
    if extra:
        raise InstanceError(f"unknown fields {sorted(extra)} in {what}")
    missing = set(fields) - set(rec)
    if missing:
        raise InstanceError(f"missing fields {sorted(missing)} in {what}")
    return {f: _require_finite(rec[f], f"{what}.{f}") for f in fields}


def parse_instance(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InstanceError("top level must be an object")
    metric = data.get("metric")
    if metric not in METRICS:
        raise InstanceError(f"metric must be one of {METRICS}, got {metric!r}")

    allowed = {"metric", "points"}
    if metric == "1d":
        allowed.add("segments")
    elif metric == "halfplane":
        allowed.add("halfplanes")
    elif metric == "separable":
        allowed.update(("disks", "separator_y"))
    else:
        allowed.add("disks")
    extra = set(data) - allowed
    if extra:
        raise InstanceError(f"unknown top-level fields {sorted(extra)} for metric {metric}")

    points = data.get("points")
    if not isinstance(points, list):
        raise InstanceError('"points" must be a list of [x, y] pairs')
    out_points = []
    for idx, p in enumerate(points):
        if not isinstance(p, list) or len(p) != 2:
            raise InstanceError(f"point {idx} must be an [x, y] pair")
        out_points.append([_require_finite(p[0], f"point {idx} x"), _require_finite(p[1], f"point {idx} y")])

    out: dict = {"metric": metric, "points": out_points}
    if metric == "1d":
        segs = data.get("segments")
        if not isinstance(segs, list) or not segs:
            raise InstanceError('"segments" must be a non-empty list')
        out["segments"] = [_check_record(s, ("l", "r", "w"), f"segment {i}") for i, s in enumerate(segs)]
        for i, s in enumerate(out["segments"]):
            if s["l"] > s["r"]:
                raise InstanceError(f"segment {i} endpoints out of order")
        if any(p[1] != 0.0 for p in out_points):
            raise InstanceError("1d instances require every point on the axis (y = 0)")
    elif metric == "halfplane":
        hs = data.get("halfplanes")
        if not isinstance(hs, list) or not hs:
            raise InstanceError('"halfplanes" must be a non-empty list')
        out["halfplanes"] = [_check_record(h, ("a", "b", "c", "w"), f"halfplane {i}") for i, h in enumerate(hs)]
        for i, h in enumerate(out["halfplanes"]):
            if h["a"] == 0.0 and h["b"] == 0.0:
                raise InstanceError(f"halfplane {i} has a zero normal")
    else:
        disks = data.get("disks")
        if not isinstance(disks, list) or not disks:
            raise InstanceError('"disks" must be a non-empty list')
        out["disks"] = [_check_record(d, ("cx", "r", "w"), f"disk {i}") for i, d in enumerate(disks)]
        if metric == "separable":
            if "separator_y" not in data:
                raise InstanceError('separable instances require "separator_y"')
            out["separator_y"] = _require_finite(data["separator_y"], "separator_y")
            if out["separator_y"] <= 0.0:
                raise InstanceError("separator_y must be positive (centers sit on the axis)")
    return out


def serialize_instance(data: dict) -> str:
    ordered: dict = {"metric": data["metric"], "points": data["points"]}
    for key in ("segments", "disks", "halfplanes", "separator_y"):
        if key in data:
            ordered[key] = data[key]
    return json.dumps(ordered)


def build_instance(data: dict) -> Instance:
    metric = Metric.from_tag(data["metric"])
    return normalize(
        [(p[0], p[1]) for p in data["points"]],
        [(d["cx"], d["r"], d["w"]) for d in data["disks"]],
        metric,
    )


# --------------------------------------------------------------------------
# solving


def _oracle_solve(data: dict) -> Solution:
    metric = data["metric"]
    pts = data["points"]
    if metric == "1d":
        objs = [(s["l"], s["r"], s["w"]) for s in data["segments"]]
        mat = coverage_matrix(
            len(pts), len(objs), lambda i, k: objs[k][0] <= pts[i][0] <= objs[k][1]
        )
        weights = [o[2] for o in objs]
    elif metric == "halfplane":
        hs = [HalfPlane(h["a"], h["b"], h["c"], h["w"], i) for i, h in enumerate(data["halfplanes"])]
        mat = coverage_matrix(len(pts), len(hs), lambda i, k: hs[k].covers(pts[i][0], pts[i][1]))
        weights = [h.w for h in hs]
    elif metric == "separable":
        sep = data["separator_y"]
        ds = data["disks"]
        mat = coverage_matrix(
            len(pts),
            len(ds),
            lambda i, k: (pts[i][0] - ds[k]["cx"]) ** 2 + pts[i][1] ** 2 <= ds[k]["r"] ** 2,
        )
        weights = [d["w"] for d in ds]
        del sep
    else:
        inst = build_instance(data)
        mat = instance_matrix(inst)
        weights = [d["w"] for d in data["disks"]]
    w, subset = brute_force_cover(mat, weights)
    return Solution(weight=w, chosen=subset)


def solve_parsed(data: dict, algorithm: str = "sweep") -> Solution:
    if algorithm == "oracle":
        return _oracle_solve(data)
    metric = data["metric"]
    if metric == "1d":
        pts = sorted(p[0] for p in data["points"])
        segs = [WeightedSegment(s["l"], s["r"], s["w"]) for s in data["segments"]]
        return solve_1d(pts, segs)
    if metric == "separable":
        return solve_line_separable(
            [(p[0], p[1]) for p in data["points"]],
            [(d["cx"], 0.0, d["r"], d["w"]) for d in data["disks"]],
            separator_y=data["separator_y"],
            builder=algorithm,
        )
    if metric == "halfplane":
        hs = [HalfPlane(h["a"], h["b"], h["c"], h["w"], i) for i, h in enumerate(data["halfplanes"])]
        return solve_halfplane_general([(p[0], p[1]) for p in data["points"]], hs, builder=algorithm)
    inst = build_instance(data)
    if metric == "unit":
        return solve_unit(inst)
    if metric == "l1":
        return solve_l1(inst)
    return solve_general(inst, builder=algorithm)


def _stats_for(data: dict, sol: Solution, elapsed_ms: float) -> dict:
    stats = dict(sol.stats or {})
    metric = data["metric"]
    kappa = 0
    if metric in ("unit", "l1", "l2", "linf"):
        inst = build_instance(data)
        kappa = count_intersecting_pairs(inst.disks, inst.metric)
    elif metric == "separable":
        arcs = [
            CircleArc(i, d["cx"], d["r"], d["w"], cy=-data["separator_y"])
            for i, d in enumerate(data["disks"])
        ]
        kappa = count_intersecting_pairs(arcs, Metric.L2, above_line_only=True)
    return {
        "couples": stats.get("couples", 0),
        "kappa": kappa,
        "order_violations": stats.get("order_violations", 0),
        "events": stats.get("events", 0),
        "elapsed_ms": elapsed_ms,
    }


def cmd_solve(args) -> int:
    text = sys.stdin.read() if args.path == "-" else open(args.path).read()
    try:
        data = parse_instance(text)
    except InstanceError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    t0 = time.perf_counter()
    try:
        sol = solve_parsed(data, algorithm=args.algorithm)
    except InfeasibleInstance as exc:
        out = {"weight": 0.0, "chosen": [], "feasible": False,
               "stats": {"couples": 0, "kappa": 0, "order_violations": 0, "events": 0,
                         "elapsed_ms": (time.perf_counter() - t0) * 1e3}}
        print(json.dumps(out))
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    except InstanceError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    elapsed = (time.perf_counter() - t0) * 1e3
    out = {
        "weight": sol.weight,
        "chosen": list(sol.chosen),
        "feasible": True,
        "stats": _stats_for(data, sol, elapsed),
    }
    print(json.dumps(out))
    return 0


# --------------------------------------------------------------------------
# generation


def _distinct(values: Sequence[float], margin: float) -> bool:
    vs = sorted(values)
    return all(b - a >= margin for a, b in zip(vs, vs[1:]))


def _metric_dist(metric: str, cx: float, r: float, px: float, py: float) -> float:
    dx = px - cx
    if metric in ("l2", "unit"):
        return math.hypot(dx, py)
    if metric == "l1":
        return abs(dx) + abs(py)
    if metric == "linf":
        return max(abs(dx), abs(py))
    return abs(dx)


def _sample_inside(rng: random.Random, metric: str, cx: float, r: float) -> tuple[float, float]:
    shrink = rng.uniform(0.1, 0.9) * r
    if metric in ("l2", "unit"):
        ang = rng.uniform(0.05, math.pi - 0.05)
        return cx + shrink * math.cos(ang), shrink * math.sin(ang)
    if metric == "l1":
        y = rng.uniform(0.0, shrink)
        dx = (shrink - y) * rng.choice((-1.0, 1.0)) * rng.uniform(0.1, 1.0)
        return cx + dx, y
    if metric == "linf":
        return cx + rng.uniform(-shrink, shrink), rng.uniform(0.0, shrink)
    return cx + rng.uniform(-shrink, shrink), 0.0


def _gen_disk_metric(rng: random.Random, metric: str, n: int, m: int, spread: float,
                     fast: bool) -> dict | None:
    margin = 1e-6 * spread
    rmax = max(spread / max(2.0, math.sqrt(m)), 4.0 * margin)
    if metric == "unit":
        r0 = rng.uniform(0.4, 1.0) * rmax
        radii = [r0] * m
    else:
        radii = [rng.uniform(0.3, 1.0) * rmax for _ in range(m)]
    centers = [rng.uniform(0.0, spread) for _ in range(m)]
    disks = [{"cx": centers[k], "r": radii[k], "w": round(rng.uniform(0.1, 10.0), 6)} for k in range(m)]

    points = []
    for _ in range(n):
        k = rng.randrange(m)
        x, y = _sample_inside(rng, metric, disks[k]["cx"], disks[k]["r"])
        points.append([x, y])
    if fast:
        return {"metric": metric, "points": points, "disks": disks}

    coords = [d["cx"] for d in disks] + [d["cx"] - d["r"] for d in disks] + [d["cx"] + d["r"] for d in disks]
    if not _distinct(coords, margin):
        return None
    for _ in range(200):
        bad = -1
        for i, (x, y) in enumerate(points):
            if not any(
                _metric_dist(metric, d["cx"], d["r"], x, y) <= d["r"] - margin for d in disks
            ):
                bad = i
                break
            if any(abs(_metric_dist(metric, d["cx"], d["r"], x, y) - d["r"]) < margin for d in disks):
                bad = i
                break
            if any(abs(x - c) < margin for c in coords):
                bad = i
                break
        if bad < 0:
            break
        k = rng.randrange(m)
        points[bad] = list(_sample_inside(rng, metric, disks[k]["cx"], disks[k]["r"]))
    else:
        return None
    if not _distinct([p[0] for p in points], margin):
        return None
    if not _distinct([p[1] for p in points], margin):
        return None
    return {"metric": metric, "points": points, "disks": disks}


def _gen_1d(rng: random.Random, n: int, m: int, spread: float) -> dict | None:
    margin = 1e-6 * spread
    segs = []
    for _ in range(m):
        l = rng.uniform(0.0, spread)
        segs.append({"l": l, "r": l + rng.uniform(0.05, 0.35) * spread,
                     "w": round(rng.uniform(0.1, 10.0), 6)})
    ends = [s["l"] for s in segs] + [s["r"] for s in segs]
    if not _distinct(ends, margin):
        return None
    points = []
    for _ in range(n):
        s = segs[rng.randrange(m)]
        points.append([rng.uniform(s["l"] + margin * 2, s["r"] - margin * 2), 0.0])
    xs = [p[0] for p in points]
    if not _distinct(xs, margin):
        return None
    if any(abs(x - e) < margin for x in xs for e in ends):
        return None
    return {"metric": "1d", "points": points, "segments": segs}


def _gen_separable(rng: random.Random, n: int, m: int, spread: float) -> dict | None:
    margin = 1e-6 * spread
    sep = 0.25 * spread
    r = rng.uniform(0.45, 0.85) * spread
    if r <= sep + 10 * margin:
        return None
    half = math.sqrt(r * r - sep * sep)
    centers = [rng.uniform(0.0, spread) for _ in range(m)]
    disks = [{"cx": c, "r": r, "w": round(rng.uniform(0.1, 10.0), 6)} for c in centers]
    points = []
    for _ in range(n):
        cx = centers[rng.randrange(m)]
        dx = rng.uniform(-0.9, 0.9) * half
        ytop = math.sqrt(r * r - dx * dx)
        y = rng.uniform(sep + 0.05 * (ytop - sep), ytop - 0.05 * (ytop - sep))
        points.append([cx + dx, y])
    if not _distinct(centers, margin):
        return None
    if not _distinct([p[0] for p in points], margin):
        return None
    if not _distinct([p[1] for p in points], margin):
        return None
    for x, y in points:
        if y <= sep + margin:
            return None
        dists = [math.hypot(x - c, y) for c in centers]
        if not any(d <= r - margin for d in dists):
            return None
        if any(abs(d - r) < margin for d in dists):
            return None
    return {"metric": "separable", "points": points, "disks": disks, "separator_y": sep}


def _gen_halfplane(rng: random.Random, n: int, m: int, spread: float,
                   lower_only: bool = False) -> dict | None:
    margin = 1e-6 * spread
    points = [[rng.uniform(-spread, spread), rng.uniform(-spread, spread)] for _ in range(n)]
    halfplanes = []
    for _ in range(m):
        if lower_only:
            ang = rng.uniform(0.15 * math.pi, 0.85 * math.pi)  # keep b > 0
        else:
            ang = rng.uniform(0.0, 2.0 * math.pi)
        a, b = math.cos(ang), math.sin(ang)
        tx, ty = points[rng.randrange(n)]
        c = a * tx + b * ty + rng.uniform(0.05, 0.5) * spread
        halfplanes.append({"a": a, "b": b, "c": c, "w": round(rng.uniform(0.1, 10.0), 6)})
    if lower_only and any(h["b"] <= 0 for h in halfplanes):
        return None
    for _ in range(200):
        bad = -1
        for i, (x, y) in enumerate(points):
            slacks = [h["c"] - h["a"] * x - h["b"] * y for h in halfplanes]
            if not any(s >= margin for s in slacks):
                bad = i
                break
            if any(abs(s) < margin for s in slacks):
                bad = i
                break
        if bad < 0:
            break
        h = halfplanes[rng.randrange(m)]
        x, y = points[bad]
        s = h["c"] - h["a"] * x - h["b"] * y
        push = rng.uniform(0.05, 0.5) * spread - s
        points[bad] = [x - push * h["a"], y - push * h["b"]]
    else:
        return None
    if not _distinct([p[0] for p in points], margin):
        return None
    return {"metric": "halfplane", "points": points, "halfplanes": halfplanes}


def gen_instance(metric: str, n: int, m: int, seed: int, spread: float = 10.0,
                 fast: bool = False) -> dict:
    """Deterministic feasible instance with general-position margins."""
    if n < 1 or m < 1:
        raise GenerationFailure("need n >= 1 and m >= 1")
    for attempt in range(64):
        rng = random.Random(f"{metric}:{n}:{m}:{seed}:{spread}:{attempt}")
        if metric == "1d":
            data = _gen_1d(rng, n, m, spread)
        elif metric == "separable":
            data = _gen_separable(rng, n, m, spread)
        elif metric == "halfplane":
            data = _gen_halfplane(rng, n, m, spread)
        elif metric in ("unit", "l1", "l2", "linf"):
            data = _gen_disk_metric(rng, metric, n, m, spread, fast)
        else:
            raise GenerationFailure(f"unknown metric {metric}")
        if data is not None:
            return data
    raise GenerationFailure(f"could not generate a margin-clean {metric} instance (seed {seed})")


def cmd_gen(args) -> int:
    try:
        data = gen_instance(args.metric, args.n, args.m, args.seed, spread=args.spread)
    except GenerationFailure as exc:
        print(f"generation failed: {exc}", file=sys.stderr)
        return 1
    print(serialize_instance(data))
    return 0


# --------------------------------------------------------------------------
# check


def check_parsed(data: dict) -> tuple[bool, dict]:
    """Cross-validate every applicable algorithm on one instance."""
    metric = data["metric"]
    checks: list[dict] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        checks.append({"name": name, "ok": bool(ok), "detail": detail})

    def weights_match(name: str, a: Solution, b: Solution) -> None:
        add(name, a.weight == b.weight, f"{a.weight} vs {b.weight}")

    m = len(data.get("disks", data.get("segments", data.get("halfplanes", []))))
    oracle_ok = m <= MAX_ORACLE_SETS

    if metric == "1d":
        sol = solve_parsed(data)
        if oracle_ok:
            weights_match("solve_1d vs oracle", sol, _oracle_solve(data))
    elif metric in ("unit", "l1"):
        inst = build_instance(data)
        table = a_indices_unit(inst) if metric == "unit" else a_indices_l1(inst)
        ol, orr = oracle_a_indices(inst)
        add("a-index tables vs definitional scan", table.a_l == ol and table.a_r == orr)
        sol = solve_unit(inst) if metric == "unit" else solve_l1(inst)
        if oracle_ok:
            weights_match(f"solve_{metric} vs oracle", sol, _oracle_solve(data))
    elif metric in ("l2", "linf"):
        inst = build_instance(data)
        stats: dict = {}
        if metric == "linf":
            swept = left_right_couples_linf(inst)
            swept.update(middle_couples_linf(inst, stats=stats))
        else:
            swept = left_right_couples_l2(inst)
            swept.update(middle_couples_l2(inst, stats=stats))
        base = baseline_couples(inst)
        oc = oracle_couples(inst)
        add("sweep couples vs baseline", swept.full_set() == base.full_set())
        add("baseline couples vs oracle", base.full_set() == oc.full_set())
        kappa = count_intersecting_pairs(inst.disks, inst.metric)
        bound = 2 * (inst.n + inst.m) + (kappa if metric == "l2" else 0)
        add("couple-count bound", len(swept) <= bound, f"{len(swept)} <= {bound}")
        add(
            "order violations within kappa",
            stats.get("order_violations", 0) <= kappa,
            f"{stats.get('order_violations', 0)} <= {kappa}",
        )
        s_sweep = solve_general(inst, builder="sweep")
        s_base = solve_general(inst, builder="baseline")
        weights_match("sweep weight vs baseline weight", s_sweep, s_base)
        if oracle_ok:
            weights_match("sweep weight vs oracle", s_sweep, _oracle_solve(data))
    elif metric == "separable":
        sol = solve_parsed(data, algorithm="sweep")
        s_base = solve_parsed(data, algorithm="baseline")
        weights_match("sweep weight vs baseline weight", sol, s_base)
        if oracle_ok:
            weights_match("sweep weight vs oracle", sol, _oracle_solve(data))
    elif metric == "halfplane":
        sol = solve_parsed(data)
        if oracle_ok:
            weights_match("general solver vs oracle", sol, _oracle_solve(data))

    ok = all(c["ok"] for c in checks)
    return ok, {"metric": metric, "ok": ok, "checks": checks}


def cmd_check(args) -> int:
    text = sys.stdin.read() if args.path == "-" else open(args.path).read()
    try:
        data = parse_instance(text)
    except InstanceError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    try:
        ok, report = check_parsed(data)
    except InfeasibleInstance as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    if ok and args.expect:
        expected = json.loads(open(args.expect).read())
        sol = solve_parsed(data)
        if expected.get("weight") != sol.weight or list(expected.get("chosen", [])) != list(sol.chosen):
            ok = False
            report["checks"].append(
                {
                    "name": "matches expected solution",
                    "ok": False,
                    "detail": f"expected {expected.get('weight')}/{expected.get('chosen')}, "
                    f"got {sol.weight}/{list(sol.chosen)}",
                }
            )
            report["ok"] = False
    for c in report["checks"]:
        print(f"[{'ok' if c['ok'] else 'FAIL'}] {c['name']}" + (f": {c['detail']}" if c["detail"] else ""))
    if not ok:
        print(json.dumps(report), file=sys.stderr)
        return 3
    return 0


# --------------------------------------------------------------------------
# bench


def _bench_instance(metric: str, total: int, seed: int, profile: str) -> dict:
    n = m = max(1, total // 2)
    if profile == "dense":
        spread = float(max(8, int(math.sqrt(total))))
    else:
        spread = float(total)
    return gen_instance(metric, n, m, seed, spread=spread, fast=True)


def bench_rows(metric: str, sizes: Sequence[int], seed: int, profile: str = "sparse",
               algos: Sequence[str] = ("sweep", "baseline")) -> list[dict]:
    rows = []
    for total in sizes:
        data = _bench_instance(metric, total, seed, profile)
        inst = build_instance(data)
        kappa = count_intersecting_pairs(inst.disks, inst.metric)
        for algo in algos:
            stats: dict = {}
            t0 = time.perf_counter()
            if algo == "sweep":
                if metric == "linf":
                    cs = left_right_couples_linf(inst)
                    cs.update(middle_couples_linf(inst, stats=stats))
                else:
                    cs = left_right_couples_l2(inst)
                    cs.update(middle_couples_l2(inst, stats=stats))
            else:
                cs = baseline_couples(inst)
            elapsed = (time.perf_counter() - t0) * 1e3
            rows.append(
                {
                    "metric": metric,
                    "profile": profile,
                    "total": total,
                    "n": inst.n,
                    "m": inst.m,
                    "algo": algo,
                    "elapsed_ms": elapsed,
                    "events": stats.get("events", 0),
                    "couples": len(cs),
                    "kappa": kappa,
                }
            )
    return rows


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    algos = (args.algorithm,) if args.algorithm != "both" else ("sweep", "baseline")
    rows = bench_rows(args.metric, sizes, args.seed, profile=args.profile, algos=algos)
    for row in rows:
        print(json.dumps(row))
    return 0


# --------------------------------------------------------------------------


def main(argv: Sequence[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="covline", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file ('-' for stdin)")
    p.add_argument("path")
    p.add_argument("--algorithm", choices=("sweep", "baseline", "oracle"), default="sweep")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("gen", help="generate a seeded feasible instance")
    p.add_argument("--metric", choices=METRICS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--spread", type=float, default=10.0)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("check", help="cross-validate all algorithms on an instance")
    p.add_argument("path")
    p.add_argument("--expect", help="solution file that the sweep result must match")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("bench", help="time sweep vs baseline over a size series")
    p.add_argument("--metric", choices=("l2", "linf"), default="l2")
    p.add_argument("--sizes", default=",".join(str(2 ** k) for k in range(10, 16)))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--profile", choices=("sparse", "dense"), default="sparse")
    p.add_argument("--algorithm", choices=("sweep", "baseline", "both"), default="both")
    p.set_defaults(fn=cmd_bench)

    args = ap.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
