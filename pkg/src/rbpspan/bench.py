"""Timing harnesses for the scaling checks of the three specialized solvers."""

from __future__ import annotations

import math
import random
import time
from typing import Sequence

from .circle import fill_tables, solve_circle
from .exact import solve_exact
from .generators import gen_random
from .line import solve_sorted
from .model import Color, Instance, Point


def _median(samples: Sequence[float]) -> float:
    s = sorted(samples)
    mid = len(s) // 2
    if len(s) % 2:
        return s[mid]
    return 0.5 * (s[mid - 1] + s[mid])


def _line_arrays(n: int, seed: int):
    """Pre-sorted positions and colors on a line; sorting is excluded from timing."""
    rng = random.Random(seed)
    ts = sorted(rng.random() for _ in range(n))
    colors = [rng.randrange(3) for _ in range(n)]
    ids = list(range(n))
    return ids, ts, colors


def bench_line(sizes: Sequence[int] = (100_000, 1_000_000), reps: int = 5,
               seed: int = 0) -> dict:
    """Median seconds of the core linear pass per input size."""
    results = {}
    for n in sizes:
        ids, ts, colors = _line_arrays(n, seed)
        samples = []
        solve_sorted(ids, ts, colors)  # warmup, excluded from timing
        for _ in range(reps):
            t0 = time.perf_counter()
            solve_sorted(ids, ts, colors)
            samples.append(time.perf_counter() - t0)
        results[n] = _median(samples)
    return results


def _circle_instance(k: int, extra: int, seed: int) -> Instance:
    """k purple and `extra` red/blue points on the unit circle."""
    rng = random.Random(seed)
    thetas = set()
    while len(thetas) < k + extra:
        thetas.add(rng.random() * 2.0 * math.pi)
    ordered = sorted(thetas)
    rng.shuffle(ordered)
    points = []
    for i, a in enumerate(ordered):
        if i < k:
            color = Color.PURPLE
        else:
            color = Color.RED if rng.random() < 0.5 else Color.BLUE
        points.append(Point(i, color, math.cos(a), math.sin(a)))
    return Instance(points)


def bench_circle(ks: Sequence[int] = (100, 200), extra: int = 200, reps: int = 5,
                 seed: int = 0, tables_only: bool = True) -> dict:
    """Median seconds per purple count; the table fill dominates and scales as k^3."""
    results = {}
    for k in ks:
        instance = _circle_instance(k, extra, seed)
        samples = []
        if tables_only:
            order = sorted(range(instance.n),
                           key=lambda i: math.atan2(instance.points[i].y,
                                                    instance.points[i].x))
            ppos = [idx for idx, i in enumerate(order)
                    if instance.color_of(i) == Color.PURPLE]
            purple_ids = [order[idx] for idx in ppos]
            arcs = []
            for a in range(k):
                lo, hi = ppos[a], ppos[(a + 1) % k]
                arcs.append(order[lo + 1:hi] if a + 1 < k
                            else order[lo + 1:] + order[:hi])
            fill_tables(instance, purple_ids, arcs)  # warmup, excluded from timing
            for _ in range(reps):
                t0 = time.perf_counter()
                fill_tables(instance, purple_ids, arcs)
                samples.append(time.perf_counter() - t0)
        else:
            for _ in range(reps):
                t0 = time.perf_counter()
                solve_circle(instance)
                samples.append(time.perf_counter() - t0)
        results[k] = _median(samples)
    return results


def bench_exact(ns: Sequence[int] = (8, 10, 12, 14), reps: int = 1, seed: int = 0) -> dict:
    """Median seconds of the exact solver on random planar instances."""
    results = {}
    for n in ns:
        instance = gen_random(n, 0.4, 0.4, "plane", seed=seed + n)
        samples = []
        for _ in range(reps):
            t0 = time.perf_counter()
            solve_exact(instance)
            samples.append(time.perf_counter() - t0)
        results[n] = _median(samples)
    return results


def scaling_ratio(results: dict, small, large) -> float:
    return results[large] / results[small]
