"""O(n) exact solver for collinear instances via independent purple-gap segments."""

from __future__ import annotations

import math
from typing import Sequence

from .graphops import solution_stats
from .model import Color, Instance, PreconditionError, Solution, make_edge_set

COLLINEAR_TOL = 1e-9


class NotCollinearError(PreconditionError):
    def __init__(self, residual: float):
        super().__init__(f"points are not collinear (relative residual {residual:.3g})")
        self.residual = residual


def collinearity_residual(instance: Instance) -> float:
    """Maximum perpendicular offset relative to the bounding-box scale."""
    pts = instance.points
    if len(pts) <= 2:
        return 0.0
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    scale = max(max(xs) - min(xs), max(ys) - min(ys))
    if scale == 0.0:
        return 0.0
    if max(xs) - min(xs) >= max(ys) - min(ys):
        a = min(pts, key=lambda p: p.x)
        b = max(pts, key=lambda p: p.x)
    else:
        a = min(pts, key=lambda p: p.y)
        b = max(pts, key=lambda p: p.y)
    dx, dy = b.x - a.x, b.y - a.y
    norm = math.hypot(dx, dy)
    worst = max(abs(dx * (p.y - a.y) - dy * (p.x - a.x)) for p in pts) / norm
    return worst / scale


def prepare_sorted(instance: Instance):
    """Project onto the dominant direction and sort; returns (ids, positions, colors)."""
    pts = instance.points
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    if max(xs) - min(xs) >= max(ys) - min(ys):
        a = min(pts, key=lambda p: p.x)
        b = max(pts, key=lambda p: p.x)
    else:
        a = min(pts, key=lambda p: p.y)
        b = max(pts, key=lambda p: p.y)
    dx, dy = b.x - a.x, b.y - a.y
    norm = math.hypot(dx, dy)
    if norm == 0.0:
        dx, dy, norm = 1.0, 0.0, 1.0
    ux, uy = dx / norm, dy / norm
    order = sorted(range(len(pts)), key=lambda i: (pts[i].x - a.x) * ux + (pts[i].y - a.y) * uy)
    ts = [(pts[i].x - a.x) * ux + (pts[i].y - a.y) * uy for i in order]
    colors = [int(pts[i].color) for i in order]
    return order, ts, colors


def _chain_pairs(ids: Sequence[int], positions: Sequence[int], ts, pairs,
                 drop_largest: bool) -> float:
    """Append consecutive-chain edges over the given sorted positions; return cost.

    With drop_largest the single largest gap edge is omitted (endpoints are
    assumed pre-connected elsewhere).
    """
    if len(positions) < 2:
        return 0.0
    skip = -1
    if drop_largest:
        best_gap = -1.0
        for a in range(len(positions) - 1):
            gap = ts[positions[a + 1]] - ts[positions[a]]
            if gap > best_gap:
                best_gap = gap
                skip = a
    cost = 0.0
    for a in range(len(positions) - 1):
        if a == skip:
            continue
        i, j = positions[a], positions[a + 1]
        u, v = ids[i], ids[j]
        pairs.append((u, v) if u < v else (v, u))
        cost += ts[j] - ts[i]
    return cost


def solve_sorted(ids: Sequence[int], ts: Sequence[float], colors: Sequence[int]):
    """Core linear pass over points sorted along the line; returns (weight, pairs)."""
    RED, BLUE, PURPLE = int(Color.RED), int(Color.BLUE), int(Color.PURPLE)
    n = len(ids)
    ppos = [i for i in range(n) if colors[i] == PURPLE]
    pairs: list[tuple[int, int]] = []
    weight = 0.0

    if not ppos:
        for color in (RED, BLUE):
            cpos = [i for i in range(n) if colors[i] == color]
            weight += _chain_pairs(ids, cpos, ts, pairs, drop_largest=False)
        return weight, pairs

    # End segments: chain each color to the nearest purple endpoint.
    left = [i for i in range(ppos[0]) ]
    for color in (RED, BLUE):
        cpos = [i for i in left if colors[i] == color]
        if cpos:
            weight += _chain_pairs(ids, cpos + [ppos[0]], ts, pairs, drop_largest=False)
    right = [i for i in range(ppos[-1] + 1, n)]
    for color in (RED, BLUE):
        cpos = [i for i in right if colors[i] == color]
        if cpos:
            weight += _chain_pairs(ids, [ppos[-1]] + cpos, ts, pairs, drop_largest=False)

    # Interior segments between consecutive purple points.
    for pi, pj in zip(ppos, ppos[1:]):
        cost, seg_pairs = segment_best(ids, ts, colors, pi, pj)
        weight += cost
        pairs.extend(seg_pairs)
    return weight, pairs


def segment_best(ids, ts, colors, pi: int, pj: int):
    """Cheaper of the two cases for one interior segment [p_i, p_j].

    Case A (no purple edge, both colors present): both chains in full, cost 2g.
    Case B (purple edge): 3g minus the largest red and blue gaps.
    """
    RED, BLUE = int(Color.RED), int(Color.BLUE)
    g = ts[pj] - ts[pi]
    reds = [i for i in range(pi + 1, pj) if colors[i] == RED]
    blues = [i for i in range(pi + 1, pj) if colors[i] == BLUE]

    cost_a = math.inf
    pairs_a: list[tuple[int, int]] = []
    if reds and blues:
        cost_a = 0.0
        cost_a += _chain_pairs(ids, [pi] + reds + [pj], ts, pairs_a, drop_largest=False)
        cost_a += _chain_pairs(ids, [pi] + blues + [pj], ts, pairs_a, drop_largest=False)

    pairs_b: list[tuple[int, int]] = []
    u, v = ids[pi], ids[pj]
    pairs_b.append((u, v) if u < v else (v, u))
    cost_b = g
    if reds:
        cost_b += _chain_pairs(ids, [pi] + reds + [pj], ts, pairs_b, drop_largest=True)
    if blues:
        cost_b += _chain_pairs(ids, [pi] + blues + [pj], ts, pairs_b, drop_largest=True)

    if cost_b <= cost_a:
        return cost_b, pairs_b
    return cost_a, pairs_a


def solve_line(instance: Instance, tolerance: float = COLLINEAR_TOL) -> Solution:
    """Minimum RBP spanning graph for collinear points."""
    residual = collinearity_residual(instance)
    if residual > tolerance:
        raise NotCollinearError(residual)
    order, ts, colors = prepare_sorted(instance)
    _, pairs = solve_sorted(order, ts, colors)
    edge_set = make_edge_set(instance, pairs)
    return solution_stats(instance, edge_set, solver="line")
