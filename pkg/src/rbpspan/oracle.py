"""Two independent brute-force optima for cross-validating every solver.

oracle_forest enumerates the ways the purple points can be grouped by shared
purple edges (any optimum decomposes into a purple forest plus a red-class tree
and a blue-class tree); oracle_subsets searches edge subsets directly.
"""

from __future__ import annotations

import math
from typing import Iterator, Optional, Sequence

from .graphops import (
    BLUE_SIDE,
    RED_SIDE,
    DisjointSets,
    constrained_mst,
    kruskal_mst,
    mst_weight_with_premerge,
    solution_stats,
    sorted_side_pairs,
)
from .model import (
    Color,
    Instance,
    PreconditionError,
    Solution,
    allowed_edges,
    make_edge_set,
)

FOREST_MAX_PURPLE = 8
SUBSET_MAX_EDGES = 22


class OracleSizeError(PreconditionError):
    """Instance exceeds the oracle's tractability bound."""


def _set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first = items[0]
    for part in _set_partitions(items[1:]):
        for i in range(len(part)):
            part[i].append(first)
            yield part
            part[i].pop()
        yield part + [[first]]


def oracle_forest(instance: Instance, max_purple: int = FOREST_MAX_PURPLE) -> Solution:
    """Exact optimum by minimizing over purple component structures.

    For each grouping of the purple points the purple cost is the per-group MST
    and the red/blue costs are Kruskal runs with the groups pre-merged.
    """
    if instance.k > max_purple:
        raise OracleSizeError(
            f"oracle_forest handles at most {max_purple} purple points, got {instance.k}")
    n = instance.n
    red_vertices = instance.red_side()
    blue_vertices = instance.blue_side()
    red_pairs = sorted_side_pairs(instance, (Color.RED,), red_vertices)
    blue_pairs = sorted_side_pairs(instance, (Color.BLUE,), blue_vertices)

    block_cache: dict[frozenset, float] = {}

    def block_weight(block: Sequence[int]) -> float:
        key = frozenset(block)
        w = block_cache.get(key)
        if w is None:
            w = kruskal_mst(instance, sorted(block), (Color.PURPLE,)).weight
            block_cache[key] = w
        return w

    best = math.inf
    best_partition: Optional[list[list[int]]] = None
    for partition in _set_partitions(list(instance.P)):
        total = 0.0
        for block in partition:
            if len(block) > 1:
                total += block_weight(block)
        if total >= best:
            continue
        wr = mst_weight_with_premerge(red_pairs, n, red_vertices, partition)
        if wr is None:
            continue
        total += wr
        if total >= best:
            continue
        wb = mst_weight_with_premerge(blue_pairs, n, blue_vertices, partition)
        if wb is None:
            continue
        total += wb
        if total < best:
            best = total
            best_partition = [list(b) for b in partition]

    assert best_partition is not None
    pairs: list[tuple[int, int]] = []
    forced: list[tuple[int, int]] = []
    for block in best_partition:
        if len(block) > 1:
            tree = kruskal_mst(instance, sorted(block), (Color.PURPLE,))
            pairs.extend(tree.pairs())
            forced.extend(tree.pairs())
    if len(red_vertices) >= 2:
        pairs.extend(constrained_mst(instance, red_vertices, forced, (Color.RED,)).pairs())
    if len(blue_vertices) >= 2:
        pairs.extend(constrained_mst(instance, blue_vertices, forced, (Color.BLUE,)).pairs())
    edge_set = make_edge_set(instance, pairs)
    if not math.isclose(edge_set.weight, best, rel_tol=1e-9, abs_tol=1e-9):
        raise AssertionError("oracle_forest reconstruction disagrees with the minimum")
    return solution_stats(instance, edge_set, solver="oracle-forest")


def oracle_subsets(instance: Instance, max_edges: int = SUBSET_MAX_EDGES) -> Solution:
    """Exhaustive minimum over edge subsets, pruned without changing the minimum.

    Prunes supersets of spanning sets (extra edges only add weight), partial
    sets at or above the incumbent, and branches whose remaining edges cannot
    complete connectivity.
    """
    edges = allowed_edges(instance)
    m = len(edges)
    if m > max_edges:
        raise OracleSizeError(
            f"oracle_subsets handles at most {max_edges} allowed edges, got {m}")
    n = instance.n
    red_vertices = instance.red_side()
    blue_vertices = instance.blue_side()

    def spanning(red_ds: DisjointSets, blue_ds: DisjointSets) -> bool:
        return (red_ds.connected_over(red_vertices)
                and blue_ds.connected_over(blue_vertices))

    best_weight = math.inf
    best_choice: Optional[list[int]] = None

    def completable(idx: int, red_ds: DisjointSets, blue_ds: DisjointSets) -> bool:
        rd = DisjointSets(n)
        rd.parent = list(red_ds.parent)
        rd.rank = list(red_ds.rank)
        bd = DisjointSets(n)
        bd.parent = list(blue_ds.parent)
        bd.rank = list(blue_ds.rank)
        for e in edges[idx:]:
            if e.color_class in RED_SIDE:
                rd.union(e.u, e.v)
            if e.color_class in BLUE_SIDE:
                bd.union(e.u, e.v)
        return spanning(rd, bd)

    def dfs(idx: int, red_ds: DisjointSets, blue_ds: DisjointSets,
            weight: float, chosen: list[int]):
        nonlocal best_weight, best_choice
        if spanning(red_ds, blue_ds):
            if weight < best_weight:
                best_weight = weight
                best_choice = list(chosen)
            return
        if idx == m or weight >= best_weight:
            return
        if not completable(idx, red_ds, blue_ds):
            return
        e = edges[idx]
        rd = DisjointSets(n)
        rd.parent = list(red_ds.parent)
        rd.rank = list(red_ds.rank)
        bd = DisjointSets(n)
        bd.parent = list(blue_ds.parent)
        bd.rank = list(blue_ds.rank)
        if e.color_class in RED_SIDE:
            rd.union(e.u, e.v)
        if e.color_class in BLUE_SIDE:
            bd.union(e.u, e.v)
        chosen.append(idx)
        dfs(idx + 1, rd, bd, weight + e.length, chosen)
        chosen.pop()
        dfs(idx + 1, red_ds, blue_ds, weight, chosen)

    dfs(0, DisjointSets(n), DisjointSets(n), 0.0, [])
    assert best_choice is not None
    edge_set = make_edge_set(instance, [edges[i].pair for i in best_choice])
    return solution_stats(instance, edge_set, solver="oracle-subsets")
