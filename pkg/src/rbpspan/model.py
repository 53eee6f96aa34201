"""Colored point-set model: points, instances, edges, and geometric predicates."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

REL_TOL = 1e-9          # default relative tolerance for weight comparisons
DIST_TIE_TOL = 1e-12    # tolerance for the equal-distance (general position) check
CROSS_TOL = 1e-12       # relative threshold below which orientation falls back to exact


class PreconditionError(ValueError):
    """A solver or operation was called outside its stated precondition."""


class InstanceFormatError(PreconditionError):
    """Malformed or inconsistent instance text."""


class Color(enum.IntEnum):
    """Point color; ordering RED < BLUE < PURPLE is part of the tie-break order."""

    RED = 0
    BLUE = 1
    PURPLE = 2


_COLOR_CODES = {"R": Color.RED, "B": Color.BLUE, "P": Color.PURPLE}
_CODE_OF = {Color.RED: "R", Color.BLUE: "B", Color.PURPLE: "P"}


@dataclass(frozen=True, slots=True)
class Point:
    id: int
    color: Color
    x: float
    y: float


def edge_color(cu: Color, cv: Color) -> Optional[Color]:
    """Color class of an edge between point colors; None for the invalid red-blue case."""
    if cu == Color.PURPLE:
        return cv
    if cv == Color.PURPLE:
        return cu
    if cu == cv:
        return cu
    return None


@dataclass(frozen=True, slots=True)
class Edge:
    """Canonical point-id pair (u < v) with Euclidean length and color class."""

    u: int
    v: int
    length: float
    color_class: Optional[Color]

    @property
    def sort_key(self) -> tuple:
        return (self.length, self.u, self.v)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


class Instance:
    """Immutable colored point set with derived R/B/P id subsets."""

    __slots__ = ("points", "R", "B", "P")

    def __init__(self, points: Iterable[Point]):
        pts = tuple(points)
        if not pts:
            raise InstanceFormatError("instance has no points")
        for i, p in enumerate(pts):
            if p.id != i:
                raise InstanceFormatError(f"point id {p.id} at position {i}: ids must be dense")
            if not (math.isfinite(p.x) and math.isfinite(p.y)):
                raise InstanceFormatError(f"point {i} has non-finite coordinates")
        seen: dict[tuple[float, float], int] = {}
        for p in pts:
            key = (p.x, p.y)
            if key in seen:
                raise InstanceFormatError(
                    f"points {seen[key]} and {p.id} coincide at ({p.x}, {p.y})"
                )
            seen[key] = p.id
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "R", tuple(p.id for p in pts if p.color == Color.RED))
        object.__setattr__(self, "B", tuple(p.id for p in pts if p.color == Color.BLUE))
        object.__setattr__(self, "P", tuple(p.id for p in pts if p.color == Color.PURPLE))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Instance is immutable")

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def k(self) -> int:
        return len(self.P)

    def color_of(self, i: int) -> Color:
        return self.points[i].color

    def coords(self, i: int) -> tuple[float, float]:
        p = self.points[i]
        return (p.x, p.y)

    def distance(self, u: int, v: int) -> float:
        a, b = self.points[u], self.points[v]
        return math.hypot(a.x - b.x, a.y - b.y)

    def red_side(self) -> tuple[int, ...]:
        """Ids of R ∪ P, sorted."""
        return tuple(sorted(self.R + self.P))

    def blue_side(self) -> tuple[int, ...]:
        return tuple(sorted(self.B + self.P))

    def general_position_violations(self, tol: float = DIST_TIE_TOL) -> list[tuple]:
        """Pairs of distinct point pairs at (near-)equal distance.

        Violations are reported, not fatal; solvers fall back to deterministic
        lexicographic tie-breaking.
        """
        dists = []
        n = self.n
        for u in range(n):
            for v in range(u + 1, n):
                dists.append((self.distance(u, v), u, v))
        dists.sort()
        out = []
        for (d1, u1, v1), (d2, u2, v2) in zip(dists, dists[1:]):
            if d2 - d1 <= tol * max(1.0, d2):
                out.append(((u1, v1), (u2, v2), d1, d2))
        return out


def edge_between(instance: Instance, u: int, v: int) -> Edge:
    """Edge between two point ids, canonically ordered, with length and color class."""
    if u == v:
        raise PreconditionError(f"edge endpoints must differ (got {u})")
    if u > v:
        u, v = v, u
    return Edge(u, v, instance.distance(u, v),
                edge_color(instance.color_of(u), instance.color_of(v)))


def allowed_edges(instance: Instance) -> list[Edge]:
    """All non-invalid edges, sorted by (length, u, v)."""
    edges = []
    pts = instance.points
    n = instance.n
    for u in range(n):
        cu = pts[u].color
        for v in range(u + 1, n):
            cls = edge_color(cu, pts[v].color)
            if cls is not None:
                edges.append(Edge(u, v, instance.distance(u, v), cls))
    edges.sort(key=lambda e: e.sort_key)
    return edges


def allowed_edge_count(n_red: int, n_blue: int, n_purple: int) -> int:
    """Closed-form count of allowed edges."""
    return (math.comb(n_red + n_purple, 2)
            + math.comb(n_blue + n_purple, 2)
            - math.comb(n_purple, 2))


@dataclass(frozen=True)
class EdgeSet:
    """A candidate or final solution graph: sorted edges plus total weight."""

    instance: Instance
    edges: tuple[Edge, ...]
    weight: float

    def pairs(self) -> list[tuple[int, int]]:
        return [e.pair for e in self.edges]


def make_edge_set(instance: Instance, pairs: Iterable[tuple[int, int]]) -> EdgeSet:
    canon = set()
    for u, v in pairs:
        if u > v:
            u, v = v, u
        if (u, v) in canon:
            raise PreconditionError(f"duplicate edge ({u}, {v})")
        canon.add((u, v))
    edges = sorted((edge_between(instance, u, v) for u, v in canon),
                   key=lambda e: e.sort_key)
    return EdgeSet(instance, tuple(edges), math.fsum(e.length for e in edges))


@dataclass(frozen=True)
class Solution:
    """An edge set together with its statistics and solver provenance."""

    edge_set: EdgeSet
    weight: float
    red_edges: int
    blue_edges: int
    purple_edges: int
    max_degree: int
    purple_crossings: int
    solver: str
    purple_crossings_per_edge: dict = None

    @property
    def instance(self) -> Instance:
        return self.edge_set.instance

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.edge_set.edges


# ---------------------------------------------------------------------------
# Robust segment predicates


def _orient_sign(a, b, c) -> int:
    """Sign of the (a, b, c) orientation determinant, exact near zero.

    Floats are exact rationals, so the Fraction fallback is fully exact.
    """
    t1 = (b[0] - a[0]) * (c[1] - a[1])
    t2 = (b[1] - a[1]) * (c[0] - a[0])
    det = t1 - t2
    mag = abs(t1) + abs(t2)
    if abs(det) > CROSS_TOL * mag:
        return 1 if det > 0 else -1
    det_exact = ((Fraction(b[0]) - Fraction(a[0])) * (Fraction(c[1]) - Fraction(a[1]))
                 - (Fraction(b[1]) - Fraction(a[1])) * (Fraction(c[0]) - Fraction(a[0])))
    if det_exact > 0:
        return 1
    if det_exact < 0:
        return -1
    return 0


def segments_properly_cross(a, b, c, d) -> bool:
    """True iff open segments ab and cd intersect in exactly one interior point.

    Endpoint touches and collinear overlaps do not count. The segments must not
    share an endpoint.
    """
    if a == c or a == d or b == c or b == d:
        raise PreconditionError("segments share an endpoint")
    o1 = _orient_sign(a, b, c)
    o2 = _orient_sign(a, b, d)
    o3 = _orient_sign(c, d, a)
    o4 = _orient_sign(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def edges_properly_cross(instance: Instance, e1: Edge, e2: Edge) -> bool:
    if {e1.u, e1.v} & {e2.u, e2.v}:
        raise PreconditionError("edges share an endpoint")
    return segments_properly_cross(instance.coords(e1.u), instance.coords(e1.v),
                                   instance.coords(e2.u), instance.coords(e2.v))


# ---------------------------------------------------------------------------
# Instance text format


def parse_instance(text: str) -> Instance:
    """Parse the instance text format: one "<R|B|P> <x> <y>" per line, '#' comments."""
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] not in _COLOR_CODES:
            raise InstanceFormatError(f"line {lineno}: expected '<R|B|P> <x> <y>', got {raw!r}")
        try:
            x, y = float(parts[1]), float(parts[2])
        except ValueError:
            raise InstanceFormatError(f"line {lineno}: bad coordinate in {raw!r}") from None
        points.append(Point(len(points), _COLOR_CODES[parts[0]], x, y))
    return Instance(points)


def serialize_instance(instance: Instance, landmarks: Optional[dict] = None) -> str:
    """Emit the instance text format; parse(serialize(i)) reproduces i bit-identically."""
    lines = ["%s %.17g %.17g" % (_CODE_OF[p.color], p.x, p.y) for p in instance.points]
    if landmarks:
        for name in sorted(landmarks):
            lines.append(f"# landmark {name} {landmarks[name]}")
    return "\n".join(lines) + "\n"
