"""Exact planar geometric primitives over integer coordinates.

Everything in this module runs on Python integers, so determinant signs are
computed without rounding for coordinates of any magnitude: arbitrary
precision takes the place of an input bound.  No routine here touches
floating point, and angular comparisons use (quadrant, cross product) rather
than arctangents.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, cmp_to_key
from math import gcd
from typing import Iterable, Iterator

from .errors import InvalidPointSet

Edge = tuple[int, int]

__all__ = [
    "Point",
    "PointSet",
    "cross",
    "orientation",
    "segments_cross",
    "convex_hull",
    "is_pointed_at",
]


@dataclass(frozen=True, order=True)
class Point:
    """Grid point; differences of points reuse the same type as direction vectors."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise TypeError(f"integer coordinates required, got ({self.x!r}, {self.y!r})")

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)


def cross(a: Point, b: Point) -> int:
    """z component of the cross product of a and b taken as vectors."""
    return a.x * b.y - a.y * b.x


def orientation(a: Point, b: Point, c: Point) -> int:
    """Turn direction of the triple: +1 counterclockwise, -1 clockwise, 0 collinear."""
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (d > 0) - (d < 0)


def _strictly_inside_segment(a: Point, b: Point, p: Point) -> bool:
    # assumes p collinear with a-b
    if p == a or p == b:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Whether segments p1-p2 and q1-q2 share a point besides a common endpoint.

    Proper crossings, collinear overlap of positive length, and an endpoint
    lying in the other segment's interior all count; segments that touch only
    at a shared endpoint do not.
    """
    o1 = orientation(p1, p2, q1)
    o2 = orientation(p1, p2, q2)
    o3 = orientation(q1, q2, p1)
    o4 = orientation(q1, q2, p2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _strictly_inside_segment(p1, p2, q1):
        return True
    if o2 == 0 and _strictly_inside_segment(p1, p2, q2):
        return True
    if o3 == 0 and _strictly_inside_segment(q1, q2, p1):
        return True
    if o4 == 0 and _strictly_inside_segment(q1, q2, p2):
        return True
    return False


@dataclass(frozen=True)
class PointSet:
    """Ordered point set in general position: pairwise distinct, no three collinear, n >= 3.

    Immutable and hashable; the hull is computed once and cached.
    """

    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple(p if isinstance(p, Point) else Point(p[0], p[1]) for p in self.points)
        object.__setattr__(self, "points", pts)
        n = len(pts)
        if n < 3:
            raise InvalidPointSet(f"need at least 3 points, got {n}")
        seen: dict[tuple[int, int], int] = {}
        for i, p in enumerate(pts):
            key = (p.x, p.y)
            if key in seen:
                raise InvalidPointSet(f"points {seen[key]} and {i} coincide at {key}")
            seen[key] = i
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        for i in range(n):
            xi, yi = xs[i], ys[i]
            for j in range(i + 1, n):
                dx = xs[j] - xi
                dy = ys[j] - yi
                for k in range(j + 1, n):
                    if dx * (ys[k] - yi) == dy * (xs[k] - xi):
                        raise InvalidPointSet(f"points {i}, {j}, {k} are collinear")

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    @cached_property
    def hull(self) -> tuple[int, ...]:
        """Convex hull indices, counterclockwise from the lexicographically smallest point."""
        return tuple(convex_hull(self))

    @cached_property
    def hull_edges(self) -> frozenset[Edge]:
        h = self.hull
        out = set()
        for i in range(len(h)):
            a, b = h[i], h[(i + 1) % len(h)]
            out.add((a, b) if a < b else (b, a))
        return frozenset(out)

    @property
    def convex_position(self) -> bool:
        return len(self.hull) == self.n


def convex_hull(ps: PointSet) -> list[int]:
    """Hull vertex indices, counterclockwise, starting at the lexicographically smallest point.

    Monotone chain; under general position every hull vertex is a strict corner.
    """
    order = sorted(range(ps.n), key=lambda i: ps[i])

    def build(seq: Iterable[int]) -> list[int]:
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and orientation(ps[out[-2]], ps[out[-1]], ps[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = build(order)
    upper = build(reversed(order))
    return lower[:-1] + upper[:-1]


def _quadrant(d: Point) -> int:
    if d.x > 0 and d.y >= 0:
        return 0
    if d.y > 0:
        return 1
    if d.x < 0:
        return 2
    return 3


def _direction_cmp(a: Point, b: Point) -> int:
    """Exact angular comparator for nonzero direction vectors (ccw from the +x axis)."""
    qa, qb = _quadrant(a), _quadrant(b)
    if qa != qb:
        return -1 if qa < qb else 1
    c = cross(a, b)
    return (c < 0) - (c > 0)


def is_pointed_at(v: Point, neighbors: Iterable[Point]) -> bool:
    """True iff the edges from v to the neighbors span strictly less than a halfturn.

    Circular-gap test: the primitive edge directions are sorted by
    (quadrant, cross product) and the vertex is pointed iff some consecutive
    gap exceeds pi.  A pair of exactly opposite directions caps the span at
    pi, which counts as not pointed.  Scaling a neighbor direction by a
    positive integer never changes the answer.
    """
    rays: set[Point] = set()
    count = 0
    for nb in neighbors:
        count += 1
        d = nb - v
        if d.x == 0 and d.y == 0:
            raise ValueError("neighbor coincides with the apex vertex")
        g = gcd(abs(d.x), abs(d.y))
        rays.add(Point(d.x // g, d.y // g))
    if count == 0:
        raise ValueError("need at least one neighbor")
    dirs = sorted(rays, key=cmp_to_key(_direction_cmp))
    if len(dirs) == 1:
        return True
    return any(cross(dirs[i - 1], dirs[i]) < 0 for i in range(len(dirs)))
