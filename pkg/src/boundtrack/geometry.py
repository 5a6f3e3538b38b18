"""Planar primitives: points, line segments, polygons and their exact measures.

Everything here is pure and immutable; all coordinates are double-precision
pixels (origin top-left, y down).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidPolygon

#: Two points closer than this are considered the same vertex.
MERGE_TOLERANCE = 1e-6


class SegmentKind(Enum):
    DETECTED = "detected"
    GENERATED = "generated"


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinate: ({self.x}, {self.y})")

    def dist(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class LineSegment:
    a: Point2
    b: Point2
    kind: SegmentKind = SegmentKind.DETECTED

    def midpoint(self) -> Point2:
        return Point2((self.a.x + self.b.x) / 2.0, (self.a.y + self.b.y) / 2.0)


@dataclass(frozen=True)
class Polygon:
    """Closed polygon; the edge from the last vertex back to the first is implicit."""

    vertices: tuple[Point2, ...] = field()

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 3:
            raise InvalidPolygon(f"polygon needs >= 3 vertices, got {len(verts)}")
        for p, q in zip(verts, verts[1:] + verts[:1]):
            if p.dist(q) <= MERGE_TOLERANCE:
                raise InvalidPolygon("consecutive polygon vertices coincide")

    def edges(self):
        verts = self.vertices
        for i in range(len(verts)):
            yield verts[i], verts[(i + 1) % len(verts)]


def segment_length(s: LineSegment) -> float:
    return s.a.dist(s.b)


def polygon_area(p: Polygon) -> float:
    """Absolute shoelace area. Self-intersecting polygons use |signed area| too."""
    return abs(signed_area([(v.x, v.y) for v in p.vertices]))


def signed_area(coords) -> float:
    acc = 0.0
    n = len(coords)
    for i in range(n):
        x0, y0 = coords[i]
        x1, y1 = coords[(i + 1) % n]
        acc += x0 * y1 - x1 * y0
    return acc / 2.0


def polygon_perimeter(p: Polygon) -> float:
    return sum(a.dist(b) for a, b in p.edges())


def point_segment_distance(q: Point2, a: Point2, b: Point2) -> float:
    """Distance from q to the closed segment ab (clamped projection)."""
    dx, dy = b.x - a.x, b.y - a.y
    den = dx * dx + dy * dy
    if den == 0.0:
        return q.dist(a)
    t = ((q.x - a.x) * dx + (q.y - a.y) * dy) / den
    t = min(1.0, max(0.0, t))
    return math.hypot(q.x - (a.x + t * dx), q.y - (a.y + t * dy))


def point_to_polygon_distance(q: Point2, p: Polygon) -> float:
    """Minimum distance from q to the polygon outline (not the filled region)."""
    return min(point_segment_distance(q, a, b) for a, b in p.edges())
