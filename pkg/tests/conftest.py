import math

import numpy as np
import pytest

from boundtrack.errors import BoundtrackError
from boundtrack.geometry import LineSegment, Point2, Polygon
from boundtrack.graph import build_graph


@pytest.fixture
def rect_segments():
    # bottom and top sides of a 10x8 rectangle
    return [
        LineSegment(Point2(0, 0), Point2(10, 0)),
        LineSegment(Point2(0, 8), Point2(10, 8)),
    ]


@pytest.fixture
def rect_graph(rect_segments):
    return build_graph(rect_segments)


@pytest.fixture
def rect_prior():
    return Polygon((Point2(0, 0), Point2(10, 0), Point2(10, 8), Point2(0, 8)))


@pytest.fixture
def square100():
    return Polygon((Point2(0, 0), Point2(100, 0), Point2(100, 100), Point2(0, 100)))


def random_graph(rng, max_vertices=10, max_segments=6):
    """Small random boundary graph for oracle comparisons, or None when the
    draw is degenerate (collinear, too few distinct endpoints)."""
    n_pts = rng.integers(3, max_vertices + 1)
    pts = rng.uniform(0, 100, size=(n_pts, 2))
    n_segs = rng.integers(2, max_segments + 1)
    segs = []
    for _ in range(n_segs):
        i, j = rng.choice(n_pts, size=2, replace=False)
        segs.append(LineSegment(Point2(*pts[i]), Point2(*pts[j])))
    try:
        return build_graph(segs)
    except BoundtrackError:
        return None


def ring_segments(n_segs, radius=200.0, center=(320.0, 320.0), gap=0.2, rng=None):
    """Detected segments tiling a circle with gaps; a realistic-scale scene."""
    cx, cy = center
    segs = []
    for i in range(n_segs):
        a0 = 2 * math.pi * i / n_segs
        a1 = 2 * math.pi * (i + 1 - gap) / n_segs
        p = Point2(cx + radius * math.cos(a0), cy + radius * math.sin(a0))
        q = Point2(cx + radius * math.cos(a1), cy + radius * math.sin(a1))
        if rng is not None:
            p = Point2(p.x + rng.normal(0, 0.5), p.y + rng.normal(0, 0.5))
        segs.append(LineSegment(p, q))
    return segs


def regular_polygon(n, radius, center=(0.0, 0.0)):
    cx, cy = center
    return Polygon(
        tuple(
            Point2(
                cx + radius * math.cos(2 * math.pi * k / n),
                cy + radius * math.sin(2 * math.pi * k / n),
            )
            for k in range(n)
        )
    )
