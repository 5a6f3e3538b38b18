"""boundtrack: salient closed boundary tracking over line segments.

Pipeline: filter detected segments near the prior boundary, gap-fill their
endpoints with Delaunay triangulation, search the resulting graph for the
minimum gap-length/area cycle under an area-similarity gate, and carry the
winner forward as the next frame's prior.
"""
from .backend import BACKEND
from .geometry import LineSegment, Point2, Polygon, SegmentKind
from .graph import BoundaryGraph, build_graph, delaunay
from .ingest import FrameRecord, filter_by_buffer, load_sequence
from .search import (
    CycleCandidate,
    area_similarity,
    dijkstra,
    enumerate_candidates,
    grouping_cost,
    select_optimal,
)
from .tracker import Fallback, Status, Tracker, TrackerConfig, TrackReport

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundaryGraph",
    "CycleCandidate",
    "Fallback",
    "FrameRecord",
    "LineSegment",
    "Point2",
    "Polygon",
    "SegmentKind",
    "Status",
    "TrackReport",
    "Tracker",
    "TrackerConfig",
    "area_similarity",
    "build_graph",
    "delaunay",
    "dijkstra",
    "enumerate_candidates",
    "filter_by_buffer",
    "grouping_cost",
    "load_sequence",
    "select_optimal",
]
