"""Per-frame tracking pipeline: buffer filtering, graph build, BDSP search,
prior update, and timing capture."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    AllCollinear,
    InvalidConfig,
    InvalidPolygon,
    NoCandidates,
    NoSimilarCandidate,
    TooFewDetectedEdges,
    TooFewPoints,
    TooFewSegments,
    ZeroArea,
)
from .geometry import Polygon, polygon_area
from .graph import build_graph
from .ingest import DEFAULT_BUFFER_THRESHOLD, FrameRecord, filter_by_buffer
from .search import area_similarity, select_optimal


class Fallback(Enum):
    HOLD_PRIOR = "hold"
    REPORT_LOST = "lost"


class Status(Enum):
    TRACKED = "tracked"
    FALLBACK = "fallback"
    LOST = "lost"


@dataclass
class TrackerConfig:
    buffer_threshold: float = DEFAULT_BUFFER_THRESHOLD
    s_e: float = 0.9
    merge_tolerance: float = 1e-6
    fallback: Fallback = Fallback.HOLD_PRIOR

    def __post_init__(self):
        if self.buffer_threshold <= 0:
            raise InvalidConfig(f"buffer_threshold must be > 0, got {self.buffer_threshold}")
        if self.merge_tolerance <= 0:
            raise InvalidConfig(f"merge_tolerance must be > 0, got {self.merge_tolerance}")
        if not 0.0 <= self.s_e < 1.0:
            raise InvalidConfig(f"s_e must be in [0, 1), got {self.s_e}")


@dataclass
class TrackReport:
    frame_id: int
    status: Status
    boundary: Polygon | None
    cost: float
    similarity: float
    lt_ms: float
    gt_ms: float
    segments_in: int
    segments_kept: int
    vertices: int
    edges: int

    def to_json(self) -> str:
        obj = {
            "frame_id": self.frame_id,
            "status": self.status.value,
            "boundary": (
                [[v.x, v.y] for v in self.boundary.vertices] if self.boundary else None
            ),
            "cost": self.cost,
            "similarity": self.similarity,
            "lt_ms": self.lt_ms,
            "gt_ms": self.gt_ms,
            "counts": {
                "segments_in": self.segments_in,
                "segments_kept": self.segments_kept,
                "vertices": self.vertices,
                "edges": self.edges,
            },
        }
        return json.dumps(obj)


# failure modes handled by the fallback policy rather than raised
_FRAME_FAILURES = (
    TooFewSegments,
    TooFewDetectedEdges,
    TooFewPoints,
    AllCollinear,
    NoCandidates,
    NoSimilarCandidate,
    ZeroArea,
)


@dataclass
class Tracker:
    """Sequential tracker; one instance per sequence, stepped frame by frame."""

    prior: Polygon
    config: TrackerConfig = field(default_factory=TrackerConfig)
    history: list[TrackReport] = field(default_factory=list)

    def __post_init__(self):
        if polygon_area(self.prior) <= 0.0:
            raise InvalidPolygon("initial boundary has zero area")

    def step(self, frame: FrameRecord) -> TrackReport:
        t0 = time.perf_counter()
        kept = filter_by_buffer(frame.segments, self.prior, self.config.buffer_threshold)
        t1 = time.perf_counter()

        boundary = None
        cost = float("nan")
        similarity = float("nan")
        n_vertices = 0
        n_edges = 0
        status = Status.TRACKED
        try:
            g = build_graph(kept, self.config.merge_tolerance)
            n_vertices, n_edges = len(g.vertices), len(g.edges)
            winner = select_optimal(g, self.prior, self.config.s_e)
            boundary = winner.polygon
            cost = winner.cost
            similarity = area_similarity(self.prior, boundary)
        except _FRAME_FAILURES:
            status = (
                Status.FALLBACK
                if self.config.fallback is Fallback.HOLD_PRIOR
                else Status.LOST
            )
        t2 = time.perf_counter()

        if status is Status.TRACKED:
            self.prior = boundary
        report = TrackReport(
            frame_id=frame.frame_id,
            status=status,
            boundary=boundary if status is Status.TRACKED else (
                self.prior if status is Status.FALLBACK else None
            ),
            cost=cost,
            similarity=similarity,
            lt_ms=(t1 - t0) * 1e3,
            gt_ms=(t2 - t1) * 1e3,
            segments_in=len(frame.segments),
            segments_kept=len(kept),
            vertices=n_vertices,
            edges=n_edges,
        )
        self.history.append(report)
        return report

    def run(self, frames: list[FrameRecord]) -> list[TrackReport]:
        return [self.step(f) for f in frames]


def init(initial_boundary: Polygon, config: TrackerConfig | None = None) -> Tracker:
    return Tracker(initial_boundary, config or TrackerConfig())


def save_reports(reports: list[TrackReport], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in reports:
            fh.write(r.to_json() + "\n")
