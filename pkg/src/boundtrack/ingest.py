"""Frame loading and distance-based segment filtering.

A sequence file is JSON-lines, one frame per line:

    {"frame_id": 0, "width": 640, "height": 480,
     "segments": [[x1, y1, x2, y2], ...]}

Segments arrive pre-detected; degenerate segments (coincident endpoints
under the merge tolerance) are dropped at ingestion.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ParseError
from .geometry import (
    MERGE_TOLERANCE,
    LineSegment,
    Point2,
    Polygon,
    SegmentKind,
    point_to_polygon_distance,
)

DEFAULT_BUFFER_THRESHOLD = 20.0


@dataclass
class FrameRecord:
    frame_id: int
    segments: list[LineSegment]
    width: int
    height: int


def _clamp(v: float, lo: float, hi: float) -> float:
    return min(hi, max(lo, v))


def parse_frame(obj: dict, path=None, line=None) -> FrameRecord:
    try:
        frame_id = int(obj["frame_id"])
        width = int(obj["width"])
        height = int(obj["height"])
        raw = obj["segments"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad frame object: {exc}", path, line) from exc
    if frame_id < 0:
        raise ParseError(f"negative frame_id {frame_id}", path, line)
    segments = []
    for k, coords in enumerate(raw):
        try:
            x1, y1, x2, y2 = (float(c) for c in coords)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad segment #{k}: {coords!r}", path, line) from exc
        a = Point2(_clamp(x1, 0.0, width), _clamp(y1, 0.0, height))
        b = Point2(_clamp(x2, 0.0, width), _clamp(y2, 0.0, height))
        if a.dist(b) <= MERGE_TOLERANCE:
            continue  # degenerate after clamping
        segments.append(LineSegment(a, b, SegmentKind.DETECTED))
    return FrameRecord(frame_id, segments, width, height)


def load_sequence(path) -> list[FrameRecord]:
    """Load a JSON-lines sequence file, sorted by ascending frame_id."""
    frames = []
    seen = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            raw = raw.strip()
            if not raw:
                continue
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", path, lineno) from exc
            rec = parse_frame(obj, path, lineno)
            if rec.frame_id in seen:
                raise ParseError(f"duplicate frame_id {rec.frame_id}", path, lineno)
            seen.add(rec.frame_id)
            frames.append(rec)
    frames.sort(key=lambda r: r.frame_id)
    return frames


def save_sequence(frames: list[FrameRecord], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in frames:
            obj = {
                "frame_id": rec.frame_id,
                "width": rec.width,
                "height": rec.height,
                "segments": [[s.a.x, s.a.y, s.b.x, s.b.y] for s in rec.segments],
            }
            fh.write(json.dumps(obj) + "\n")


def filter_by_buffer(
    segments: list[LineSegment],
    prior: Polygon,
    threshold: float = DEFAULT_BUFFER_THRESHOLD,
) -> list[LineSegment]:
    """Keep segments whose mean endpoint/midpoint distance to the prior outline
    is strictly below the threshold. Order is preserved; segments are kept or
    dropped whole."""
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    kept = []
    for s in segments:
        d = (
            point_to_polygon_distance(s.a, prior)
            + point_to_polygon_distance(s.midpoint(), prior)
            + point_to_polygon_distance(s.b, prior)
        ) / 3.0
        if d < threshold:
            kept.append(s)
    return kept
