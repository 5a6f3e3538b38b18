"""Alignment-error metric and success-rate protocol.

The error between two boundaries is the max of the two directed terms,
where each directed term sums one boundary's rasterized pixels against the
other boundary's exact Euclidean distance transform and normalizes by the
geometric perimeter of the summed boundary.
"""
from __future__ import annotations

import json
import math

import numpy as np
from scipy.ndimage import distance_transform_edt

from .errors import EmptyMask, ParseError
from .geometry import Point2, Polygon, polygon_perimeter


def _bresenham(x0: int, y0: int, x1: int, y1: int):
    dx = abs(x1 - x0)
    dy = -abs(y1 - y0)
    sx = 1 if x0 < x1 else -1
    sy = 1 if y0 < y1 else -1
    err = dx + dy
    while True:
        yield x0, y0
        if x0 == x1 and y0 == y1:
            return
        e2 = 2 * err
        if e2 >= dy:
            err += dy
            x0 += sx
        if e2 <= dx:
            err += dx
            y0 += sy


def rasterize_boundary(p: Polygon, width: int, height: int) -> np.ndarray:
    """Binary (height, width) outline image via integer line traversal of each
    edge; interior is not filled. Vertices are clamped into the frame."""
    grid = np.zeros((height, width), dtype=bool)

    def clampi(v, hi):
        return min(hi - 1, max(0, int(round(v))))

    for a, b in p.edges():
        x0, y0 = clampi(a.x, width), clampi(a.y, height)
        x1, y1 = clampi(b.x, width), clampi(b.y, height)
        for x, y in _bresenham(x0, y0, x1, y1):
            grid[y, x] = True
    return grid


def distance_transform(mask: np.ndarray) -> np.ndarray:
    """Exact Euclidean distance from each pixel center to the nearest set pixel."""
    if not mask.any():
        raise EmptyMask("distance transform of an empty mask")
    return distance_transform_edt(~mask)


def alignment_error(b_tracked: Polygon, b_gt: Polygon, width: int, height: int) -> float:
    mask_t = rasterize_boundary(b_tracked, width, height)
    mask_g = rasterize_boundary(b_gt, width, height)
    dt_t = distance_transform(mask_t)
    dt_g = distance_transform(mask_g)
    term_t = float(dt_g[mask_t].sum()) / polygon_perimeter(b_tracked)
    term_g = float(dt_t[mask_g].sum()) / polygon_perimeter(b_gt)
    return max(term_t, term_g)


def success_rate(errors: list[float], e_p: float) -> float:
    """Fraction of frames with error strictly below e_p; lost frames should be
    passed as inf."""
    if e_p <= 0:
        raise ValueError("e_p must be positive")
    if not errors:
        raise ValueError("empty error list")
    return sum(1 for e in errors if e < e_p) / len(errors)


def success_curve(errors: list[float], thresholds: list[float]):
    thresholds = sorted(thresholds)
    return thresholds, [success_rate(errors, t) for t in thresholds]


def load_ground_truth(path) -> dict[int, Polygon]:
    """Ground-truth file: JSON-lines of {"frame_id": int, "polygon": [[x,y],...]}."""
    gt = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            raw = raw.strip()
            if not raw:
                continue
            try:
                obj = json.loads(raw)
                fid = int(obj["frame_id"])
                poly = Polygon(tuple(Point2(float(x), float(y)) for x, y in obj["polygon"]))
            except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
                raise ParseError(f"bad ground-truth record: {exc}", path, lineno) from exc
            gt[fid] = poly
    return gt


def save_ground_truth(gt: list[tuple[int, Polygon]], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for fid, poly in gt:
            fh.write(
                json.dumps({"frame_id": fid, "polygon": [[v.x, v.y] for v in poly.vertices]})
                + "\n"
            )


def sequence_errors(reports, gt: dict[int, Polygon], width: int, height: int) -> list[float]:
    """Per-frame alignment errors for tracker reports against ground truth;
    frames without a boundary (lost) score inf."""
    errors = []
    for r in reports:
        ref = gt.get(r.frame_id)
        if ref is None:
            continue
        if r.boundary is None:
            errors.append(math.inf)
        else:
            errors.append(alignment_error(r.boundary, ref, width, height))
    return errors
