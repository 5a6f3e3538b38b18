"""SVG debug rendering: segments, boundary graph, candidates, boundaries.

Colors follow the graph convention used throughout: detected edges red,
generated edges blue; prior/buffer green, tracked boundary yellow-orange,
ground truth black.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import Polygon, SegmentKind

LAYERS = ("segments", "buffer", "graph", "candidates", "boundary", "ground_truth")


@dataclass
class RenderSpec:
    layers: tuple[str, ...] = ("segments", "boundary")
    frame_start: int = 0
    frame_stop: int | None = None

    def __post_init__(self):
        if not self.layers:
            raise ValueError("at least one render layer must be enabled")
        unknown = set(self.layers) - set(LAYERS)
        if unknown:
            raise ValueError(f"unknown layers: {sorted(unknown)}")

    def wants(self, frame_id: int) -> bool:
        if frame_id < self.frame_start:
            return False
        return self.frame_stop is None or frame_id < self.frame_stop


def _line(x1, y1, x2, y2, stroke, width=1.0, dash=None):
    d = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
        f'stroke="{stroke}" stroke-width="{width}"{d}/>'
    )


def _poly(poly: Polygon, stroke, width=1.5, dash=None):
    pts = " ".join(f"{v.x:.2f},{v.y:.2f}" for v in poly.vertices)
    d = f' stroke-dasharray="{dash}"' if dash else ""
    return f'<polygon points="{pts}" fill="none" stroke="{stroke}" stroke-width="{width}"{d}/>'


def render_frame_svg(
    width: int,
    height: int,
    spec: RenderSpec,
    segments=None,
    prior: Polygon | None = None,
    graph=None,
    candidates=None,
    boundary: Polygon | None = None,
    ground_truth: Polygon | None = None,
) -> str:
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if "segments" in spec.layers and segments:
        for s in segments:
            parts.append(_line(s.a.x, s.a.y, s.b.x, s.b.y, "gray"))
    if "buffer" in spec.layers and prior is not None:
        parts.append(_poly(prior, "green", dash="4 3"))
    if "graph" in spec.layers and graph is not None:
        for e in graph.edges:
            u, v = graph.vertices[e.u], graph.vertices[e.v]
            color = "red" if e.kind is SegmentKind.DETECTED else "blue"
            parts.append(_line(u.x, u.y, v.x, v.y, color))
    if "candidates" in spec.layers and candidates:
        for c in candidates:
            parts.append(_poly(c.polygon, "purple", width=0.5))
    if "boundary" in spec.layers and boundary is not None:
        parts.append(_poly(boundary, "orange", width=2.0))
    if "ground_truth" in spec.layers and ground_truth is not None:
        parts.append(_poly(ground_truth, "black", dash="2 2"))
    parts.append("</svg>")
    return "\n".join(parts)
