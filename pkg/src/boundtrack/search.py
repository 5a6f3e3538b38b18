"""Cycle candidate generation by bidirectional shortest-path search and
optimal boundary selection.

For each sampled detected (seed) edge, Dijkstra runs from both of its
endpoints with the seed itself excluded; closing each pair of paths at the
anchor vertex of another detected edge yields a cycle candidate. The winner
is the minimum gap/area cost among candidates passing the area-similarity
gate against the prior boundary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .backend import dijkstra_csr, trim_vertices
from .errors import (
    InvalidPolygon,
    NoCandidates,
    NoSimilarCandidate,
    TooFewDetectedEdges,
    ZeroArea,
)
from .geometry import Polygon, polygon_area
from .graph import BoundaryGraph


@dataclass
class ShortestPathTree:
    source: int
    excluded_edge: int
    dist: np.ndarray
    parent_edge: np.ndarray
    parent_vertex: np.ndarray

    def path_to(self, v: int) -> list[int]:
        """Vertex ids from the source to v (empty if unreachable)."""
        if not math.isfinite(self.dist[v]):
            return []
        path = [v]
        pv = self.parent_vertex
        while path[-1] != self.source:
            path.append(int(pv[path[-1]]))
        path.reverse()
        return path


@dataclass
class CycleCandidate:
    edge_ids: tuple[int, ...]
    vertex_ids: tuple[int, ...]
    polygon: Polygon
    gap_length: float
    area: float
    cost: float
    seed_edge: int
    anchor_vertex: int


def dijkstra(g: BoundaryGraph, source: int, excluded_edge: int = -1) -> ShortestPathTree:
    """Exact shortest distances from source, treating one edge as untraversable."""
    indptr, nbr, eid, w = g.csr()
    dist, pe, pv = dijkstra_csr(indptr, nbr, eid, w, source, excluded_edge)
    return ShortestPathTree(source, excluded_edge, dist, pe, pv)


def grouping_cost(gap_length: float, polygon: Polygon) -> float:
    """Gap length over enclosed area; lower is more salient."""
    area = polygon_area(polygon)
    if area <= 0.0:
        raise ZeroArea("cycle encloses no area")
    return gap_length / area


def area_similarity(a: Polygon, b: Polygon) -> float:
    """min(area(a)/area(b), area(b)/area(a)), in (0, 1]."""
    aa, ab = polygon_area(a), polygon_area(b)
    if aa <= 0.0 or ab <= 0.0:
        raise ZeroArea("similarity undefined for zero-area polygon")
    return min(aa / ab, ab / aa)


def _shoelace_ids(coords: list, ids: list[int]) -> float:
    acc = 0.0
    n = len(ids)
    x0, y0 = coords[ids[-1]]
    for k in range(n):
        x1, y1 = coords[ids[k]]
        acc += x0 * y1 - x1 * y0
        x0, y0 = x1, y1
    return abs(acc) / 2.0


def _walk_to_root(pv: np.ndarray, start: int) -> list[int]:
    path = [start]
    pv = pv.tolist()
    v = pv[start]
    while v != -1:
        path.append(v)
        v = pv[v]
    return path


def enumerate_candidates(g: BoundaryGraph) -> list[CycleCandidate]:
    """BDSP candidate generation.

    Seeds are the detected edges at even positions of detected_index, capped
    at floor(n/2) so the total never exceeds n(n-1)/2. Candidates whose two
    paths merge before the anchor are trimmed at the first common vertex;
    cycles with < 3 vertices or zero area are discarded, and duplicates
    (same edge set) are deduplicated.
    """
    det = g.detected_index
    n = len(det)
    if n < 2:
        raise TooFewDetectedEdges(f"need >= 2 detected edges, got {n}")
    seeds = det[0::2][: n // 2]
    coords = g.coords.tolist()
    verts = g.vertices
    n_vertices = len(verts)

    out: list[CycleCandidate] = []
    seen_edge_sets: set[frozenset] = set()
    for seed in seeds:
        e = g.edges[seed]
        s1, s2 = e.u, e.v
        t1 = dijkstra(g, s1, seed)
        t2 = dijkstra(g, s2, seed)
        d1, d2 = t1.dist, t2.dist
        anchor_info = []
        for aedge in det:
            if aedge == seed:
                continue
            ae = g.edges[aedge]
            anchor = min(ae.u, ae.v)
            if math.isfinite(d1[anchor]) and math.isfinite(d2[anchor]):
                anchor_info.append(anchor)
        if not anchor_info:
            continue
        trims = trim_vertices(
            t1.parent_vertex,
            t2.parent_vertex,
            np.asarray(anchor_info, dtype=np.int64),
            n_vertices,
        )
        seen_trim: set[int] = set()
        for anchor, c in zip(anchor_info, trims.tolist()):
            if c in seen_trim:
                continue  # same trees, same trim vertex: identical cycle
            seen_trim.add(c)
            # cycle = tree-1 path s1..c, then tree-2 path c..s2 (c excluded),
            # closed implicitly by the seed edge s2-s1
            walk1 = _walk_to_root(t1.parent_vertex, c)  # c..s1
            walk2 = _walk_to_root(t2.parent_vertex, c)  # c..s2
            cycle = walk1[::-1] + walk2[1:]
            if len(cycle) < 3:
                continue
            area = _shoelace_ids(coords, cycle)
            if area <= 0.0:
                continue
            pe1, pe2 = t1.parent_edge, t2.parent_edge
            edge_ids = (
                [int(pe1[v]) for v in walk1[:-1]][::-1]
                + [int(pe2[v]) for v in walk2[:-1]]
                + [seed]
            )
            key = frozenset(edge_ids)
            if key in seen_edge_sets:
                continue
            seen_edge_sets.add(key)
            try:
                poly = Polygon(tuple(verts[v] for v in cycle))
            except InvalidPolygon:
                continue
            gap = float(d1[c] + d2[c])
            out.append(
                CycleCandidate(
                    edge_ids=tuple(edge_ids),
                    vertex_ids=tuple(cycle),
                    polygon=poly,
                    gap_length=gap,
                    area=area,
                    cost=gap / area,
                    seed_edge=seed,
                    anchor_vertex=anchor,
                )
            )
    return out


def select_optimal(g: BoundaryGraph, prior: Polygon, s_e: float = 0.9) -> CycleCandidate:
    """Minimum-cost candidate whose area similarity to the prior exceeds s_e.

    Raises NoCandidates when enumeration is empty and NoSimilarCandidate
    (carrying the best-cost candidate for diagnostics) when nothing passes
    the gate. Ties break on (cost, seed edge, anchor) so results are
    deterministic.
    """
    if not 0.0 <= s_e < 1.0:
        raise ValueError(f"s_e must be in [0, 1), got {s_e}")
    candidates = enumerate_candidates(g)
    if not candidates:
        raise NoCandidates("BDSP produced no cycle candidates")
    prior_area = polygon_area(prior)
    order = lambda c: (c.cost, c.seed_edge, c.anchor_vertex)
    passing = [
        c
        for c in candidates
        if min(prior_area / c.area, c.area / prior_area) > s_e
    ]
    if not passing:
        raise NoSimilarCandidate(best=min(candidates, key=order))
    return min(passing, key=order)
