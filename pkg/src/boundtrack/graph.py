"""Gap filling: Delaunay triangulation of segment endpoints and assembly of
the undirected boundary graph.

Detected segments become weight-0 edges; triangulation edges that do not
coincide with a detected segment become generated edges weighted by their
length. Cocircular ties in the triangulation are broken deterministically
(lexicographically smallest diagonal) so repeated builds are identical.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import Delaunay as _SciDelaunay
from scipy.spatial import cKDTree
from scipy.spatial import QhullError

from .errors import AllCollinear, TooFewPoints, TooFewSegments
from .geometry import MERGE_TOLERANCE, LineSegment, Point2, SegmentKind

_COCIRCULAR_TOL = 1e-9


def _orient(ax, ay, bx, by, cx, cy) -> float:
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _incircle(ax, ay, bx, by, cx, cy, dx, dy) -> float:
    """Positive iff d lies inside the circumcircle of ccw triangle abc."""
    adx, ady = ax - dx, ay - dy
    bdx, bdy = bx - dx, by - dy
    cdx, cdy = cx - dx, cy - dy
    ad = adx * adx + ady * ady
    bd = bdx * bdx + bdy * bdy
    cd = cdx * cdx + cdy * cdy
    return (
        adx * (bdy * cd - bd * cdy)
        - ady * (bdx * cd - bd * cdx)
        + ad * (bdx * cdy - bdy * cdx)
    )


def _pair_key(pts, i, j):
    a = (pts[i][0], pts[i][1])
    b = (pts[j][0], pts[j][1])
    return (a, b) if a <= b else (b, a)


def _canonicalize_cocircular(pts: np.ndarray, triangles: list) -> list:
    """Flip diagonals of cocircular quads so the lexicographically smallest
    valid diagonal is kept. Each flip strictly reduces the diagonal's key,
    so the pass terminates."""
    span = max(1.0, float(np.ptp(pts))) if len(pts) else 1.0
    tol = _COCIRCULAR_TOL * span**4
    pt = [tuple(p) for p in pts]

    tris = set()
    edge_tris: dict[tuple[int, int], set] = {}

    def tri_edges(t):
        return ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))

    def add(t):
        tris.add(t)
        for e in tri_edges(t):
            edge_tris.setdefault(e, set()).add(t)

    def drop(t):
        tris.discard(t)
        for e in tri_edges(t):
            edge_tris[e].discard(t)

    for t in triangles:
        add(tuple(sorted(t)))

    queue = deque(edge_tris)
    queued = set(queue)
    while queue:
        edge = queue.popleft()
        queued.discard(edge)
        adj = edge_tris.get(edge)
        if adj is None or len(adj) != 2:
            continue
        a, b = edge
        t1, t2 = adj
        c = next(v for v in t1 if v not in (a, b))
        d = next(v for v in t2 if v not in (a, b))
        # flip is valid only if cd crosses ab strictly
        o1 = _orient(*pt[a], *pt[b], *pt[c]) * _orient(*pt[a], *pt[b], *pt[d])
        o2 = _orient(*pt[c], *pt[d], *pt[a]) * _orient(*pt[c], *pt[d], *pt[b])
        if o1 >= 0 or o2 >= 0:
            continue
        # ensure ccw orientation of (a, b, c) for the incircle sign
        ax, ay = pt[a]
        bx, by = pt[b]
        cx, cy = pt[c]
        if _orient(ax, ay, bx, by, cx, cy) < 0:
            ax, ay, bx, by = bx, by, ax, ay
        if abs(_incircle(ax, ay, bx, by, cx, cy, *pt[d])) > tol:
            continue
        if _pair_key(pt, c, d) < _pair_key(pt, a, b):
            drop(t1)
            drop(t2)
            add(tuple(sorted((a, c, d))))
            add(tuple(sorted((b, c, d))))
            # only the quad's boundary edges gained new neighbors
            for u, v in ((a, c), (a, d), (b, c), (b, d)):
                e2 = (u, v) if u < v else (v, u)
                if e2 not in queued:
                    queue.append(e2)
                    queued.add(e2)
    return sorted(tris)


def delaunay(points) -> list[tuple[int, int]]:
    """Delaunay edge set of a point set, as sorted (i, j) index pairs.

    Raises TooFewPoints for < 3 points and AllCollinear when no triangle
    exists.
    """
    pts = np.asarray(
        [(p.x, p.y) if isinstance(p, Point2) else (p[0], p[1]) for p in points],
        dtype=np.float64,
    )
    if len(pts) < 3:
        raise TooFewPoints(f"Delaunay needs >= 3 points, got {len(pts)}")
    try:
        tri = _SciDelaunay(pts)
    except QhullError as exc:
        raise AllCollinear("points are collinear (or otherwise degenerate)") from exc
    if tri.simplices.size == 0:
        raise AllCollinear("points are collinear")
    triangles = _canonicalize_cocircular(pts, tri.simplices.tolist())
    edges = set()
    for a, b, c in triangles:
        edges.add((a, b))
        edges.add((a, c))
        edges.add((b, c))
    return sorted(edges)


@dataclass
class Edge:
    u: int
    v: int
    kind: SegmentKind
    weight: float


@dataclass
class BoundaryGraph:
    vertices: list[Point2]
    edges: list[Edge]
    adjacency: list[list[int]]  # incident edge ids per vertex
    detected_index: list[int]
    _csr: tuple | None = field(default=None, repr=False)

    @property
    def coords(self) -> np.ndarray:
        return np.asarray([(p.x, p.y) for p in self.vertices], dtype=np.float64)

    def csr(self):
        """CSR adjacency (indptr, neighbor vertex, incident edge id, weight)
        for the search kernels; built once and cached."""
        if self._csr is None:
            n = len(self.vertices)
            deg = np.zeros(n + 1, dtype=np.int64)
            for e in self.edges:
                deg[e.u + 1] += 1
                deg[e.v + 1] += 1
            indptr = np.cumsum(deg).astype(np.int64)
            m = indptr[-1]
            nbr = np.empty(m, dtype=np.int64)
            eid = np.empty(m, dtype=np.int64)
            w = np.empty(m, dtype=np.float64)
            cursor = indptr[:-1].copy()
            for i, e in enumerate(self.edges):
                for a, b in ((e.u, e.v), (e.v, e.u)):
                    k = cursor[a]
                    nbr[k] = b
                    eid[k] = i
                    w[k] = e.weight
                    cursor[a] = k + 1
            self._csr = (indptr, nbr, eid, w)
        return self._csr


def _dedup_endpoints(detected, tolerance):
    """Map every endpoint to a representative vertex id, merging points
    within the tolerance (first occurrence wins)."""
    raw = []
    for s in detected:
        raw.append((s.a.x, s.a.y))
        raw.append((s.b.x, s.b.y))
    arr = np.asarray(raw, dtype=np.float64)
    tree = cKDTree(arr)
    owner = np.arange(len(arr))

    def find(i):
        while owner[i] != i:
            owner[i] = owner[owner[i]]
            i = owner[i]
        return i

    for i, j in tree.query_pairs(tolerance):
        ri, rj = find(i), find(j)
        if ri != rj:
            owner[max(ri, rj)] = min(ri, rj)

    vertex_of = {}
    vertices: list[Point2] = []
    point_ids = []
    for i in range(len(arr)):
        r = find(i)
        if r not in vertex_of:
            vertex_of[r] = len(vertices)
            vertices.append(Point2(arr[r][0], arr[r][1]))
        point_ids.append(vertex_of[r])
    return vertices, point_ids


def build_graph(
    detected: list[LineSegment], merge_tolerance: float = MERGE_TOLERANCE
) -> BoundaryGraph:
    """Assemble the boundary graph from detected segments.

    Vertices are deduplicated endpoints; detected segments become weight-0
    edges; Delaunay edges not coinciding with a detected vertex pair become
    generated edges weighted by length.
    """
    if len(detected) < 2:
        raise TooFewSegments(f"need >= 2 detected segments, got {len(detected)}")
    vertices, point_ids = _dedup_endpoints(detected, merge_tolerance)

    detected_pairs = []
    seen_pairs = set()
    for k in range(len(detected)):
        u, v = point_ids[2 * k], point_ids[2 * k + 1]
        if u == v:
            continue  # degenerate after merging
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            continue  # duplicate detected segments merge into one edge
        seen_pairs.add(key)
        detected_pairs.append(key)
    if len(detected_pairs) < 2:
        raise TooFewSegments("fewer than 2 distinct detected edges after merging")

    dt_edges = delaunay(vertices)
    n = len(vertices)
    assert len(dt_edges) <= 3 * n - 6, "triangulation exceeds planar edge bound"

    edges: list[Edge] = []
    detected_index: list[int] = []
    for u, v in detected_pairs:
        detected_index.append(len(edges))
        edges.append(Edge(u, v, SegmentKind.DETECTED, 0.0))
    for u, v in dt_edges:
        if (u, v) in seen_pairs:
            continue  # overlaps a detected segment
        edges.append(Edge(u, v, SegmentKind.GENERATED, vertices[u].dist(vertices[v])))

    adjacency: list[list[int]] = [[] for _ in range(n)]
    for i, e in enumerate(edges):
        adjacency[e.u].append(i)
        adjacency[e.v].append(i)
    return BoundaryGraph(vertices, edges, adjacency, detected_index)
