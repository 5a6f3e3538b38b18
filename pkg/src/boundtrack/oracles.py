"""Brute-force reference implementations used only by the test suite.

These deliberately share no arithmetic with the production modules: the
Delaunay check works edge-by-edge from the empty-circumcircle definition,
shortest paths enumerate all simple paths, and the best-cycle search
enumerates every simple cycle. Size caps keep each call under a second.
"""
from __future__ import annotations

import math


def _circumcircle(ax, ay, bx, by, cx, cy):
    """Center and squared radius, or None for collinear points."""
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None
    ux = (
        (ax * ax + ay * ay) * (by - cy)
        + (bx * bx + by * by) * (cy - ay)
        + (cx * cx + cy * cy) * (ay - by)
    ) / d
    uy = (
        (ax * ax + ay * ay) * (cx - bx)
        + (bx * bx + by * by) * (ax - cx)
        + (cx * cx + cy * cy) * (bx - ax)
    ) / d
    r2 = (ax - ux) ** 2 + (ay - uy) ** 2
    return ux, uy, r2


def _hull_size(pts) -> int:
    """Number of convex hull vertices (gift wrapping, collinear points skipped)."""
    n = len(pts)
    if n < 3:
        return n
    start = min(range(n), key=lambda i: pts[i])
    hull = [start]
    while True:
        p = hull[-1]
        q = (p + 1) % n
        for r in range(n):
            if r == p:
                continue
            cross = (pts[q][0] - pts[p][0]) * (pts[r][1] - pts[p][1]) - (
                pts[q][1] - pts[p][1]
            ) * (pts[r][0] - pts[p][0])
            if cross < 0 or (
                cross == 0
                and (pts[r][0] - pts[p][0]) ** 2 + (pts[r][1] - pts[p][1]) ** 2
                > (pts[q][0] - pts[p][0]) ** 2 + (pts[q][1] - pts[p][1]) ** 2
            ):
                q = r
        if q == start:
            break
        hull.append(q)
    return len(hull)


def oracle_delaunay_check(points, edges, tol: float = 1e-9) -> bool:
    """True iff the edge set is a Delaunay triangulation of the points.

    Checks the expected edge count (3(n-1) - h for h hull vertices) and,
    for every edge, the existence of an empty circumcircle through its two
    endpoints and some third point (cocircular points allowed within tol).
    """
    pts = [(p[0], p[1]) if not hasattr(p, "x") else (p.x, p.y) for p in points]
    n = len(pts)
    assert n <= 12, "oracle capped at 12 points"
    edges = {(min(i, j), max(i, j)) for i, j in edges}
    if len(edges) != 3 * (n - 1) - _hull_size(pts):
        return False
    span = max(1.0, max(abs(c) for p in pts for c in p))
    eps = tol * span * span
    for i, j in edges:
        ok = False
        for k in range(n):
            if k in (i, j):
                continue
            cc = _circumcircle(*pts[i], *pts[j], *pts[k])
            if cc is None:
                continue
            ux, uy, r2 = cc
            empty = all(
                (pts[m][0] - ux) ** 2 + (pts[m][1] - uy) ** 2 >= r2 - eps
                for m in range(n)
                if m not in (i, j, k)
            )
            if empty:
                ok = True
                break
        if not ok:
            return False
    return True


def _neighbors(g):
    """vertex -> {neighbor: (edge_id, weight)} from a BoundaryGraph."""
    adj = {v: {} for v in range(len(g.vertices))}
    for i, e in enumerate(g.edges):
        adj[e.u][e.v] = (i, e.weight)
        adj[e.v][e.u] = (i, e.weight)
    return adj


def oracle_shortest_path(g, u: int, v: int, excluded_edge: int = -1) -> float:
    """Minimum weight over all simple u-v paths avoiding one edge; inf if none."""
    assert len(g.vertices) <= 10, "oracle capped at 10 vertices"
    adj = _neighbors(g)
    best = math.inf

    def walk(node, visited, total):
        nonlocal best
        if node == v:
            best = min(best, total)
            return
        for nxt, (eid, w) in adj[node].items():
            if eid == excluded_edge or nxt in visited:
                continue
            walk(nxt, visited | {nxt}, total + w)

    walk(u, {u}, 0.0)
    return best


def _all_simple_cycles(g):
    """Every simple cycle (>= 3 vertices) as a vertex id tuple, each once."""
    adj = _neighbors(g)
    n = len(g.vertices)
    cycles = []
    for start in range(n):
        stack = [(start, [start])]
        while stack:
            node, path = stack.pop()
            for nxt in adj[node]:
                if nxt == start and len(path) >= 3:
                    # canonical: smallest vertex first, second < last
                    if path[1] < path[-1]:
                        cycles.append(tuple(path))
                elif nxt > start and nxt not in path:
                    stack.append((nxt, path + [nxt]))
    return cycles


def oracle_best_cycle(g, prior, s_e: float):
    """Exhaustive minimum-cost simple cycle passing the similarity gate.

    Returns (vertex_ids, gap_length, area, cost) or None. Independent
    counterpart of the BDSP + selection pipeline.
    """
    assert len(g.detected_index) <= 8 and len(g.vertices) <= 16, "oracle size cap"
    adj = _neighbors(g)
    coords = [(p.x, p.y) for p in g.vertices]
    prior_pts = [(v.x, v.y) for v in prior.vertices]
    prior_area = abs(
        sum(
            prior_pts[i][0] * prior_pts[(i + 1) % len(prior_pts)][1]
            - prior_pts[(i + 1) % len(prior_pts)][0] * prior_pts[i][1]
            for i in range(len(prior_pts))
        )
        / 2.0
    )
    best = None
    for cyc in _all_simple_cycles(g):
        gap = 0.0
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            gap += adj[a][b][1]
        area = abs(
            sum(
                coords[a][0] * coords[b][1] - coords[b][0] * coords[a][1]
                for a, b in zip(cyc, cyc[1:] + cyc[:1])
            )
            / 2.0
        )
        if area <= 0.0:
            continue
        sim = min(prior_area / area, area / prior_area)
        if sim <= s_e:
            continue
        cost = gap / area
        if best is None or cost < best[3]:
            best = (cyc, gap, area, cost)
    return best


def oracle_distance_transform(mask):
    """Brute-force nearest-set-pixel Euclidean distances (grids <= 64x64)."""
    import numpy as np

    h, w = mask.shape
    assert h <= 64 and w <= 64, "oracle capped at 64x64"
    set_pixels = [(y, x) for y in range(h) for x in range(w) if mask[y, x]]
    assert set_pixels, "empty mask"
    out = np.empty((h, w))
    for y in range(h):
        for x in range(w):
            out[y, x] = math.sqrt(
                min((y - sy) ** 2 + (x - sx) ** 2 for sy, sx in set_pixels)
            )
    return out
