"""Pure-Python shortest-path kernel (fallback for the compiled extension).

Same contract as boundtrack._spkern.dijkstra_csr.
"""
from __future__ import annotations

import heapq

import numpy as np


def dijkstra_csr(indptr, nbr, eid, w, source, excluded_edge=-1):
    """Single-source Dijkstra over a CSR adjacency, skipping one edge.

    Returns (dist, parent_edge, parent_vertex); unreachable vertices get
    dist = inf and parents = -1.
    """
    n = len(indptr) - 1
    dist = np.full(n, np.inf)
    parent_edge = np.full(n, -1, dtype=np.int64)
    parent_vertex = np.full(n, -1, dtype=np.int64)

    ip = indptr.tolist()
    nb = nbr.tolist()
    ei = eid.tolist()
    ww = w.tolist()
    d = dist.tolist()

    d[source] = 0.0
    heap = [(0.0, source)]
    done = [False] * n
    pe = parent_edge.tolist()
    pv = parent_vertex.tolist()
    while heap:
        du, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for k in range(ip[u], ip[u + 1]):
            if ei[k] == excluded_edge:
                continue
            v = nb[k]
            if done[v]:
                continue
            nd = du + ww[k]
            if nd < d[v]:
                d[v] = nd
                pe[v] = ei[k]
                pv[v] = u
                heapq.heappush(heap, (nd, v))
    return (
        np.asarray(d),
        np.asarray(pe, dtype=np.int64),
        np.asarray(pv, dtype=np.int64),
    )


def trim_vertices(pv1, pv2, anchors, n):
    """For each anchor, the common vertex of the two root paths closest to
    the first tree's source (the trim point of the BDSP cycle).

    pv1/pv2 are parent-vertex arrays of two shortest-path trees; every
    anchor must be reachable in both.
    """
    p1 = pv1.tolist()
    p2 = pv2.tolist()
    mark = [0] * n
    out = []
    for stamp, a in enumerate(anchors.tolist(), start=1):
        v = a
        while v != -1:
            mark[v] = stamp
            v = p2[v]
        v = a
        c = a
        while v != -1:
            if mark[v] == stamp:
                c = v
            v = p1[v]
        out.append(c)
    return np.asarray(out, dtype=np.int64)
