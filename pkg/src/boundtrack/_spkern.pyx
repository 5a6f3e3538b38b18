# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled shortest-path kernel: Dijkstra over a CSR adjacency with one
excluded edge, using an array-backed binary heap."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def dijkstra_csr(indptr, nbr, eid, w, long source, long excluded_edge=-1):
    """Same contract as boundtrack._sp_py.dijkstra_csr."""
    cdef cnp.int64_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.int64_t[::1] nb = np.ascontiguousarray(nbr, dtype=np.int64)
    cdef cnp.int64_t[::1] ei = np.ascontiguousarray(eid, dtype=np.int64)
    cdef cnp.float64_t[::1] ww = np.ascontiguousarray(w, dtype=np.float64)

    cdef Py_ssize_t n = ip.shape[0] - 1
    dist_arr = np.full(n, np.inf)
    pe_arr = np.full(n, -1, dtype=np.int64)
    pv_arr = np.full(n, -1, dtype=np.int64)
    cdef cnp.float64_t[::1] dist = dist_arr
    cdef cnp.int64_t[::1] pe = pe_arr
    cdef cnp.int64_t[::1] pv = pv_arr

    done_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] done = done_arr

    # binary min-heap of (key, vertex); lazily deleted stale entries
    cdef Py_ssize_t cap = 4 * n + 16
    hk_arr = np.empty(cap, dtype=np.float64)
    hv_arr = np.empty(cap, dtype=np.int64)
    cdef cnp.float64_t[::1] hk = hk_arr
    cdef cnp.int64_t[::1] hv = hv_arr
    cdef Py_ssize_t size = 0

    cdef Py_ssize_t i, k, child, parent
    cdef long u, v
    cdef double du, nd, tk
    cdef long tv

    dist[source] = 0.0
    hk[0] = 0.0
    hv[0] = source
    size = 1

    while size > 0:
        du = hk[0]
        u = hv[0]
        size -= 1
        hk[0] = hk[size]
        hv[0] = hv[size]
        # sift down
        i = 0
        while True:
            child = 2 * i + 1
            if child >= size:
                break
            if child + 1 < size and hk[child + 1] < hk[child]:
                child += 1
            if hk[child] < hk[i]:
                tk = hk[i]; hk[i] = hk[child]; hk[child] = tk
                tv = hv[i]; hv[i] = hv[child]; hv[child] = tv
                i = child
            else:
                break
        if done[u]:
            continue
        done[u] = 1
        for k in range(ip[u], ip[u + 1]):
            if ei[k] == excluded_edge:
                continue
            v = nb[k]
            if done[v]:
                continue
            nd = du + ww[k]
            if nd < dist[v]:
                dist[v] = nd
                pe[v] = ei[k]
                pv[v] = u
                if size == cap:
                    cap = 2 * cap
                    hk_arr = np.resize(hk_arr, cap)
                    hv_arr = np.resize(hv_arr, cap)
                    hk = hk_arr
                    hv = hv_arr
                # sift up
                i = size
                hk[i] = nd
                hv[i] = v
                size += 1
                while i > 0:
                    parent = (i - 1) // 2
                    if hk[parent] > hk[i]:
                        tk = hk[i]; hk[i] = hk[parent]; hk[parent] = tk
                        tv = hv[i]; hv[i] = hv[parent]; hv[parent] = tv
                        i = parent
                    else:
                        break
    return dist_arr, pe_arr, pv_arr


def trim_vertices(pv1, pv2, anchors, long n):
    """Same contract as boundtrack._sp_py.trim_vertices."""
    cdef cnp.int64_t[::1] p1 = np.ascontiguousarray(pv1, dtype=np.int64)
    cdef cnp.int64_t[::1] p2 = np.ascontiguousarray(pv2, dtype=np.int64)
    cdef cnp.int64_t[::1] an = np.ascontiguousarray(anchors, dtype=np.int64)

    mark_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] mark = mark_arr
    out_arr = np.empty(an.shape[0], dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr

    cdef Py_ssize_t i
    cdef long stamp, a, v, c
    for i in range(an.shape[0]):
        stamp = i + 1
        a = an[i]
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
        out[i] = c
    return out_arr
