"""The compiled kernel and the pure-Python fallback must agree."""
import numpy as np
import pytest

from boundtrack.backend import available_backends
from conftest import random_graph

IMPLS = available_backends()


def test_native_backend_built():
    # the package ships with the compiled kernel; fail loudly if the build
    # silently fell back
    assert "native" in IMPLS


@pytest.mark.parametrize("name", sorted(IMPLS))
def test_dijkstra_agrees_across_backends(name):
    rng = np.random.default_rng(101)
    dij, _ = IMPLS[name]
    ref_dij, _ = IMPLS["python"]
    checked = 0
    while checked < 50:
        g = random_graph(rng, max_vertices=12, max_segments=8)
        if g is None:
            continue
        indptr, nbr, eid, w = g.csr()
        src = int(rng.integers(len(g.vertices)))
        excl = int(rng.integers(len(g.edges)))
        dist, _, _ = dij(indptr, nbr, eid, w, src, excl)
        ref, _, _ = ref_dij(indptr, nbr, eid, w, src, excl)
        assert np.array_equal(dist, ref)
        checked += 1


@pytest.mark.parametrize("name", sorted(IMPLS))
def test_trim_agrees_across_backends(name):
    rng = np.random.default_rng(102)
    _, trim = IMPLS[name]
    dij, ref_trim = IMPLS["python"]
    checked = 0
    while checked < 30:
        g = random_graph(rng, max_vertices=12, max_segments=8)
        if g is None or len(g.detected_index) < 2:
            continue
        indptr, nbr, eid, w = g.csr()
        seed = g.detected_index[0]
        e = g.edges[seed]
        _, _, pv1 = dij(indptr, nbr, eid, w, e.u, seed)
        d2, _, pv2 = dij(indptr, nbr, eid, w, e.v, seed)
        reachable = np.flatnonzero(np.isfinite(d2)).astype(np.int64)
        if len(reachable) == 0:
            continue
        got = trim(pv1, pv2, reachable, len(g.vertices))
        ref = ref_trim(pv1, pv2, reachable, len(g.vertices))
        assert np.array_equal(got, ref)
        checked += 1


def test_native_is_faster_at_scale():
    if "native" not in IMPLS:
        pytest.skip("compiled kernel unavailable")
    import time

    from conftest import ring_segments
    from boundtrack.graph import build_graph

    g = build_graph(ring_segments(120))
    indptr, nbr, eid, w = g.csr()

    def clock(dij):
        t0 = time.perf_counter()
        for s in range(0, len(g.vertices), 7):
            dij(indptr, nbr, eid, w, s, g.detected_index[0])
        return time.perf_counter() - t0

    t_native = clock(IMPLS["native"][0])
    t_python = clock(IMPLS["python"][0])
    assert t_native < t_python
