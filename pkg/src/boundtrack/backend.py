"""Kernel backend selection.

The compiled extension is preferred; the pure-Python fallback keeps the
package functional without a C toolchain. Set BOUNDTRACK_BACKEND=python to
force the fallback (used by the backend benchmark).
"""
from __future__ import annotations

import os

from . import _sp_py

BACKEND = "python"
dijkstra_csr = _sp_py.dijkstra_csr
trim_vertices = _sp_py.trim_vertices

if os.environ.get("BOUNDTRACK_BACKEND", "").lower() != "python":
    try:
        from . import _spkern

        dijkstra_csr = _spkern.dijkstra_csr
        trim_vertices = _spkern.trim_vertices
        BACKEND = "native"
    except ImportError:
        pass


def available_backends() -> dict:
    """Name -> (dijkstra_csr, trim_vertices), for benchmarking."""
    impls = {"python": (_sp_py.dijkstra_csr, _sp_py.trim_vertices)}
    try:
        from . import _spkern

        impls["native"] = (_spkern.dijkstra_csr, _spkern.trim_vertices)
    except ImportError:
        pass
    return impls
