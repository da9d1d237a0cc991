"""Backend selection for the enumeration kernels.

Prefers the compiled extension; falls back to the pure-Python module when
the extension is missing (source checkout without a build) or when the
environment variable ``SRCORES_PURE`` is set to a non-empty value.  Both
backends implement identical contracts and are compared by the test suite
and by ``benchmarks/bench_kernels.py``.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("SRCORES_PURE"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

enumerate_faces = _impl.enumerate_faces
signed_cover_count = _impl.signed_cover_count
edge_cover_counts = _impl.edge_cover_counts
dominating_sign_sum = _impl.dominating_sign_sum

__all__ = [
    "BACKEND",
    "enumerate_faces",
    "signed_cover_count",
    "edge_cover_counts",
    "dominating_sign_sum",
]
