"""Backend selection for the hot kernels.

Two interchangeable implementations exist:

* ``numba`` -- @njit-compiled (default when numba imports cleanly);
* ``numpy`` -- pure Python/numpy fallback.

Set ``FREQRECT_BACKEND=numpy`` (or ``numba``) to force one.  Both produce
bit-identical results; ``benchmarks/bench_kernels.py`` compares speed.
"""

from __future__ import annotations

import os

_requested = os.environ.get("FREQRECT_BACKEND", "auto").lower()

if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(f"FREQRECT_BACKEND must be auto/numba/numpy, got {_requested!r}")

if _requested in ("auto", "numba"):
    try:
        from . import _numba as _impl
        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import _fallback as _impl
        BACKEND = "numpy"
else:
    from . import _fallback as _impl
    BACKEND = "numpy"

gf2_rank_rows = _impl.gf2_rank_rows
ind_search_span = _impl.ind_search_span
ind_search_plain = _impl.ind_search_plain

__all__ = ["BACKEND", "gf2_rank_rows", "ind_search_span", "ind_search_plain"]
