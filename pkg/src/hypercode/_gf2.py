"""GF(2) reduction kernel selection: compiled extension if available.

Set HYPERCODE_GF2_BACKEND=python to force the pure-Python kernel.
"""

from __future__ import annotations

import os

if os.environ.get("HYPERCODE_GF2_BACKEND") == "python":
    from hypercode import _gf2py as _impl
else:
    try:
        from hypercode import _gf2core as _impl  # type: ignore[no-redef]
    except ImportError:
        from hypercode import _gf2py as _impl  # type: ignore[no-redef]

BACKEND = "cython" if _impl.__name__.endswith("_gf2core") else "python"


def reduce_lows(columns, n_rows):
    """Lowest-one row per column after left-to-right GF(2) reduction."""
    return _impl.reduce_lows(columns, n_rows)


def rank(columns, n_rows):
    """GF(2) rank of a sparse column matrix."""
    return sum(1 for low in _impl.reduce_lows(columns, n_rows) if low >= 0)
