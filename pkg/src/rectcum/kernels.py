"""Backend selection for the enumeration kernels.

The compiled extension is used when it imports; set ``RECTCUM_PURE_PYTHON=1``
to force the pure-Python fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("RECTCUM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

set_partition_rgs = _impl.set_partition_rgs
even_partition_rgs = _impl.even_partition_rgs
odd_luk_rises = _impl.odd_luk_rises
rgs_is_noncrossing = _impl.rgs_is_noncrossing
luk_to_rgs = _impl.luk_to_rgs


def backends():
    """Available kernel modules keyed by name (for parity tests and benchmarks)."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels as compiled
    except ImportError:
        return out
    out["cython"] = compiled
    return out
