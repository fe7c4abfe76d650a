"""Selects the hot-kernel implementation at import time.

The compiled Cython extension is preferred; the numpy-based fallback gives
identical results.  Set GKDIM_PURE_KERNEL=1 to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("GKDIM_PURE_KERNEL"):
    from . import _akernel_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _akernel as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _akernel_py as _impl

        BACKEND = "python"

polymat_matmul = _impl.polymat_matmul


def backend_name() -> str:
    return BACKEND
