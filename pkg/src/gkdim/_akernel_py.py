"""Pure-Python kernel: polynomial-matrix products via per-degree numpy matmuls."""

from __future__ import annotations

import numpy as np


def polymat_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Multiply matrices of integer polynomials.

    ``a`` has shape (Da, N, N) and ``b`` (Db, N, N), slice d holding the
    coefficient matrix of the d-th power.  The result has Da+Db-1 slices
    with out[d] = sum over i+j=d of a[i] @ b[j].
    """
    da, n, _ = a.shape
    db = b.shape[0]
    out = np.zeros((da + db - 1, n, n), dtype=np.int64)
    for i in range(da):
        ai = a[i]
        if not ai.any():
            continue
        for j in range(db):
            out[i + j] += ai @ b[j]
    return out
