"""Reference oracle for matrix products.

Kept apart from the performance kernels: textbook i-j-k order with a
double-precision accumulator whatever the input precision, rounded to the
operands' precision once at the end.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ..matrix import Matrix
from .backends import check_operands


@njit(cache=True)
def _ijk_float64(a, b):  # pragma: no cover - jitted
    m, n = a.shape
    w = b.shape[1]
    out = np.zeros((m, w), dtype=np.float64)
    for i in range(m):
        for j in range(w):
            acc = 0.0
            for k in range(n):
                acc += np.float64(a[i, k]) * np.float64(b[k, j])
            out[i, j] = acc
    return out


def matmul_reference(a: Matrix, b: Matrix) -> Matrix:
    """Compute C = A x B with the oracle algorithm.

    Raises:
        ShapeError: If ``a.cols != b.rows``.
        PrecisionMismatchError: If the operands' precisions differ.
    """
    precision = check_operands(a, b)
    return Matrix(_ijk_float64(a.data, b.data).astype(precision.dtype))
