"""JIT-compiled inner loops of the performance kernels.

Every loop writes into a zero-initialized output ``c`` of the operands' dtype
and accumulates in that dtype: ``acc`` is seeded from ``c[i, j]``, so Numba
types it as float32 for single precision and float64 for double.

Each output element is summed in ascending k in every variant. The tiled
loops carry the running sum through ``c[i, j]`` from one K-tile to the next,
so naive and tiled products agree bitwise on any data.

All loops release the GIL and only touch rows in their own band.
"""

from __future__ import annotations

from numba import njit


@njit(cache=True, nogil=True)
def naive_rows(a, b, c, row_start, row_end):  # pragma: no cover - jitted
    """One output element per (i, j), rows [row_start, row_end)."""
    n = a.shape[1]
    w = b.shape[1]
    for i in range(row_start, row_end):
        for j in range(w):
            acc = c[i, j]
            for k in range(n):
                acc += a[i, k] * b[k, j]
            c[i, j] = acc


@njit(cache=True, nogil=True)
def tiled_rows(a, b, c, tile, tile_row_start, tile_row_end):  # pragma: no cover - jitted
    """Tile-index triples (I, J, K) over tile-rows [tile_row_start, tile_row_end).

    Boundary tiles are clamped to the matrix edge.
    """
    m, n = a.shape
    w = b.shape[1]
    for ti in range(tile_row_start, tile_row_end):
        i0 = ti * tile
        i1 = min(i0 + tile, m)
        for j0 in range(0, w, tile):
            j1 = min(j0 + tile, w)
            for k0 in range(0, n, tile):
                k1 = min(k0 + tile, n)
                for i in range(i0, i1):
                    for j in range(j0, j1):
                        acc = c[i, j]
                        for k in range(k0, k1):
                            acc += a[i, k] * b[k, j]
                        c[i, j] = acc


@njit(cache=True, nogil=True)
def tiled_rows_staged(
    a, b, c, tile, tile_row_start, tile_row_end, a_buf, b_buf
):  # pragma: no cover - jitted
    """Tiled loop that first copies each A/B tile into scratch buffers.

    ``a_buf`` and ``b_buf`` must be at least as large as the biggest clamped
    tile of A and B respectively. They play the part of a block's shared
    memory: both tiles are loaded once per K step, then reused.
    """
    m, n = a.shape
    w = b.shape[1]
    for ti in range(tile_row_start, tile_row_end):
        i0 = ti * tile
        i1 = min(i0 + tile, m)
        for j0 in range(0, w, tile):
            j1 = min(j0 + tile, w)
            for k0 in range(0, n, tile):
                k1 = min(k0 + tile, n)
                for i in range(i0, i1):
                    for k in range(k0, k1):
                        a_buf[i - i0, k - k0] = a[i, k]
                for k in range(k0, k1):
                    for j in range(j0, j1):
                        b_buf[k - k0, j - j0] = b[k, j]
                for i in range(i1 - i0):
                    for j in range(j1 - j0):
                        acc = c[i0 + i, j0 + j]
                        for k in range(k1 - k0):
                            acc += a_buf[i, k] * b_buf[k, j]
                        c[i0 + i, j0 + j] = acc
