"""Naive, tiled and parallel matrix-multiplication backends."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

from ..errors import ConfigError, PrecisionMismatchError, ShapeError
from ..matrix import Matrix
from ..store.models import Backend, Precision, TileConfig
from .loops import naive_rows, tiled_rows, tiled_rows_staged

logger = logging.getLogger(__name__)

KernelFn = Callable[[Matrix, Matrix, TileConfig, int], Matrix]


def check_operands(a: Matrix, b: Matrix) -> Precision:
    """Validate a product's operands and return their common precision.

    Raises:
        ShapeError: If ``a.cols != b.rows``.
        PrecisionMismatchError: If the precisions differ.
    """
    if a.cols != b.rows:
        raise ShapeError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}: inner dimensions differ"
        )
    if a.precision is not b.precision:
        raise PrecisionMismatchError(
            f"operands differ in precision: {a.precision.value} vs {b.precision.value}"
        )
    return a.precision


def _check_workers(workers: int) -> None:
    if workers < 1:
        raise ConfigError(f"workers must be >= 1, got {workers}")


def _output(a: Matrix, b: Matrix, precision: Precision) -> np.ndarray:
    return np.zeros((a.rows, b.cols), dtype=precision.dtype)


def partition_bands(count: int, workers: int) -> list[tuple[int, int]]:
    """Split ``range(count)`` into at most ``workers`` contiguous bands.

    Bands differ in length by at most one, the longer bands first. Empty
    bands are dropped, so fewer than ``workers`` bands come back when
    ``count < workers``.
    """
    base, extra = divmod(count, workers)
    bands = []
    start = 0
    for index in range(workers):
        end = start + base + (1 if index < extra else 0)
        if end > start:
            bands.append((start, end))
        start = end
    return bands


def _tiled_band(a: np.ndarray, b: np.ndarray, c: np.ndarray, cfg: TileConfig, start: int, end: int) -> None:
    if not cfg.copy_tiles:
        tiled_rows(a, b, c, cfg.tile, start, end)
        return

    # Scratch buffers never need to exceed the matrix itself
    m, n = a.shape
    w = b.shape[1]
    a_buf = np.empty((min(cfg.tile, m), min(cfg.tile, n)), dtype=c.dtype)
    b_buf = np.empty((min(cfg.tile, n), min(cfg.tile, w)), dtype=c.dtype)
    tiled_rows_staged(a, b, c, cfg.tile, start, end, a_buf, b_buf)


def _run_bands(band_fn: Callable[[int, int], None], bands: list[tuple[int, int]]) -> None:
    """Run ``band_fn`` over every band, one thread per band, and wait for all."""
    if len(bands) == 1:
        band_fn(*bands[0])
        return

    with ThreadPoolExecutor(max_workers=len(bands), thread_name_prefix="tilemm") as pool:
        futures = [pool.submit(band_fn, start, end) for start, end in bands]
        # Barrier; re-raises the first worker exception
        for future in futures:
            future.result()


def matmul_naive(a: Matrix, b: Matrix) -> Matrix:
    """Compute C = A x B one output element at a time.

    Accumulates in the operands' precision.
    """
    precision = check_operands(a, b)
    c = _output(a, b, precision)
    naive_rows(a.data, b.data, c, 0, a.rows)
    return Matrix(c)


def matmul_tiled(a: Matrix, b: Matrix, cfg: TileConfig) -> Matrix:
    """Compute C = A x B over T x T sub-blocks.

    Tiles are visited as (I, J, K) triples and partial sums of each K step
    accumulate into C. Boundary tiles are clamped, so any size is accepted.
    """
    precision = check_operands(a, b)
    c = _output(a, b, precision)
    _tiled_band(a.data, b.data, c, cfg, 0, cfg.tiles_along(a.rows))
    return Matrix(c)


def matmul_parallel(a: Matrix, b: Matrix, cfg: TileConfig, workers: int) -> Matrix:
    """Tiled product with output tile-rows split statically among workers.

    Each worker owns a contiguous band of tile-rows of C, so writes never
    overlap and the result does not depend on ``workers``.
    """
    precision = check_operands(a, b)
    _check_workers(workers)
    c = _output(a, b, precision)
    bands = partition_bands(cfg.tiles_along(a.rows), workers)
    logger.debug("tiled product %dx%d on %d band(s)", a.rows, b.cols, len(bands))

    def band_fn(start: int, end: int) -> None:
        _tiled_band(a.data, b.data, c, cfg, start, end)

    _run_bands(band_fn, bands)
    return Matrix(c)


def matmul_naive_parallel(a: Matrix, b: Matrix, workers: int) -> Matrix:
    """Naive product with output rows split statically among workers."""
    precision = check_operands(a, b)
    _check_workers(workers)
    c = _output(a, b, precision)
    bands = partition_bands(a.rows, workers)
    logger.debug("naive product %dx%d on %d band(s)", a.rows, b.cols, len(bands))

    def band_fn(start: int, end: int) -> None:
        naive_rows(a.data, b.data, c, start, end)

    _run_bands(band_fn, bands)
    return Matrix(c)


# Uniform (a, b, cfg, workers) signature for the harness and verifier;
# backends ignore the arguments they have no use for.
BACKEND_KERNELS: dict[Backend, KernelFn] = {
    Backend.NAIVE_SEQ: lambda a, b, cfg, workers: matmul_naive(a, b),
    Backend.TILED_SEQ: lambda a, b, cfg, workers: matmul_tiled(a, b, cfg),
    Backend.TILED_PAR: matmul_parallel,
    Backend.NAIVE_PAR: lambda a, b, cfg, workers: matmul_naive_parallel(a, b, workers),
}


def run_backend(backend: Backend, a: Matrix, b: Matrix, cfg: TileConfig, workers: int = 1) -> Matrix:
    """Dispatch a product to the kernel registered for ``backend``."""
    return BACKEND_KERNELS[backend](a, b, cfg, workers)
