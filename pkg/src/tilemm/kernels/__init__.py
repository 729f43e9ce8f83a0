"""Matrix-multiplication backends and the reference oracle."""

from .backends import (
    BACKEND_KERNELS,
    check_operands,
    matmul_naive,
    matmul_naive_parallel,
    matmul_parallel,
    matmul_tiled,
    partition_bands,
    run_backend,
)
from .reference import matmul_reference

__all__ = [
    "BACKEND_KERNELS",
    "check_operands",
    "matmul_naive",
    "matmul_naive_parallel",
    "matmul_parallel",
    "matmul_reference",
    "matmul_tiled",
    "partition_bands",
    "run_backend",
]
