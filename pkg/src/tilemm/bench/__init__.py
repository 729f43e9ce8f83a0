"""Benchmark harness and metric arithmetic."""

from .harness import (
    BenchmarkCase,
    CaseFailure,
    case_operands,
    derive_seed,
    iter_cases,
    resolve_workers,
    run_case,
    sweep,
)
from .metrics import gflops, speedup

__all__ = [
    "BenchmarkCase",
    "CaseFailure",
    "case_operands",
    "derive_seed",
    "gflops",
    "iter_cases",
    "resolve_workers",
    "run_case",
    "speedup",
    "sweep",
]
