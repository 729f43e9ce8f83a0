"""Shared fixtures for the tilemm test suite."""

from __future__ import annotations

import os

import hypothesis
import numpy as np
import pytest

from tilemm.matrix import FillRange, Matrix, random_filled
from tilemm.store.models import Backend, BenchmarkRecord, Precision

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fast"))


def small_int_pair(m: int, n: int, w: int, precision: Precision, seed: int = 7) -> tuple[Matrix, Matrix]:
    """Operands of an (m x n) by (n x w) product filled with small integers."""
    a = random_filled(m, n, precision, seed, FillRange.SMALL_INT)
    b = random_filled(n, w, precision, seed + 1, FillRange.SMALL_INT)
    return a, b


def make_record(
    backend: Backend = Backend.NAIVE_SEQ,
    precision: Precision = Precision.SINGLE,
    size: int = 32,
    tile: int = 8,
    reps: int = 1,
    avg_seconds: float = 0.5,
    workers: int = 1,
) -> BenchmarkRecord:
    """A square-case record with consistent derived fields."""
    total = avg_seconds * reps
    return BenchmarkRecord(
        backend=backend,
        precision=precision,
        m=size,
        n=size,
        w=size,
        tile=tile,
        reps=reps,
        workers=workers,
        total_seconds=total,
        avg_seconds=avg_seconds,
        gflops=2 * size**3 / (avg_seconds * 1e9),
    )


@pytest.fixture(params=list(Precision), ids=lambda p: p.value)
def precision(request: pytest.FixtureRequest) -> Precision:
    return request.param


@pytest.fixture
def pair_2x2(precision: Precision) -> tuple[Matrix, Matrix]:
    a = Matrix(np.array([[1, 2], [3, 4]], dtype=precision.dtype))
    b = Matrix(np.array([[5, 6], [7, 8]], dtype=precision.dtype))
    return a, b


@pytest.fixture
def sample_records() -> list[BenchmarkRecord]:
    """Two backends over three sizes, one precision, one tile, one reps."""
    records = []
    for backend, scale in ((Backend.TILED_SEQ, 2.0), (Backend.TILED_PAR, 1.0)):
        for size in (32, 64, 128):
            records.append(make_record(backend, size=size, tile=32, avg_seconds=scale * size / 1e4))
    return records
