"""Data models shared by the kernels, harness and report layers."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..constants import (
    DEFAULT_CHART_HEIGHT,
    DEFAULT_CHART_WIDTH,
    DEFAULT_SEED,
    DEFAULT_WARMUP_RUNS,
)
from ..errors import ConfigError


class Precision(Enum):
    """Floating-point element type of a matrix."""

    SINGLE = "single"
    DOUBLE = "double"

    @property
    def element_bytes(self) -> int:
        """Bytes per element: 4 for single, 8 for double."""
        return 4 if self is Precision.SINGLE else 8

    @property
    def dtype(self) -> np.dtype:
        """NumPy dtype backing this precision."""
        return np.dtype(np.float32 if self is Precision.SINGLE else np.float64)

    @property
    def epsilon(self) -> float:
        """Machine epsilon of the element type."""
        return float(np.finfo(self.dtype).eps)

    @classmethod
    def from_dtype(cls, dtype: np.dtype) -> Precision:
        """Map a NumPy dtype back to its precision tag."""
        if dtype == np.float32:
            return cls.SINGLE
        if dtype == np.float64:
            return cls.DOUBLE
        raise ConfigError(f"unsupported dtype: {dtype}")


class Backend(Enum):
    """Matrix-multiplication backend compared by the benchmark."""

    NAIVE_SEQ = "naive-seq"
    TILED_SEQ = "tiled-seq"
    TILED_PAR = "tiled-par"
    NAIVE_PAR = "naive-par"

    @property
    def is_parallel(self) -> bool:
        return self in (Backend.TILED_PAR, Backend.NAIVE_PAR)

    @property
    def is_tiled(self) -> bool:
        return self in (Backend.TILED_SEQ, Backend.TILED_PAR)


@dataclass(frozen=True)
class TileConfig:
    """Tile edge length and scratch-buffer policy for the tiled kernels."""

    tile: int
    copy_tiles: bool = False  # Stage tiles in contiguous scratch buffers

    def __post_init__(self) -> None:
        if self.tile < 1:
            raise ConfigError(f"tile must be >= 1, got {self.tile}")

    def tiles_along(self, length: int) -> int:
        """Number of tiles covering a dimension, boundary tile included."""
        return -(-length // self.tile)

    def divides(self, length: int) -> bool:
        """Whether the tile fits a dimension exactly."""
        return length % self.tile == 0


@dataclass
class BenchmarkRecord:
    """One timed measurement of a backend on one problem configuration."""

    backend: Backend
    precision: Precision
    m: int
    n: int
    w: int
    tile: int
    reps: int
    workers: int
    total_seconds: float
    avg_seconds: float
    gflops: float

    # Set when the measured duration was zero and had to be clamped
    timer_clamped: bool = field(default=False, compare=False)

    @property
    def flops(self) -> int:
        """Floating-point operations of a single multiply."""
        return 2 * self.m * self.n * self.w

    @property
    def size(self) -> int:
        """Matrix order for square sweeps (the output row count)."""
        return self.m


@dataclass
class BenchmarkConfig:
    """The Cartesian sweep executed by the benchmark harness."""

    sizes: list[int]
    tiles: list[int]
    precisions: list[Precision]
    reps_list: list[int]
    backends: list[Backend]
    workers: int
    seed: int = DEFAULT_SEED
    exact_fit: bool = False
    warmup_runs: int = DEFAULT_WARMUP_RUNS
    copy_tiles: bool = False

    def validate(self) -> None:
        """Check the sweep before any work is done.

        Raises:
            ConfigError: If a list is empty, a value is out of range, or
                exact-fit is requested for a non-divisible size/tile pair.
        """
        for name in ("sizes", "tiles", "precisions", "reps_list", "backends"):
            if not getattr(self, name):
                raise ConfigError(f"{name} must not be empty")

        for name, values in (("sizes", self.sizes), ("tiles", self.tiles), ("reps", self.reps_list)):
            bad = [v for v in values if v < 1]
            if bad:
                raise ConfigError(f"{name} must be positive, got {bad}")

        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.warmup_runs < 0:
            raise ConfigError(f"warmup runs must be >= 0, got {self.warmup_runs}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

        if self.exact_fit:
            misfits = [(s, t) for s in self.sizes for t in self.tiles if s % t]
            if misfits:
                pairs = ", ".join(f"{s}/{t}" for s, t in misfits)
                raise ConfigError(f"exact-fit requires tiles to divide sizes: {pairs}")

    @property
    def case_count(self) -> int:
        return (
            len(self.backends)
            * len(self.precisions)
            * len(self.sizes)
            * len(self.tiles)
            * len(self.reps_list)
        )


@dataclass
class ChartSeries:
    """A labelled line of (x, y) points with strictly increasing x."""

    label: str
    points: list[tuple[float, float]]

    def __post_init__(self) -> None:
        if not self.points:
            raise ConfigError(f"series {self.label!r} has no points")
        xs = [x for x, _ in self.points]
        if any(x <= 0 for x in xs):
            raise ConfigError(f"series {self.label!r} has non-positive x values")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ConfigError(f"series {self.label!r} x values must be strictly increasing")


@dataclass
class ChartSpec:
    """Everything needed to render one line chart."""

    title: str
    x_label: str
    y_label: str
    series: list[ChartSeries] = field(default_factory=list)
    x_log2: bool = True
    width_px: int = DEFAULT_CHART_WIDTH
    height_px: int = DEFAULT_CHART_HEIGHT
