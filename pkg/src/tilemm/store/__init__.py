"""Store module for shared data models."""

from .models import (
    Backend,
    BenchmarkConfig,
    BenchmarkRecord,
    ChartSeries,
    ChartSpec,
    Precision,
    TileConfig,
)

__all__ = [
    "Backend",
    "BenchmarkConfig",
    "BenchmarkRecord",
    "ChartSeries",
    "ChartSpec",
    "Precision",
    "TileConfig",
]
