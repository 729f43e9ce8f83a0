"""Result persistence, charts and summary tables."""

from .charts import (
    chart_svg,
    derive_speedup_series,
    gflops_charts,
    render_chart,
    speedup_charts,
    time_charts,
)
from .results import read_csv, write_csv
from .tables import format_gflops, summary_table

__all__ = [
    "chart_svg",
    "derive_speedup_series",
    "format_gflops",
    "gflops_charts",
    "read_csv",
    "render_chart",
    "speedup_charts",
    "summary_table",
    "time_charts",
    "write_csv",
]

# Optional import for watcher (requires watchdog)
try:
    from .watcher import ResultsWatcher
    __all__.append("ResultsWatcher")
except ImportError:
    ResultsWatcher = None  # type: ignore
