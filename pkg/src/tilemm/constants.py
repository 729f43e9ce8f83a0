"""Centralized constants for tilemm.

This module contains the default benchmark grid, tolerances, environment
variable names, chart geometry and the built-in device limit sheets used
across the package.
"""

from __future__ import annotations

# =============================================================================
# Benchmark Sweep Defaults
# =============================================================================

# Square matrix orders swept by default (32x32 up to 2048x2048)
DEFAULT_SIZES: tuple[int, ...] = (32, 64, 128, 320, 640, 1024, 2048)

# Tile edge lengths swept by default (8x8, 16x16 and 32x32 blocks)
DEFAULT_TILES: tuple[int, ...] = (8, 16, 32)

# Repetition counts: the multiply is executed 1, 100 and 1000 times
DEFAULT_REPS: tuple[int, ...] = (1, 100, 1000)

DEFAULT_SEED = 2024

DEFAULT_WARMUP_RUNS = 1

DEFAULT_RESULTS_FILE = "results.csv"

DEFAULT_CHART_DIR = "charts"

# Worker-count override, consulted when --workers is not given
WORKERS_ENV_VAR = "TILEMM_NUM_THREADS"


# =============================================================================
# Numerical Tolerances
# =============================================================================

# Cross-backend comparisons on real-valued data use
# rel_tol = n * machine_epsilon * TOLERANCE_FACTOR
TOLERANCE_FACTOR = 8

# Inclusive bounds for the small-int fill range. Products summed over
# k <= 2048 stay below 2**24, so float32 represents every partial sum exactly.
SMALL_INT_LOW = -8
SMALL_INT_HIGH = 8


# =============================================================================
# Verification Matrix
# =============================================================================

VERIFY_SIZES: tuple[int, ...] = (1, 2, 3, 7, 8, 31, 32, 33, 64, 100, 128)
VERIFY_TILES: tuple[int, ...] = (1, 8, 16, 32)
VERIFY_WORKERS: tuple[int, ...] = (1, 2, 3, 4, 7)


# =============================================================================
# CSV Schema
# =============================================================================

CSV_COLUMNS: tuple[str, ...] = (
    "backend",
    "precision",
    "m",
    "n",
    "w",
    "tile",
    "reps",
    "workers",
    "total_seconds",
    "avg_seconds",
    "gflops",
)


# =============================================================================
# Chart Geometry and Styling
# =============================================================================

DEFAULT_CHART_WIDTH = 720
DEFAULT_CHART_HEIGHT = 450

CHART_MARGIN_LEFT = 80
CHART_MARGIN_RIGHT = 180
CHART_MARGIN_TOP = 50
CHART_MARGIN_BOTTOM = 60

# Number of y-axis intervals on every chart
CHART_Y_TICKS = 5

# Stroke colors and dash patterns, cycled independently so that
# every series gets a distinct (color, dash) pair
SERIES_COLORS: tuple[str, ...] = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
)

SERIES_DASHES: tuple[str, ...] = ("", "6,3", "2,3", "8,3,2,3")


# =============================================================================
# Device Presets
# =============================================================================

GIB = 1024**3
KIB = 1024

# Geforce 940M limit sheet. The shared memory figure is quoted as "49 KB";
# it is stored as 49 KiB, which is neither the 48 KiB hardware value nor
# 49 000 bytes.
GEFORCE_940M: dict[str, int | float] = {
    "sm_count": 3,
    "cores_per_sm": 128,
    "warp_size": 32,
    "max_threads_per_block": 1024,
    "max_threads_per_sm": 2048,
    "max_blocks_per_sm": 32,
    "global_mem_bytes": 2 * GIB,
    "shared_mem_bytes_per_sm": 49 * KIB,
    "peak_gflops_single": 790.3,
    "peak_gflops_double": 24.7,
}

DEVICE_PRESETS: dict[str, dict[str, int | float]] = {
    "geforce-940m": GEFORCE_940M,
}


# =============================================================================
# Exit Codes
# =============================================================================

EXIT_OK = 0
EXIT_FAILURE = 1  # runtime or verification failure
EXIT_USAGE = 2  # invalid flags or configuration
