"""Analytic GPU execution model for tiled matrix multiplication.

Grid decomposition, occupancy limits, shared-memory fit, global-memory load
counts and device-memory footprint. Everything here is exact integer
arithmetic over immutable inputs; no GPU is involved.

Loads are counted in elements, not bytes or memory transactions. Byte sizes
are reported in MiB (2**20 bytes).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConfigError
from ..store.models import Precision
from .device import DeviceSpec

MIB = 1024**2


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _require_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise ConfigError(f"{name} must be >= 1, got {value}")


@dataclass(frozen=True)
class GridPlan:
    """Lattice of tile-sized thread blocks covering a matrix."""

    grid_x: int
    grid_y: int
    block_threads: int
    exact_fit: bool

    @property
    def block_count(self) -> int:
        return self.grid_x * self.grid_y


@dataclass(frozen=True)
class Occupancy:
    """How many blocks of a given size one SM can host."""

    warps_per_block: int
    blocks_per_sm: int
    threads_per_sm: int
    valid: bool


@dataclass(frozen=True)
class SharedMemFit:
    bytes_needed: int
    fits: bool


@dataclass(frozen=True)
class LoadCounts:
    """Global-memory element loads of one product."""

    loads_a: int
    loads_b: int

    @property
    def total_loads(self) -> int:
        return self.loads_a + self.loads_b


@dataclass(frozen=True)
class Footprint:
    """Device memory needed to hold A, B and C at once."""

    bytes_total: int
    fits_global: bool | None  # None when no device was given

    @property
    def mib(self) -> float:
        return self.bytes_total / MIB


def plan_grid(rows: int, cols: int, tile: int) -> GridPlan:
    """Cover a rows x cols matrix with tile x tile blocks.

    ``grid_x`` counts blocks along the columns, ``grid_y`` along the rows;
    each block holds one thread per tile element.
    """
    _require_positive(rows=rows, cols=cols, tile=tile)
    return GridPlan(
        grid_x=_ceil_div(cols, tile),
        grid_y=_ceil_div(rows, tile),
        block_threads=tile * tile,
        exact_fit=cols % tile == 0 and rows % tile == 0,
    )


def occupancy(spec: DeviceSpec, block_threads: int) -> Occupancy:
    """Blocks and threads per SM for a block size.

    Block sizes above the device limit are reported with ``valid=False``
    rather than raising.
    """
    _require_positive(block_threads=block_threads)
    blocks_per_sm = min(spec.max_blocks_per_sm, spec.max_threads_per_sm // block_threads)
    return Occupancy(
        warps_per_block=_ceil_div(block_threads, spec.warp_size),
        blocks_per_sm=blocks_per_sm,
        threads_per_sm=blocks_per_sm * block_threads,
        valid=block_threads <= spec.max_threads_per_block,
    )


def shared_mem_fit(spec: DeviceSpec, tile: int, precision: Precision) -> SharedMemFit:
    """Shared memory for one resident A-tile plus one B-tile."""
    _require_positive(tile=tile)
    needed = 2 * tile * tile * precision.element_bytes
    return SharedMemFit(bytes_needed=needed, fits=needed <= spec.shared_mem_bytes_per_sm)


def global_load_model(m: int, n: int, w: int, tile: int | None = None) -> LoadCounts:
    """Element loads from global memory for an (m x n) by (n x w) product.

    Without a tile every output element reads a full row of A and a full
    column of B, so A is read w times and B m times. With a tile each element
    enters shared memory once per opposing tile-stripe.
    """
    _require_positive(m=m, n=n, w=w)
    if tile is None:
        return LoadCounts(loads_a=m * n * w, loads_b=n * w * m)

    _require_positive(tile=tile)
    return LoadCounts(
        loads_a=m * n * _ceil_div(w, tile),
        loads_b=n * w * _ceil_div(m, tile),
    )


def footprint(
    m: int, n: int, w: int, precision: Precision, spec: DeviceSpec | None = None
) -> Footprint:
    """Bytes for A (m x n), B (n x w) and C (m x w) resident together."""
    _require_positive(m=m, n=n, w=w)
    total = (m * n + n * w + m * w) * precision.element_bytes
    fits = None if spec is None else total <= spec.global_mem_bytes
    return Footprint(bytes_total=total, fits_global=fits)


def ideal_seconds(m: int, n: int, w: int, spec: DeviceSpec, precision: Precision) -> float:
    """Lower-bound execution time at the device's peak arithmetic rate."""
    _require_positive(m=m, n=n, w=w)
    return 2 * m * n * w / (spec.peak_gflops(precision) * 1e9)


def peak_fraction(gflops: float, spec: DeviceSpec, precision: Precision) -> float:
    """Measured GFLOPS as a fraction of the device peak."""
    return gflops / spec.peak_gflops(precision)


def arithmetic_intensity(
    m: int, n: int, w: int, precision: Precision, tile: int | None = None
) -> float:
    """Flops per byte of modeled global-memory traffic."""
    loads = global_load_model(m, n, w, tile)
    return 2 * m * n * w / (loads.total_loads * precision.element_bytes)
