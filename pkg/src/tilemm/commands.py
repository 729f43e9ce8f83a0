"""Implementations of the bench, verify, model and plot subcommands.

Each command takes the parsed argparse namespace and returns an exit code.
"""

from __future__ import annotations

import argparse
import json
import logging
import time
from pathlib import Path

from rich.console import Console
from rich.markup import escape

from .bench.harness import CaseFailure, derive_seed, resolve_workers, sweep
from .constants import EXIT_FAILURE, EXIT_OK, EXIT_USAGE
from .errors import (
    ConfigError,
    DeviceSpecError,
    MissingPairError,
    SchemaError,
    TilemmError,
)
from .kernels import matmul_reference, run_backend
from .matrix import FillRange, first_mismatch, random_filled
from .model import (
    arithmetic_intensity,
    footprint,
    global_load_model,
    ideal_seconds,
    occupancy,
    peak_fraction,
    plan_grid,
    resolve_device,
    shared_mem_fit,
)
from .report import (
    gflops_charts,
    read_csv,
    render_chart,
    speedup_charts,
    summary_table,
    time_charts,
    write_csv,
)
from .store.models import Backend, BenchmarkConfig, TileConfig

logger = logging.getLogger(__name__)

console = Console(highlight=False, emoji=False)
err_console = Console(stderr=True, highlight=False, emoji=False)


def _error(message: str) -> None:
    err_console.print(f"[red]error:[/red] {escape(message)}", soft_wrap=True)


# =============================================================================
# bench
# =============================================================================


def cmd_bench(args: argparse.Namespace) -> int:
    """Run a sweep, write the CSV and print the summary table."""
    try:
        workers = resolve_workers(args.workers)
        config = BenchmarkConfig(
            sizes=args.sizes,
            tiles=args.tiles,
            precisions=args.precisions,
            reps_list=args.reps,
            backends=args.backends,
            workers=workers,
            seed=args.seed,
            exact_fit=args.exact_fit,
            warmup_runs=args.warmup,
            copy_tiles=args.copy_tiles,
        )
        config.validate()
    except ConfigError as e:
        _error(str(e))
        return EXIT_USAGE

    failures: list[CaseFailure] = []
    with err_console.status(f"running {config.case_count} case(s)..."):
        records = sweep(config, on_failure=failures.append)

    try:
        write_csv(records, args.out)
    except OSError as e:
        _error(f"cannot write {args.out}: {e}")
        return EXIT_FAILURE
    err_console.print(f"wrote {len(records)} record(s) to {args.out}", markup=False)

    if records:
        console.print(summary_table(records), markup=False, soft_wrap=True)

    if failures:
        for failure in failures:
            _error(f"{failure.case.describe()}: {failure.error}")
        return EXIT_FAILURE
    return EXIT_OK


# =============================================================================
# verify
# =============================================================================


def cmd_verify(args: argparse.Namespace) -> int:
    """Compare every backend bitwise against the oracle on small-int data.

    Non-tiled backends run once per size; parallel backends run once per
    worker count.
    """
    if args.copy_tiles and not any(b.is_tiled for b in args.backends):
        logger.info("--copy-tiles has no effect on non-tiled backends")

    passed = 0
    failed: list[str] = []

    for precision in args.precisions:
        for size in args.sizes:
            a = random_filled(size, size, precision, derive_seed(args.seed, 0), FillRange.SMALL_INT)
            b = random_filled(size, size, precision, derive_seed(args.seed, 1), FillRange.SMALL_INT)
            expected = matmul_reference(a, b)

            for backend in args.backends:
                tiles = args.tiles if backend.is_tiled else args.tiles[:1]
                worker_counts = args.workers if backend.is_parallel else [1]
                for tile in tiles:
                    cfg = TileConfig(tile, copy_tiles=args.copy_tiles)
                    for workers in worker_counts:
                        label = (
                            f"{backend.value} {precision.value} {size}x{size} "
                            f"tile={tile if backend.is_tiled else '-'} workers={workers}"
                        )
                        try:
                            got = run_backend(backend, a, b, cfg, workers)
                            index = first_mismatch(got, expected)
                        except TilemmError as e:
                            console.print(f"[red]FAIL[/red] {label}: {escape(str(e))}", soft_wrap=True)
                            failed.append(f"{label}: {e}")
                            continue

                        if index is None:
                            console.print(f"[green]PASS[/green] {label}", soft_wrap=True)
                            passed += 1
                            continue

                        i, j = index
                        detail = (
                            f"first difference at ({i}, {j}): "
                            f"got {got.get(i, j)!r}, expected {expected.get(i, j)!r}"
                        )
                        console.print(f"[red]FAIL[/red] {label}: {detail}", soft_wrap=True)
                        failed.append(f"{label}: {detail}")

    console.print(f"{passed} passed, {len(failed)} failed")
    if failed:
        _error(f"first failing case: {failed[0]}")
        return EXIT_FAILURE
    return EXIT_OK


# =============================================================================
# model
# =============================================================================


def _kv_value(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def model_report(args: argparse.Namespace) -> dict[str, object]:
    """Evaluate the analytic model for one square problem as flat key/values."""
    spec = resolve_device(args.device)
    size, tile, precision = args.size, args.tile, args.precision

    grid = plan_grid(size, size, tile)
    occ = occupancy(spec, grid.block_threads)
    shared = shared_mem_fit(spec, tile, precision)
    mem = footprint(size, size, size, precision, spec)
    naive = global_load_model(size, size, size)
    tiled = global_load_model(size, size, size, tile)

    report: dict[str, object] = {
        "device": args.device,
        "m": size,
        "n": size,
        "w": size,
        "tile": tile,
        "precision": precision.value,
        "grid_x": grid.grid_x,
        "grid_y": grid.grid_y,
        "block_threads": grid.block_threads,
        "exact_fit": grid.exact_fit,
        "block_valid": occ.valid,
        "warps_per_block": occ.warps_per_block,
        "blocks_per_sm": occ.blocks_per_sm,
        "threads_per_sm": occ.threads_per_sm,
        "shared_bytes_needed": shared.bytes_needed,
        "shared_fits": shared.fits,
        "footprint_bytes": mem.bytes_total,
        "footprint_mib": mem.mib,
        "fits_global": mem.fits_global,
        "loads_a_naive": naive.loads_a,
        "loads_b_naive": naive.loads_b,
        "total_loads_naive": naive.total_loads,
        "loads_a_tiled": tiled.loads_a,
        "loads_b_tiled": tiled.loads_b,
        "total_loads_tiled": tiled.total_loads,
        "intensity_naive": arithmetic_intensity(size, size, size, precision),
        "intensity_tiled": arithmetic_intensity(size, size, size, precision, tile),
        "peak_gflops": spec.peak_gflops(precision),
        "ideal_seconds": ideal_seconds(size, size, size, spec, precision),
    }
    if args.gflops is not None:
        if args.gflops <= 0:
            raise ConfigError(f"measured GFLOPS must be positive, got {args.gflops}")
        report["peak_fraction"] = peak_fraction(args.gflops, spec, precision)
    return report


def cmd_model(args: argparse.Namespace) -> int:
    """Print grid, occupancy, shared memory, footprint and load counts."""
    try:
        report = model_report(args)
    except (DeviceSpecError, ConfigError) as e:
        _error(str(e))
        return EXIT_USAGE

    if args.json:
        console.print(json.dumps(report, indent=2), markup=False, soft_wrap=True)
    else:
        for key, value in report.items():
            console.print(f"{key}={_kv_value(value)}", markup=False, soft_wrap=True)
    return EXIT_OK


# =============================================================================
# plot
# =============================================================================


def render_plots(path: Path, kind: str, out_dir: Path, baseline: Backend | None, target: Backend | None) -> list[Path]:
    """Read a results CSV and write one SVG per (precision, reps) group.

    Raises:
        FileNotFoundError: If the CSV is missing.
        SchemaError: If the CSV is malformed.
        ConfigError: If the CSV holds no records for the requested chart.
        MissingPairError: If speedup pairs are missing.
        OSError: If the output directory or a chart cannot be written.
    """
    records = read_csv(path)
    if not records:
        raise ConfigError("no records")

    if kind == "gflops":
        charts = gflops_charts(records)
    elif kind == "time":
        charts = time_charts(records)
    else:
        assert baseline is not None and target is not None
        charts = speedup_charts(records, baseline, target)
        if not charts:
            raise ConfigError(f"no {baseline.value} or {target.value} records")

    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, spec in charts:
        out = out_dir / f"{name}.svg"
        render_chart(spec, out)
        written.append(out)
    logger.info("rendered %d chart(s) from %s", len(written), path)
    return written


def cmd_plot(args: argparse.Namespace) -> int:
    """Render charts from a results CSV, optionally re-rendering on change."""
    if args.kind == "speedup" and (args.baseline is None or args.target is None):
        _error("--kind speedup requires --baseline and --target")
        return EXIT_USAGE

    def render() -> int:
        try:
            written = render_plots(args.input, args.kind, args.out_dir, args.baseline, args.target)
        except FileNotFoundError:
            _error(f"no such file: {args.input}")
            return EXIT_FAILURE
        except MissingPairError as e:
            for size in e.sizes:
                _error(f"size {size}: missing {args.baseline.value}/{args.target.value} pair")
            return EXIT_FAILURE
        except (SchemaError, ConfigError) as e:
            _error(f"{args.input}: {e}")
            return EXIT_FAILURE
        except OSError as e:
            _error(f"cannot write charts to {args.out_dir}: {e}")
            return EXIT_FAILURE

        for out in written:
            console.print(f"wrote {out}", markup=False, soft_wrap=True)
        return EXIT_OK

    status = render()
    if not args.watch:
        return status

    from .report.watcher import ResultsWatcher

    watcher = ResultsWatcher(args.input, on_change=lambda _path: render())
    watcher.start()
    err_console.print(f"watching {args.input} (Ctrl+C to stop)", markup=False)
    try:
        while True:
            time.sleep(1)
    except KeyboardInterrupt:
        pass
    finally:
        watcher.stop()
    return EXIT_OK
