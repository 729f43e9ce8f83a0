"""CLI entry point for tilemm."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .constants import (
    DEFAULT_CHART_DIR,
    DEFAULT_REPS,
    DEFAULT_RESULTS_FILE,
    DEFAULT_SEED,
    DEFAULT_SIZES,
    DEFAULT_TILES,
    DEFAULT_WARMUP_RUNS,
    VERIFY_SIZES,
    VERIFY_TILES,
    VERIFY_WORKERS,
    WORKERS_ENV_VAR,
)
from .store.models import Backend, Precision


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _seed(text: str) -> int:
    value = _nonnegative_int(text)
    if value >= 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _split(text: str) -> list[str]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("expected a comma-separated list")
    return parts


def _int_list(text: str) -> list[int]:
    """Parse '32,64,128' into positive integers."""
    return [_positive_int(p) for p in _split(text)]


def _backend(text: str) -> Backend:
    try:
        return Backend(text)
    except ValueError:
        choices = ", ".join(b.value for b in Backend)
        raise argparse.ArgumentTypeError(f"unknown backend {text!r} (choose from {choices})") from None


def _precision(text: str) -> Precision:
    try:
        return Precision(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown precision {text!r} (choose from single, double)"
        ) from None


def _backend_list(text: str) -> list[Backend]:
    return [_backend(name) for name in _split(text)]


def _precision_list(text: str) -> list[Precision]:
    return [_precision(name) for name in _split(text)]


def _csv_list(values: tuple) -> str:
    return ",".join(str(v) for v in values)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all subcommands."""
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Increase log verbosity (-v info, -vv debug)",
    )

    parser = argparse.ArgumentParser(
        prog="tilemm",
        description="Benchmark tiled matrix multiplication and model its GPU execution",
        allow_abbrev=False,
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    # bench
    bench = subparsers.add_parser(
        "bench",
        parents=[common],
        allow_abbrev=False,
        help="Run a benchmark sweep and write results CSV",
        epilog=(
            f"Worker count: --workers, else ${WORKERS_ENV_VAR}, else the number of CPUs. "
            "Exit codes: 0 success, 1 failed case, 2 invalid configuration."
        ),
    )
    bench.add_argument(
        "--sizes", type=_int_list, default=list(DEFAULT_SIZES),
        help=f"Square matrix orders (default {_csv_list(DEFAULT_SIZES)})",
    )
    bench.add_argument(
        "--tiles", type=_int_list, default=list(DEFAULT_TILES),
        help=f"Tile edge lengths (default {_csv_list(DEFAULT_TILES)})",
    )
    bench.add_argument(
        "--precisions", type=_precision_list, default=list(Precision),
        help="Precisions: single,double (default both)",
    )
    bench.add_argument(
        "--reps", type=_int_list, default=list(DEFAULT_REPS),
        help=f"Repetition counts (default {_csv_list(DEFAULT_REPS)})",
    )
    bench.add_argument(
        "--backends", type=_backend_list, default=list(Backend),
        help="Backends: naive-seq,tiled-seq,tiled-par,naive-par (default all)",
    )
    bench.add_argument(
        "--workers", type=_positive_int, default=None,
        help=f"Worker threads for parallel backends (overrides ${WORKERS_ENV_VAR})",
    )
    bench.add_argument("--seed", type=_seed, default=DEFAULT_SEED, help="Operand seed")
    bench.add_argument(
        "--exact-fit", action="store_true",
        help="Refuse sizes not divisible by every tile",
    )
    bench.add_argument(
        "--warmup", type=_nonnegative_int, default=DEFAULT_WARMUP_RUNS,
        help="Untimed runs before each timed batch",
    )
    bench.add_argument(
        "--copy-tiles", action="store_true",
        help="Stage tiles in contiguous scratch buffers",
    )
    bench.add_argument(
        "--out", type=Path, default=Path(DEFAULT_RESULTS_FILE),
        help=f"Results CSV (default {DEFAULT_RESULTS_FILE})",
    )

    # verify
    verify = subparsers.add_parser(
        "verify",
        parents=[common],
        allow_abbrev=False,
        help="Check every backend bitwise against the reference oracle",
    )
    verify.add_argument("--sizes", type=_int_list, default=list(VERIFY_SIZES))
    verify.add_argument("--tiles", type=_int_list, default=list(VERIFY_TILES))
    verify.add_argument(
        "--workers", type=_int_list, default=list(VERIFY_WORKERS),
        help="Worker counts tried on the parallel backends",
    )
    verify.add_argument("--precisions", type=_precision_list, default=list(Precision))
    verify.add_argument("--backends", type=_backend_list, default=list(Backend))
    verify.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    verify.add_argument("--copy-tiles", action="store_true")

    # model
    model = subparsers.add_parser(
        "model",
        parents=[common],
        allow_abbrev=False,
        help="Print the analytic GPU model for one problem",
    )
    model.add_argument(
        "--device", default="geforce-940m",
        help="Device preset name or path to a key=value spec file",
    )
    model.add_argument("--size", type=_positive_int, default=2048, help="Square matrix order")
    model.add_argument("--tile", type=_positive_int, default=32, help="Tile edge length")
    model.add_argument("--precision", type=_precision, default=Precision.SINGLE)
    model.add_argument(
        "--gflops", type=float, default=None,
        help="Measured GFLOPS to express as a fraction of the device peak",
    )
    model.add_argument("--json", action="store_true", help="Print a flat JSON object")

    # plot
    plot = subparsers.add_parser(
        "plot",
        parents=[common],
        allow_abbrev=False,
        help="Render SVG charts from a results CSV",
    )
    plot.add_argument(
        "--in", dest="input", type=Path, default=Path(DEFAULT_RESULTS_FILE),
        help=f"Results CSV (default {DEFAULT_RESULTS_FILE})",
    )
    plot.add_argument("--kind", choices=("gflops", "time", "speedup"), required=True)
    plot.add_argument("--baseline", type=_backend, default=None)
    plot.add_argument("--target", type=_backend, default=None)
    plot.add_argument(
        "--out-dir", type=Path, default=Path(DEFAULT_CHART_DIR),
        help=f"Directory for SVG files (default {DEFAULT_CHART_DIR})",
    )
    plot.add_argument(
        "--watch", action="store_true",
        help="Keep running and re-render whenever the CSV changes",
    )

    return parser


def setup_logging(verbosity: int) -> None:
    """Route package logs through Rich on standard error."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    logger = logging.getLogger("tilemm")
    logger.handlers.clear()
    handler = RichHandler(console=Console(stderr=True), show_path=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level)


def main(argv: list[str] | None = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    # Import here so --help and --version stay fast (no JIT setup)
    from . import commands

    handlers = {
        "bench": commands.cmd_bench,
        "verify": commands.cmd_verify,
        "model": commands.cmd_model,
        "plot": commands.cmd_plot,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
