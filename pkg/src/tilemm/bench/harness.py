"""Timed, verified execution of kernel backends over benchmark sweeps."""

from __future__ import annotations

import logging
import os
import time
from collections.abc import Callable, Mapping
from dataclasses import dataclass

import numpy as np

from ..constants import DEFAULT_SEED, DEFAULT_WARMUP_RUNS, WORKERS_ENV_VAR
from ..errors import ConfigError, TilemmError, VerificationError
from ..kernels import matmul_reference, run_backend
from ..matrix import FillRange, Matrix, first_mismatch, oracle_rel_tol, random_filled
from ..store.models import Backend, BenchmarkConfig, BenchmarkRecord, Precision, TileConfig
from .metrics import gflops

logger = logging.getLogger(__name__)

# Seed streams for the two operands of a case
STREAM_A = 0
STREAM_B = 1


def resolve_workers(flag: int | None = None, environ: Mapping[str, str] | None = None) -> int:
    """Worker count: explicit flag, then environment variable, then CPU count.

    Raises:
        ConfigError: If the chosen value is not a positive integer.
    """
    if flag is not None:
        if flag < 1:
            raise ConfigError(f"workers must be >= 1, got {flag}")
        return flag

    env = os.environ if environ is None else environ
    raw = env.get(WORKERS_ENV_VAR)
    if raw:
        try:
            workers = int(raw)
        except ValueError:
            raise ConfigError(f"{WORKERS_ENV_VAR} must be an integer, got {raw!r}") from None
        if workers < 1:
            raise ConfigError(f"{WORKERS_ENV_VAR} must be >= 1, got {workers}")
        return workers

    return os.cpu_count() or 1


def derive_seed(seed: int, stream: int) -> int:
    """Independent 64-bit seed for one operand stream of a base seed."""
    state = np.random.SeedSequence([seed, stream]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def case_operands(precision: Precision, size: int, seed: int) -> tuple[Matrix, Matrix]:
    """Regenerate the unit-real A and B of a square case."""
    a = random_filled(size, size, precision, derive_seed(seed, STREAM_A), FillRange.UNIT_REAL)
    b = random_filled(size, size, precision, derive_seed(seed, STREAM_B), FillRange.UNIT_REAL)
    return a, b


@dataclass(frozen=True)
class BenchmarkCase:
    """One row of a sweep: a single backend/precision/size/tile/reps setting."""

    backend: Backend
    precision: Precision
    size: int
    tile: int
    reps: int
    workers: int = 1
    seed: int = DEFAULT_SEED
    warmup_runs: int = DEFAULT_WARMUP_RUNS
    exact_fit: bool = False
    copy_tiles: bool = False

    @property
    def effective_workers(self) -> int:
        """Workers actually used; sequential backends always run on one."""
        return self.workers if self.backend.is_parallel else 1

    def describe(self) -> str:
        return (
            f"{self.backend.value} {self.precision.value} {self.size}x{self.size} "
            f"tile={self.tile} reps={self.reps} workers={self.effective_workers}"
        )


@dataclass
class CaseFailure:
    """A sweep case that raised instead of producing a record."""

    case: BenchmarkCase
    error: TilemmError

    @property
    def is_verification(self) -> bool:
        return isinstance(self.error, VerificationError)


def _check_case(case: BenchmarkCase) -> None:
    if case.size < 1:
        raise ConfigError(f"size must be >= 1, got {case.size}")
    if case.reps < 1:
        raise ConfigError(f"reps must be >= 1, got {case.reps}")
    if case.workers < 1:
        raise ConfigError(f"workers must be >= 1, got {case.workers}")
    if case.warmup_runs < 0:
        raise ConfigError(f"warmup runs must be >= 0, got {case.warmup_runs}")
    if case.exact_fit and case.size % case.tile:
        raise ConfigError(f"exact-fit: tile {case.tile} does not divide size {case.size}")


def _clock_resolution() -> float:
    return time.get_clock_info("perf_counter").resolution


def run_case(case: BenchmarkCase, reference: Matrix | None = None) -> BenchmarkRecord:
    """Time ``case.reps`` consecutive products and return a verified record.

    Operands are regenerated from the case seed. ``warmup_runs`` untimed
    products run first; the monotonic clock then wraps the whole batch of
    repetitions. The last product is checked against the oracle before the
    record is built.

    Args:
        case: The case to run.
        reference: Precomputed oracle product for these operands, if the
            caller already has it.

    Returns:
        The measurement record.

    Raises:
        ConfigError: If the case violates a precondition.
        VerificationError: If the product disagrees with the oracle.
    """
    _check_case(case)
    cfg = TileConfig(case.tile, copy_tiles=case.copy_tiles)
    workers = case.effective_workers
    a, b = case_operands(case.precision, case.size, case.seed)
    logger.debug("running %s", case.describe())

    for _ in range(case.warmup_runs):
        run_backend(case.backend, a, b, cfg, workers)

    start = time.perf_counter()
    for _ in range(case.reps):
        product = run_backend(case.backend, a, b, cfg, workers)
    total = time.perf_counter() - start

    if reference is None:
        reference = matmul_reference(a, b)
    rel_tol = oracle_rel_tol(case.size, case.precision)
    index = first_mismatch(product, reference, rel_tol=rel_tol)
    if index is not None:
        raise VerificationError(case.describe(), index)

    clamped = False
    if total <= 0:
        total = _clock_resolution()
        clamped = True
        logger.warning("zero duration for %s clamped to %.3g s", case.describe(), total)

    avg = total / case.reps
    record = BenchmarkRecord(
        backend=case.backend,
        precision=case.precision,
        m=case.size,
        n=case.size,
        w=case.size,
        tile=case.tile,
        reps=case.reps,
        workers=workers,
        total_seconds=total,
        avg_seconds=avg,
        gflops=gflops(case.size, case.size, case.size, avg),
        timer_clamped=clamped,
    )
    logger.info(
        "%s: %.6g s/rep, %.4g GFLOPS", case.describe(), record.avg_seconds, record.gflops
    )
    return record


def iter_cases(config: BenchmarkConfig) -> list[BenchmarkCase]:
    """Expand a config into cases, ordered backend > precision > size > tile > reps."""
    return [
        BenchmarkCase(
            backend=backend,
            precision=precision,
            size=size,
            tile=tile,
            reps=reps,
            workers=config.workers,
            seed=config.seed,
            warmup_runs=config.warmup_runs,
            exact_fit=config.exact_fit,
            copy_tiles=config.copy_tiles,
        )
        for backend in config.backends
        for precision in config.precisions
        for size in config.sizes
        for tile in config.tiles
        for reps in config.reps_list
    ]


def sweep(
    config: BenchmarkConfig,
    on_failure: Callable[[CaseFailure], None] | None = None,
    on_record: Callable[[BenchmarkRecord], None] | None = None,
) -> list[BenchmarkRecord]:
    """Run every case of a config in deterministic order.

    A failing case is logged, reported to ``on_failure`` and skipped; it
    does not stop the sweep.

    Args:
        config: The sweep to run; validated first.
        on_failure: Callback for each failed case.
        on_record: Callback for each record as soon as it is produced.

    Returns:
        Records in execution order.

    Raises:
        ConfigError: If the config is invalid.
    """
    config.validate()
    cases = iter_cases(config)
    logger.info("sweep of %d case(s)", len(cases))

    # The oracle product only depends on (precision, size, seed); keep the latest
    oracle_key: tuple[Precision, int] | None = None
    oracle: Matrix | None = None

    records: list[BenchmarkRecord] = []
    for case in cases:
        key = (case.precision, case.size)
        try:
            if key != oracle_key:
                oracle = matmul_reference(*case_operands(case.precision, case.size, case.seed))
                oracle_key = key
            record = run_case(case, reference=oracle)
        except TilemmError as e:
            logger.warning("case %s failed: %s", case.describe(), e)
            if on_failure:
                on_failure(CaseFailure(case, e))
            continue

        records.append(record)
        if on_record:
            on_record(record)

    return records
