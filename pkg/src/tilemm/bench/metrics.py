"""Throughput and speedup arithmetic."""

from __future__ import annotations

from ..errors import ConfigError


def gflops(m: int, n: int, w: int, seconds: float) -> float:
    """Billions of floating-point operations per second of one product.

    A product of (m x n) by (n x w) costs 2*m*n*w flops: one multiply and one
    add per inner step.

    Raises:
        ConfigError: If ``seconds`` is not positive.
    """
    if not seconds > 0:
        raise ConfigError(f"duration must be positive, got {seconds}")
    # Scaling the duration first keeps power-of-two flop counts exact
    return 2 * m * n * w / (seconds * 1e9)


def speedup(baseline_seconds: float, candidate_seconds: float) -> float:
    """Measured ratio of baseline time to candidate time.

    Raises:
        ConfigError: If either duration is not positive.
    """
    if not baseline_seconds > 0 or not candidate_seconds > 0:
        raise ConfigError(
            f"durations must be positive, got {baseline_seconds} and {candidate_seconds}"
        )
    return baseline_seconds / candidate_seconds
