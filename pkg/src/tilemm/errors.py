"""Exception hierarchy for tilemm.

Library code raises these; only the CLI translates them into exit codes.
"""

from __future__ import annotations


class TilemmError(Exception):
    """Base class for all tilemm errors."""


class ShapeError(TilemmError, ValueError):
    """Invalid matrix dimensions or incompatible operand shapes."""


class PrecisionMismatchError(TilemmError, ValueError):
    """Operands carry different precisions."""


class ConfigError(TilemmError, ValueError):
    """Invalid tile, worker count, benchmark configuration or metric input."""


class DeviceSpecError(TilemmError):
    """Unknown device preset or malformed device spec file."""


class VerificationError(TilemmError):
    """A kernel product disagreed with the reference oracle."""

    def __init__(self, case: str, index: tuple[int, int] | None = None) -> None:
        self.case = case
        self.index = index
        detail = f" (first mismatch at {index})" if index is not None else ""
        super().__init__(f"verification failed for {case}{detail}")


class SchemaError(TilemmError):
    """A results CSV does not match the expected schema."""

    def __init__(self, message: str, line_number: int) -> None:
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class MissingPairError(TilemmError):
    """Speedup derivation found sizes without a baseline/target pair."""

    def __init__(self, sizes: list[int]) -> None:
        self.sizes = sizes
        listed = ", ".join(str(s) for s in sizes)
        super().__init__(f"missing baseline/target pairs for sizes: {listed}")
