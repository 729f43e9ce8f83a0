"""Dense row-major matrices, deterministic generation and comparison.

Matrices wrap a two-dimensional C-contiguous NumPy array whose dtype is fixed
by the matrix precision. Element (i, j) lives at flat index ``i * cols + j``.

Test and benchmark data come from NumPy's PCG64 generator. The generator is
part of the repository contract: changing it would invalidate stored results.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .constants import SMALL_INT_HIGH, SMALL_INT_LOW, TOLERANCE_FACTOR
from .errors import ConfigError, PrecisionMismatchError, ShapeError
from .store.models import Precision


class FillRange(Enum):
    """Value distribution used by random_filled."""

    SMALL_INT = "small-int"  # integers in [-8, 8], exact in float32
    UNIT_REAL = "unit-real"  # reals in [0, 1)


@dataclass(eq=False)
class Matrix:
    """A dense row-major matrix tagged with its precision."""

    data: np.ndarray

    def __post_init__(self) -> None:
        if self.data.ndim != 2:
            raise ShapeError(f"matrix data must be 2-D, got {self.data.ndim}-D")
        rows, cols = self.data.shape
        if rows < 1 or cols < 1:
            raise ShapeError(f"matrix dimensions must be positive, got {rows}x{cols}")
        # Validates the dtype as a side effect
        Precision.from_dtype(self.data.dtype)
        self.data = np.ascontiguousarray(self.data)

    @classmethod
    def from_rows(cls, rows: list[list[float]], precision: Precision) -> Matrix:
        """Build a matrix from nested Python lists."""
        return cls(np.array(rows, dtype=precision.dtype, ndmin=2))

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def precision(self) -> Precision:
        return Precision.from_dtype(self.data.dtype)

    @property
    def flat(self) -> np.ndarray:
        """Row-major view of the elements, length rows * cols."""
        return self.data.reshape(-1)

    def _check_index(self, i: int, j: int) -> None:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) out of range for {self.rows}x{self.cols} matrix")

    def get(self, i: int, j: int) -> float:
        self._check_index(i, j)
        return float(self.data[i, j])

    def set(self, i: int, j: int, value: float) -> None:
        self._check_index(i, j)
        self.data[i, j] = value

    def to_list(self) -> list[list[float]]:
        return [[float(v) for v in row] for row in self.data]

    def trace(self) -> float:
        return float(np.trace(self.data, dtype=np.float64))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, {self.precision.value})"


def _check_dims(rows: int, cols: int) -> None:
    if rows < 1 or cols < 1:
        raise ShapeError(f"matrix dimensions must be positive, got {rows}x{cols}")


def zeros(rows: int, cols: int, precision: Precision) -> Matrix:
    """Create a matrix with every element equal to 0.0.

    Raises:
        ShapeError: If either dimension is below 1.
    """
    _check_dims(rows, cols)
    return Matrix(np.zeros((rows, cols), dtype=precision.dtype))


def identity(order: int, precision: Precision) -> Matrix:
    """Create the order x order identity matrix."""
    _check_dims(order, order)
    return Matrix(np.eye(order, dtype=precision.dtype))


def random_filled(
    rows: int,
    cols: int,
    precision: Precision,
    seed: int,
    fill: FillRange = FillRange.SMALL_INT,
) -> Matrix:
    """Create a pseudo-random matrix, a pure function of its arguments.

    Args:
        rows: Number of rows.
        cols: Number of columns.
        precision: Element precision.
        seed: 64-bit unsigned seed for the PCG64 generator.
        fill: Value distribution. ``SMALL_INT`` draws integers uniformly from
            [-8, 8]; ``UNIT_REAL`` draws reals uniformly from [0, 1).

    Returns:
        The generated matrix.

    Raises:
        ShapeError: If either dimension is below 1.
        ConfigError: If the seed does not fit in 64 unsigned bits.
    """
    _check_dims(rows, cols)
    if not 0 <= seed < 2**64:
        raise ConfigError(f"seed must be a 64-bit unsigned integer, got {seed}")

    rng = np.random.Generator(np.random.PCG64(seed))
    if fill is FillRange.SMALL_INT:
        values = rng.integers(SMALL_INT_LOW, SMALL_INT_HIGH, size=(rows, cols), endpoint=True)
        return Matrix(values.astype(precision.dtype))

    # Drawing directly in the target dtype keeps float32 values below 1.0
    return Matrix(rng.random((rows, cols), dtype=precision.dtype))


def _check_comparable(a: Matrix, b: Matrix) -> None:
    if a.shape != b.shape:
        raise ShapeError(f"cannot compare {a.rows}x{a.cols} with {b.rows}x{b.cols}")
    if a.precision is not b.precision:
        raise PrecisionMismatchError(
            f"cannot compare {a.precision.value} with {b.precision.value}"
        )


def first_mismatch(
    a: Matrix, b: Matrix, rel_tol: float = 0.0, abs_tol: float = 0.0
) -> tuple[int, int] | None:
    """Row-major index of the first element outside tolerance, or None.

    With both tolerances at zero this is the first element where a and b
    differ.

    Raises:
        ShapeError: On dimension mismatch.
        PrecisionMismatchError: On precision mismatch.
        ConfigError: If a tolerance is negative.
    """
    _check_comparable(a, b)
    if rel_tol < 0 or abs_tol < 0:
        raise ConfigError("tolerances must be nonnegative")

    x = a.data.astype(np.float64)
    y = b.data.astype(np.float64)
    bound = np.maximum(abs_tol, rel_tol * np.maximum(np.abs(x), np.abs(y)))
    bad = np.argwhere(~(np.abs(x - y) <= bound))
    if bad.size == 0:
        return None
    i, j = bad[0]
    return int(i), int(j)


def approx_eq(a: Matrix, b: Matrix, rel_tol: float = 0.0, abs_tol: float = 0.0) -> bool:
    """Element-wise closeness test.

    True iff for every position ``|a - b| <= max(abs_tol, rel_tol * max(|a|, |b|))``.
    The comparison is symmetric in ``a`` and ``b``.
    """
    return first_mismatch(a, b, rel_tol, abs_tol) is None


def oracle_rel_tol(n: int, precision: Precision) -> float:
    """Relative tolerance for real-valued products with reduction length n."""
    return n * precision.epsilon * TOLERANCE_FACTOR
