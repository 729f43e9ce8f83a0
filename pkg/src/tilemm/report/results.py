"""Reading and writing benchmark records as CSV.

The header is fixed; reals are written with ``repr`` so every float
survives a write/read round trip exactly.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

from ..constants import CSV_COLUMNS
from ..errors import SchemaError
from ..store.models import Backend, BenchmarkRecord, Precision


def _format_row(record: BenchmarkRecord) -> list[str]:
    return [
        record.backend.value,
        record.precision.value,
        str(record.m),
        str(record.n),
        str(record.w),
        str(record.tile),
        str(record.reps),
        str(record.workers),
        repr(record.total_seconds),
        repr(record.avg_seconds),
        repr(record.gflops),
    ]


def write_csv(records: list[BenchmarkRecord], path: Path) -> None:
    """Write records under the fixed header, LF line endings."""
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for record in records:
            writer.writerow(_format_row(record))


def _parse_row(row: list[str], line_number: int) -> BenchmarkRecord:
    if len(row) != len(CSV_COLUMNS):
        raise SchemaError(
            f"expected {len(CSV_COLUMNS)} fields, got {len(row)}", line_number
        )
    fields = dict(zip(CSV_COLUMNS, row))

    try:
        backend = Backend(fields["backend"])
    except ValueError:
        raise SchemaError(f"unknown backend {fields['backend']!r}", line_number) from None
    try:
        precision = Precision(fields["precision"])
    except ValueError:
        raise SchemaError(f"unknown precision {fields['precision']!r}", line_number) from None

    values: dict[str, int | float] = {}
    for name in ("m", "n", "w", "tile", "reps", "workers"):
        try:
            values[name] = int(fields[name])
        except ValueError:
            raise SchemaError(f"field {name}: not an integer: {fields[name]!r}", line_number) from None
        if values[name] < 1:
            raise SchemaError(f"field {name}: must be at least 1, got {fields[name]!r}", line_number)
    for name in ("total_seconds", "avg_seconds", "gflops"):
        try:
            values[name] = float(fields[name])
        except ValueError:
            raise SchemaError(f"field {name}: not a number: {fields[name]!r}", line_number) from None
        if not math.isfinite(values[name]) or values[name] <= 0:
            raise SchemaError(
                f"field {name}: must be finite and positive, got {fields[name]!r}", line_number
            )

    return BenchmarkRecord(backend=backend, precision=precision, **values)  # type: ignore[arg-type]


def read_csv(path: Path) -> list[BenchmarkRecord]:
    """Parse a results CSV written by write_csv.

    Raises:
        FileNotFoundError: If the file does not exist.
        SchemaError: On a header mismatch, an unparsable or out-of-range
            row, or bytes that are not UTF-8; the error carries the
            offending line number.
    """
    records: list[BenchmarkRecord] = []
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        try:
            header = next(reader, None)
            if header is None or tuple(header) != CSV_COLUMNS:
                raise SchemaError(
                    f"header must be {','.join(CSV_COLUMNS)!r}, got {','.join(header or [])!r}", 1
                )
            for row in reader:
                if not row:
                    continue
                records.append(_parse_row(row, reader.line_num))
        except UnicodeDecodeError as e:
            raise SchemaError(f"not valid UTF-8: {e.reason}", reader.line_num + 1) from None
    return records
