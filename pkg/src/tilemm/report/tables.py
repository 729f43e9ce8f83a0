"""Markdown summary tables of benchmark records."""

from __future__ import annotations

from collections import defaultdict

from ..errors import ConfigError
from ..store.models import Backend, BenchmarkRecord, Precision


def format_gflops(value: float) -> str:
    """Four significant digits, e.g. 0.123456 -> '0.1235'."""
    return f"{value:.4g}"


def summary_table(records: list[BenchmarkRecord]) -> str:
    """GFLOPS tables, one per (precision, reps) group.

    Columns are matrix sizes, rows are backend/tile pairs. Groups, rows and
    columns are sorted deterministically; absent cells show ``-``.

    Raises:
        ConfigError: If ``records`` is empty.
    """
    if not records:
        raise ConfigError("no records to summarize")

    precision_order = list(Precision)
    backend_order = list(Backend)

    groups: dict[tuple[Precision, int], list[BenchmarkRecord]] = defaultdict(list)
    for record in records:
        groups[(record.precision, record.reps)].append(record)

    sections = []
    for precision, reps in sorted(groups, key=lambda k: (precision_order.index(k[0]), k[1])):
        group = groups[(precision, reps)]
        sizes = sorted({r.size for r in group})
        cells: dict[tuple[Backend, int], dict[int, float]] = defaultdict(dict)
        for record in group:
            cells[(record.backend, record.tile)][record.size] = record.gflops

        lines = [
            f"### {precision.value} precision, reps={reps} (GFLOPS)",
            "",
            "| backend | tile | " + " | ".join(str(s) for s in sizes) + " |",
            "|---|---:|" + "---:|" * len(sizes),
        ]
        for backend, tile in sorted(cells, key=lambda k: (backend_order.index(k[0]), k[1])):
            row = cells[(backend, tile)]
            values = [format_gflops(row[s]) if s in row else "-" for s in sizes]
            lines.append(f"| {backend.value} | {tile} | " + " | ".join(values) + " |")
        sections.append("\n".join(lines))

    return "\n\n".join(sections) + "\n"
