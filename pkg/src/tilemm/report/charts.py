"""Static SVG line charts of benchmark results.

Charts are assembled as plain SVG 1.1 markup. Every coordinate is formatted
with a fixed number of decimals, so identical ChartSpecs render to
byte-identical files.
"""

from __future__ import annotations

import math
from collections import defaultdict
from pathlib import Path
from xml.sax.saxutils import escape

from ..bench.metrics import speedup
from ..constants import (
    CHART_MARGIN_BOTTOM,
    CHART_MARGIN_LEFT,
    CHART_MARGIN_RIGHT,
    CHART_MARGIN_TOP,
    CHART_Y_TICKS,
    SERIES_COLORS,
    SERIES_DASHES,
)
from ..errors import ConfigError, MissingPairError
from ..store.models import Backend, BenchmarkRecord, ChartSeries, ChartSpec, Precision

# (precision, tile, reps)
SeriesKey = tuple[Precision, int, int]


# =============================================================================
# Series Derivation
# =============================================================================


def derive_speedup_series(
    records: list[BenchmarkRecord],
    baseline_backend: Backend,
    target_backend: Backend,
    key: SeriesKey,
) -> ChartSeries:
    """Speedup of ``target_backend`` over ``baseline_backend`` per matrix size.

    Args:
        records: Benchmark records to draw from.
        baseline_backend: Backend in the numerator (its time).
        target_backend: Backend in the denominator.
        key: (precision, tile, reps) selecting the records to pair.

    Returns:
        One point per size, ascending: (size, baseline avg / target avg).

    Raises:
        ConfigError: If no record matches the key, or a size has more than
            one record for a backend.
        MissingPairError: If some sizes lack a baseline or target record.
    """
    precision, tile, reps = key
    by_backend: dict[Backend, dict[int, list[BenchmarkRecord]]] = defaultdict(lambda: defaultdict(list))
    for record in records:
        if (record.precision, record.tile, record.reps) == key and record.backend in (
            baseline_backend,
            target_backend,
        ):
            by_backend[record.backend][record.size].append(record)

    sizes = sorted(set(by_backend[baseline_backend]) | set(by_backend[target_backend]))
    if not sizes:
        raise ConfigError(
            f"no records for {precision.value} tile={tile} reps={reps}"
        )

    missing = [
        s for s in sizes if not by_backend[baseline_backend][s] or not by_backend[target_backend][s]
    ]
    if missing:
        raise MissingPairError(missing)

    points = []
    for size in sizes:
        base = by_backend[baseline_backend][size]
        cand = by_backend[target_backend][size]
        if len(base) > 1 or (baseline_backend is not target_backend and len(cand) > 1):
            raise ConfigError(f"more than one record per backend at size {size}")
        points.append((float(size), speedup(base[0].avg_seconds, cand[0].avg_seconds)))

    label = f"{target_backend.value} vs {baseline_backend.value} (tile {tile})"
    return ChartSeries(label=label, points=points)


def _groups(records: list[BenchmarkRecord]) -> dict[tuple[Precision, int], list[BenchmarkRecord]]:
    """Records grouped per (precision, reps), groups in deterministic order."""
    precision_order = list(Precision)
    grouped: dict[tuple[Precision, int], list[BenchmarkRecord]] = defaultdict(list)
    for record in records:
        grouped[(record.precision, record.reps)].append(record)
    return {
        k: grouped[k]
        for k in sorted(grouped, key=lambda k: (precision_order.index(k[0]), k[1]))
    }


def _metric_series(records: list[BenchmarkRecord], metric: str) -> list[ChartSeries]:
    """One series per (backend, tile); a repeated size is a ConfigError."""
    backend_order = list(Backend)
    lines: dict[tuple[Backend, int], dict[int, float]] = defaultdict(dict)
    for record in records:
        line = lines[(record.backend, record.tile)]
        if record.size in line:
            raise ConfigError(
                f"more than one {record.backend.value} tile={record.tile} record at size {record.size}"
            )
        line[record.size] = getattr(record, metric)

    series = []
    for backend, tile in sorted(lines, key=lambda k: (backend_order.index(k[0]), k[1])):
        points = sorted((float(s), y) for s, y in lines[(backend, tile)].items())
        series.append(ChartSeries(label=f"{backend.value} (tile {tile})", points=points))
    return series


def _group_name(kind: str, precision: Precision, reps: int) -> str:
    return f"{kind}_{precision.value}_reps{reps}"


def gflops_charts(records: list[BenchmarkRecord]) -> list[tuple[str, ChartSpec]]:
    """One GFLOPS-versus-size chart per (precision, reps) group.

    Raises:
        ConfigError: If a backend/tile pair repeats a size within a group.
    """
    return [
        (
            _group_name("gflops", precision, reps),
            ChartSpec(
                title=f"GFLOPS, {precision.value} precision, {reps} rep(s)",
                x_label="matrix order",
                y_label="GFLOPS",
                series=_metric_series(group, "gflops"),
            ),
        )
        for (precision, reps), group in _groups(records).items()
    ]


def time_charts(records: list[BenchmarkRecord]) -> list[tuple[str, ChartSpec]]:
    """One time-versus-size chart per (precision, reps) group.

    Raises:
        ConfigError: If a backend/tile pair repeats a size within a group.
    """
    return [
        (
            _group_name("time", precision, reps),
            ChartSpec(
                title=f"Execution time, {precision.value} precision, {reps} rep(s)",
                x_label="matrix order",
                y_label="seconds per multiply",
                series=_metric_series(group, "avg_seconds"),
            ),
        )
        for (precision, reps), group in _groups(records).items()
    ]


def speedup_charts(
    records: list[BenchmarkRecord], baseline: Backend, target: Backend
) -> list[tuple[str, ChartSpec]]:
    """One speedup-versus-size chart per (precision, reps) group.

    Each chart holds one series per tile that appears in the group.

    Raises:
        MissingPairError: If a tile's series lacks pairs for some sizes.
    """
    charts = []
    for (precision, reps), group in _groups(records).items():
        tiles = sorted({r.tile for r in group if r.backend in (baseline, target)})
        series = [
            derive_speedup_series(group, baseline, target, (precision, tile, reps))
            for tile in tiles
        ]
        if not series:
            continue
        charts.append(
            (
                _group_name("speedup", precision, reps),
                ChartSpec(
                    title=(
                        f"Speedup of {target.value} over {baseline.value}, "
                        f"{precision.value} precision, {reps} rep(s)"
                    ),
                    x_label="matrix order",
                    y_label="speedup",
                    series=series,
                ),
            )
        )
    return charts


# =============================================================================
# Axis Arithmetic
# =============================================================================


def _nice_step(raw: float) -> float:
    """Round a raw tick interval up to 1, 2 or 5 times a power of ten."""
    exponent = math.floor(math.log10(raw))
    fraction = raw / 10**exponent
    for nice in (1, 2, 5):
        if fraction <= nice:
            return nice * 10**exponent
    return 10 * 10**exponent


def _linear_ticks(lo: float, hi: float, intervals: int) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    step = _nice_step((hi - lo) / intervals)
    start = math.floor(lo / step)
    stop = math.ceil(hi / step)
    return [k * step for k in range(start, stop + 1)]


def _log2_ticks(lo: float, hi: float) -> list[float]:
    first = math.floor(math.log2(lo))
    last = math.ceil(math.log2(hi))
    if last == first:
        last += 1
    return [float(2**e) for e in range(first, last + 1)]


def _format_tick(value: float) -> str:
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return f"{value:.6g}"


def _num(value: float) -> str:
    return f"{value:.2f}"


# =============================================================================
# Rendering
# =============================================================================


def chart_svg(spec: ChartSpec) -> str:
    """Render a ChartSpec as standalone SVG markup.

    Raises:
        ConfigError: If the chart has no series.
    """
    if not spec.series:
        raise ConfigError(f"chart {spec.title!r} has no series")

    xs = [x for s in spec.series for x, _ in s.points]
    ys = [y for s in spec.series for _, y in s.points]

    left = CHART_MARGIN_LEFT
    right = spec.width_px - CHART_MARGIN_RIGHT
    top = CHART_MARGIN_TOP
    bottom = spec.height_px - CHART_MARGIN_BOTTOM

    if spec.x_log2:
        x_ticks = _log2_ticks(min(xs), max(xs))
        x_lo, x_hi = math.log2(x_ticks[0]), math.log2(x_ticks[-1])

        def x_pos(x: float) -> float:
            return left + (math.log2(x) - x_lo) / (x_hi - x_lo) * (right - left)

    else:
        x_ticks = _linear_ticks(min(0.0, min(xs)), max(xs), CHART_Y_TICKS)
        x_lo, x_hi = x_ticks[0], x_ticks[-1]

        def x_pos(x: float) -> float:
            return left + (x - x_lo) / (x_hi - x_lo) * (right - left)

    y_ticks = _linear_ticks(min(0.0, min(ys)), max(ys), CHART_Y_TICKS)
    y_lo, y_hi = y_ticks[0], y_ticks[-1]

    def y_pos(y: float) -> float:
        return bottom - (y - y_lo) / (y_hi - y_lo) * (bottom - top)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{spec.width_px}" height="{spec.height_px}" '
            f'viewBox="0 0 {spec.width_px} {spec.height_px}" '
            f'font-family="Arial, sans-serif" font-size="12">'
        ),
        f'<rect x="0" y="0" width="{spec.width_px}" height="{spec.height_px}" fill="white"/>',
        (
            f'<text x="{_num((left + right) / 2)}" y="{_num(top / 2)}" '
            f'text-anchor="middle" font-size="15">{escape(spec.title)}</text>'
        ),
    ]

    # Grid and tick labels
    for tick in x_ticks:
        x = x_pos(tick)
        out.append(
            f'<line class="grid" x1="{_num(x)}" y1="{_num(top)}" x2="{_num(x)}" '
            f'y2="{_num(bottom)}" stroke="#e6e6e6"/>'
        )
        out.append(
            f'<text x="{_num(x)}" y="{_num(bottom + 18)}" text-anchor="middle">'
            f"{_format_tick(tick)}</text>"
        )
    for tick in y_ticks:
        y = y_pos(tick)
        out.append(
            f'<line class="grid" x1="{_num(left)}" y1="{_num(y)}" x2="{_num(right)}" '
            f'y2="{_num(y)}" stroke="#e6e6e6"/>'
        )
        out.append(
            f'<text x="{_num(left - 8)}" y="{_num(y + 4)}" text-anchor="end">'
            f"{_format_tick(tick)}</text>"
        )

    # Axes
    out.append(
        f'<line x1="{_num(left)}" y1="{_num(bottom)}" x2="{_num(right)}" '
        f'y2="{_num(bottom)}" stroke="black"/>'
    )
    out.append(
        f'<line x1="{_num(left)}" y1="{_num(top)}" x2="{_num(left)}" '
        f'y2="{_num(bottom)}" stroke="black"/>'
    )
    out.append(
        f'<text x="{_num((left + right) / 2)}" y="{_num(spec.height_px - 15)}" '
        f'text-anchor="middle">{escape(spec.x_label)}'
        f'{" (log2 scale)" if spec.x_log2 else ""}</text>'
    )
    y_mid = (top + bottom) / 2
    out.append(
        f'<text x="20" y="{_num(y_mid)}" text-anchor="middle" '
        f'transform="rotate(-90 20 {_num(y_mid)})">{escape(spec.y_label)}</text>'
    )

    # Series and legend
    for index, series in enumerate(spec.series):
        color = SERIES_COLORS[index % len(SERIES_COLORS)]
        dash = SERIES_DASHES[(index // len(SERIES_COLORS)) % len(SERIES_DASHES)]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        coords = " ".join(f"{_num(x_pos(x))},{_num(y_pos(y))}" for x, y in series.points)
        out.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="2"{dash_attr}/>'
        )
        for x, y in series.points:
            out.append(
                f'<circle cx="{_num(x_pos(x))}" cy="{_num(y_pos(y))}" r="3" fill="{color}"/>'
            )

        legend_y = top + 10 + index * 18
        out.append(
            f'<line x1="{_num(right + 15)}" y1="{_num(legend_y)}" x2="{_num(right + 40)}" '
            f'y2="{_num(legend_y)}" stroke="{color}" stroke-width="2"{dash_attr}/>'
        )
        out.append(
            f'<text x="{_num(right + 45)}" y="{_num(legend_y + 4)}">{escape(series.label)}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_chart(spec: ChartSpec, path: Path) -> None:
    """Write a ChartSpec to ``path`` as a standalone SVG file."""
    content = chart_svg(spec)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(content)
