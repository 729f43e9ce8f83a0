"""GPU device limit sheets: built-in presets and key=value spec files."""

from __future__ import annotations

import logging
from dataclasses import dataclass, fields
from pathlib import Path

from ..constants import DEVICE_PRESETS
from ..errors import DeviceSpecError
from ..store.models import Precision

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeviceSpec:
    """Execution limits of a GPU, as needed by the analytic model."""

    sm_count: int
    cores_per_sm: int
    warp_size: int
    max_threads_per_block: int
    max_threads_per_sm: int
    max_blocks_per_sm: int
    global_mem_bytes: int
    shared_mem_bytes_per_sm: int
    peak_gflops_single: float
    peak_gflops_double: float

    def __post_init__(self) -> None:
        for spec_field in fields(self):
            value = getattr(self, spec_field.name)
            if value <= 0:
                raise DeviceSpecError(f"{spec_field.name} must be positive, got {value}")
        if self.max_threads_per_sm < self.max_threads_per_block:
            raise DeviceSpecError("max_threads_per_sm must be >= max_threads_per_block")

    @property
    def total_cores(self) -> int:
        return self.sm_count * self.cores_per_sm

    def peak_gflops(self, precision: Precision) -> float:
        """Peak arithmetic rate for the given precision."""
        if precision is Precision.SINGLE:
            return self.peak_gflops_single
        return self.peak_gflops_double


def _field_types() -> dict[str, type]:
    return {
        f.name: float if f.name.startswith("peak_") else int for f in fields(DeviceSpec)
    }


def get_preset(name: str) -> DeviceSpec:
    """Look up a built-in device preset by name.

    Raises:
        DeviceSpecError: If no preset has that name.
    """
    values = DEVICE_PRESETS.get(name.lower())
    if values is None:
        known = ", ".join(sorted(DEVICE_PRESETS))
        raise DeviceSpecError(f"unknown device preset {name!r} (known: {known})")
    return DeviceSpec(**values)  # type: ignore[arg-type]


def parse_device_spec(content: str, source: str = "<string>") -> DeviceSpec:
    """Parse a flat ``key=value`` device description.

    Blank lines and ``#`` comments are ignored. Keys are DeviceSpec field
    names; every field is required and unknown keys are rejected.

    Args:
        content: File contents.
        source: Name used in error messages.

    Returns:
        The parsed DeviceSpec.

    Raises:
        DeviceSpecError: On syntax errors, unknown or missing keys, or
            unparsable values.
    """
    types = _field_types()
    values: dict[str, int | float] = {}

    for line_number, raw in enumerate(content.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DeviceSpecError(f"{source}:{line_number}: expected key=value, got {raw!r}")

        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in types:
            raise DeviceSpecError(f"{source}:{line_number}: unknown key {key!r}")
        if key in values:
            raise DeviceSpecError(f"{source}:{line_number}: duplicate key {key!r}")
        try:
            values[key] = types[key](value)
        except ValueError:
            raise DeviceSpecError(
                f"{source}:{line_number}: invalid value {value!r} for {key}"
            ) from None

    missing = [name for name in types if name not in values]
    if missing:
        raise DeviceSpecError(f"{source}: missing keys: {', '.join(missing)}")

    return DeviceSpec(**values)  # type: ignore[arg-type]


def load_device_spec(path: Path) -> DeviceSpec:
    """Load a device spec file."""
    logger.debug("loading device spec from %s", path)
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DeviceSpecError(f"cannot read device spec {path}: {e}") from e
    return parse_device_spec(content, source=str(path))


def resolve_device(name_or_path: str) -> DeviceSpec:
    """Resolve a preset name, falling back to a spec file path."""
    if name_or_path.lower() in DEVICE_PRESETS:
        return get_preset(name_or_path)
    path = Path(name_or_path)
    if path.is_file():
        return load_device_spec(path)
    return get_preset(name_or_path)
