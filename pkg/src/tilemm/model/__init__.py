"""Analytic GPU execution model."""

from .arithmetic import (
    Footprint,
    GridPlan,
    LoadCounts,
    Occupancy,
    SharedMemFit,
    arithmetic_intensity,
    footprint,
    global_load_model,
    ideal_seconds,
    occupancy,
    peak_fraction,
    plan_grid,
    shared_mem_fit,
)
from .device import DeviceSpec, get_preset, load_device_spec, parse_device_spec, resolve_device

__all__ = [
    "DeviceSpec",
    "Footprint",
    "GridPlan",
    "LoadCounts",
    "Occupancy",
    "SharedMemFit",
    "arithmetic_intensity",
    "footprint",
    "get_preset",
    "global_load_model",
    "ideal_seconds",
    "load_device_spec",
    "occupancy",
    "parse_device_spec",
    "peak_fraction",
    "plan_grid",
    "resolve_device",
    "shared_mem_fit",
]
