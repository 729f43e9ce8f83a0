"""Tests for the analytic GPU execution model."""

from __future__ import annotations

import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tilemm.errors import ConfigError, DeviceSpecError
from tilemm.model import (
    DeviceSpec,
    arithmetic_intensity,
    footprint,
    get_preset,
    global_load_model,
    ideal_seconds,
    load_device_spec,
    occupancy,
    parse_device_spec,
    peak_fraction,
    plan_grid,
    resolve_device,
    shared_mem_fit,
)
from tilemm.store.models import Precision


@pytest.fixture
def gpu() -> DeviceSpec:
    return get_preset("geforce-940m")


SPEC_FILE = """\
# a small test device
sm_count = 2
cores_per_sm = 64
warp_size = 32
max_threads_per_block = 512
max_threads_per_sm = 1024
max_blocks_per_sm = 8
global_mem_bytes = 1073741824
shared_mem_bytes_per_sm = 16384   # 16 KiB
peak_gflops_single = 100.5
peak_gflops_double = 3.25
"""


class TestDeviceSpec:
    def test_preset(self, gpu):
        assert gpu.total_cores == 384
        assert gpu.max_threads_per_block % gpu.warp_size == 0
        assert gpu.max_threads_per_sm >= gpu.max_threads_per_block
        assert gpu.shared_mem_bytes_per_sm == 49 * 1024
        assert gpu.global_mem_bytes == 2 * 1024**3

    def test_preset_name_is_case_insensitive(self):
        assert get_preset("GeForce-940M") == get_preset("geforce-940m")

    def test_unknown_preset(self):
        with pytest.raises(DeviceSpecError, match="unknown device preset"):
            get_preset("titan")

    def test_rejects_nonpositive_field(self, gpu):
        with pytest.raises(DeviceSpecError):
            dataclasses.replace(gpu, warp_size=0)

    def test_rejects_block_limit_above_sm_limit(self, gpu):
        with pytest.raises(DeviceSpecError):
            dataclasses.replace(gpu, max_threads_per_block=4096)

    def test_peak_by_precision(self, gpu):
        assert gpu.peak_gflops(Precision.SINGLE) == 790.3
        assert gpu.peak_gflops(Precision.DOUBLE) == 24.7


class TestSpecFile:
    def test_parse(self):
        spec = parse_device_spec(SPEC_FILE)
        assert spec.sm_count == 2
        assert spec.shared_mem_bytes_per_sm == 16384
        assert spec.peak_gflops_double == 3.25

    def test_unknown_key(self):
        with pytest.raises(DeviceSpecError, match="spec.txt:3: unknown key 'l2_bytes'"):
            parse_device_spec("\n# comment\nl2_bytes = 4\n", source="spec.txt")

    def test_duplicate_key(self):
        with pytest.raises(DeviceSpecError, match="duplicate key"):
            parse_device_spec(SPEC_FILE + "sm_count = 4\n")

    def test_missing_keys(self):
        with pytest.raises(DeviceSpecError, match="missing keys: peak_gflops_double"):
            parse_device_spec(SPEC_FILE.replace("peak_gflops_double = 3.25\n", ""))

    def test_bad_value(self):
        with pytest.raises(DeviceSpecError, match="invalid value"):
            parse_device_spec(SPEC_FILE.replace("sm_count = 2", "sm_count = two"))

    def test_missing_equals(self):
        with pytest.raises(DeviceSpecError, match="expected key=value"):
            parse_device_spec("sm_count 2\n")

    def test_load_and_resolve(self, tmp_path):
        path = tmp_path / "device.txt"
        path.write_text(SPEC_FILE)
        assert load_device_spec(path) == parse_device_spec(SPEC_FILE)
        assert resolve_device(str(path)).sm_count == 2
        assert resolve_device("geforce-940m").sm_count == 3

    def test_resolve_unknown(self, tmp_path):
        with pytest.raises(DeviceSpecError):
            resolve_device(str(tmp_path / "nope.txt"))


class TestGrid:
    def test_hundred_by_hundred_grid(self):
        plan = plan_grid(100, 100, 20)
        assert (plan.grid_x, plan.grid_y) == (5, 5)
        assert plan.block_threads == 400
        assert plan.exact_fit

    def test_full_size_grid(self):
        plan = plan_grid(2048, 2048, 32)
        assert (plan.grid_x, plan.grid_y, plan.block_threads) == (64, 64, 1024)
        assert plan.exact_fit
        assert plan.block_count == 4096

    def test_boundary_grid(self):
        plan = plan_grid(33, 33, 32)
        assert (plan.grid_x, plan.grid_y) == (2, 2)
        assert not plan.exact_fit

    def test_rectangular(self):
        plan = plan_grid(rows=10, cols=40, tile=8)
        assert (plan.grid_x, plan.grid_y) == (5, 2)
        assert not plan.exact_fit

    def test_rejects_zero(self):
        with pytest.raises(ConfigError):
            plan_grid(0, 4, 2)

    @given(rows=st.integers(1, 5000), cols=st.integers(1, 5000), tile=st.integers(1, 64))
    def test_ceiling_division(self, rows, cols, tile):
        plan = plan_grid(rows, cols, tile)
        covered = 0
        blocks = 0
        while covered < cols:
            covered += tile
            blocks += 1
        assert plan.grid_x == blocks
        assert plan.grid_x * tile >= cols
        assert plan.grid_y * tile >= rows
        assert plan.exact_fit == (plan.grid_x * tile == cols and plan.grid_y * tile == rows)


class TestOccupancy:
    def test_full_block(self, gpu):
        occ = occupancy(gpu, 1024)
        assert occ.warps_per_block == 32
        assert occ.blocks_per_sm == 2
        assert occ.threads_per_sm == 2048
        assert occ.valid

    def test_oversized_block(self, gpu):
        assert not occupancy(gpu, 2048).valid
        assert not occupancy(gpu, 33 * 33).valid

    def test_warp_sized_block(self, gpu):
        occ = occupancy(gpu, 32)
        assert occ.warps_per_block == 1
        assert occ.blocks_per_sm == 32

    def test_partial_warp(self, gpu):
        assert occupancy(gpu, 33).warps_per_block == 2

    @given(st.integers(1, 4096))
    def test_threads_never_exceed_sm_limit(self, block_threads):
        gpu = get_preset("geforce-940m")
        occ = occupancy(gpu, block_threads)
        assert occ.blocks_per_sm * block_threads <= gpu.max_threads_per_sm
        assert occ.blocks_per_sm <= gpu.max_blocks_per_sm


class TestSharedMemory:
    def test_single(self, gpu):
        fit = shared_mem_fit(gpu, 32, Precision.SINGLE)
        assert fit.bytes_needed == 8192
        assert fit.fits

    def test_double(self, gpu):
        assert shared_mem_fit(gpu, 32, Precision.DOUBLE).bytes_needed == 16384

    def test_tile_one(self, gpu):
        assert shared_mem_fit(gpu, 1, Precision.SINGLE).bytes_needed == 8

    def test_does_not_fit(self, gpu):
        # 2 * 64 * 64 * 8 = 64 KiB > 49 KiB
        assert not shared_mem_fit(gpu, 64, Precision.DOUBLE).fits


class TestLoads:
    def test_naive(self):
        loads = global_load_model(4, 4, 4)
        assert loads.loads_a == 64
        assert loads.loads_b == 64
        assert loads.total_loads == 128

    def test_tiled(self):
        naive = global_load_model(64, 64, 64)
        tiled = global_load_model(64, 64, 64, 32)
        assert tiled.loads_a == 64 * 64 * 2
        assert naive.loads_a == 32 * tiled.loads_a

    def test_rejects_bad_tile(self):
        with pytest.raises(ConfigError):
            global_load_model(4, 4, 4, 0)

    @given(
        mt=st.integers(1, 16),
        nt=st.integers(1, 16),
        wt=st.integers(1, 16),
        tile=st.integers(1, 64),
    )
    def test_ratio_equals_tile_for_divisible_shapes(self, mt, nt, wt, tile):
        m, n, w = mt * tile, nt * tile, wt * tile
        naive = global_load_model(m, n, w)
        tiled = global_load_model(m, n, w, tile)
        assert naive.total_loads == tile * tiled.total_loads

    @given(m=st.integers(1, 500), n=st.integers(1, 500), w=st.integers(1, 500))
    def test_tile_one_equals_naive(self, m, n, w):
        assert global_load_model(m, n, w, 1) == global_load_model(m, n, w)


class TestFootprint:
    def test_double_full_size(self, gpu):
        fp = footprint(2048, 2048, 2048, Precision.DOUBLE, gpu)
        assert fp.bytes_total == 100_663_296
        assert fp.mib == 96.0
        assert fp.fits_global is True

    def test_single_full_size(self):
        fp = footprint(2048, 2048, 2048, Precision.SINGLE)
        assert fp.mib == 48.0
        assert fp.fits_global is None

    def test_minimal(self):
        assert footprint(1, 1, 1, Precision.SINGLE).bytes_total == 12

    def test_does_not_fit(self, gpu):
        assert footprint(16384, 16384, 16384, Precision.DOUBLE, gpu).fits_global is False

    @given(
        m=st.integers(1, 4096),
        n=st.integers(1, 4096),
        w=st.integers(1, 4096),
        precision=st.sampled_from(list(Precision)),
    )
    def test_symmetric_in_outer_dimensions(self, m, n, w, precision):
        assert footprint(m, n, w, precision).bytes_total == footprint(w, n, m, precision).bytes_total


class TestRoofline:
    def test_ideal_seconds(self, gpu):
        expected = 2 * 1024**3 / (790.3 * 1e9)
        assert ideal_seconds(1024, 1024, 1024, gpu, Precision.SINGLE) == pytest.approx(expected)

    def test_peak_fraction(self, gpu):
        assert peak_fraction(24.7, gpu, Precision.DOUBLE) == pytest.approx(1.0)

    def test_tiling_raises_intensity_by_tile(self):
        naive = arithmetic_intensity(256, 256, 256, Precision.SINGLE)
        tiled = arithmetic_intensity(256, 256, 256, Precision.SINGLE, 16)
        assert naive == pytest.approx(0.25)
        assert tiled == pytest.approx(16 * naive)
