"""Tests for the shared data models and error types."""

from __future__ import annotations

import numpy as np
import pytest

from tilemm.errors import (
    ConfigError,
    MissingPairError,
    SchemaError,
    ShapeError,
    TilemmError,
    VerificationError,
)
from tilemm.store.models import Backend, Precision, TileConfig

from .conftest import make_record


class TestPrecision:
    def test_element_bytes(self):
        assert Precision.SINGLE.element_bytes == 4
        assert Precision.DOUBLE.element_bytes == 8

    def test_dtype_round_trip(self):
        for precision in Precision:
            assert Precision.from_dtype(precision.dtype) is precision

    def test_epsilon(self):
        assert Precision.SINGLE.epsilon == 2.0**-23
        assert Precision.DOUBLE.epsilon == 2.0**-52

    def test_unsupported_dtype(self):
        with pytest.raises(ConfigError):
            Precision.from_dtype(np.dtype(np.float16))


class TestBackend:
    def test_names(self):
        assert [b.value for b in Backend] == ["naive-seq", "tiled-seq", "tiled-par", "naive-par"]

    def test_flags(self):
        assert [b for b in Backend if b.is_parallel] == [Backend.TILED_PAR, Backend.NAIVE_PAR]
        assert [b for b in Backend if b.is_tiled] == [Backend.TILED_SEQ, Backend.TILED_PAR]


class TestTileConfig:
    def test_tiles_along(self):
        cfg = TileConfig(32)
        assert cfg.tiles_along(64) == 2
        assert cfg.tiles_along(65) == 3
        assert cfg.tiles_along(1) == 1

    def test_divides(self):
        assert TileConfig(16).divides(320)
        assert not TileConfig(32).divides(100)

    def test_rejects_nonpositive(self):
        with pytest.raises(ConfigError):
            TileConfig(-4)


class TestRecord:
    def test_flops_and_size(self):
        record = make_record(size=64)
        assert record.flops == 2 * 64**3
        assert record.size == 64

    def test_clamp_flag_ignored_in_equality(self):
        a, b = make_record(), make_record()
        b.timer_clamped = True
        assert a == b


class TestErrors:
    def test_hierarchy(self):
        assert issubclass(ShapeError, TilemmError)
        assert issubclass(ShapeError, ValueError)
        assert issubclass(ConfigError, ValueError)

    def test_messages(self):
        assert str(SchemaError("bad header", 1)) == "line 1: bad header"
        assert str(MissingPairError([32, 128])) == "missing baseline/target pairs for sizes: 32, 128"
        err = VerificationError("tiled-seq single 8x8", (0, 3))
        assert "(0, 3)" in str(err)
        assert err.index == (0, 3)
