"""Tests for the results-file watcher."""

from __future__ import annotations

from pathlib import Path

from watchdog.events import (
    DirModifiedEvent,
    FileCreatedEvent,
    FileModifiedEvent,
    FileMovedEvent,
)

from tilemm.report.watcher import ResultsWatcher, _ResultsEventHandler


def _handler(tmp_path: Path) -> tuple[_ResultsEventHandler, list[Path]]:
    seen: list[Path] = []
    target = (tmp_path / "results.csv").resolve()
    return _ResultsEventHandler(target, seen.append), seen


def test_modification_of_watched_file(tmp_path):
    handler, seen = _handler(tmp_path)
    handler.on_modified(FileModifiedEvent(str(tmp_path / "results.csv")))
    assert seen == [(tmp_path / "results.csv").resolve()]


def test_other_files_ignored(tmp_path):
    handler, seen = _handler(tmp_path)
    handler.on_modified(FileModifiedEvent(str(tmp_path / "other.csv")))
    handler.on_created(FileCreatedEvent(str(tmp_path / "results.csv.tmp")))
    handler.on_modified(DirModifiedEvent(str(tmp_path)))
    assert seen == []


def test_creation_and_atomic_replace(tmp_path):
    handler, seen = _handler(tmp_path)
    handler.on_created(FileCreatedEvent(str(tmp_path / "results.csv")))
    handler.on_moved(FileMovedEvent(str(tmp_path / "tmp123"), str(tmp_path / "results.csv")))
    assert len(seen) == 2


def test_start_and_stop(tmp_path):
    watcher = ResultsWatcher(tmp_path / "results.csv", on_change=lambda _path: None)
    watcher.start()
    watcher.stop()
    assert watcher._observer is None
    # Stopping twice is harmless
    watcher.stop()
