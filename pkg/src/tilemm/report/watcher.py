"""File watcher that reacts to changes of a results CSV."""

from __future__ import annotations

from pathlib import Path
from typing import Callable

from watchdog.events import FileSystemEvent, FileSystemEventHandler
from watchdog.observers import Observer


class ResultsWatcher:
    """Watches a single results file for modification or (re)creation."""

    def __init__(self, path: Path, on_change: Callable[[Path], None]):
        """Initialize the results watcher.

        Args:
            path: The CSV file to watch.
            on_change: Callback invoked with the path on every change.
        """
        self.path = path.resolve()
        self.on_change = on_change
        self._observer: Observer | None = None

    def start(self) -> None:
        """Start watching for file changes."""
        handler = _ResultsEventHandler(self.path, self.on_change)
        self._observer = Observer()
        # Watch the parent so replacing the file is seen too
        self._observer.schedule(handler, str(self.path.parent), recursive=False)
        self._observer.start()

    def stop(self) -> None:
        """Stop watching for file changes."""
        if self._observer:
            self._observer.stop()
            self._observer.join()
            self._observer = None


class _ResultsEventHandler(FileSystemEventHandler):
    """Forwards events that concern the watched file."""

    def __init__(self, path: Path, on_change: Callable[[Path], None]):
        self.path = path
        self.on_change = on_change

    def _dispatch_if_watched(self, src: str | bytes) -> None:
        if isinstance(src, bytes):
            src = src.decode()
        if Path(src).resolve() == self.path:
            self.on_change(self.path)

    def on_modified(self, event: FileSystemEvent) -> None:
        """Handle file modification events."""
        if not event.is_directory:
            self._dispatch_if_watched(event.src_path)

    def on_created(self, event: FileSystemEvent) -> None:
        """Handle file creation events."""
        if not event.is_directory:
            self._dispatch_if_watched(event.src_path)

    def on_moved(self, event: FileSystemEvent) -> None:
        """Handle atomic replacement via rename."""
        if not event.is_directory:
            self._dispatch_if_watched(event.dest_path)
