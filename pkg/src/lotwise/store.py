"""File-backed scenario store: one JSON document per scenario, atomic writes.

Layout is deliberately boring. Each scenario lives in ``<dir>/<name>.json``
wrapped with its revision and creation timestamp. Writes go to a temp file in
the same directory followed by os.replace, so a crash mid-write can never
leave a torn document behind. Writes to the same name are serialized with a
per-name lock; an optional expected revision turns a replace into a
compare-and-swap.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .scenarios import Scenario, parse_scenario, scenario_to_document

# Names double as file names, so keep them to a filesystem-safe charset.
_NAME_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._-]{0,63}$")


class StoreError(Exception):
    pass


class InvalidName(StoreError):
    pass


class UnknownScenario(StoreError):
    pass


class DuplicateScenario(StoreError):
    pass


class RevisionMismatch(StoreError):
    def __init__(self, expected: int, actual: int):
        super().__init__(f"revision mismatch: expected {expected}, have {actual}")
        self.expected = expected
        self.actual = actual


@dataclass(frozen=True)
class StoredScenario:
    scenario: Scenario
    created_at: str
    revision: int


def _check_name(name: str) -> str:
    if not _NAME_RE.match(name):
        raise InvalidName(
            f"invalid scenario name {name!r}: use letters, digits, '.', '_', '-',"
            " 64 characters max, starting with a letter or digit"
        )
    return name


class ScenarioStore:
    def __init__(self, directory: str | Path):
        self._dir = Path(directory)
        self._dir.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock_for(self, name: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(name, threading.Lock())

    def _path(self, name: str) -> Path:
        return self._dir / f"{_check_name(name)}.json"

    def _read(self, name: str) -> StoredScenario:
        path = self._path(name)
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise UnknownScenario(name) from None
        return StoredScenario(
            scenario=parse_scenario(doc["scenario"]),
            created_at=doc["created_at"],
            revision=int(doc["revision"]),
        )

    def _write(self, name: str, stored: StoredScenario) -> None:
        payload = {
            "scenario": scenario_to_document(stored.scenario),
            "created_at": stored.created_at,
            "revision": stored.revision,
        }
        # Temp file in the target directory keeps os.replace on one filesystem.
        fd, tmp = tempfile.mkstemp(prefix=f".{name}.", suffix=".tmp", dir=self._dir)
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(payload, handle, indent=2)
                handle.flush()
                os.fsync(handle.fileno())
            os.replace(tmp, self._path(name))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def create(self, scenario: Scenario) -> StoredScenario:
        name = _check_name(scenario.name)
        with self._lock_for(name):
            if self._path(name).exists():
                raise DuplicateScenario(name)
            stored = StoredScenario(
                scenario=scenario,
                created_at=datetime.now(timezone.utc).isoformat(),
                revision=1,
            )
            self._write(name, stored)
            return stored

    def get(self, name: str) -> StoredScenario:
        _check_name(name)
        with self._lock_for(name):
            return self._read(name)

    def list(self) -> list[tuple[str, int, str]]:
        """All (name, revision, created_at) triples, sorted by name."""
        entries = []
        for path in sorted(self._dir.glob("*.json")):
            name = path.stem
            if not _NAME_RE.match(name):
                continue
            with self._lock_for(name):
                try:
                    stored = self._read(name)
                except (UnknownScenario, KeyError, TypeError, ValueError):
                    continue  # racing delete or foreign file; not ours to report
            entries.append((name, stored.revision, stored.created_at))
        return entries

    def replace(
        self, name: str, scenario: Scenario, expected_revision: int | None = None
    ) -> StoredScenario:
        _check_name(name)
        with self._lock_for(name):
            current = self._read(name)
            if expected_revision is not None and expected_revision != current.revision:
                raise RevisionMismatch(expected_revision, current.revision)
            stored = StoredScenario(
                scenario=scenario,
                created_at=current.created_at,
                revision=current.revision + 1,
            )
            self._write(name, stored)
            return stored

    def delete(self, name: str) -> None:
        path = self._path(name)
        with self._lock_for(name):
            try:
                path.unlink()
            except FileNotFoundError:
                raise UnknownScenario(name) from None
