"""Content-addressed result cache, one JSON file per entry.

Keys hash the canonical presentation text, the oracle spec, the
operation name, its parameters and the tool version, so a version bump
or any input change is a clean miss.  Hits return the stored payload
verbatim, which keeps warm and cold runs byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

__all__ = ["ResultCache", "default_cache_dir"]

ENV_VAR = "MARKEDGROUPS_CACHE_DIR"


def default_cache_dir() -> str | None:
    """Cache directory from the environment, or None (caching off)."""
    return os.environ.get(ENV_VAR) or None


class ResultCache:
    def __init__(self, directory: str | Path | None):
        self.directory = Path(directory) if directory else None

    @property
    def enabled(self) -> bool:
        return self.directory is not None

    @staticmethod
    def make_key(**parts) -> str:
        canonical = json.dumps(parts, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str):
        if not self.enabled:
            return None
        path = self._path(key)
        if not path.exists():
            return None
        return json.loads(path.read_text(encoding="utf-8"))

    def put(self, key: str, payload) -> None:
        if not self.enabled:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        self._path(key).write_text(
            json.dumps(payload, indent=2, sort_keys=False) + "\n", encoding="utf-8"
        )
