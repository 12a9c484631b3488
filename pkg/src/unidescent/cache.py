"""On-disk persistence of character tables.

One JSON file holds every table built so far.  Integers are written as
decimal strings and the layout is fixed, so two cold runs that build the
same tables write byte-identical files.
"""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .errors import CacheError
from .symchar import CharacterTable, install_table, registered_tables

log = logging.getLogger(__name__)

CACHE_VERSION = 1
CACHE_FORMAT = "unidescent-character-tables"
ENV_VAR = "UNIDESCENT_CACHE"


def default_cache_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CONFIG_HOME") or os.path.join(os.path.expanduser("~"), ".config")
    return Path(base) / "unidescent" / "chartables.json"


def load_cache(path: Path) -> int:
    """Install every table found in ``path``; returns how many were installed.

    A missing file, a version mismatch or a malformed payload is ignored (the
    tables are rebuilt on demand).  Failing to read an existing file is a
    :class:`CacheError`.
    """
    path = Path(path)
    if not path.exists():
        return 0
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CacheError(f"cannot read cache {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        log.warning("ignoring malformed cache %s", path)
        return 0
    if not isinstance(data, dict) or data.get("format") != CACHE_FORMAT or data.get("version") != CACHE_VERSION:
        log.info("ignoring cache %s with foreign format or version", path)
        return 0
    count = 0
    for key, entry in data.get("entries", {}).items():
        try:
            table = CharacterTable.from_json(entry)
        except (KeyError, TypeError, ValueError) as exc:
            log.warning("dropping cache entry n=%s: %s", key, exc)
            continue
        if str(table.n) != key:
            log.warning("dropping cache entry n=%s: holds n=%s", key, table.n)
            continue
        install_table(table)
        count += 1
    return count


def dump_tables(tables: list[CharacterTable]) -> str:
    payload = {
        "format": CACHE_FORMAT,
        "version": CACHE_VERSION,
        "entries": {str(t.n): t.to_json() for t in sorted(tables, key=lambda t: t.n)},
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


def save_cache(path: Path) -> None:
    """Write every registered table to ``path`` (atomic replace)."""
    path = Path(path)
    text = dump_tables(registered_tables())
    tmp = path.with_name(path.name + ".tmp")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp.write_text(text, encoding="utf-8")
        os.replace(tmp, path)
    except OSError as exc:
        raise CacheError(f"cannot write cache {path}: {exc}") from exc
