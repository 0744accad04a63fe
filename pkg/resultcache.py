"""
Content-addressed cache for computed CLI documents.

Each entry is a JSON file named by the sha256 of its canonical key and
carrying the checksum of its payload; an entry whose checksum does not
match is treated as a miss and overwritten on the next store.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence

logger = logging.getLogger(__name__)

CACHE_ENV = "LAYERLIE_CACHE_DIR"
DEFAULT_CACHE_DIR = os.path.join("~", ".cache", "layerlie")


def canonical_json(data: Any) -> bytes:
    return json.dumps(data, separators=(",", ":"), sort_keys=True).encode("utf-8")


def sha256_hex(b: bytes) -> str:
    return hashlib.sha256(b).hexdigest()


def resolve_cache_dir(explicit: Optional[str] = None) -> str:
    """--cache-dir, then $LAYERLIE_CACHE_DIR, then ~/.cache/layerlie."""
    chosen = explicit or os.environ.get(CACHE_ENV) or DEFAULT_CACHE_DIR
    return os.path.abspath(os.path.expanduser(chosen))


@dataclass
class CacheEntry:
    key: Sequence[str]
    payload: Dict[str, Any] = field(default_factory=dict)
    checksum: str = ""

    def __post_init__(self) -> None:
        self.key = [str(k) for k in self.key]
        if not self.checksum:
            self.checksum = sha256_hex(canonical_json(self.payload))

    @property
    def digest(self) -> str:
        return sha256_hex(canonical_json(self.key))


class ResultCache:
    def __init__(self, directory: Optional[str] = None, enabled: bool = True):
        self.directory = resolve_cache_dir(directory)
        self.enabled = enabled
        self.hits = 0
        self.misses = 0
        if self.enabled:
            try:
                os.makedirs(self.directory, exist_ok=True)
            except OSError as e:
                logger.warning("cache directory %s unusable (%s); caching disabled", self.directory, e)
                self.enabled = False
            else:
                if not os.access(self.directory, os.W_OK):
                    logger.warning("cache directory %s is not writable; caching disabled", self.directory)
                    self.enabled = False

    def path_for(self, key: Sequence[str]) -> str:
        return os.path.join(self.directory, CacheEntry(key).digest + ".json")

    def get(self, key: Sequence[str]) -> Optional[Dict[str, Any]]:
        if not self.enabled:
            return None
        key = [str(k) for k in key]
        path = self.path_for(key)
        try:
            with open(path, "r", encoding="utf-8") as f:
                doc = json.load(f)
        except FileNotFoundError:
            self.misses += 1
            return None
        except (OSError, ValueError) as e:
            logger.warning("unreadable cache entry %s (%s); recomputing", path, e)
            self.misses += 1
            return None
        payload = doc.get("payload") if isinstance(doc, dict) else None
        if (
            payload is None
            or doc.get("key") != key
            or doc.get("checksum") != sha256_hex(canonical_json(payload))
        ):
            logger.warning("cache entry %s failed its checksum; recomputing", path)
            self.misses += 1
            return None
        self.hits += 1
        logger.debug("cache hit %s", path)
        return payload

    def put(self, entry: CacheEntry) -> bool:
        if not self.enabled:
            return False
        path = self.path_for(entry.key)
        doc = {"key": list(entry.key), "checksum": entry.checksum, "payload": entry.payload}
        tmp: Optional[str] = None
        try:
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(doc, f, indent=2, sort_keys=True)
            os.replace(tmp, path)
        except (OSError, TypeError, ValueError) as e:
            logger.warning("cannot write cache entry %s (%s); caching disabled", path, e)
            if tmp is not None and os.path.exists(tmp):
                os.unlink(tmp)
            self.enabled = False
            return False
        logger.debug("cached %s", path)
        return True


def cache_get(cache: ResultCache, key: Sequence[str]) -> Optional[Dict[str, Any]]:
    return cache.get(key)


def cache_put(cache: ResultCache, entry: CacheEntry) -> bool:
    return cache.put(entry)
