import json
import os

import resultcache
from resultcache import CACHE_ENV, CacheEntry, ResultCache, canonical_json, resolve_cache_dir, sha256_hex

KEY = ["G2", "dim", "1,1", "1.0.0", "method=operator"]


def test_canonical_json_is_order_free():
    assert canonical_json({"b": 1, "a": [1, 2]}) == b'{"a":[1,2],"b":1}'
    assert sha256_hex(canonical_json({"a": 1, "b": 2})) == sha256_hex(canonical_json({"b": 2, "a": 1}))


def test_resolve_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path / "env"))
    assert resolve_cache_dir() == str(tmp_path / "env")
    assert resolve_cache_dir(str(tmp_path / "flag")) == str(tmp_path / "flag")
    monkeypatch.delenv(CACHE_ENV)
    monkeypatch.setenv("HOME", str(tmp_path))
    assert resolve_cache_dir() == os.path.join(str(tmp_path), ".cache", "layerlie")


def test_round_trip(tmp_path):
    cache = ResultCache(str(tmp_path))
    assert cache.get(KEY) is None
    assert cache.put(CacheEntry(KEY, {"value": "64"}))
    assert cache.get(KEY) == {"value": "64"}
    assert (cache.hits, cache.misses) == (1, 1)
    assert len(list(tmp_path.glob("*.json"))) == 1
    assert not list(tmp_path.glob("*.tmp"))


def test_distinct_keys(tmp_path):
    cache = ResultCache(str(tmp_path))
    cache.put(CacheEntry(KEY, {"value": "64"}))
    other = KEY[:4] + ["method=shift"]
    assert cache.get(other) is None
    assert cache.path_for(other) != cache.path_for(KEY)


def test_tampered_entry_is_a_miss(tmp_path):
    cache = ResultCache(str(tmp_path))
    cache.put(CacheEntry(KEY, {"value": "64"}))
    path = cache.path_for(KEY)
    with open(path, encoding="utf-8") as f:
        doc = json.load(f)
    doc["payload"]["value"] = "65"
    with open(path, "w", encoding="utf-8") as f:
        json.dump(doc, f)
    assert cache.get(KEY) is None
    cache.put(CacheEntry(KEY, {"value": "64"}))
    assert cache.get(KEY) == {"value": "64"}


def test_garbage_entry_is_a_miss(tmp_path):
    cache = ResultCache(str(tmp_path))
    with open(cache.path_for(KEY), "w", encoding="utf-8") as f:
        f.write("{not json")
    assert cache.get(KEY) is None


def test_disabled_cache(tmp_path):
    cache = ResultCache(str(tmp_path / "off"), enabled=False)
    assert not cache.put(CacheEntry(KEY, {"value": "64"}))
    assert resultcache.cache_get(cache, KEY) is None
    assert not (tmp_path / "off").exists()


def test_unusable_directory_disables(tmp_path, monkeypatch):
    def refuse(*args, **kwargs):
        raise PermissionError("read-only")

    monkeypatch.setattr(resultcache.os, "makedirs", refuse)
    cache = ResultCache(str(tmp_path / "ro"))
    assert not cache.enabled
    assert not resultcache.cache_put(cache, CacheEntry(KEY, {"value": "64"}))


def test_failed_write_leaves_no_temp_file(tmp_path, monkeypatch):
    def refuse(src, dst):
        raise OSError("disk full")

    cache = ResultCache(str(tmp_path))
    monkeypatch.setattr(resultcache.os, "replace", refuse)
    assert not cache.put(CacheEntry(KEY, {"value": "64"}))
    assert not cache.enabled
    assert list(tmp_path.iterdir()) == []
