"""
Tujuan: Unit test cache Betti JSONL
Dependensi: pytest, tempfile, src.utils.cache_store
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
"""

import shutil
import tempfile
from pathlib import Path
from unittest.mock import patch

import pytest

from src.utils.cache_store import (
    CACHE_ENV_VAR,
    CACHE_FILENAME,
    BettiCache,
    CacheEntry,
    resolve_cache_dir,
)


def make_entry(rank: int = 3, b=(1, 1, 1, 1, 1, 1)) -> CacheEntry:
    return CacheEntry("segre:1,1,1", 2, 0, b, rank, primes=(1000003, 1000033))


class TestCacheEntry:
    """Validasi dan serialisasi CacheEntry."""

    def test_rejects_zero_rank(self):
        with pytest.raises(ValueError):
            CacheEntry("segre:1,1", 2, 0, (1, 1, 1, 1), 0)

    def test_normalizes_tuples(self):
        entry = CacheEntry("segre:1,1", 2, 0, [1, 1, 1, 1], 1, primes=[5, 7])
        assert entry.b == (1, 1, 1, 1)
        assert entry.primes == (5, 7)
        assert entry.key == ("segre:1,1", 2, 0, (1, 1, 1, 1))

    def test_record(self):
        record = make_entry().to_record()
        assert record["type"] == "entry"
        assert record["b"] == [1] * 6
        assert CacheEntry.from_record(record) == make_entry()


class TestResolveCacheDir:
    """Prioritas lokasi cache."""

    def test_flag_wins(self):
        with patch.dict("os.environ", {CACHE_ENV_VAR: "/env"}):
            assert resolve_cache_dir("/flag", "/settings") == "/flag"

    def test_env_before_settings(self):
        with patch.dict("os.environ", {CACHE_ENV_VAR: "/env"}):
            assert resolve_cache_dir(None, "/settings") == "/env"

    def test_disabled(self):
        with patch.dict("os.environ", {}, clear=True):
            assert resolve_cache_dir(None, "") is None


class TestBettiCache:
    """Simpan, muat ulang, dan lewati baris rusak."""

    def setup_method(self):
        self.temp_dir = tempfile.mkdtemp()

    def teardown_method(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_put_and_get(self):
        cache = BettiCache(self.temp_dir)
        entry = make_entry()
        assert cache.put(entry) is True
        assert cache.get(entry.key) == entry
        assert cache.get(("segre:1,1,1", 2, 0, [1] * 6)) == entry

    def test_duplicate_put_not_written(self):
        cache = BettiCache(self.temp_dir)
        cache.put(make_entry())
        assert cache.put(make_entry()) is False
        lines = (Path(self.temp_dir) / CACHE_FILENAME).read_text().splitlines()
        assert len(lines) == 1

    def test_changed_rank_overwrites(self):
        cache = BettiCache(self.temp_dir)
        cache.put(make_entry(rank=3))
        assert cache.put(make_entry(rank=2)) is True
        assert BettiCache(self.temp_dir).get(make_entry().key).rank == 2

    def test_persists_across_instances(self):
        BettiCache(self.temp_dir).put(make_entry())
        reloaded = BettiCache(self.temp_dir)
        assert reloaded.get(make_entry().key) == make_entry()
        assert reloaded.stats()["entries"] == 1

    def test_slices(self):
        cache = BettiCache(self.temp_dir)
        assert cache.get_slice("segre:1,1,1", 2, 0) is None
        cache.put(make_entry(b=(2, 0, 1, 1, 1, 1), rank=1))
        cache.put(make_entry())
        cache.mark_slice("segre:1,1,1", 2, 0)
        cache.mark_slice("segre:1,1,1", 2, 0)

        reloaded = BettiCache(self.temp_dir)
        assert reloaded.has_slice("segre:1,1,1", 2, 0)
        entries = reloaded.get_slice("segre:1,1,1", 2, 0)
        assert [e.b for e in entries] == [(1,) * 6, (2, 0, 1, 1, 1, 1)]
        assert reloaded.stats()["slices"] == 1

    def test_corrupt_lines_skipped(self):
        path = Path(self.temp_dir) / CACHE_FILENAME
        good = '{"type": "entry", "config": "segre:1,1", "t": 2, "j": 0, '
        good += '"b": [1, 1, 1, 1], "rank": 1}'
        path.write_text("not json\n\n" + good + "\n[1, 2]\n")
        cache = BettiCache(self.temp_dir)
        assert cache.skipped_lines == 2
        assert cache.get(("segre:1,1", 2, 0, (1, 1, 1, 1))).rank == 1

    def test_clear(self):
        cache = BettiCache(self.temp_dir)
        cache.put(make_entry())
        cache.mark_slice("segre:1,1,1", 2, 0)
        cache.clear()
        assert cache.stats()["entries"] == 0
        assert not cache.path.exists()
        assert not cache.has_slice("segre:1,1,1", 2, 0)
