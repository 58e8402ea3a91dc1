"""
Tujuan: Cache Betti berbasis file JSONL (satu record per baris)
Dependensi: json, os, pathlib, threading
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: cache = BettiCache("/tmp/cache"); cache.put(entry); cache.get(entry.key)
"""

import json
import logging
import os
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

logger = logging.getLogger(__name__)

CACHE_FILENAME = "betti_cache.jsonl"
CACHE_ENV_VAR = "SEGRE_CACHE_DIR"

CacheKey = Tuple[str, int, int, Tuple[int, ...]]
SliceKey = Tuple[str, int, int]


@dataclass(frozen=True)
class CacheEntry:
    """Satu rank nonzero untuk (descriptor, t, j, b)."""

    descriptor: str
    t: int
    j: int
    b: Tuple[int, ...]
    rank: int
    primes: Tuple[int, ...] = ()
    exact_fallback: bool = False

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "primes", tuple(int(x) for x in self.primes))
        if self.rank < 1:
            raise ValueError(f"CacheEntry hanya untuk rank >= 1, dapat {self.rank}")

    @property
    def key(self) -> CacheKey:
        return (self.descriptor, self.t, self.j, self.b)

    def to_record(self) -> Dict:
        return {
            "type": "entry",
            "config": self.descriptor,
            "t": self.t,
            "j": self.j,
            "b": list(self.b),
            "rank": self.rank,
            "primes": list(self.primes),
            "exact_fallback": self.exact_fallback,
        }

    @classmethod
    def from_record(cls, record: Dict) -> "CacheEntry":
        return cls(
            descriptor=str(record["config"]),
            t=int(record["t"]),
            j=int(record["j"]),
            b=tuple(record["b"]),
            rank=int(record["rank"]),
            primes=tuple(record.get("primes", ())),
            exact_fallback=bool(record.get("exact_fallback", False)),
        )


def resolve_cache_dir(flag: Optional[str], settings_value: str = "") -> Optional[str]:
    """Prioritas: flag CLI > env SEGRE_CACHE_DIR > settings; None = cache nonaktif."""
    for candidate in (flag, os.environ.get(CACHE_ENV_VAR), settings_value):
        if candidate:
            return candidate
    return None


class BettiCache:
    """
    Cache persisten untuk rank Betti.

    Selain entry, file menyimpan penanda slice (descriptor, t, j) yang sudah
    dihitung lengkap sehingga rank nol pun bisa dijawab dari cache hangat.
    Baris rusak dilewati dengan warning.
    """

    def __init__(self, directory: str):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.path = self.directory / CACHE_FILENAME
        self._entries: Dict[CacheKey, CacheEntry] = {}
        self._slices: Dict[SliceKey, bool] = {}
        self._lock = threading.Lock()
        self.skipped_lines = 0
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with open(self.path, "r", encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                    if record.get("type") == "slice":
                        key = (
                            str(record["config"]),
                            int(record["t"]),
                            int(record["j"]),
                        )
                        self._slices[key] = True
                    else:
                        entry = CacheEntry.from_record(record)
                        self._entries[entry.key] = entry
                except (ValueError, KeyError, TypeError, AttributeError) as e:
                    self.skipped_lines += 1
                    logger.warning(f"Baris cache {lineno} rusak, dilewati: {e}")

    def _append(self, record: Dict) -> None:
        with open(self.path, "a", encoding="utf-8") as f:
            f.write(json.dumps(record, sort_keys=True) + "\n")

    def put(self, entry: CacheEntry) -> bool:
        """Simpan entry; True jika ada record baru yang ditulis."""
        with self._lock:
            existing = self._entries.get(entry.key)
            if existing is not None and existing.rank == entry.rank:
                return False
            if existing is not None:
                logger.warning(
                    f"Rank cache berubah untuk {entry.key}: "
                    f"{existing.rank} -> {entry.rank}"
                )
            self._entries[entry.key] = entry
            self._append(entry.to_record())
            return True

    def get(self, key: CacheKey) -> Optional[CacheEntry]:
        descriptor, t, j, b = key
        return self._entries.get((descriptor, int(t), int(j), tuple(int(x) for x in b)))

    def mark_slice(self, descriptor: str, t: int, j: int) -> None:
        with self._lock:
            if self._slices.get((descriptor, t, j)):
                return
            self._slices[(descriptor, t, j)] = True
            self._append({"type": "slice", "config": descriptor, "t": t, "j": j})

    def has_slice(self, descriptor: str, t: int, j: int) -> bool:
        return self._slices.get((descriptor, t, j), False)

    def get_slice(self, descriptor: str, t: int, j: int) -> Optional[List[CacheEntry]]:
        """Semua entry slice jika slice tercatat lengkap, selain itu None."""
        if not self.has_slice(descriptor, t, j):
            return None
        return sorted(
            (
                e
                for e in self._entries.values()
                if (e.descriptor, e.t, e.j) == (descriptor, t, j)
            ),
            key=lambda e: e.b,
        )

    def stats(self) -> Dict[str, object]:
        return {
            "path": str(self.path),
            "entries": len(self._entries),
            "slices": len(self._slices),
            "skipped_lines": self.skipped_lines,
        }

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self._slices.clear()
            if self.path.exists():
                self.path.unlink()
            logger.info(f"Cache dikosongkan: {self.path}")
