"""
Utility modules untuk kalkulator syzygy Segre
Tujuan: Cache Betti, monitor performa, dan format laporan
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
"""

from .cache_store import BettiCache, CacheEntry

__all__ = ["BettiCache", "CacheEntry"]
