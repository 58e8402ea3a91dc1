"""
Core modules untuk kalkulator syzygy Segre
Tujuan: Konfigurasi titik, kompleks, chain, homologi, syzygy, Koszul, dan UFO
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
"""

from .config import ConfigManager
from .koszul import cross_check, koszul_tor_dim
from .point_config import build_segre, parse_descriptor
from .syzygy import CheckStatus, NpReport, check_np, find_witness, graded_betti

__all__ = [
    "CheckStatus",
    "ConfigManager",
    "NpReport",
    "build_segre",
    "check_np",
    "cross_check",
    "find_witness",
    "graded_betti",
    "koszul_tor_dim",
    "parse_descriptor",
]
