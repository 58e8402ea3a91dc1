"""
Command line untuk kalkulator syzygy Segre
Tujuan: Subcommand betti, np-check, witness, koszul-check, ufo-demo, cache
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
"""

from .commands import cli, run

__all__ = ["cli", "run"]
