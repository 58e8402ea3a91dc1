"""
Segre Syzygy - kalkulator Betti multigraded dan sertifikat filling
Tujuan: Package utama untuk perhitungan syzygy embedding Segre
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
"""

__version__ = "1.0.0"
__author__ = "Tim Pengembangan"
__description__ = "Betti multigraded embedding Segre lewat kompleks simplisial Delta_b"
