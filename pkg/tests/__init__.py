"""
Test package untuk kalkulator syzygy Segre
Tujuan: Unit test per modul core/utils dan integration test CLI
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
"""
