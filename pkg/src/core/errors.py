"""
Tujuan: Hirarki exception untuk segre-syzygy
Dependensi: -
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: raise InvalidMultidegreeError("b . omega tidak bulat")
"""


class SegreSyzygyError(Exception):
    """Base exception untuk semua error domain."""


class InvalidDescriptorError(SegreSyzygyError):
    """Descriptor konfigurasi tidak dikenali atau konfigurasi tidak homogen."""


class InvalidMultidegreeError(SegreSyzygyError):
    """Multidegree negatif, tidak bulat, atau di luar monoid N.A."""


class ComplexError(SegreSyzygyError):
    """Spesifikasi kompleks tidak valid atau batas dimensi terlampaui."""


class ChainError(SegreSyzygyError):
    """Operasi chain tidak valid (dimensi campur, join dengan vertex bersama, dll)."""


class HomologyError(SegreSyzygyError):
    """Input homology tidak valid (bukan cycle, support di luar kompleks)."""


class ResourceLimitError(SegreSyzygyError):
    """Ukuran komputasi melebihi batas yang dikonfigurasi."""


class UfoValidationError(SegreSyzygyError):
    """Syarat definisi UFO dilanggar."""


class UnsupportedCaseError(SegreSyzygyError):
    """Kasus lemma di luar cakupan (misal t tidak didukung, n_1 > 3)."""


class ConstructionError(SegreSyzygyError):
    """Konstruksi lemma gagal; biasanya berarti prasyarat tidak terpenuhi."""


class DecompositionError(SegreSyzygyError):
    """Chain tidak bisa dipecah menjadi jumlah UFO."""


class HypothesisError(SegreSyzygyError):
    """Vanishing homology yang dibutuhkan tidak berlaku."""

    def __init__(self, message: str, complex_label: str = "", dimension: int = -1):
        super().__init__(message)
        self.complex_label = complex_label
        self.dimension = dimension


class CertificateError(SegreSyzygyError):
    """Pemeriksaan eksak sertifikat gagal."""
