"""
Tujuan: Kompleks simplisial Delta_b (monoid), Delta_v (box), dan union X_b
Dependensi: numpy, src.core.point_config
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: cx = enumerate_faces(monoid_delta(cfg, b), 2); cx.f_vector()
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Dict, List, Sequence, Tuple

import numpy as np

from .errors import ComplexError, InvalidMultidegreeError
from .point_config import MultiDegree, PointConfiguration, is_in_monoid

if TYPE_CHECKING:
    from .chains import Chain

logger = logging.getLogger(__name__)

Simplex = Tuple[int, ...]


class ComplexKind(Enum):
    """Jenis kompleks."""

    MONOID_DELTA = "monoid"
    BOX_DELTA = "box"
    UNION_X = "union"


@dataclass(frozen=True)
class ComplexSpec:
    """Spesifikasi kompleks: jenis, konfigurasi, dan vektor batas."""

    kind: ComplexKind
    cfg: PointConfiguration
    bound: MultiDegree

    @property
    def label(self) -> str:
        name = {
            ComplexKind.MONOID_DELTA: "Delta",
            ComplexKind.BOX_DELTA: "BoxDelta",
            ComplexKind.UNION_X: "X",
        }[self.kind]
        return f"{name}{list(self.bound)} @ {self.cfg.label}"


@dataclass(frozen=True)
class SlicedComplex:
    """Face kompleks per dimensi -1..max_dim, terurut leksikografis."""

    spec: ComplexSpec
    max_dim: int
    faces_by_dim: Tuple[Tuple[Simplex, ...], ...]
    _index: Tuple[Dict[Simplex, int], ...] = field(
        default=(), repr=False, compare=False
    )

    def __post_init__(self):
        if not self._index:
            object.__setattr__(
                self,
                "_index",
                tuple({f: i for i, f in enumerate(fs)} for fs in self.faces_by_dim),
            )

    def faces(self, j: int) -> Tuple[Simplex, ...]:
        if j < -1 or j > self.max_dim:
            raise ComplexError(f"Dimensi {j} di luar cap {self.max_dim}")
        return self.faces_by_dim[j + 1]

    def index(self, j: int) -> Dict[Simplex, int]:
        if j < -1 or j > self.max_dim:
            raise ComplexError(f"Dimensi {j} di luar cap {self.max_dim}")
        return self._index[j + 1]

    def f_vector(self) -> Tuple[int, ...]:
        """Jumlah face per dimensi, dimulai dari dimensi -1."""
        return tuple(len(fs) for fs in self.faces_by_dim)


def _check_length(cfg: PointConfiguration, v: Sequence[int]) -> MultiDegree:
    vec = tuple(int(c) for c in v)
    if len(vec) != cfg.k:
        raise ComplexError(f"Panjang vektor {len(vec)} != k = {cfg.k}")
    return vec


def monoid_delta(cfg: PointConfiguration, b: Sequence[int]) -> ComplexSpec:
    vec = _check_length(cfg, b)
    if not is_in_monoid(vec, cfg):
        raise InvalidMultidegreeError(f"b = {list(vec)} tidak ada di N.A")
    return ComplexSpec(ComplexKind.MONOID_DELTA, cfg, vec)


def box_delta(cfg: PointConfiguration, v: Sequence[int]) -> ComplexSpec:
    return ComplexSpec(ComplexKind.BOX_DELTA, cfg, _check_length(cfg, v))


def union_x(cfg: PointConfiguration, b: Sequence[int]) -> ComplexSpec:
    vec = _check_length(cfg, b)
    if cfg.k < 2:
        raise ComplexError("X_b membutuhkan minimal dua koordinat")
    if not is_in_monoid(vec, cfg):
        raise InvalidMultidegreeError(f"b = {list(vec)} tidak ada di N.A")
    return ComplexSpec(ComplexKind.UNION_X, cfg, vec)


def union_member(spec: ComplexSpec, k: int) -> ComplexSpec:
    """Box Delta_{b - k e_0 + k e_1}, anggota ke-k dari union X_b."""
    if spec.kind is not ComplexKind.UNION_X:
        raise ComplexError("union_member hanya untuk X_b")
    if not 0 <= k <= spec.bound[0]:
        raise ComplexError(f"Indeks slice {k} di luar [0, {spec.bound[0]}]")
    shifted = list(spec.bound)
    shifted[0] -= k
    shifted[1] += k
    return box_delta(spec.cfg, shifted)


def vertex_sum(cfg: PointConfiguration, face: Sequence[int]) -> np.ndarray:
    if not face:
        return np.zeros(cfg.k, dtype=np.int64)
    return cfg.point_array[list(face)].sum(axis=0)


def _admits(spec: ComplexSpec, s: np.ndarray) -> bool:
    bound = np.asarray(spec.bound, dtype=np.int64)
    if spec.kind is ComplexKind.UNION_X:
        if s[0] > bound[0] or s[0] + s[1] > bound[0] + bound[1]:
            return False
        return bool(np.all(s[2:] <= bound[2:]))
    if not np.all(s <= bound):
        return False
    if spec.kind is ComplexKind.MONOID_DELTA:
        return is_in_monoid(tuple(int(x) for x in bound - s), spec.cfg)
    return True


def is_face(face: Sequence[int], spec: ComplexSpec) -> bool:
    """
    Cek apakah F face dari kompleks.

    Args:
        face: Indeks vertex (berbeda satu sama lain).
        spec: Spesifikasi kompleks.

    Returns:
        True jika F face; simplex kosong selalu face.
    """
    if len(set(face)) != len(face):
        raise ComplexError(f"Vertex simplex harus berbeda: {tuple(face)}")
    if not face:
        return True
    if any(i < 0 or i >= spec.cfg.m for i in face):
        return False
    return _admits(spec, vertex_sum(spec.cfg, face))


def _candidate_mask(spec: ComplexSpec, s: np.ndarray) -> np.ndarray:
    """Vertex yang masih muat setelah s (filter vektor, tanpa cek monoid)."""
    pts = spec.cfg.point_array
    total = pts + s
    bound = np.asarray(spec.bound, dtype=np.int64)
    if spec.kind is ComplexKind.UNION_X:
        ok = (total[:, 0] <= bound[0]) & (
            total[:, 0] + total[:, 1] <= bound[0] + bound[1]
        )
        if pts.shape[1] > 2:
            ok &= np.all(total[:, 2:] <= bound[2:], axis=1)
        return ok
    return np.all(total <= bound, axis=1)


def enumerate_faces(spec: ComplexSpec, max_dim: int) -> SlicedComplex:
    """
    Enumerasi semua face berdimensi <= max_dim.

    Ekstensi depth-first dengan vertex berindeks lebih besar; himpunan yang
    melanggar batas tidak diperluas karena semua kompleks di sini tertutup ke bawah.
    """
    if max_dim < -1:
        raise ComplexError(f"Cap dimensi harus >= -1: {max_dim}")
    buckets: List[List[Simplex]] = [[] for _ in range(max_dim + 2)]
    _extend(spec, (), np.zeros(spec.cfg.k, dtype=np.int64), max_dim, buckets)
    faces = tuple(tuple(bucket) for bucket in buckets)
    logger.debug(f"{spec.label}: f-vector {[len(b) for b in faces]}")
    return SlicedComplex(spec, max_dim, faces)


def _extend(
    spec: ComplexSpec,
    face: Simplex,
    s: np.ndarray,
    max_dim: int,
    buckets: List[List[Simplex]],
) -> None:
    buckets[len(face)].append(face)
    if len(face) - 1 >= max_dim:
        return
    start = face[-1] + 1 if face else 0
    mask = _candidate_mask(spec, s)
    for v in np.nonzero(mask[start:])[0] + start:
        v = int(v)
        extended = s + spec.cfg.point_array[v]
        if spec.kind is ComplexKind.MONOID_DELTA and not _admits(spec, extended):
            continue
        _extend(spec, face + (v,), extended, max_dim, buckets)


def union_slice(face: Sequence[int], spec: ComplexSpec) -> int:
    """Indeks k terkecil sehingga F face dari Delta_{b - k e_0 + k e_1}."""
    if spec.kind is not ComplexKind.UNION_X:
        raise ComplexError("union_slice hanya untuk X_b")
    if not is_face(face, spec):
        raise ComplexError(f"{tuple(face)} bukan face dari {spec.label}")
    s = vertex_sum(spec.cfg, face)
    return max(0, int(s[1]) - spec.bound[1])


def supports(chain: "Chain", spec: ComplexSpec) -> bool:
    """True jika setiap simplex chain adalah face dari kompleks."""
    return all(is_face(simplex, spec) for simplex in chain.simplices())
