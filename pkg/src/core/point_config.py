"""
Tujuan: Konfigurasi titik (Segre, Veronese, umum), grading omega, dan multidegree
Dependensi: fractions, itertools, numpy, sympy
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: cfg = build_segre(SegreParams((1, 1, 1))); degree((1,) * 6, cfg) == 2
"""

import itertools
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np
from sympy import Matrix, Rational

from .errors import InvalidDescriptorError, InvalidMultidegreeError

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]
MultiDegree = Tuple[int, ...]

_DESCRIPTOR_PATTERN = re.compile(r"^\s*(segre|veronese)\s*:\s*([0-9,\s]+)$")


@dataclass(frozen=True)
class SegreParams:
    """Dimensi faktor (n_1, ..., n_d) dari produk ruang proyektif."""

    dims: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(n) for n in self.dims))
        if not self.dims:
            raise InvalidDescriptorError("Segre membutuhkan minimal satu faktor")
        if any(n < 1 for n in self.dims):
            raise InvalidDescriptorError(f"Dimensi faktor harus >= 1: {self.dims}")

    @property
    def d(self) -> int:
        return len(self.dims)


@dataclass(frozen=True)
class PointConfiguration:
    """
    Konfigurasi titik A di N^k beserta grading omega.

    Titik disimpan dalam urutan tetap; semua indeks vertex di modul lain
    merujuk ke urutan ini. Nilai immutable sehingga aman dibagi antar worker.
    """

    points: Tuple[Point, ...]
    omega: Tuple[Fraction, ...]
    label: str
    kind: str = "general"
    params: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.points:
            raise InvalidDescriptorError("Konfigurasi tidak boleh kosong")
        k = len(self.points[0])
        if any(len(a) != k for a in self.points):
            raise InvalidDescriptorError("Semua titik harus berdimensi sama")
        if len(self.omega) != k:
            raise InvalidDescriptorError("Panjang omega tidak sesuai dimensi titik")
        if any(c < 0 for a in self.points for c in a):
            raise InvalidDescriptorError("Koordinat titik harus nonnegatif")
        if len(set(self.points)) != len(self.points):
            raise InvalidDescriptorError("Titik konfigurasi harus berbeda")
        for a in self.points:
            if sum(Fraction(c) * w for c, w in zip(a, self.omega)) != 1:
                raise InvalidDescriptorError(f"omega . a != 1 untuk titik {a}")

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def k(self) -> int:
        return len(self.omega)

    @property
    def descriptor(self) -> str:
        """String descriptor kanonik, dipakai sebagai kunci cache."""
        if self.kind == "segre":
            return "segre:" + ",".join(str(n) for n in self.params)
        if self.kind == "veronese":
            return "veronese:" + ",".join(str(n) for n in self.params)
        return self.label

    @cached_property
    def point_array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.int64)

    @cached_property
    def blocks(self) -> Tuple[Tuple[int, int], ...]:
        """Rentang koordinat (start, stop) per faktor; satu blok untuk non-Segre."""
        if self.kind != "segre":
            return ((0, self.k),)
        spans = []
        start = 0
        for n in self.params:
            spans.append((start, start + n + 1))
            start += n + 1
        return tuple(spans)

    def block_of(self, coord: int) -> int:
        for idx, (start, stop) in enumerate(self.blocks):
            if start <= coord < stop:
                return idx
        raise InvalidMultidegreeError(f"Koordinat di luar rentang: {coord}")

    def index_of(self, point: Sequence[int]) -> int:
        """Indeks titik di konfigurasi, -1 jika bukan titik A."""
        return self._point_index.get(tuple(int(c) for c in point), -1)

    @cached_property
    def _point_index(self) -> Dict[Point, int]:
        return {a: i for i, a in enumerate(self.points)}


def build_segre(dims: Union[SegreParams, Sequence[int]]) -> PointConfiguration:
    """
    Membangun konfigurasi A_{n_1,...,n_d}.

    Urutan titik leksikografis pada tuple indeks per faktor (j_1, ..., j_d).

    Args:
        dims: SegreParams atau list dimensi.

    Returns:
        PointConfiguration dengan omega = (1/d)(1, ..., 1).
    """
    params = dims if isinstance(dims, SegreParams) else SegreParams(tuple(dims))
    k = sum(n + 1 for n in params.dims)
    points = []
    for choice in itertools.product(*(range(n + 1) for n in params.dims)):
        vec = []
        for n, j in zip(params.dims, choice):
            unit = [0] * (n + 1)
            unit[j] = 1
            vec.extend(unit)
        points.append(tuple(vec))
    omega = tuple(Fraction(1, params.d) for _ in range(k))
    label = "segre[" + ",".join(str(n) for n in params.dims) + "]"
    return PointConfiguration(tuple(points), omega, label, "segre", params.dims)


def build_veronese(n: int, a: int) -> PointConfiguration:
    """Eksponen monomial derajat a dalam n+1 variabel, urutan leksikografis menurun."""
    if n < 1 or a < 1:
        raise InvalidDescriptorError(f"Veronese membutuhkan n, a >= 1: ({n}, {a})")
    points = sorted(
        (v for v in itertools.product(range(a + 1), repeat=n + 1) if sum(v) == a),
        reverse=True,
    )
    omega = tuple(Fraction(1, a) for _ in range(n + 1))
    return PointConfiguration(
        tuple(points), omega, f"veronese[{n},{a}]", "veronese", (n, a)
    )


def build_configuration(
    points: Iterable[Sequence[int]], label: str
) -> PointConfiguration:
    """
    Konstruktor konfigurasi umum; omega dicari lewat solve rasional eksak.

    Raises:
        InvalidDescriptorError: Jika tidak ada omega dengan omega . a = 1.
    """
    pts = tuple(tuple(int(c) for c in a) for a in points)
    if not pts:
        raise InvalidDescriptorError("Konfigurasi tidak boleh kosong")
    matrix = Matrix(pts)
    rhs = Matrix([1] * len(pts))
    try:
        solution, free = matrix.gauss_jordan_solve(rhs)
    except ValueError as e:
        raise InvalidDescriptorError(f"Konfigurasi tidak homogen: {label}") from e
    if free.shape[0]:
        solution = solution.subs({s: 0 for s in free})
    omega = tuple(_to_fraction(x) for x in solution)
    return PointConfiguration(pts, omega, label, "general", ())


def _to_fraction(value) -> Fraction:
    rational = Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def parse_descriptor(text: str) -> PointConfiguration:
    """
    Parse descriptor `segre:n1,...,nd` atau `veronese:n,a`.

    Raises:
        InvalidDescriptorError: Untuk grammar lain.
    """
    match = _DESCRIPTOR_PATTERN.match(text or "")
    if not match:
        raise InvalidDescriptorError(f"Descriptor tidak dikenali: {text!r}")
    kind, body = match.groups()
    try:
        numbers = [int(x) for x in body.split(",") if x.strip()]
    except ValueError as e:
        raise InvalidDescriptorError(f"Descriptor tidak valid: {text!r}") from e
    if kind == "segre":
        return build_segre(SegreParams(tuple(numbers)))
    if len(numbers) != 2:
        raise InvalidDescriptorError(f"Veronese membutuhkan tepat dua angka: {text!r}")
    return build_veronese(numbers[0], numbers[1])


def is_segre(cfg: PointConfiguration) -> bool:
    return cfg.kind == "segre"


def block_sums(cfg: PointConfiguration, v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(v[start:stop]) for start, stop in cfg.blocks)


def degree(b: Sequence[int], cfg: PointConfiguration) -> int:
    """
    Derajat b . omega.

    Raises:
        InvalidMultidegreeError: Jika hasilnya tidak bulat atau negatif.
    """
    if len(b) != cfg.k:
        raise InvalidMultidegreeError(f"Panjang multidegree {len(b)} != {cfg.k}")
    value = sum(Fraction(int(c)) * w for c, w in zip(b, cfg.omega))
    if value.denominator != 1 or value < 0:
        raise InvalidMultidegreeError(f"b . omega = {value} bukan bilangan bulat >= 0")
    return int(value)


def _compositions(total: int, parts: int) -> List[Tuple[int, ...]]:
    if parts == 1:
        return [(total,)]
    result = []
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            result.append((first,) + rest)
    return result


def enumerate_multidegrees(cfg: PointConfiguration, t: int) -> List[MultiDegree]:
    """
    Semua elemen N.A berderajat t, terurut leksikografis.

    Untuk Segre dihitung per blok sebagai komposisi t; konfigurasi lain
    memakai penjumlahan titik bertahap.
    """
    if t < 0:
        raise InvalidMultidegreeError(f"Derajat harus >= 0: {t}")
    if is_segre(cfg):
        per_block = [_compositions(t, stop - start) for start, stop in cfg.blocks]
        result = {
            tuple(itertools.chain.from_iterable(combo))
            for combo in itertools.product(*per_block)
        }
        return sorted(result)
    level = {tuple([0] * cfg.k)}
    for _ in range(t):
        level = {tuple(x + y for x, y in zip(s, a)) for s in level for a in cfg.points}
    return sorted(level)


def is_in_monoid(v: Sequence[int], cfg: PointConfiguration) -> bool:
    """True jika v kombinasi bilangan asli dari titik-titik A."""
    vec = tuple(int(c) for c in v)
    if len(vec) != cfg.k or any(c < 0 for c in vec):
        return False
    if is_segre(cfg):
        sums = block_sums(cfg, vec)
        return all(s == sums[0] for s in sums)
    try:
        degree(vec, cfg)
    except InvalidMultidegreeError:
        return False
    return _monoid_search(vec, cfg.points, {})


def _monoid_search(
    vec: Point, points: Tuple[Point, ...], memo: Dict[Point, bool]
) -> bool:
    if not any(vec):
        return True
    if vec in memo:
        return memo[vec]
    found = False
    for a in points:
        rest = tuple(x - y for x, y in zip(vec, a))
        if min(rest) >= 0 and _monoid_search(rest, points, memo):
            found = True
            break
    memo[vec] = found
    return found


def cap_dimensions(dims: Union[SegreParams, Sequence[int]], p: int) -> SegreParams:
    """Ganti setiap n_i dengan min(n_i, p)."""
    if p < 1:
        raise InvalidDescriptorError(f"p harus >= 1: {p}")
    params = dims if isinstance(dims, SegreParams) else SegreParams(tuple(dims))
    return SegreParams(tuple(min(n, p) for n in params.dims))


def canonical_multidegree(cfg: PointConfiguration, b: Sequence[int]) -> MultiDegree:
    """
    Representatif orbit b di bawah simetri konfigurasi.

    Segre: permutasi di dalam tiap blok dan antar faktor berukuran sama.
    Veronese: semua permutasi koordinat. Umum: identitas.
    """
    vec = tuple(int(c) for c in b)
    if cfg.kind == "veronese":
        return tuple(sorted(vec, reverse=True))
    if not is_segre(cfg):
        return vec
    sorted_blocks = [
        tuple(sorted(vec[start:stop], reverse=True)) for start, stop in cfg.blocks
    ]
    by_size: Dict[int, List[int]] = {}
    for idx, (start, stop) in enumerate(cfg.blocks):
        by_size.setdefault(stop - start, []).append(idx)
    arranged = list(sorted_blocks)
    for positions in by_size.values():
        ordered = sorted((sorted_blocks[i] for i in positions), reverse=True)
        for pos, block in zip(positions, ordered):
            arranged[pos] = block
    return tuple(itertools.chain.from_iterable(arranged))


def group_by_symmetry(
    cfg: PointConfiguration, multidegrees: Iterable[Sequence[int]]
) -> Dict[MultiDegree, List[MultiDegree]]:
    """Kelompokkan multidegree per representatif orbit (urutan kemunculan dijaga)."""
    groups: Dict[MultiDegree, List[MultiDegree]] = {}
    for b in multidegrees:
        vec = tuple(int(c) for c in b)
        groups.setdefault(canonical_multidegree(cfg, vec), []).append(vec)
    return groups
