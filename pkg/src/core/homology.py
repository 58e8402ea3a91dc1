"""
Tujuan: Matriks boundary, rank eksak/modular, Betti tereduksi,
        dan filling (solve d x = gamma)
Dependensi: sympy (DomainMatrix atas GF(p) dan QQ), src.core.complex, src.core.chains
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: betti_reduced(monoid_delta(cfg, (1,) * 6), 0).betti == 3
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from sympy import nextprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .chains import Chain, boundary, is_cycle
from .complex import ComplexSpec, SlicedComplex, enumerate_faces, supports
from .errors import ComplexError, HomologyError

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20250624
PRIME_FLOOR = 2**30


@dataclass(frozen=True)
class SparseMatrix:
    """Matriks sparse dengan entri rasional; tidak menyimpan nol eksplisit."""

    rows: int
    cols: int
    entries: Tuple[Tuple[int, int, Fraction], ...]

    def __post_init__(self):
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise HomologyError(
                    f"Entri ({r}, {c}) di luar ukuran {self.rows}x{self.cols}"
                )
            if v == 0:
                raise HomologyError(f"Nol eksplisit pada ({r}, {c})")

    @classmethod
    def from_dict(
        cls, rows: int, cols: int, values: Dict[Tuple[int, int], Fraction]
    ) -> "SparseMatrix":
        entries = tuple(
            (r, c, Fraction(v)) for (r, c), v in sorted(values.items()) if v != 0
        )
        return cls(rows, cols, entries)

    def is_zero(self) -> bool:
        return not self.entries

    def to_dense(self) -> List[List[Fraction]]:
        dense = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            dense[r][c] = v
        return dense

    def to_domain_matrix(self, domain) -> DomainMatrix:
        rows: Dict[int, Dict[int, object]] = {}
        for r, c, v in self.entries:
            rows.setdefault(r, {})[c] = _convert(v, domain)
        return DomainMatrix(rows, (self.rows, self.cols), domain)


def _convert(value: Fraction, domain):
    if domain == QQ:
        return QQ(value.numerator, value.denominator)
    modulus = domain.characteristic()
    if value.denominator % modulus == 0:
        raise ZeroDivisionError(f"Penyebut {value.denominator} habis dibagi {modulus}")
    return domain(value.numerator * pow(value.denominator, -1, modulus) % modulus)


def _sparse_rows(matrix: DomainMatrix) -> Dict[int, Dict[int, object]]:
    """Baris sparse {i: {j: nilai}} dari DomainMatrix."""
    sparse = matrix.to_sparse().rep
    return {i: dict(row) for i, row in sparse.items()}


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


@dataclass(frozen=True)
class RankResult:
    """Hasil rank beserta metadata engine."""

    rank: int
    primes: Tuple[int, ...]
    exact_fallback: bool


def rank_exact(matrix: SparseMatrix) -> int:
    """Rank eksak atas QQ."""
    if matrix.is_zero():
        return 0
    return int(matrix.to_domain_matrix(QQ).rank())


class RankEngine:
    """
    Engine rank: eliminasi modular di dua prima >= 2^30, fallback eksak atas QQ.

    Prima diambil dari generator `random.Random(seed)` sehingga run dapat diulang;
    `randomize=True` memakai generator tanpa seed.
    """

    def __init__(self, seed: int = DEFAULT_SEED, randomize: bool = False):
        self.seed = seed
        self.randomize = randomize
        rng = random.Random() if randomize else random.Random(seed)
        first = int(nextprime(rng.randrange(PRIME_FLOOR, 2 * PRIME_FLOOR)))
        second = first
        while second == first:
            second = int(nextprime(rng.randrange(PRIME_FLOOR, 2 * PRIME_FLOOR)))
        self.primes = (first, second)
        self.fallback_count = 0

    def rank(self, matrix: SparseMatrix) -> RankResult:
        if matrix.is_zero():
            return RankResult(0, (), False)
        ranks = []
        try:
            for prime in self.primes:
                ranks.append(int(matrix.to_domain_matrix(GF(prime)).rank()))
        except ZeroDivisionError as e:
            logger.warning(f"Penyebut tidak invertibel mod p ({e}); memakai rank eksak")
            self.fallback_count += 1
            return RankResult(rank_exact(matrix), self.primes, True)
        if ranks[0] == ranks[1]:
            return RankResult(ranks[0], self.primes, False)
        logger.warning(
            f"Rank modular berbeda ({ranks[0]} vs {ranks[1]}) di prima {self.primes}; "
            "memakai rank eksak"
        )
        self.fallback_count += 1
        return RankResult(rank_exact(matrix), self.primes, True)


_default_engine: Optional[RankEngine] = None


def default_engine() -> RankEngine:
    global _default_engine
    if _default_engine is None:
        _default_engine = RankEngine()
    return _default_engine


@dataclass(frozen=True)
class HomologyReport:
    """Ringkasan H~_j: jumlah face, rank boundary, dan Betti tereduksi."""

    spec: ComplexSpec
    j: int
    face_counts: Tuple[int, int, int]
    rank_out: int
    rank_in: int
    betti: int
    primes: Tuple[int, ...] = ()
    exact_fallback: bool = False

    def __post_init__(self):
        expected = self.face_counts[1] - self.rank_out - self.rank_in
        if self.betti != expected or self.betti < 0:
            raise HomologyError(f"Laporan homologi tidak konsisten: {self}")


def boundary_matrix(cx: SlicedComplex, j: int) -> SparseMatrix:
    """
    Matriks d_j dari face-j ke face-(j-1) dalam urutan enumerasi.

    Untuk j = 0 baris tunggalnya adalah augmentasi.
    """
    if j > cx.max_dim:
        raise ComplexError(
            f"Kompleks hanya dienumerasi sampai dimensi {cx.max_dim}, butuh {j}"
        )
    if j < 0:
        raise ComplexError(f"Dimensi boundary harus >= 0: {j}")
    rows_index = cx.index(j - 1)
    values: Dict[Tuple[int, int], Fraction] = {}
    for col, simplex in enumerate(cx.faces(j)):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1 :]
            values[(rows_index[face], col)] = Fraction(-1 if i % 2 else 1)
    return SparseMatrix.from_dict(len(cx.faces(j - 1)), len(cx.faces(j)), values)


def betti_reduced(
    spec: ComplexSpec, j: int, engine: Optional[RankEngine] = None
) -> HomologyReport:
    """Rank H~_j = f_j - rank d_j - rank d_{j+1}."""
    if j < 0:
        raise HomologyError(f"Indeks homologi harus >= 0: {j}")
    engine = engine or default_engine()
    cx = enumerate_faces(spec, j + 1)
    out_result = engine.rank(boundary_matrix(cx, j))
    in_result = engine.rank(boundary_matrix(cx, j + 1))
    counts = (len(cx.faces(j - 1)), len(cx.faces(j)), len(cx.faces(j + 1)))
    betti = counts[1] - out_result.rank - in_result.rank
    return HomologyReport(
        spec=spec,
        j=j,
        face_counts=counts,
        rank_out=out_result.rank,
        rank_in=in_result.rank,
        betti=betti,
        primes=engine.primes,
        exact_fallback=out_result.exact_fallback or in_result.exact_fallback,
    )


def _chain_vector(c: Chain, index: Dict[Tuple[int, ...], int]) -> Dict[int, Fraction]:
    vector = {}
    for simplex, coeff in c.items():
        if simplex not in index:
            raise HomologyError(f"Simplex {simplex} tidak ada di kompleks")
        vector[index[simplex]] = coeff
    return vector


def fill(
    gamma: Chain, spec: ComplexSpec, max_dim: Optional[int] = None
) -> Optional[Chain]:
    """
    Cari eta di kompleks dengan d eta = gamma.

    Args:
        gamma: Cycle yang didukung kompleks.
        spec: Kompleks target.
        max_dim: Cap enumerasi (default dim gamma + 1).

    Returns:
        Chain eta, atau None jika gamma bukan boundary di kompleks.

    Raises:
        HomologyError: Jika gamma bukan cycle atau di luar kompleks.
    """
    if not is_cycle(gamma):
        raise HomologyError("fill membutuhkan cycle")
    if not supports(gamma, spec):
        raise HomologyError(f"Cycle tidak didukung {spec.label}")
    j = gamma.dim
    if gamma.is_zero():
        return Chain.zero(j + 1)
    cap = j + 1 if max_dim is None else max(max_dim, j + 1)
    cx = enumerate_faces(spec, cap)
    columns = cx.faces(j + 1)
    if not columns:
        return None
    matrix = boundary_matrix(cx, j + 1)
    target = _chain_vector(gamma, cx.index(j))
    rows: Dict[int, Dict[int, object]] = {}
    for r, c, v in matrix.entries:
        rows.setdefault(r, {})[c] = QQ(v.numerator, v.denominator)
    last = len(columns)
    for r, v in target.items():
        rows.setdefault(r, {})[last] = QQ(v.numerator, v.denominator)
    augmented = DomainMatrix(rows, (matrix.rows, last + 1), QQ)
    reduced, pivots = augmented.rref()
    if last in pivots:
        return None
    reduced_rows = _sparse_rows(reduced)
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for r, col in enumerate(pivots):
        value = reduced_rows.get(r, {}).get(last)
        if value is not None and value != 0:
            terms[columns[col]] = _to_fraction(value)
    eta = Chain(j + 1, terms)
    if boundary(eta) != gamma:
        raise HomologyError("Solusi filling gagal verifikasi eksak")
    return eta


def cycle_basis(cx: SlicedComplex, j: int) -> List[Chain]:
    """Basis eksak ker d_j sebagai daftar Chain."""
    faces = cx.faces(j)
    if not faces:
        return []
    matrix = boundary_matrix(cx, j)
    if matrix.is_zero():
        return [Chain(j, {f: 1}) for f in faces]
    reduced, pivots = matrix.to_domain_matrix(QQ).rref()
    reduced_rows = _sparse_rows(reduced)
    pivot_set = set(pivots)
    basis = []
    for free in range(len(faces)):
        if free in pivot_set:
            continue
        terms: Dict[Tuple[int, ...], Fraction] = {faces[free]: Fraction(1)}
        for r, col in enumerate(pivots):
            value = reduced_rows.get(r, {}).get(free)
            if value is not None and value != 0:
                terms[faces[col]] = -_to_fraction(value)
        basis.append(Chain(j, terms))
    return basis


@dataclass(frozen=True)
class EulerReport:
    """
    Identitas Euler tereduksi: sum (-1)^j f_j == sum (-1)^j betti_j, j >= -1.

    betti_j = dim ker d_j (rank eksak QQ) - rank d_{j+1} (engine modular), jadi
    identitas hanya berlaku bila kedua jalur rank sepakat di setiap dimensi.
    """

    f_vector: Tuple[int, ...]
    bettis: Tuple[int, ...]
    holds: bool
    exact_ranks: Tuple[int, ...] = ()
    engine_ranks: Tuple[int, ...] = ()


def euler_check(spec: ComplexSpec, engine: Optional[RankEngine] = None) -> EulerReport:
    """Enumerasi semua dimensi lalu cek identitas Euler tereduksi."""
    engine = engine or default_engine()
    cx = enumerate_faces(spec, spec.cfg.m - 1)
    top = max((d for d in range(-1, cx.max_dim + 1) if cx.faces(d)), default=-1)
    # indeks d + 1 menyimpan rank d_d; d_{-1} dan d_{top+1} bernilai nol
    exact = [0] * (top + 3)
    modular = [0] * (top + 3)
    for d in range(0, top + 1):
        matrix = boundary_matrix(cx, d)
        exact[d + 1] = rank_exact(matrix)
        modular[d + 1] = engine.rank(matrix).rank
    f_vector = tuple(len(cx.faces(d)) for d in range(-1, top + 1))
    bettis = tuple(
        f_vector[d + 1] - exact[d + 1] - modular[d + 2] for d in range(-1, top + 1)
    )
    euler_f = sum((-1) ** d * f_vector[d + 1] for d in range(-1, top + 1))
    euler_b = sum((-1) ** d * bettis[d + 1] for d in range(-1, top + 1))
    if euler_f != euler_b:
        logger.warning(
            f"Identitas Euler gagal di {spec.label}: rank eksak {exact[1:-1]} "
            f"vs engine {modular[1:-1]}"
        )
    return EulerReport(
        f_vector, bettis, euler_f == euler_b, tuple(exact[1:-1]), tuple(modular[1:-1])
    )

