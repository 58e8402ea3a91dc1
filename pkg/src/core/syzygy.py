"""
Tujuan: Korespondensi Betti multigraded <-> homologi Delta_b, cek Property N_p,
        dan pencarian witness
Dependensi: src.core.homology, src.core.job_runner, src.core.point_config
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: graded_betti(build_segre((1, 1, 1)), j=0, t=2).total == 9
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple, Union

from ..utils.performance import performance_decorator, performance_monitor
from .chains import Chain, is_cycle
from .complex import enumerate_faces, monoid_delta
from .errors import CertificateError, InvalidMultidegreeError
from .homology import DEFAULT_SEED, RankEngine, betti_reduced, cycle_basis, fill
from .job_runner import JobRunner
from .point_config import (
    MultiDegree,
    PointConfiguration,
    SegreParams,
    build_segre,
    cap_dimensions,
    enumerate_multidegrees,
    group_by_symmetry,
    is_segre,
)

if TYPE_CHECKING:
    from ..utils.cache_store import BettiCache

logger = logging.getLogger(__name__)

ConfigLike = Union[PointConfiguration, SegreParams, Sequence[int]]


class CheckStatus(Enum):
    """Status verifikasi N_p."""

    VERIFIED = "verified"
    FAILED = "failed"


@dataclass(frozen=True)
class BettiEntry:
    """Rank H~_j(Delta_b) untuk satu multidegree; j+1 adalah indeks modul E_{j+1}."""

    j: int
    b: MultiDegree
    t: int
    rank: int

    @property
    def hom_index(self) -> int:
        return self.j + 1

    def to_dict(self) -> Dict:
        return {"j": self.j, "b": list(self.b), "t": self.t, "rank": self.rank}


@dataclass
class BettiTable:
    """Kumpulan entry nonzero beserta metadata engine."""

    config: str
    entries: List[BettiEntry] = field(default_factory=list)
    meta: Dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(e.rank for e in self.entries)

    def totals(self) -> Dict[Tuple[int, int], int]:
        result: Dict[Tuple[int, int], int] = {}
        for e in self.entries:
            result[(e.j, e.t)] = result.get((e.j, e.t), 0) + e.rank
        return result

    def grid(self) -> Dict[int, Dict[int, int]]:
        """Tampilan tabel Betti: baris t - (j+1), kolom j+1."""
        rows: Dict[int, Dict[int, int]] = {}
        for (j, t), value in sorted(self.totals().items()):
            rows.setdefault(t - j - 1, {})[j + 1] = value
        return rows

    def to_dict(self) -> Dict:
        return {
            "config": self.config,
            "entries": [e.to_dict() for e in self.entries],
            "total": self.total,
        }


@dataclass(frozen=True)
class DegreeCheck:
    """Total rank H~_{p'-1} di derajat t = p' + q."""

    p: int
    t: int
    total: int

    @property
    def j(self) -> int:
        return self.p - 1

    @property
    def q(self) -> int:
        return self.t - self.p

    @property
    def vanishes(self) -> bool:
        return self.total == 0


@dataclass
class NpReport:
    """Hasil cek N_p sampai derajat degree_bound."""

    config: str
    p: int
    degree_bound: int
    status: CheckStatus
    checks: List[DegreeCheck] = field(default_factory=list)
    witnesses: List[Tuple[MultiDegree, int, int]] = field(default_factory=list)
    capped_from: Optional[str] = None

    def __post_init__(self):
        if self.status is CheckStatus.FAILED and not self.witnesses:
            raise CertificateError("Status failed harus membawa minimal satu witness")

    @property
    def status_label(self) -> str:
        if self.status is CheckStatus.VERIFIED:
            return f"verified-through-{self.degree_bound}"
        return "failed"

    def vanishing_pattern(self) -> Dict[Tuple[int, int], bool]:
        return {(c.p, c.t): c.vanishes for c in self.checks}

    def to_dict(self) -> Dict:
        return {
            "config": self.config,
            "p": self.p,
            "degree_bound": self.degree_bound,
            "status": self.status_label,
            "checks": [
                {"p": c.p, "q": c.q, "t": c.t, "total": c.total} for c in self.checks
            ],
            "witnesses": [
                {"b": list(b), "j": j, "rank": rank} for b, j, rank in self.witnesses
            ],
            "capped_from": self.capped_from,
        }


@dataclass(frozen=True)
class Witness:
    """Multidegree dengan rank H~_{p-1} > 0 dan cycle yang bukan boundary."""

    b: MultiDegree
    j: int
    t: int
    rank: int
    cycle: Chain


def resolve_config(obj: ConfigLike) -> PointConfiguration:
    if isinstance(obj, PointConfiguration):
        return obj
    return build_segre(obj)


@lru_cache(maxsize=8)
def _engine_for(seed: int, randomize: bool) -> RankEngine:
    if randomize:
        return RankEngine(seed, randomize=True)
    return RankEngine(seed)


def _rank_job(payload) -> Tuple[MultiDegree, int, Tuple[int, ...], bool]:
    cfg, b, j, seed, randomize = payload
    report = betti_reduced(monoid_delta(cfg, b), j, _engine_for(seed, randomize))
    return b, report.betti, report.primes, report.exact_fallback


def cps_rank(
    cfg: PointConfiguration,
    b: Sequence[int],
    j: int,
    engine: Optional[RankEngine] = None,
) -> int:
    """
    Jumlah generator minimal E_{j+1} di multidegree b = rank H~_j(Delta_b).

    Raises:
        InvalidMultidegreeError: Jika b bukan anggota N.A.
    """
    return betti_reduced(monoid_delta(cfg, b), j, engine).betti


def graded_betti(
    cfg: ConfigLike,
    j: int,
    t: int,
    jobs: Optional[int] = 1,
    seed: int = DEFAULT_SEED,
    randomize: bool = False,
    cache: Optional["BettiCache"] = None,
    symmetry: bool = True,
) -> BettiTable:
    """
    cps_rank untuk semua multidegree berderajat t (nol dibuang).

    Args:
        cfg: Konfigurasi atau dimensi Segre.
        j: Indeks homologi.
        t: Derajat.
        jobs: Jumlah worker (0 = semua CPU).
        seed: Seed generator prima.
        randomize: Pilih prima acak.
        cache: BettiCache opsional.
        symmetry: Hitung satu representatif per orbit simetri.

    Returns:
        BettiTable slice (j, t).
    """
    cfg = resolve_config(cfg)
    if t < 0:
        raise InvalidMultidegreeError(f"Derajat harus >= 0: {t}")
    descriptor = cfg.descriptor
    if cache is not None:
        cached = cache.get_slice(descriptor, t, j)
        if cached is not None:
            logger.debug(f"Slice ({descriptor}, t={t}, j={j}) dari cache")
            return BettiTable(
                descriptor,
                [BettiEntry(e.j, e.b, e.t, e.rank) for e in cached],
                {"cache": "hit"},
            )

    multidegrees = enumerate_multidegrees(cfg, t)
    if symmetry:
        groups = group_by_symmetry(cfg, multidegrees)
    else:
        groups = {b: [b] for b in multidegrees}
    payloads = [(cfg, rep, j, seed, randomize) for rep in groups]
    batch = JobRunner(jobs).run(_rank_job, payloads)

    ranks: Dict[MultiDegree, int] = {}
    primes: Tuple[int, ...] = ()
    fallback = False
    for rep, rank, used_primes, exact in batch.results:
        primes = primes or used_primes
        fallback = fallback or exact
        for member in groups[rep]:
            ranks[member] = rank
    entries = [BettiEntry(j, b, t, ranks[b]) for b in sorted(ranks) if ranks[b] > 0]

    if cache is not None:
        from ..utils.cache_store import CacheEntry

        for e in entries:
            cache.put(CacheEntry(descriptor, t, j, e.b, e.rank, primes, fallback))
        cache.mark_slice(descriptor, t, j)

    meta = {
        "multidegrees": len(multidegrees),
        "orbits": len(groups),
        "primes": list(primes),
        "exact_fallback": fallback,
        "seconds": round(batch.total_time, 3),
    }
    return BettiTable(descriptor, entries, meta)


def betti_table(
    cfg: ConfigLike, max_j: int, max_t: int, **kwargs
) -> BettiTable:
    """Seluruh tabel Betti untuk j <= max_j, t <= max_t (t > j)."""
    cfg = resolve_config(cfg)
    table = BettiTable(cfg.descriptor)
    for j in range(max_j + 1):
        for t in range(j + 1, max_t + 1):
            table.entries.extend(graded_betti(cfg, j, t, **kwargs).entries)
    return table


@performance_decorator(performance_monitor)
def check_np(
    dims: ConfigLike,
    p: int,
    max_degree: Optional[int] = None,
    use_cap: bool = True,
    degree_slack: int = 3,
    **kwargs,
) -> NpReport:
    """
    Verifikasi N_p terbatas: H~_{p'-1}(Delta_b) = 0 untuk p' <= p, p'+2 <= deg b <= D.

    Laporan tidak pernah mengklaim N_p tanpa batas derajat.
    """
    if p < 1:
        raise InvalidMultidegreeError(f"p harus >= 1: {p}")
    bound = p + degree_slack if max_degree is None else max_degree
    if bound < p + 2:
        raise InvalidMultidegreeError(f"Batas derajat {bound} < p + 2 = {p + 2}")
    original = resolve_config(dims)
    cfg = original
    capped_from = None
    if use_cap and is_segre(original):
        cfg = build_segre(cap_dimensions(original.params, p))
        if cfg.descriptor != original.descriptor:
            capped_from = original.descriptor
            logger.info(f"Dimensi dipotong: {original.descriptor} -> {cfg.descriptor}")

    checks: List[DegreeCheck] = []
    witnesses: List[Tuple[MultiDegree, int, int]] = []
    for p_prime in range(1, p + 1):
        for t in range(p_prime + 2, bound + 1):
            table = graded_betti(cfg, p_prime - 1, t, **kwargs)
            checks.append(DegreeCheck(p_prime, t, table.total))
            for e in table.entries:
                witnesses.append((e.b, e.j, e.rank))
    status = CheckStatus.FAILED if witnesses else CheckStatus.VERIFIED
    if witnesses:
        logger.info(f"N_{p} gagal untuk {cfg.descriptor}: {len(witnesses)} witness")
    return NpReport(cfg.descriptor, p, bound, status, checks, witnesses, capped_from)


def _certified_cycle(cfg: PointConfiguration, b: MultiDegree, j: int) -> Chain:
    spec = monoid_delta(cfg, b)
    cx = enumerate_faces(spec, j + 1)
    for candidate in cycle_basis(cx, j):
        if fill(candidate, spec) is None:
            if not is_cycle(candidate):
                raise CertificateError("Kandidat witness bukan cycle")
            return candidate
    raise CertificateError(f"Tidak ada cycle non-boundary di {spec.label}")


def find_witness(
    dims: ConfigLike,
    p: int,
    degrees: Sequence[int],
    extend: bool = True,
    **kwargs,
) -> List[Witness]:
    """
    Semua b di derajat yang diminta dengan cps_rank(b, p-1) > 0, masing-masing
    dengan (p-1)-cycle yang tersertifikasi bukan boundary.

    Jika semua derajat kosong dan extend=True, derajat berikutnya dicoba sekali.
    """
    if not degrees:
        raise InvalidMultidegreeError("Daftar derajat tidak boleh kosong")
    cfg = resolve_config(dims)
    j = p - 1
    witnesses: List[Witness] = []
    search = list(degrees)
    if extend:
        search.append(max(degrees) + 1)
    for index, t in enumerate(search):
        if index == len(degrees) and witnesses:
            break
        table = graded_betti(cfg, j, t, **kwargs)
        for e in table.entries:
            cycle = _certified_cycle(cfg, e.b, j)
            witnesses.append(Witness(e.b, j, e.t, e.rank, cycle))
            logger.info(f"Witness N_{p}: b={list(e.b)} rank={e.rank}")
    return witnesses
