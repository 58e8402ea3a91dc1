"""
Tujuan: Validator silang: dim (Tor_p)_{p+q} langsung dari kompleks Koszul
Dependensi: itertools, math, src.core.homology, src.core.job_runner
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: koszul_tor_dim((1, 1, 1), p=1, q=1).tor_dim == 9

Kompleks:
    wedge^{p+1} V (x) H0(L^{q-1}) -> wedge^p V (x) H0(L^q)
        -> wedge^{p-1} V (x) H0(L^{q+1})
dengan V = H0(L) berbasis titik A dan H0(L^q) berbasis monomial N.A berderajat q.
Diferensial: (F, f) -> sum_k (-1)^k (F minus i_k, f + a_{i_k}), F terurut naik.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..utils.performance import performance_decorator, performance_monitor
from .errors import CertificateError, InvalidMultidegreeError, ResourceLimitError
from .homology import DEFAULT_SEED, SparseMatrix
from .job_runner import JobRunner
from .point_config import (
    MultiDegree,
    PointConfiguration,
    SegreParams,
    enumerate_multidegrees,
    group_by_symmetry,
    is_in_monoid,
)
from .syzygy import ConfigLike, _engine_for, graded_betti, resolve_config

logger = logging.getLogger(__name__)

DEFAULT_MAX_TERMS = 250000

Basis = List[Tuple[Tuple[int, ...], MultiDegree]]


@dataclass(frozen=True)
class KoszulSlice:
    """Dimensi tiga suku, rank dua peta, dan dim Tor di (p, q)."""

    config: str
    p: int
    q: int
    dim_in: int
    dim_mid: int
    dim_out: int
    rank_in: int
    rank_out: int
    tor_dim: int
    blocks: int = 0
    block_dims: Dict[MultiDegree, int] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        expected = self.dim_mid - self.rank_in - self.rank_out
        if self.tor_dim != expected or self.tor_dim < 0:
            raise CertificateError(f"KoszulSlice tidak konsisten: {self}")


@dataclass(frozen=True)
class CrossCheckResult:
    """Perbandingan Koszul vs jumlah cps_rank."""

    match: bool
    koszul: int
    cps: int

    @property
    def summary(self) -> str:
        if self.match:
            return f"match: {self.koszul} = {self.cps}"
        return f"mismatch: {self.koszul} != {self.cps}"


def h0_dim(dims, q: int) -> int:
    """prod_i C(n_i + q, n_i)."""
    if q < 0:
        return 0
    params = dims if isinstance(dims, SegreParams) else SegreParams(tuple(dims))
    return math.prod(math.comb(n + q, n) for n in params.dims)


def _monomial_count(cfg: PointConfiguration, q: int) -> int:
    if q < 0:
        return 0
    if cfg.kind == "segre":
        return h0_dim(cfg.params, q)
    return len(enumerate_multidegrees(cfg, q))


def _wedge_basis(
    cfg: PointConfiguration, size: int, block: MultiDegree
) -> List[Tuple[int, ...]]:
    """Subset F berukuran `size` dengan block - sum F di N.A (bagian simetrisnya)."""
    if size < 0:
        return []
    result = []
    for subset in itertools.combinations(range(cfg.m), size):
        rest = list(block)
        for i in subset:
            rest = [x - y for x, y in zip(rest, cfg.points[i])]
        if min(rest, default=0) >= 0 and is_in_monoid(rest, cfg):
            result.append(subset)
    return result


def _differential(
    source: Sequence[Tuple[int, ...]], target: Sequence[Tuple[int, ...]]
) -> SparseMatrix:
    index = {f: i for i, f in enumerate(target)}
    values: Dict[Tuple[int, int], Fraction] = {}
    for col, subset in enumerate(source):
        for k in range(len(subset)):
            removed = subset[:k] + subset[k + 1 :]
            row = index.get(removed)
            if row is None:
                raise CertificateError(f"Basis target tidak memuat {removed}")
            values[(row, col)] = Fraction(-1 if k % 2 else 1)
    return SparseMatrix.from_dict(len(target), len(source), values)


def _compose_is_zero(first: SparseMatrix, second: SparseMatrix) -> bool:
    """second . first == 0 secara eksak."""
    by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
    for r, c, v in first.entries:
        by_row.setdefault(r, []).append((c, v))
    product: Dict[Tuple[int, int], Fraction] = {}
    for r, mid, v in second.entries:
        for c, w in by_row.get(mid, ()):
            product[(r, c)] = product.get((r, c), Fraction(0)) + v * w
    return all(value == 0 for value in product.values())


def _block_job(payload):
    cfg, p, block, seed, randomize, verify = payload
    engine = _engine_for(seed, randomize)
    upper = _wedge_basis(cfg, p + 1, block)
    middle = _wedge_basis(cfg, p, block)
    lower = _wedge_basis(cfg, p - 1, block)
    d_in = _differential(upper, middle)
    d_out = _differential(middle, lower)
    if verify and not _compose_is_zero(d_in, d_out):
        raise CertificateError(
            f"Komposit diferensial Koszul tidak nol di blok {list(block)}"
        )
    rank_in = engine.rank(d_in).rank
    rank_out = engine.rank(d_out).rank
    return block, (len(upper), len(middle), len(lower)), rank_in, rank_out


def _global_basis(cfg: PointConfiguration, size: int, q: int) -> Basis:
    if size < 0 or q < 0:
        return []
    monomials = enumerate_multidegrees(cfg, q)
    return [
        (subset, f)
        for subset in itertools.combinations(range(cfg.m), size)
        for f in monomials
    ]


def _global_differential(
    cfg: PointConfiguration, source: Basis, target: Basis
) -> SparseMatrix:
    index = {item: i for i, item in enumerate(target)}
    values: Dict[Tuple[int, int], Fraction] = {}
    for col, (subset, f) in enumerate(source):
        for k, i in enumerate(subset):
            removed = subset[:k] + subset[k + 1 :]
            grown = tuple(x + y for x, y in zip(f, cfg.points[i]))
            values[(index[(removed, grown)], col)] = Fraction(-1 if k % 2 else 1)
    return SparseMatrix.from_dict(len(target), len(source), values)


@performance_decorator(performance_monitor)
def koszul_tor_dim(
    dims: ConfigLike,
    p: int,
    q: int,
    max_terms: int = DEFAULT_MAX_TERMS,
    blocked: bool = True,
    verify_composite: bool = True,
    jobs: Optional[int] = 1,
    seed: int = DEFAULT_SEED,
    randomize: bool = False,
    symmetry: bool = True,
) -> KoszulSlice:
    """
    Dimensi homologi tengah kompleks Koszul di (p, q).

    Args:
        dims: Dimensi Segre atau PointConfiguration.
        p: Indeks wedge (>= 1).
        q: Derajat simetris (>= 0); Sym^{-1} = 0.
        max_terms: Batas jumlah basis ketiga suku.
        blocked: Rakit per blok multidegree (False: matriks global, kasus kecil).
        verify_composite: Cek d . d = 0 secara eksak.

    Raises:
        ResourceLimitError: Jika ukuran melebihi max_terms.
    """
    if p < 1 or q < 0:
        raise InvalidMultidegreeError(f"Butuh p >= 1 dan q >= 0, dapat p={p}, q={q}")
    cfg = resolve_config(dims)
    dim_in = math.comb(cfg.m, p + 1) * _monomial_count(cfg, q - 1)
    dim_mid = math.comb(cfg.m, p) * _monomial_count(cfg, q)
    dim_out = math.comb(cfg.m, p - 1) * _monomial_count(cfg, q + 1)
    if dim_in + dim_mid + dim_out > max_terms:
        raise ResourceLimitError(
            f"Kompleks Koszul {cfg.descriptor} (p={p}, q={q}) butuh "
            f"{dim_in + dim_mid + dim_out} basis > batas {max_terms}"
        )

    if not blocked:
        engine = _engine_for(seed, randomize)
        upper = _global_basis(cfg, p + 1, q - 1)
        middle = _global_basis(cfg, p, q)
        lower = _global_basis(cfg, p - 1, q + 1)
        d_in = _global_differential(cfg, upper, middle)
        d_out = _global_differential(cfg, middle, lower)
        if verify_composite and not _compose_is_zero(d_in, d_out):
            raise CertificateError("Komposit diferensial Koszul tidak nol")
        rank_in = engine.rank(d_in).rank
        rank_out = engine.rank(d_out).rank
        return KoszulSlice(
            config=cfg.descriptor,
            p=p,
            q=q,
            dim_in=len(upper),
            dim_mid=len(middle),
            dim_out=len(lower),
            rank_in=rank_in,
            rank_out=rank_out,
            tor_dim=len(middle) - rank_in - rank_out,
            blocks=1,
        )

    blocks = enumerate_multidegrees(cfg, p + q)
    groups = group_by_symmetry(cfg, blocks) if symmetry else {b: [b] for b in blocks}
    payloads = [(cfg, p, rep, seed, randomize, verify_composite) for rep in groups]
    batch = JobRunner(jobs).run(_block_job, payloads)

    totals = [0, 0, 0]
    rank_in = rank_out = 0
    block_dims: Dict[MultiDegree, int] = {}
    for rep, sizes, r_in, r_out in batch.results:
        weight = len(groups[rep])
        for i in range(3):
            totals[i] += weight * sizes[i]
        rank_in += weight * r_in
        rank_out += weight * r_out
        block_tor = sizes[1] - r_in - r_out
        for member in groups[rep]:
            block_dims[member] = block_tor
    if totals != [dim_in, dim_mid, dim_out]:
        raise CertificateError(
            f"Jumlah dimensi blok {totals} != dimensi suku {[dim_in, dim_mid, dim_out]}"
        )
    slice_ = KoszulSlice(
        config=cfg.descriptor,
        p=p,
        q=q,
        dim_in=dim_in,
        dim_mid=dim_mid,
        dim_out=dim_out,
        rank_in=rank_in,
        rank_out=rank_out,
        tor_dim=dim_mid - rank_in - rank_out,
        blocks=len(blocks),
        block_dims=block_dims,
    )
    logger.debug(f"Koszul {cfg.descriptor} p={p} q={q}: tor={slice_.tor_dim}")
    return slice_


def cross_check(dims: ConfigLike, p: int, q: int, **kwargs) -> CrossCheckResult:
    """
    Bandingkan koszul_tor_dim dengan sum_{deg b = p+q} cps_rank(b, p-1).

    Sisi CPS selalu dihitung tanpa reduksi simetri (setiap multidegree
    dievaluasi) sehingga reduksi orbit sisi Koszul ikut teruji.
    """
    cfg = resolve_config(dims)
    passthrough = {k: kwargs[k] for k in ("jobs", "seed", "randomize") if k in kwargs}
    koszul = koszul_tor_dim(cfg, p, q, **kwargs).tor_dim
    cps = graded_betti(cfg, p - 1, p + q, symmetry=False, **passthrough).total
    result = CrossCheckResult(koszul == cps, koszul, cps)
    if not result.match:
        logger.warning(f"Cross-check {cfg.descriptor} p={p} q={q}: {result.summary}")
    return result
