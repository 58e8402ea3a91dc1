"""
Tujuan: Rantai UFO, lemma filling, dan prosedur dorong-cycle dengan sertifikat eksak
Dependensi: numpy, src.core.chains, src.core.complex, src.core.homology
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: cert = fill_simple(make_ufo(axis, base, 1, beta, cfg), r=1, l=0, p=2)

Koordinat 0-based: "e_1, e_2" pada konstruksi aslinya adalah koordinat 0 dan 1 di sini.
Setiap FillCertificate memverifikasi d(filling) = d(source) dan support di kompleks
target saat dibuat. Join yang berbagi vertex memakai konvensi degenerate = 0
(join(..., collapse_shared=True)), sama dengan cone.

Konstruksi yang dijamin selalu berhasil melempar ConstructionError bila gagal.
Satu-satunya sub-langkah yang boleh jatuh ke solve linear eksak adalah base 0-cycle
(t = p, deg beta = p + 2) yang titik-titiknya tidak terhubung jalur edge di batas
slack; strategi lalu dicatat "construction+solve" dengan log warning.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .chains import (
    Chain,
    boundary,
    cone,
    is_cycle,
    join,
    link_cycle,
    link_face,
    simplex_chain,
    vertex_chain,
)
from .complex import (
    ComplexSpec,
    box_delta,
    is_face,
    monoid_delta,
    supports,
    union_slice,
    union_x,
    vertex_sum,
)
from .errors import (
    CertificateError,
    ConstructionError,
    DecompositionError,
    HypothesisError,
    UfoValidationError,
    UnsupportedCaseError,
)
from .homology import betti_reduced, fill
from .point_config import MultiDegree, PointConfiguration, degree, is_segre

logger = logging.getLogger(__name__)

CONSTRUCTION = "construction"
CONSTRUCTION_SOLVE = "construction+solve"


@dataclass(frozen=True)
class UfoChain:
    """eta = <a^1, ..., a^t> * C, sumbu menjenuhkan koordinat `coord` dari beta."""

    axis: Tuple[int, ...]
    base: Chain
    coord: int
    beta: MultiDegree
    cfg: PointConfiguration = field(repr=False)

    @property
    def t(self) -> int:
        return len(self.axis)

    @property
    def k(self) -> int:
        """Jumlah vertex tiap simplex eta."""
        return self.t + self.base.dim + 1

    @property
    def eta(self) -> Chain:
        return join(self.axis, self.base)

    @property
    def rest(self) -> np.ndarray:
        return np.asarray(self.beta, dtype=np.int64) - vertex_sum(self.cfg, self.axis)


@dataclass(frozen=True)
class FillCertificate:
    """Filling eta~ dengan d eta~ = d eta di kompleks target; dicek saat konstruksi."""

    source: Chain
    filling: Chain
    target: ComplexSpec
    lemma: str
    strategy: str = CONSTRUCTION

    def __post_init__(self):
        if self.source.dim != self.filling.dim:
            raise CertificateError(
                f"Dimensi berbeda: source {self.source.dim}, filling {self.filling.dim}"
            )
        if self.source.dim >= 0 and boundary(self.filling) != boundary(self.source):
            raise CertificateError(f"[{self.lemma}] d(filling) != d(source)")
        if not supports(self.filling, self.target):
            raise CertificateError(
                f"[{self.lemma}] filling keluar dari {self.target.label}"
            )

    def to_dict(self) -> Dict:
        return {
            "lemma": self.lemma,
            "strategy": self.strategy,
            "target": self.target.label,
            "source": self.source.to_records(),
            "filling": self.filling.to_records(),
            "boundary_equal": True,
            "support_contained": True,
        }


class PushResult(NamedTuple):
    """Cycle hasil dorong dan witness p-chain di X_b."""

    cycle: Chain
    witness: Chain


@dataclass
class Decomposition:
    """Potongan UFO dan sisa chain."""

    pieces: List[UfoChain]
    remainder: Chain

    def total(self) -> Chain:
        result = self.remainder
        for piece in self.pieces:
            result = result + piece.eta
        return result


def _unit(cfg: PointConfiguration, i: int) -> np.ndarray:
    vec = np.zeros(cfg.k, dtype=np.int64)
    vec[i] = 1
    return vec


def _as_tuple(vec) -> MultiDegree:
    return tuple(int(x) for x in vec)


def _shifted_point(cfg: PointConfiguration, a: int, plus: int, minus: int) -> int:
    vec = (
        np.asarray(cfg.points[a], dtype=np.int64)
        + _unit(cfg, plus)
        - _unit(cfg, minus)
    )
    if vec.min() < 0:
        return -1
    return cfg.index_of(vec)


def _require_segre(cfg: PointConfiguration) -> None:
    if not is_segre(cfg):
        raise UnsupportedCaseError(
            f"Konstruksi hanya untuk konfigurasi Segre: {cfg.label}"
        )


def _first_block_size(cfg: PointConfiguration) -> int:
    start, stop = cfg.blocks[0]
    return stop - start


class _Assembly:
    """Kumpulkan filling per potongan; sisa yang ditunda diselesaikan dengan solve."""

    def __init__(self, dim: int, target: ComplexSpec, lemma: str):
        self.filling = Chain.zero(dim)
        self.residual: Optional[Chain] = None
        self.target = target
        self.lemma = lemma
        self.solved = False

    def add(self, chain: Chain) -> None:
        self.filling = self.filling + chain

    def absorb(self, cert: "FillCertificate") -> None:
        """Filling dari sub-sertifikat; strategi solve-nya ikut terbawa."""
        self.add(cert.filling)
        self.solved = self.solved or cert.strategy != CONSTRUCTION

    def defer(self, cycle: Chain) -> None:
        self.residual = cycle if self.residual is None else self.residual + cycle

    def finish(self) -> Tuple[Chain, str]:
        if self.residual is None or self.residual.is_zero():
            return self.filling, CONSTRUCTION_SOLVE if self.solved else CONSTRUCTION
        logger.warning(
            f"[{self.lemma}] sisa diselesaikan dengan solve di {self.target.label}"
        )
        solved = fill(self.residual, self.target)
        if solved is None:
            raise ConstructionError(
                f"[{self.lemma}] sisa bukan boundary di {self.target.label}; "
                "prasyarat dilanggar"
            )
        return self.filling + solved, CONSTRUCTION_SOLVE


def make_ufo(
    axis: Sequence[int],
    base: Chain,
    coord: int,
    beta: Sequence[int],
    cfg: PointConfiguration,
) -> UfoChain:
    """
    Validasi semua syarat UFO lalu bangun UfoChain.

    Raises:
        UfoValidationError: Syarat mana pun dilanggar.
    """
    axis = tuple(int(a) for a in axis)
    beta = _as_tuple(beta)
    if not axis:
        raise UfoValidationError("Sumbu UFO tidak boleh kosong")
    if len(set(axis)) != len(axis):
        raise UfoValidationError(f"Vertex sumbu harus berbeda: {axis}")
    if any(a < 0 or a >= cfg.m for a in axis):
        raise UfoValidationError(f"Indeks sumbu di luar konfigurasi: {axis}")
    if len(beta) != cfg.k or not 0 <= coord < cfg.k:
        raise UfoValidationError(f"beta/coord tidak sesuai dimensi {cfg.k}")
    values = [cfg.points[a][coord] for a in axis]
    if any(v <= 0 for v in values):
        raise UfoValidationError(f"Koordinat {coord} setiap vertex sumbu harus > 0")
    if sum(values) != beta[coord]:
        raise UfoValidationError(
            f"Jumlah koordinat {coord} sumbu = {sum(values)} != beta = {beta[coord]}"
        )
    if not is_cycle(base):
        raise UfoValidationError("Base UFO harus cycle")
    if set(axis) & base.vertices():
        raise UfoValidationError("Sumbu dan base berbagi vertex")
    eta = join(axis, base)
    if not supports(eta, box_delta(cfg, beta)):
        raise UfoValidationError(f"eta tidak termuat di BoxDelta{list(beta)}")
    lowered = list(beta)
    lowered[coord] -= 1
    if eta.dim >= 0 and not supports(boundary(eta), box_delta(cfg, lowered)):
        raise UfoValidationError(f"d eta tidak termuat di BoxDelta{lowered}")
    return UfoChain(axis, base, coord, beta, cfg)


def fill_simple(u: UfoChain, r: int, l: int, p: int) -> FillCertificate:
    """
    Filling UFO^r_{t,p+1} dengan t di {p+1, p, 1} ke Delta_{beta + e_l - e_r}.

    Kasus t = p+1 memakai cone x * d eta, kasus t = 1 menggeser sumbu
    a~ = a + e_l - e_r, kasus t = p menghubungkan titik base 0-cycle dengan
    jalur edge w lalu mengambil d chi * w.

    Raises:
        ConstructionError: Kasus t = p+1 tanpa titik cone, atau kasus t = 1
            yang hasil gesernya keluar target (prasyarat dilanggar).
    """
    cfg = u.cfg
    _require_segre(cfg)
    if u.coord != r:
        raise UfoValidationError(f"UFO berkoordinat {u.coord}, bukan r = {r}")
    if r == l or cfg.block_of(r) != cfg.block_of(l):
        raise UfoValidationError(f"r = {r} dan l = {l} harus berbeda di blok yang sama")
    if u.k != p + 1:
        raise UfoValidationError(f"eta harus {p}-chain, dapat {u.k - 1}-chain")
    if degree(u.beta, cfg) < p + 2:
        raise UfoValidationError(f"deg beta = {degree(u.beta, cfg)} < p + 2")
    target_vec = np.asarray(u.beta, dtype=np.int64) + _unit(cfg, l) - _unit(cfg, r)
    target = box_delta(cfg, _as_tuple(target_vec))
    eta = u.eta

    if u.t == p + 1:
        filling, strategy = _fill_cone_top(u, eta, target)
    elif u.t == 1:
        filling, strategy = _fill_axis_shift(u, eta, target, r, l)
    elif u.t == p:
        filling, strategy = _fill_zero_base(u, eta, target, p)
    else:
        raise UnsupportedCaseError(f"t = {u.t} tidak di {{p+1, p, 1}} untuk p = {p}")
    return FillCertificate(eta, filling, target, "simple", strategy)


def _fill_cone_top(u: UfoChain, eta: Chain, target: ComplexSpec) -> Tuple[Chain, str]:
    # x <= beta - sum sumbu selalu ada karena deg beta >= p + 2
    d_eta = boundary(eta)
    for x in range(u.cfg.m):
        if x in u.axis or not is_face((x,), target):
            continue
        candidate = cone(x, d_eta)
        if supports(candidate, target) and boundary(candidate) == d_eta:
            return candidate, CONSTRUCTION
    raise ConstructionError(
        f"[simple/t=p+1] tidak ada titik cone x untuk sumbu {u.axis} "
        f"di {target.label}; prasyarat dilanggar"
    )


def _fill_axis_shift(
    u: UfoChain, eta: Chain, target: ComplexSpec, r: int, l: int
) -> Tuple[Chain, str]:
    shifted = _shifted_point(u.cfg, u.axis[0], l, r)
    if shifted < 0:
        raise ConstructionError(f"a + e_{l} - e_{r} bukan titik konfigurasi")
    candidate = cone(shifted, u.base)
    if not supports(candidate, target):
        raise ConstructionError(
            f"[simple/t=1] a~ * C keluar dari {target.label}; prasyarat dilanggar"
        )
    return candidate, CONSTRUCTION


def _fill_zero_base(
    u: UfoChain, eta: Chain, target: ComplexSpec, p: int
) -> Tuple[Chain, str]:
    """
    Base 0-cycle: v - v0 = d w untuk jalur edge w dengan x + y <= batas slack,
    lalu eta~ = (-1)^(p-1) d chi * w.

    Untuk deg beta >= p + 3 jalur selalu ada di Delta_{beta - sum sumbu}
    (terhubung karena ideal Segre dibangkitkan kuadrat). Untuk deg beta = p + 2
    titik yang tidak terhubung ditunda ke solve.
    """
    cfg = u.cfg
    assembly = _Assembly(eta.dim, target, "simple/t=p")
    d_chi = boundary(simplex_chain(u.axis))
    sign = 1 if (p - 1) % 2 == 0 else -1
    bound = _edge_bound(u, target)
    items = list(u.base.items())
    if not items:
        return assembly.finish()
    origin = items[0][0][0]
    for (v,), coeff in items[1:]:
        path = _bounded_path(cfg, origin, v, bound)
        if path is None:
            logger.info(f"[simple/t=p] titik {origin} dan {v} tidak terhubung")
            assembly.defer(join(d_chi, vertex_chain(v) - vertex_chain(origin)) * coeff)
        else:
            assembly.add(join(d_chi, path) * (sign * coeff))
    return assembly.finish()


def _edge_bound(u: UfoChain, target: ComplexSpec) -> np.ndarray:
    """Batas E: x + y <= E menjamin (chi - a_m) * <x, y> muat di target, semua m."""
    axis_points = u.cfg.point_array[list(u.axis)]
    return (
        np.asarray(target.bound, dtype=np.int64)
        - axis_points.sum(axis=0)
        + axis_points.min(axis=0)
    )


def _bounded_path(
    cfg: PointConfiguration, start: int, goal: int, bound: np.ndarray
) -> Optional[Chain]:
    """
    Jalur edge terpendek start -> goal (BFS, urutan indeks) dengan x + y <= bound.

    Returns:
        1-chain w dengan d w = <goal> - <start>, atau None bila tidak terhubung.
    """
    if start == goal:
        return Chain.zero(1)
    pts = cfg.point_array
    nodes = [v for v in range(cfg.m) if np.all(pts[v] <= bound)]
    previous = {start: start}
    queue = deque([start])
    while queue and goal not in previous:
        x = queue.popleft()
        for y in nodes:
            if y not in previous and np.all(pts[x] + pts[y] <= bound):
                previous[y] = x
                queue.append(y)
    if goal not in previous:
        return None
    path = Chain.zero(1)
    y = goal
    while y != start:
        x = previous[y]
        path = path + simplex_chain((x, y))
        y = x
    return path


def fill_subc(u: UfoChain, sigma: Sequence[int]) -> FillCertificate:
    """
    Base C = c * d sigma dengan sigma simplex di Delta_{beta - sum sumbu}:
    eta~ = c (-1)^{t-1} d chi * sigma, termuat di Delta_{beta - e_r}.
    """
    cfg = u.cfg
    sigma_chain = simplex_chain(sorted(sigma))
    if sigma_chain.dim < 0:
        raise UfoValidationError("sigma tidak boleh simplex kosong")
    d_sigma = boundary(sigma_chain)
    if d_sigma.dim != u.base.dim or u.base.is_zero():
        raise UfoValidationError("Base harus kelipatan tak nol dari d sigma")
    anchor = d_sigma.simplices()[0]
    factor = u.base.coefficient(anchor) / d_sigma.coefficient(anchor)
    if factor == 0 or u.base != d_sigma * factor:
        raise UfoValidationError("Base bukan kelipatan d sigma")
    if not is_face(tuple(sorted(sigma)), box_delta(cfg, _as_tuple(u.rest))):
        raise UfoValidationError("sigma tidak termuat di Delta_{beta - sum sumbu}")
    d_chi = boundary(simplex_chain(u.axis))
    sign = 1 if (u.t - 1) % 2 == 0 else -1
    filling = join(d_chi, sigma_chain) * (factor * sign)
    lowered = list(u.beta)
    lowered[u.coord] -= 1
    return FillCertificate(u.eta, filling, box_delta(cfg, lowered), "subc")


def fill_ufo24(u: UfoChain) -> FillCertificate:
    """
    Filling UFO^1_{2,4} (sumbu dua vertex, base 1-cycle) ke Delta_{beta + e_0 - e_1}.

    Kasus 1: ada koordinat blok pertama i != 1 dengan beta_i >= 2.
    Kasus 2: selain itu (memaksa n_1 = 3 dan deg beta = 5); simplex yang
    melanggar dipecah menjadi UFO^0_{3,4} dan diteruskan ke fill_simple.
    """
    cfg = u.cfg
    _require_segre(cfg)
    if u.coord != 1 or cfg.block_of(0) != 0 or cfg.block_of(1) != 0:
        raise UfoValidationError("fill_ufo24 membutuhkan koordinat 1 di blok pertama")
    if u.t != 2 or u.k != 4:
        raise UfoValidationError(f"Butuh t = 2 dan eta 3-chain, dapat t={u.t}, k={u.k}")
    if _first_block_size(cfg) - 1 > 3:
        raise UnsupportedCaseError("fill_ufo24 hanya untuk n_1 <= 3")
    if degree(u.beta, cfg) < 5:
        raise UfoValidationError(f"deg beta = {degree(u.beta, cfg)} < 5")
    target_vec = np.asarray(u.beta, dtype=np.int64) + _unit(cfg, 0) - _unit(cfg, 1)
    target = box_delta(cfg, _as_tuple(target_vec))
    start, stop = cfg.blocks[0]
    heavy = [i for i in range(start, stop) if i != 1 and u.beta[i] >= 2]
    assembly = _Assembly(3, target, "ufo24")
    if heavy:
        _ufo24_heavy(u, heavy[0], assembly)
    else:
        _ufo24_light(u, assembly)
    filling, strategy = assembly.finish()
    return FillCertificate(u.eta, filling, target, "ufo24", strategy)


def _triangle_path(a1: int, a2: int, t1: int, t2: int) -> Chain:
    """[t1, a2] + [t2, t1] + [a1, t2]; boundary-nya a2 - a1."""
    return simplex_chain((t1, a2)) + simplex_chain((t2, t1)) + simplex_chain((a1, t2))


def _ufo24_heavy(u: UfoChain, i: int, assembly: _Assembly) -> None:
    """
    Edge base dengan koordinat i jenuh diganti lewat fill_subc sampai
    C termuat di Delta_{beta - a1 - a2 - e_i}, lalu eta~ = jalur segitiga * C.
    """
    cfg = u.cfg
    a1, a2 = u.axis
    rest = u.rest
    reduced = u.base
    for edge, coeff in u.base.items():
        s = vertex_sum(cfg, edge)
        if s[i] < rest[i]:
            continue
        apex = _saturation_apex(cfg, edge, s, rest, i)
        if apex is None:
            raise ConstructionError(
                f"[ufo24/kasus-1] tidak ada apex untuk edge jenuh {edge}"
            )
        sigma_chain = simplex_chain(sorted((apex,) + edge))
        d_sigma = boundary(sigma_chain)
        factor = coeff / d_sigma.coefficient(edge)
        piece = make_ufo(u.axis, d_sigma * factor, u.coord, u.beta, cfg)
        assembly.absorb(fill_subc(piece, sigma_chain.simplices()[0]))
        reduced = reduced - d_sigma * factor
    t1 = _shifted_point(cfg, a1, 0, 1)
    t2 = _shifted_point(cfg, a2, i, 1)
    if t1 < 0 or t2 < 0:
        raise ConstructionError("[ufo24/kasus-1] titik geser bukan titik konfigurasi")
    candidate = join(_triangle_path(a1, a2, t1, t2), reduced, collapse_shared=True)
    if not supports(candidate, assembly.target):
        raise ConstructionError(
            f"[ufo24/kasus-1] jalur segitiga keluar dari {assembly.target.label}"
        )
    assembly.add(candidate)


def _saturation_apex(
    cfg: PointConfiguration,
    edge: Tuple[int, ...],
    s: np.ndarray,
    rest: np.ndarray,
    i: int,
) -> Optional[int]:
    for candidate in range(cfg.m):
        if candidate in edge or cfg.points[candidate][i] != 0:
            continue
        if np.all(s + cfg.point_array[candidate] <= rest):
            return candidate
    return None


def _ufo24_light(u: UfoChain, assembly: _Assembly) -> None:
    """
    Kasus n_1 = 3, deg beta = 5: suku <a2~, a1~> * C yang memuat vertex V
    berkoordinat-0 positif membentuk UFO^0_{3,4} <a2~, a1~, V> * mu_V.
    """
    cfg = u.cfg
    a1, a2 = u.axis
    t1 = _shifted_point(cfg, a1, 0, 1)
    t2 = _shifted_point(cfg, a2, 0, 1)
    if t1 < 0 or t2 < 0:
        raise ConstructionError("[ufo24/kasus-2] titik geser bukan titik konfigurasi")
    full = join(_triangle_path(a1, a2, t1, t2), u.base, collapse_shared=True)
    inner_beta = (
        np.asarray(u.beta, dtype=np.int64) + 2 * _unit(cfg, 0) - 2 * _unit(cfg, 1)
    )
    # suku yang memuat a1~ atau a2~ sudah degenerate
    offenders = sorted(
        v
        for v in u.base.vertices()
        if cfg.points[v][0] >= 1 and v not in (t1, t2)
    )
    for v in offenders:
        inner = make_ufo((t2, t1, v), link_cycle(u.base, v), 0, inner_beta, cfg)
        full = full - inner.eta
        assembly.absorb(fill_simple(inner, r=0, l=1, p=3))
    if not supports(full, assembly.target):
        raise ConstructionError(
            f"[ufo24/kasus-2] sisa jalur segitiga keluar dari {assembly.target.label}"
        )
    assembly.add(full)


def decompose_ufos(
    eta: Chain,
    beta: Sequence[int],
    coord: int,
    p: Optional[int],
    cfg: PointConfiguration,
) -> Decomposition:
    """
    Pecah eta menjadi jumlah UFO berkoordinat `coord` ditambah sisa di
    Delta_{beta - e_coord}.

    Simplex di luar Delta_{beta - e_coord} dikelompokkan menurut sumbunya (vertex
    dengan koordinat positif); base tiap kelompok diperoleh lewat link.

    Raises:
        DecompositionError: Input tidak berbentuk jumlah UFO.
    """
    beta = _as_tuple(beta)
    if p is not None and eta.dim != p:
        raise DecompositionError(f"eta harus {p}-chain, dapat dimensi {eta.dim}")
    full = box_delta(cfg, beta)
    lowered_vec = list(beta)
    lowered_vec[coord] -= 1
    lowered = box_delta(cfg, lowered_vec)
    if not supports(eta, full):
        raise DecompositionError(f"eta tidak termuat di {full.label}")
    if eta.dim >= 0 and not supports(boundary(eta), lowered):
        raise DecompositionError(f"d eta tidak termuat di {lowered.label}")
    groups: Dict[Tuple[int, ...], Dict[Tuple[int, ...], Fraction]] = {}
    remainder: Dict[Tuple[int, ...], Fraction] = {}
    for simplex, coeff in eta.items():
        if is_face(simplex, lowered):
            remainder[simplex] = coeff
            continue
        axis = tuple(v for v in simplex if cfg.points[v][coord] > 0)
        groups.setdefault(axis, {})[simplex] = coeff
    pieces = []
    for axis in sorted(groups):
        group = Chain(eta.dim, groups[axis])
        base = link_face(group, axis)
        try:
            pieces.append(make_ufo(axis, base, coord, beta, cfg))
        except UfoValidationError as e:
            raise DecompositionError(f"Kelompok sumbu {axis} bukan UFO: {e}") from e
    return Decomposition(pieces, Chain(eta.dim, remainder))


def push_boundary(
    eta: Chain, beta: Sequence[int], p: int, cfg: PointConfiguration
) -> FillCertificate:
    """
    p-chain eta dengan d eta di Delta_{beta - e_1} -> eta~ di Delta_{beta + e_0 - e_1}.

    Setiap potongan UFO diteruskan ke fill_simple (t di {p+1, p, 1}) atau
    fill_ufo24 (t = 2, p = 3).
    """
    _require_segre(cfg)
    beta = _as_tuple(beta)
    if p not in (2, 3):
        raise UnsupportedCaseError(
            f"push_boundary hanya untuk p di {{2, 3}}, dapat {p}"
        )
    if _first_block_size(cfg) - 1 > 3:
        raise UnsupportedCaseError("push_boundary hanya untuk n_1 <= 3")
    if degree(beta, cfg) < p + 2:
        raise UfoValidationError(f"deg beta = {degree(beta, cfg)} < p + 2")
    target_vec = np.asarray(beta, dtype=np.int64) + _unit(cfg, 0) - _unit(cfg, 1)
    target = box_delta(cfg, _as_tuple(target_vec))
    decomposition = decompose_ufos(eta, beta, 1, p, cfg)
    filling = decomposition.remainder
    strategies = []
    for piece in decomposition.pieces:
        if piece.t in (p + 1, p, 1):
            cert = fill_simple(piece, r=1, l=0, p=p)
        elif piece.t == 2 and p == 3:
            cert = fill_ufo24(piece)
        else:
            raise UnsupportedCaseError(f"Potongan dengan t = {piece.t} untuk p = {p}")
        filling = filling + cert.filling
        strategies.append(cert.strategy)
    strategy = (
        CONSTRUCTION
        if all(s == CONSTRUCTION for s in strategies)
        else CONSTRUCTION_SOLVE
    )
    return FillCertificate(eta, filling, target, "push", strategy)


def _check_cycle_input(
    gamma: Chain, b: MultiDegree, p: int, cfg: PointConfiguration
) -> None:
    _require_segre(cfg)
    if p not in (2, 3):
        raise UnsupportedCaseError(f"Hanya p di {{2, 3}}, dapat {p}")
    if degree(b, cfg) < p + 2:
        raise UfoValidationError(f"deg b = {degree(b, cfg)} < p + 2")
    if gamma.dim != p - 1 or not is_cycle(gamma):
        raise UfoValidationError(f"gamma harus ({p - 1})-cycle")
    if not supports(gamma, monoid_delta(cfg, b)):
        raise UfoValidationError("gamma tidak termuat di Delta_b")


def step2_retract(
    gamma: Chain,
    b: Sequence[int],
    p: int,
    cfg: PointConfiguration,
    search_dim: Optional[int] = None,
    filling: Optional[Chain] = None,
) -> Chain:
    """
    Ubah filling gamma di X_b menjadi filling di Delta_b.

    Slice k terbesar dikupas berulang: nu = simplex dengan slice k diganti
    push_boundary(nu, b - k e_0 + k e_1) yang termuat di slice k - 1.

    Args:
        search_dim: Cap dimensi enumerasi saat mencari filling di X_b (>= p).
        filling: Filling gamma di X_b yang sudah diketahui.

    Raises:
        HypothesisError: gamma tidak terbatas di X_b.
    """
    b = _as_tuple(b)
    _check_cycle_input(gamma, b, p, cfg)
    x_spec = union_x(cfg, b)
    if filling is None:
        search_spec = monoid_delta(cfg, b) if b[0] == 0 else x_spec
        eta = fill(gamma, search_spec, search_dim)
        if eta is None:
            raise HypothesisError(
                f"gamma bukan boundary di {x_spec.label}", x_spec.label, p - 1
            )
    else:
        eta = filling
        if boundary(eta) != gamma or not supports(eta, x_spec):
            raise UfoValidationError(
                "Filling yang diberikan bukan filling gamma di X_b"
            )

    while True:
        slices = {s: union_slice(s, x_spec) for s in eta.simplices()}
        top = max(slices.values(), default=0)
        if top == 0:
            break
        nu = eta.restrict(lambda s, top=top: slices[s] == top)
        beta = list(b)
        beta[0] -= top
        beta[1] += top
        cert = push_boundary(nu, beta, p, cfg)
        logger.debug(f"step2: slice {top} diturunkan ({cert.strategy})")
        eta = eta - nu + cert.filling

    if boundary(eta) != gamma or not supports(eta, monoid_delta(cfg, b)):
        raise CertificateError("Hasil step2_retract gagal verifikasi")
    return eta


def _pair_bound(
    cfg: PointConfiguration, c: np.ndarray, i: int, first: int, second: int
) -> np.ndarray:
    s = c - _unit(cfg, i)
    own = cfg.block_of(i)
    pts = cfg.point_array
    for block, (start, stop) in enumerate(cfg.blocks):
        if block == own:
            continue
        for j in range(start, stop):
            if s[j] - 1 >= max(pts[first][j], pts[second][j]):
                s[j] -= 1
                break
        else:
            raise ConstructionError(f"Tidak ada koordinat bebas di blok {block}")
    return s


def connect_in_slab(
    zero_cycle: Chain, c: Sequence[int], i: int, cfg: PointConfiguration
) -> Chain:
    """
    0-cycle di Delta_{c - e_i} (deg c >= 4) sebagai boundary 1-chain di Delta_{c - e_i}.

    Tiap pasangan (v0, v) dihubungkan di Delta_s dengan s <= c - e_i, deg s = deg c - 1.
    """
    _require_segre(cfg)
    c_vec = np.asarray(_as_tuple(c), dtype=np.int64)
    if zero_cycle.dim != 0 or not is_cycle(zero_cycle):
        raise UfoValidationError("connect_in_slab membutuhkan 0-cycle tereduksi")
    if degree(_as_tuple(c_vec), cfg) < 4:
        raise UnsupportedCaseError("connect_in_slab membutuhkan deg c >= 4")
    slab = box_delta(cfg, _as_tuple(c_vec - _unit(cfg, i)))
    if not supports(zero_cycle, slab):
        raise UfoValidationError(f"0-cycle tidak termuat di {slab.label}")
    items = list(zero_cycle.items())
    result = Chain.zero(1)
    if not items:
        return result
    origin = items[0][0][0]
    for (v,), coeff in items[1:]:
        spec = box_delta(cfg, _as_tuple(_pair_bound(cfg, c_vec, i, origin, v)))
        piece = fill(vertex_chain(v) - vertex_chain(origin), spec)
        if piece is None:
            raise HypothesisError(f"H~_0({spec.label}) != 0", spec.label, 0)
        result = result + piece * coeff
    if boundary(result) != zero_cycle or not supports(result, slab):
        raise CertificateError("connect_in_slab gagal verifikasi")
    return result


def _slice_decomposition(
    mu: Chain, c: np.ndarray, cfg: PointConfiguration
) -> List[Tuple[int, Chain]]:
    """
    Pecah cycle mu di X_c menjadi cycle theta_eps di Delta_{c - eps e_0 + eps e_1}.
    """
    c0 = int(c[0])
    remaining = mu
    result: List[Tuple[int, Chain]] = []
    for eps in range(c0):
        level = c0 - eps
        sigma = remaining.restrict(
            lambda s, level=level: vertex_sum(cfg, s)[0] == level
        )
        if sigma.is_zero():
            continue
        slice_vec = c - eps * _unit(cfg, 0) + eps * _unit(cfg, 1)
        lower = box_delta(cfg, _as_tuple(slice_vec - _unit(cfg, 0)))
        sigma_prime = _fill_lower(boundary(sigma), slice_vec, lower, cfg)
        theta = sigma - sigma_prime
        result.append((eps, theta))
        remaining = remaining - theta
    if not remaining.is_zero():
        result.append((c0, remaining))
    return result


def _fill_lower(
    cycle: Chain, slice_vec: np.ndarray, lower: ComplexSpec, cfg: PointConfiguration
) -> Chain:
    if cycle.is_zero():
        return Chain.zero(cycle.dim + 1)
    if cycle.dim == -1:
        for v in range(cfg.m):
            if is_face((v,), lower):
                return Chain(0, {(v,): cycle.coefficient(())})
        raise HypothesisError(f"{lower.label} tidak punya vertex", lower.label, -1)
    if cycle.dim == 0 and degree(_as_tuple(slice_vec), cfg) >= 4:
        try:
            return connect_in_slab(cycle, slice_vec, 0, cfg)
        except ConstructionError as e:
            logger.warning(f"connect_in_slab gagal, diselesaikan dengan solve: {e}")
    solved = fill(cycle, lower)
    if solved is None:
        raise HypothesisError(
            f"H~_{cycle.dim}({lower.label}) != 0", lower.label, cycle.dim
        )
    return solved


def step1_push(
    gamma: Chain, b: Sequence[int], p: int, cfg: PointConfiguration
) -> PushResult:
    """
    Dorong (p-1)-cycle gamma di Delta_b ke gamma' tanpa vertex berkoordinat-0 positif.

    Vertex a dieliminasi berurutan indeks; a~ = a - a_0 e_0 + a_0 e_1 dan
    gamma_j = gamma_{j-1} - alpha_{a, a~, gamma_{j-1}} sehingga suku yang memuat
    a hilang. Bila a~ sudah ada di link, suku a~ * mu yang degenerate bernilai
    nol. Witness memenuhi d witness = gamma - gamma' dan termuat di X_b;
    gamma' termuat di Delta_{(0, b_0 + b_1, b_2, ...)}.

    Raises:
        HypothesisError: Filling slice yang dibutuhkan tidak ada.
        CertificateError: Hasil gagal verifikasi.
    """
    b = _as_tuple(b)
    _check_cycle_input(gamma, b, p, cfg)
    x_spec = union_x(cfg, b)
    b_vec = np.asarray(b, dtype=np.int64)
    offending = sorted(v for v in gamma.vertices() if cfg.points[v][0] != 0)
    current = gamma
    witness = Chain.zero(p)
    for a in offending:
        if a not in current.vertices():
            continue
        a_vec = cfg.point_array[a]
        shift = int(a_vec[0])
        a_tilde = cfg.index_of(a_vec - shift * _unit(cfg, 0) + shift * _unit(cfg, 1))
        if a_tilde < 0:
            raise ConstructionError(
                f"Titik geser dari vertex {a} bukan titik konfigurasi"
            )
        mu = link_cycle(current, a)
        difference = vertex_chain(a) - vertex_chain(a_tilde)
        replacement = join(difference, mu, collapse_shared=True)
        part = _alpha_witness(difference, mu, b_vec - a_vec, cfg, p)
        if boundary(part) != replacement or not supports(part, x_spec):
            raise CertificateError(f"Witness alpha untuk vertex {a} gagal verifikasi")
        witness = witness + part
        current = current - replacement

    if not is_cycle(current) or any(cfg.points[v][0] != 0 for v in current.vertices()):
        raise CertificateError("gamma' masih memuat vertex berkoordinat-0 positif")
    flattened = [0, b[0] + b[1]] + list(b[2:])
    if not supports(current, box_delta(cfg, flattened)):
        raise CertificateError(f"gamma' keluar dari BoxDelta{flattened}")
    if boundary(witness) != gamma - current or not supports(witness, x_spec):
        raise CertificateError("Witness step1_push gagal verifikasi")
    return PushResult(current, witness)


def _alpha_witness(
    difference: Chain, mu: Chain, c: np.ndarray, cfg: PointConfiguration, p: int
) -> Chain:
    """-(a - a~) * sum zeta_eps dengan d zeta_eps = theta_eps; suku degenerate nol."""
    part = Chain.zero(p)
    for eps, theta in _slice_decomposition(mu, c, cfg):
        slice_spec = box_delta(
            cfg, _as_tuple(c - eps * _unit(cfg, 0) + eps * _unit(cfg, 1))
        )
        zeta = fill(theta, slice_spec)
        if zeta is None:
            report = betti_reduced(slice_spec, theta.dim) if theta.dim >= 0 else None
            rank = report.betti if report else "?"
            raise HypothesisError(
                f"Butuh H~_{theta.dim}({slice_spec.label}) = 0, rank = {rank}",
                slice_spec.label,
                theta.dim,
            )
        part = part - join(difference, zeta, collapse_shared=True)
    return part
