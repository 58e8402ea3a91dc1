"""
Tujuan: Aljabar chain eksak atas bilangan rasional (boundary, join, link, cone)
Dependensi: fractions
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: boundary(simplex_chain((0, 1))) == Chain(0, {(1,): 1, (0,): -1})

Konvensi: simplex disimpan terurut naik; join mengurutkan ulang gabungan
vertex dan mengalikan tanda permutasi. Homologi tereduksi dipakai di semua
tempat: boundary dari vertex adalah simplex kosong ().
"""

import logging
from fractions import Fraction
from numbers import Rational
from typing import (
    Callable,
    Dict,
    Iterator,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

from .errors import ChainError

logger = logging.getLogger(__name__)

Simplex = Tuple[int, ...]
Coefficient = Union[int, Fraction]

EMPTY: Simplex = ()


def sort_with_sign(vertices: Sequence[int]) -> Tuple[Simplex, int]:
    """
    Urutkan vertex dan kembalikan tanda permutasinya.

    Raises:
        ChainError: Jika ada vertex berulang.
    """
    seq = list(vertices)
    if len(set(seq)) != len(seq):
        raise ChainError(f"Vertex berulang pada simplex {tuple(seq)}")
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inversions += 1
    return tuple(sorted(seq)), (-1 if inversions % 2 else 1)


class Chain:
    """
    Kombinasi linear rasional dari simplex berdimensi sama.

    Nilai immutable; operasi aritmetika selalu menghasilkan Chain baru.
    """

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Optional[Mapping[Simplex, Coefficient]] = None):
        if dim < -1:
            raise ChainError(f"Dimensi chain harus >= -1: {dim}")
        cleaned: Dict[Simplex, Fraction] = {}
        for simplex, coeff in (terms or {}).items():
            value = Fraction(coeff)
            if value == 0:
                continue
            key = tuple(simplex)
            if len(key) != dim + 1:
                raise ChainError(f"Simplex {key} bukan berdimensi {dim}")
            if list(key) != sorted(set(key)):
                raise ChainError(f"Simplex harus terurut naik tanpa duplikasi: {key}")
            cleaned[key] = cleaned.get(key, Fraction(0)) + value
        self.dim = dim
        self._terms = {s: c for s, c in cleaned.items() if c != 0}

    @classmethod
    def zero(cls, dim: int) -> "Chain":
        return cls(dim)

    @classmethod
    def augmentation(cls, coeff: Coefficient = 1) -> "Chain":
        return cls(-1, {EMPTY: coeff})

    def __getstate__(self):
        return (self.dim, self._terms)

    def __setstate__(self, state):
        self.dim, self._terms = state

    def simplices(self) -> Tuple[Simplex, ...]:
        return tuple(sorted(self._terms))

    def items(self) -> Iterator[Tuple[Simplex, Fraction]]:
        for simplex in sorted(self._terms):
            yield simplex, self._terms[simplex]

    def coefficient(self, simplex: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(simplex), Fraction(0))

    def vertices(self) -> Set[int]:
        return {v for simplex in self._terms for v in simplex}

    def is_zero(self) -> bool:
        return not self._terms

    def restrict(self, predicate: Callable[[Simplex], bool]) -> "Chain":
        return Chain(self.dim, {s: c for s, c in self._terms.items() if predicate(s)})

    def _check_dim(self, other: "Chain") -> None:
        if not isinstance(other, Chain):
            raise ChainError(f"Operand bukan Chain: {type(other)}")
        if other.dim != self.dim:
            raise ChainError(f"Dimensi chain berbeda: {self.dim} vs {other.dim}")

    def __add__(self, other: "Chain") -> "Chain":
        self._check_dim(other)
        terms = dict(self._terms)
        for s, c in other._terms.items():
            terms[s] = terms.get(s, Fraction(0)) + c
        return Chain(self.dim, terms)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __neg__(self) -> "Chain":
        return Chain(self.dim, {s: -c for s, c in self._terms.items()})

    def __mul__(self, scalar: Coefficient) -> "Chain":
        if not isinstance(scalar, Rational):
            return NotImplemented
        factor = Fraction(scalar)
        return Chain(self.dim, {s: c * factor for s, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.dim == other.dim and self._terms == other._terms

    __hash__ = None

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return f"Chain(dim={self.dim}, 0)"
        body = " + ".join(f"{c}*{list(s)}" for s, c in self.items())
        return f"Chain(dim={self.dim}, {body})"

    def to_records(self) -> list:
        """Representasi JSON: list [vertices, "p/q"]."""
        return [[list(s), str(c)] for s, c in self.items()]

    @classmethod
    def from_records(cls, dim: int, records: Sequence) -> "Chain":
        terms: Dict[Simplex, Fraction] = {}
        for vertices, coeff in records:
            simplex, sign = sort_with_sign(vertices)
            terms[simplex] = terms.get(simplex, Fraction(0)) + sign * Fraction(coeff)
        return cls(dim, terms)


def simplex_chain(vertices: Sequence[int], coeff: Coefficient = 1) -> Chain:
    """Simplex terorientasi sesuai urutan vertex yang diberikan."""
    simplex, sign = sort_with_sign(vertices)
    return Chain(len(simplex) - 1, {simplex: sign * Fraction(coeff)})


def vertex_chain(*vertices: int) -> Chain:
    """Jumlah 0-chain <v> untuk setiap vertex."""
    terms: Dict[Simplex, int] = {}
    for v in vertices:
        terms[(v,)] = terms.get((v,), 0) + 1
    return Chain(0, terms)


def is_cycle(c: Chain) -> bool:
    """Chain berdimensi -1 selalu cycle (tidak ada boundary di bawahnya)."""
    if c.dim == -1:
        return True
    return boundary(c).is_zero()


def boundary(c: Chain) -> Chain:
    """
    Boundary simplisial dengan tanda bergantian.

    Raises:
        ChainError: Untuk chain berdimensi -1.
    """
    if c.dim < 0:
        raise ChainError("Boundary tidak didefinisikan untuk dimensi -1")
    terms: Dict[Simplex, Fraction] = {}
    for simplex, coeff in c.items():
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1 :]
            value = coeff if i % 2 == 0 else -coeff
            terms[face] = terms.get(face, Fraction(0)) + value
    return Chain(c.dim - 1, terms)


def join(
    front: Union[Sequence[int], Chain], c: Chain, collapse_shared: bool = False
) -> Chain:
    """
    Join bilinear front * c.

    `front` berupa tuple vertex (terorientasi sesuai urutannya) atau Chain.
    Dengan collapse_shared=True pasangan simplex yang berbagi vertex bernilai
    nol, seperti simplex degenerate di kompleks chain terorientasi; aturan
    Leibniz d(F * G) = dF * G + (-1)^|F| F * dG tetap berlaku.

    Raises:
        ChainError: Ada pasangan simplex dengan vertex bersama dan
            collapse_shared=False.
    """
    front_chain = front if isinstance(front, Chain) else simplex_chain(front)
    terms: Dict[Simplex, Fraction] = {}
    for left, lc in front_chain.items():
        for right, rc in c.items():
            if collapse_shared and not set(left).isdisjoint(right):
                continue
            merged, sign = sort_with_sign(left + right)
            terms[merged] = terms.get(merged, Fraction(0)) + sign * lc * rc
    return Chain(front_chain.dim + c.dim + 1, terms)


def link_face(c: Chain, face: Sequence[int]) -> Chain:
    """
    Link dari face F di c: chain L dengan F * L = jumlah suku c yang memuat F.

    F dipakai dalam urutan yang diberikan (orientasi ikut urutan itu).
    """
    face = tuple(face)
    face_set = set(face)
    terms: Dict[Simplex, Fraction] = {}
    for simplex, coeff in c.items():
        if not face_set.issubset(simplex):
            continue
        rest = tuple(v for v in simplex if v not in face_set)
        _, sign = sort_with_sign(face + rest)
        terms[rest] = terms.get(rest, Fraction(0)) + sign * coeff
    return Chain(c.dim - len(face), terms)


def link_cycle(gamma: Chain, a: int) -> Chain:
    """
    mu_{a,gamma}: chain unik dengan a * mu = suku-suku gamma yang memuat a.

    Raises:
        ChainError: Jika gamma bukan cycle.
    """
    if not is_cycle(gamma):
        raise ChainError("link_cycle membutuhkan cycle")
    if gamma.dim < 0:
        raise ChainError("link_cycle membutuhkan chain berdimensi >= 0")
    return link_face(gamma, (a,))


def alpha(a: int, a_tilde: int, gamma: Chain) -> Chain:
    """(<a> - <a~>) * mu_{a,gamma}."""
    if a == a_tilde:
        raise ChainError("alpha membutuhkan a != a~")
    mu = link_cycle(gamma, a)
    return join(vertex_chain(a) - vertex_chain(a_tilde), mu)


def cone(apex: int, c: Chain) -> Chain:
    """apex * (c tanpa simplex yang memuat apex); untuk cycle c, boundary-nya c."""
    return join((apex,), c, collapse_shared=True)
