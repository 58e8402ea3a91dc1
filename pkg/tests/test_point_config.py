"""
Tujuan: Unit test untuk konfigurasi titik, descriptor, dan multidegree
Dependensi: pytest, src.core.point_config
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
"""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import InvalidDescriptorError, InvalidMultidegreeError
from src.core.point_config import (
    SegreParams,
    block_sums,
    build_configuration,
    build_segre,
    build_veronese,
    canonical_multidegree,
    cap_dimensions,
    degree,
    enumerate_multidegrees,
    group_by_symmetry,
    is_in_monoid,
    parse_descriptor,
)


class TestBuildSegre:
    """Test konstruksi A_{n_1,...,n_d}."""

    def test_point_count_and_dimension(self):
        cfg = build_segre((1, 1, 1))
        assert cfg.m == 8
        assert cfg.k == 6
        assert cfg.omega == (Fraction(1, 3),) * 6

    def test_lexicographic_order(self):
        cfg = build_segre((1, 1, 1))
        assert cfg.points[0] == (1, 0, 1, 0, 1, 0)
        assert cfg.points[1] == (1, 0, 1, 0, 0, 1)
        assert cfg.points[4] == (0, 1, 1, 0, 1, 0)
        assert cfg.points[7] == (0, 1, 0, 1, 0, 1)

    def test_blocks(self):
        cfg = build_segre((2, 1))
        assert cfg.blocks == ((0, 3), (3, 5))
        assert cfg.block_of(4) == 1
        with pytest.raises(InvalidMultidegreeError):
            cfg.block_of(5)

    def test_index_of(self):
        cfg = build_segre((1, 1))
        assert cfg.index_of((0, 1, 1, 0)) == 2
        assert cfg.index_of((1, 1, 0, 0)) == -1

    def test_rejects_zero_dimension(self):
        with pytest.raises(InvalidDescriptorError):
            SegreParams((1, 0))

    def test_rejects_empty(self):
        with pytest.raises(InvalidDescriptorError):
            SegreParams(())


class TestOtherConfigurations:
    """Test Veronese dan konfigurasi umum."""

    def test_veronese_points(self):
        cfg = build_veronese(2, 2)
        assert cfg.m == 6
        assert cfg.points[0] == (2, 0, 0)
        assert cfg.omega == (Fraction(1, 2),) * 3

    def test_general_configuration_solves_omega(self):
        cfg = build_configuration([(2, 0), (1, 1), (0, 2)], "conic")
        assert cfg.omega == (Fraction(1, 2), Fraction(1, 2))
        assert cfg.kind == "general"

    def test_general_configuration_rejects_inhomogeneous(self):
        with pytest.raises(InvalidDescriptorError):
            build_configuration([(1, 0), (2, 0)], "bad")

    def test_duplicate_points_rejected(self):
        with pytest.raises(InvalidDescriptorError):
            build_configuration([(1, 0), (1, 0), (0, 1)], "dup")


class TestParseDescriptor:
    """Test grammar descriptor."""

    def test_segre(self):
        cfg = parse_descriptor("segre:1,1,1")
        assert cfg.descriptor == "segre:1,1,1"
        assert cfg.m == 8

    def test_whitespace_tolerated(self):
        assert parse_descriptor(" segre : 2, 1 ").descriptor == "segre:2,1"

    def test_veronese(self):
        assert parse_descriptor("veronese:2,3").m == 10

    @pytest.mark.parametrize(
        "text", ["", "segre:", "grassmann:2,4", "veronese:2", "segre:1;1", "segre:0,1"]
    )
    def test_invalid(self, text):
        with pytest.raises(InvalidDescriptorError):
            parse_descriptor(text)


class TestMultidegrees:
    """Test derajat, monoid, dan simetri."""

    def setup_method(self):
        self.cfg = build_segre((1, 1, 1))

    def test_degree(self):
        assert degree((1,) * 6, self.cfg) == 2
        assert degree((2, 0, 1, 1, 0, 2), self.cfg) == 2

    def test_degree_rejects_fractional(self):
        with pytest.raises(InvalidMultidegreeError):
            degree((1, 0, 0, 0, 0, 0), self.cfg)

    def test_degree_rejects_wrong_length(self):
        with pytest.raises(InvalidMultidegreeError):
            degree((1, 1), self.cfg)

    def test_monoid_membership_segre(self):
        assert is_in_monoid((1, 1, 2, 0, 0, 2), self.cfg)
        assert not is_in_monoid((1, 1, 1, 0, 0, 2), self.cfg)
        assert not is_in_monoid((-1, 3, 2, 0, 1, 1), self.cfg)

    def test_monoid_membership_veronese(self):
        cfg = build_veronese(1, 2)
        assert is_in_monoid((2, 2), cfg)
        assert not is_in_monoid((1, 0), cfg)

    def test_enumerate_counts(self):
        assert len(enumerate_multidegrees(self.cfg, 2)) == 27
        assert len(enumerate_multidegrees(build_segre((2, 1)), 2)) == 18
        assert enumerate_multidegrees(self.cfg, 0) == [(0,) * 6]

    def test_enumerate_general_matches_segre(self):
        segre = build_segre((1, 1))
        general = build_configuration(segre.points, "segre-as-general")
        assert enumerate_multidegrees(general, 3) == enumerate_multidegrees(segre, 3)

    def test_enumerate_rejects_negative(self):
        with pytest.raises(InvalidMultidegreeError):
            enumerate_multidegrees(self.cfg, -1)

    def test_cap_dimensions(self):
        assert cap_dimensions((3, 1, 2), 2).dims == (2, 1, 2)
        assert cap_dimensions((5, 5), 3).dims == (3, 3)

    def test_canonical_multidegree(self):
        cfg = build_segre((1, 1))
        assert canonical_multidegree(cfg, (0, 2, 1, 1)) == (2, 0, 1, 1)
        assert canonical_multidegree(cfg, (1, 1, 0, 2)) == (2, 0, 1, 1)

    def test_canonical_keeps_unequal_blocks_in_place(self):
        cfg = build_segre((2, 1))
        assert canonical_multidegree(cfg, (0, 1, 1, 0, 2)) == (1, 1, 0, 2, 0)

    def test_group_by_symmetry_covers_all(self):
        multidegrees = enumerate_multidegrees(self.cfg, 2)
        groups = group_by_symmetry(self.cfg, multidegrees)
        assert sum(len(v) for v in groups.values()) == 27
        # orbit: (2,0)^3, (2,0)^2 (1,1), (2,0)(1,1)^2, (1,1)^3
        assert len(groups) == 4


# semua Segre dengan m <= 8 titik
SMALL_SEGRE = [(n,) for n in range(1, 8)] + [
    (1, 1),
    (1, 2),
    (2, 1),
    (1, 3),
    (3, 1),
    (1, 1, 1),
]


def brute_force_multidegrees(cfg, t: int):
    if t == 0:
        return [(0,) * cfg.k]
    combos = itertools.combinations_with_replacement(cfg.points, t)
    return sorted({tuple(map(sum, zip(*combo))) for combo in combos})


class TestMultidegreesAgainstBruteForce:
    """Enumerasi dan keanggotaan monoid dibandingkan cara naif."""

    @pytest.mark.parametrize("dims", SMALL_SEGRE)
    def test_enumerate_matches_sums_of_points(self, dims):
        cfg = build_segre(dims)
        for t in range(5):
            assert enumerate_multidegrees(cfg, t) == brute_force_multidegrees(cfg, t)

    @settings(max_examples=100, deadline=None)
    @given(data=st.data(), dims=st.sampled_from([(1, 1), (2, 1), (1, 1, 1)]))
    def test_monoid_membership_is_equal_block_sums(self, data, dims):
        cfg = build_segre(dims)
        vec = data.draw(st.lists(st.integers(0, 3), min_size=cfg.k, max_size=cfg.k))
        sums = block_sums(cfg, vec)
        expected = all(s == sums[0] for s in sums)
        assert is_in_monoid(vec, cfg) == expected
        # jalur umum memakai pencarian jumlah titik, bukan jumlah blok
        general = build_configuration(cfg.points, "segre-as-general")
        assert is_in_monoid(vec, general) == expected
