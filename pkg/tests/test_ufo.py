"""
Tujuan: Unit dan property test untuk rantai UFO, lemma filling, dan dorong-cycle
Dependensi: pytest, hypothesis, src.core.ufo, tests.instance_factory
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
"""

import random
from unittest.mock import patch

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.chains import Chain, boundary, is_cycle, simplex_chain
from src.core.complex import box_delta, monoid_delta, supports, union_x
from src.core.errors import (
    CertificateError,
    ConstructionError,
    DecompositionError,
    UfoValidationError,
    UnsupportedCaseError,
)
from src.core.point_config import build_segre
from src.core.ufo import (
    CONSTRUCTION,
    CONSTRUCTION_SOLVE,
    FillCertificate,
    UfoChain,
    connect_in_slab,
    decompose_ufos,
    fill_simple,
    fill_subc,
    fill_ufo24,
    make_ufo,
    push_boundary,
    step1_push,
    step2_retract,
)
from tests.instance_factory import (
    SEGRE_111,
    chain_with_remainder,
    random_cycle_instance,
    simple_single,
    simple_top,
    simple_zero,
    ufo24,
    ufo_for_push,
)

SEEDS = st.integers(min_value=0, max_value=10**6)
PROPERTY = settings(max_examples=30, deadline=None)
CERTIFICATE = settings(max_examples=200, deadline=None)


def assert_certificate(cert: FillCertificate) -> None:
    assert cert.filling.dim == cert.source.dim
    assert boundary(cert.filling) == boundary(cert.source)
    assert supports(cert.filling, cert.target)
    assert cert.strategy in (CONSTRUCTION, CONSTRUCTION_SOLVE)


class TestMakeUfo:
    """Validasi syarat UFO."""

    def setup_method(self):
        self.cfg = SEGRE_111
        # 4 = (0,1,1,0,1,0); segitiga 0,1,2 punya koordinat 1 nol
        self.base = boundary(simplex_chain((0, 1, 2)))
        self.beta = (3, 1, 3, 1, 3, 1)

    def test_valid_single_axis(self):
        u = make_ufo((4,), self.base, 1, self.beta, self.cfg)
        assert u.t == 1
        assert u.k == 3
        assert u.eta == Chain(2, {(0, 1, 4): 1, (0, 2, 4): -1, (1, 2, 4): 1})

    def test_full_axis_is_one_simplex(self):
        u = make_ufo((4, 5, 6), Chain.augmentation(), 1, (1, 3, 2, 2, 2, 2), self.cfg)
        assert u.eta == simplex_chain((4, 5, 6))
        assert u.k == 3

    def test_rejects_axis_sum_mismatch(self):
        with pytest.raises(UfoValidationError):
            make_ufo((4,), self.base, 1, (2, 2, 3, 1, 3, 1), self.cfg)

    def test_rejects_empty_axis(self):
        with pytest.raises(UfoValidationError):
            make_ufo((), self.base, 1, self.beta, self.cfg)

    def test_rejects_zero_coordinate_axis(self):
        with pytest.raises(UfoValidationError):
            make_ufo((0,), Chain.augmentation(), 1, (1, 0, 1, 0, 1, 0), self.cfg)

    def test_rejects_non_cycle_base(self):
        with pytest.raises(UfoValidationError):
            make_ufo((4,), simplex_chain((0, 1)), 1, self.beta, self.cfg)

    def test_rejects_shared_vertex(self):
        base = boundary(simplex_chain((0, 1, 4)))
        with pytest.raises(UfoValidationError):
            make_ufo((4,), base, 1, (3, 2, 3, 1, 3, 1), self.cfg)

    def test_rejects_support_outside_box(self):
        with pytest.raises(UfoValidationError):
            make_ufo((4,), self.base, 1, (2, 1, 2, 1, 2, 1), self.cfg)


class TestFillSimple:
    """Tiga kasus t untuk fill_simple."""

    def setup_method(self):
        self.cfg = SEGRE_111

    def test_top_case_cones_over_boundary(self):
        u = make_ufo((4, 5, 6), Chain.augmentation(), 1, (1, 3, 2, 2, 2, 2), self.cfg)
        cert = fill_simple(u, r=1, l=0, p=2)
        assert_certificate(cert)
        assert cert.strategy == CONSTRUCTION
        # apex pertama yang muat di Delta_{(2,2,2,2,2,2)} adalah titik 3
        assert 3 in cert.filling.vertices()
        assert cert.target == box_delta(self.cfg, (2, 2, 2, 2, 2, 2))

    def test_single_axis_shifts_vertex(self):
        base = boundary(simplex_chain((0, 1, 2)))
        u = make_ufo((4,), base, 1, (3, 1, 3, 1, 3, 1), self.cfg)
        cert = fill_simple(u, r=1, l=0, p=2)
        assert cert.filling == simplex_chain((0, 1, 2))
        assert cert.strategy == CONSTRUCTION

    def test_zero_base_case(self):
        base = Chain(0, {(0,): 1, (3,): -1})
        u = make_ufo((4, 5), base, 1, (2, 2, 3, 1, 2, 2), self.cfg)
        cert = fill_simple(u, r=1, l=0, p=2)
        assert_certificate(cert)
        # 0 dan 3 bertetangga langsung di bawah batas slack (3,0,2,1,1,1)
        assert cert.filling == simplex_chain((0, 3, 5)) - simplex_chain((0, 3, 4))
        assert cert.strategy == CONSTRUCTION

    def test_zero_base_without_path_falls_back_to_solve(self):
        base = Chain(0, {(0,): 1, (3,): -1})
        u = make_ufo((4, 5), base, 1, (2, 2, 3, 1, 2, 2), self.cfg)
        with patch("src.core.ufo._bounded_path", return_value=None), patch(
            "src.core.ufo.logger"
        ) as logger:
            cert = fill_simple(u, r=1, l=0, p=2)
        assert_certificate(cert)
        assert cert.strategy == CONSTRUCTION_SOLVE
        logger.warning.assert_called_once()

    def test_top_case_without_cone_point_raises(self):
        u = make_ufo((4, 5, 6), Chain.augmentation(), 1, (1, 3, 2, 2, 2, 2), self.cfg)
        with patch("src.core.ufo.is_face", return_value=False):
            with pytest.raises(ConstructionError):
                fill_simple(u, r=1, l=0, p=2)

    def test_rejects_wrong_coordinate(self):
        u = make_ufo((4, 5, 6), Chain.augmentation(), 1, (1, 3, 2, 2, 2, 2), self.cfg)
        with pytest.raises(UfoValidationError):
            fill_simple(u, r=0, l=1, p=2)

    def test_rejects_cross_block_shift(self):
        u = make_ufo((4, 5, 6), Chain.augmentation(), 1, (1, 3, 2, 2, 2, 2), self.cfg)
        with pytest.raises(UfoValidationError):
            fill_simple(u, r=1, l=2, p=2)

    def test_rejects_low_degree(self):
        u = make_ufo((4, 5, 6), Chain.augmentation(), 1, (0, 3, 2, 1, 2, 1), self.cfg)
        with pytest.raises(UfoValidationError):
            fill_simple(u, r=1, l=0, p=2)

    def test_unsupported_axis_length(self):
        # t = 2 dengan base 1-cycle hanya ditangani fill_ufo24
        base = boundary(simplex_chain((0, 1, 2)))
        u = make_ufo((4, 5), base, 1, (3, 2, 4, 1, 3, 2), self.cfg)
        with pytest.raises(UnsupportedCaseError):
            fill_simple(u, r=1, l=0, p=3)

    @pytest.mark.slow
    @CERTIFICATE
    @given(seed=SEEDS, p=st.sampled_from([2, 3]))
    def test_random_top_instances(self, seed, p):
        u = simple_top(random.Random(seed), self.cfg, p)
        cert = fill_simple(u, 1, 0, p)
        assert_certificate(cert)
        assert cert.strategy == CONSTRUCTION

    @pytest.mark.slow
    @CERTIFICATE
    @given(seed=SEEDS, p=st.sampled_from([2, 3]))
    def test_random_single_instances(self, seed, p):
        u, _ = simple_single(random.Random(seed), self.cfg, p, simplices=2)
        cert = fill_simple(u, 1, 0, p)
        assert_certificate(cert)
        assert cert.strategy == CONSTRUCTION

    @pytest.mark.slow
    @CERTIFICATE
    @given(seed=SEEDS, p=st.sampled_from([2, 3]))
    def test_random_zero_base_instances(self, seed, p):
        u = simple_zero(random.Random(seed), self.cfg, p)
        cert = fill_simple(u, 1, 0, p)
        assert_certificate(cert)
        # x + y selalu di bawah batas slack, jadi edge <x, y> tersedia
        assert cert.strategy == CONSTRUCTION


class TestFillSubc:
    """Base berupa kelipatan boundary satu simplex."""

    def test_single_axis_gives_scaled_simplex(self):
        base = boundary(simplex_chain((0, 1, 2))) * 2
        u = make_ufo((4,), base, 1, (3, 1, 3, 1, 3, 1), SEGRE_111)
        cert = fill_subc(u, (0, 1, 2))
        assert cert.filling == simplex_chain((0, 1, 2), 2)
        assert cert.target == box_delta(SEGRE_111, (3, 0, 3, 1, 3, 1))

    def test_rejects_unrelated_sigma(self):
        base = boundary(simplex_chain((0, 1, 2)))
        u = make_ufo((4,), base, 1, (3, 1, 3, 1, 3, 1), SEGRE_111)
        with pytest.raises(UfoValidationError):
            fill_subc(u, (0, 1, 3))

    @pytest.mark.slow
    @CERTIFICATE
    @given(seed=SEEDS, p=st.sampled_from([2, 3]))
    def test_random_instances(self, seed, p):
        u, sigma = simple_single(random.Random(seed), SEGRE_111, p)
        cert = fill_subc(u, sigma)
        assert_certificate(cert)
        assert cert.strategy == CONSTRUCTION


class TestFillUfo24:
    """UFO dengan dua vertex sumbu dan base 1-cycle."""

    def test_first_case_with_heavy_coordinate(self):
        base = boundary(simplex_chain((0, 1, 2)))
        u = make_ufo((4, 7), base, 1, (3, 2, 3, 2, 3, 2), SEGRE_111)
        cert = fill_ufo24(u)
        assert_certificate(cert)
        assert cert.strategy == CONSTRUCTION
        assert cert.target == box_delta(SEGRE_111, (4, 1, 3, 2, 3, 2))

    def test_second_case_on_three_dimensional_first_factor(self):
        cfg = build_segre((3, 1, 1))
        # sumbu 5, 6 di j1 = 1; segitiga 0, 10, 13 memakai j1 = 0, 2, 3
        base = boundary(simplex_chain((0, 10, 13)))
        u = make_ufo((5, 6), base, 1, (1, 2, 1, 1, 3, 2, 3, 2), cfg)
        cert = fill_ufo24(u)
        assert_certificate(cert)
        assert cert.lemma == "ufo24"
        # sub-UFO <2, 1, 0> * mu_0 diisi cone, sisa jalur segitiga muat langsung
        assert cert.strategy == CONSTRUCTION

    def test_rejects_large_first_factor(self):
        cfg = build_segre((4, 1))
        u = UfoChain((0, 1), boundary(simplex_chain((2, 3, 4))), 1, (0,) * 7, cfg)
        with pytest.raises(UnsupportedCaseError):
            fill_ufo24(u)

    def test_rejects_wrong_shape(self):
        u = make_ufo((4, 5, 6), Chain.augmentation(), 1, (1, 3, 2, 2, 2, 2), SEGRE_111)
        with pytest.raises(UfoValidationError):
            fill_ufo24(u)

    @pytest.mark.slow
    @CERTIFICATE
    @given(seed=SEEDS, dims=st.sampled_from([(1, 1, 1), (2, 1, 1)]))
    def test_random_instances(self, seed, dims):
        u = ufo24(random.Random(seed), build_segre(dims))
        cert = fill_ufo24(u)
        assert_certificate(cert)
        # n_1 <= 2 dan deg beta >= 5 memaksa koordinat berat (kasus 1)
        assert cert.strategy == CONSTRUCTION


class TestDecomposeAndPush:
    """Dekomposisi UFO dan push_boundary."""

    def test_decompose_groups_by_axis(self):
        eta = simplex_chain((4, 5, 6)) + simplex_chain((0, 1, 2), 2)
        result = decompose_ufos(eta, (3, 3, 2, 4, 2, 4), 1, 2, SEGRE_111)
        assert len(result.pieces) == 1
        assert result.pieces[0].axis == (4, 5, 6)
        assert result.remainder == simplex_chain((0, 1, 2), 2)
        assert result.total() == eta

    def test_decompose_rejects_boundary_outside(self):
        with pytest.raises(DecompositionError):
            eta = simplex_chain((0, 4, 5))
            decompose_ufos(eta, (1, 2, 3, 0, 2, 1), 1, 2, SEGRE_111)

    def test_decompose_rejects_wrong_dimension(self):
        with pytest.raises(DecompositionError):
            decompose_ufos(simplex_chain((0, 1)), (3, 1, 3, 1, 3, 1), 1, 2, SEGRE_111)

    def test_push_keeps_chain_already_inside(self):
        eta = simplex_chain((0, 1, 2))
        cert = push_boundary(eta, (3, 1, 3, 1, 3, 1), 2, SEGRE_111)
        assert cert.filling == eta
        assert cert.lemma == "push"

    def test_push_single_simplex(self):
        cert = push_boundary(simplex_chain((4, 5, 6)), (1, 3, 2, 2, 2, 2), 2, SEGRE_111)
        assert_certificate(cert)
        assert cert.target == box_delta(SEGRE_111, (2, 2, 2, 2, 2, 2))

    def test_push_rejects_unsupported_p(self):
        with pytest.raises(UnsupportedCaseError):
            push_boundary(simplex_chain((0, 1, 2, 3)), (3, 1, 3, 1, 3, 1), 4, SEGRE_111)

    @pytest.mark.slow
    @CERTIFICATE
    @given(seed=SEEDS, p=st.sampled_from([2, 3]))
    def test_decompose_round_trip(self, seed, p):
        eta, beta, u = chain_with_remainder(random.Random(seed), SEGRE_111, p)
        result = decompose_ufos(eta, beta, 1, p, SEGRE_111)
        assert result.total() == eta
        assert [piece.axis for piece in result.pieces] == [tuple(sorted(u.axis))]

    @pytest.mark.slow
    @CERTIFICATE
    @given(seed=SEEDS, p=st.sampled_from([2, 3]))
    def test_push_random_instances(self, seed, p):
        eta, beta, _ = chain_with_remainder(random.Random(seed), SEGRE_111, p)
        assert_certificate(push_boundary(eta, beta, p, SEGRE_111))

    @pytest.mark.slow
    @CERTIFICATE
    @given(seed=SEEDS)
    def test_push_random_ufo_chains(self, seed):
        rng = random.Random(seed)
        u = ufo_for_push(rng, SEGRE_111, 3)
        cert = push_boundary(u.eta, u.beta, 3, SEGRE_111)
        assert_certificate(cert)
        assert cert.strategy == CONSTRUCTION


class TestConnectInSlab:
    """0-cycle sebagai boundary 1-chain di slab."""

    def test_connects_two_points(self):
        zero_cycle = Chain(0, {(0,): 1, (7,): -1})
        g = connect_in_slab(zero_cycle, (2, 2, 2, 2, 2, 2), 0, SEGRE_111)
        assert boundary(g) == zero_cycle
        assert supports(g, box_delta(SEGRE_111, (1, 2, 2, 2, 2, 2)))

    def test_zero_cycle_gives_zero_chain(self):
        g = connect_in_slab(Chain.zero(0), (2, 2, 2, 2, 2, 2), 0, SEGRE_111)
        assert g.is_zero()

    def test_rejects_low_degree(self):
        with pytest.raises(UnsupportedCaseError):
            connect_in_slab(
                Chain(0, {(0,): 1, (7,): -1}), (2, 1, 1, 2, 1, 2), 0, SEGRE_111
            )

    def test_rejects_non_reduced_cycle(self):
        with pytest.raises(UfoValidationError):
            connect_in_slab(Chain(0, {(0,): 1}), (2, 2, 2, 2, 2, 2), 0, SEGRE_111)


class TestCyclePush:
    """step1_push dan step2_retract."""

    def setup_method(self):
        self.b = (2, 2, 2, 2, 2, 2)
        self.gamma = boundary(simplex_chain((0, 1, 2)))

    def test_step1_removes_first_coordinate(self):
        result = step1_push(self.gamma, self.b, 2, SEGRE_111)
        assert is_cycle(result.cycle)
        assert all(SEGRE_111.points[v][0] == 0 for v in result.cycle.vertices())
        assert boundary(result.witness) == self.gamma - result.cycle
        assert supports(result.witness, union_x(SEGRE_111, self.b))
        assert supports(result.cycle, box_delta(SEGRE_111, (0, 4, 2, 2, 2, 2)))

    def test_step2_retracts_into_delta(self):
        eta = step2_retract(self.gamma, self.b, 2, SEGRE_111)
        assert boundary(eta) == self.gamma
        assert supports(eta, monoid_delta(SEGRE_111, self.b))

    def test_step2_rejects_foreign_filling(self):
        with pytest.raises(UfoValidationError):
            step2_retract(
                self.gamma, self.b, 2, SEGRE_111, filling=simplex_chain((0, 1, 3))
            )

    def test_step1_rejects_non_cycle(self):
        with pytest.raises(UfoValidationError):
            step1_push(simplex_chain((0, 1)), self.b, 2, SEGRE_111)

    @pytest.mark.slow
    @CERTIFICATE
    @given(seed=SEEDS, p=st.sampled_from([2, 3]))
    def test_step1_then_step2(self, seed, p):
        b, gamma = random_cycle_instance(random.Random(seed), SEGRE_111, p)
        pushed = step1_push(gamma, b, p, SEGRE_111)
        assert boundary(pushed.witness) == gamma - pushed.cycle
        assert all(SEGRE_111.points[v][0] == 0 for v in pushed.cycle.vertices())
        flattened = (0, b[0] + b[1]) + tuple(b[2:])
        assert supports(pushed.cycle, box_delta(SEGRE_111, flattened))
        eta = step2_retract(gamma, b, p, SEGRE_111)
        assert boundary(eta) == gamma
        assert supports(eta, monoid_delta(SEGRE_111, b))

    @PROPERTY
    @given(seed=SEEDS)
    def test_step2_accepts_known_filling(self, seed):
        rng = random.Random(seed)
        b, gamma = random_cycle_instance(rng, SEGRE_111, 2)
        pushed = step1_push(gamma, b, 2, SEGRE_111)
        # witness + filling di Delta_b memberi filling gamma di X_b
        inner = step2_retract(gamma, b, 2, SEGRE_111)
        eta = step2_retract(gamma, b, 2, SEGRE_111, filling=inner)
        assert eta == inner
        assert supports(pushed.witness, union_x(SEGRE_111, b))


class TestCertificate:
    """FillCertificate memverifikasi dirinya sendiri."""

    def test_rejects_wrong_boundary(self):
        with pytest.raises(CertificateError):
            FillCertificate(
                simplex_chain((0, 1, 2)),
                simplex_chain((0, 1, 3)),
                box_delta(SEGRE_111, (3, 3, 3, 3, 3, 3)),
                "manual",
            )

    def test_rejects_outside_target(self):
        with pytest.raises(CertificateError):
            FillCertificate(
                simplex_chain((0, 1, 2)),
                simplex_chain((0, 1, 2)),
                box_delta(SEGRE_111, (1, 1, 1, 1, 1, 1)),
                "manual",
            )

    def test_to_dict_records(self):
        eta = simplex_chain((0, 1, 2))
        target = box_delta(SEGRE_111, (3, 0, 2, 1, 2, 1))
        cert = FillCertificate(eta, eta, target, "manual")
        data = cert.to_dict()
        assert data["lemma"] == "manual"
        assert data["filling"] == [[[0, 1, 2], "1"]]
