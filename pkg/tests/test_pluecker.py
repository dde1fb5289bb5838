import itertools

import numpy as np
import pytest

from grassgeo import (
    ChartPoint,
    OutsideChart,
    Signature,
    SignatureUnsupported,
    chart_transition,
    complement_identity_residual,
    hermitian_product,
    in_polar_divisor,
    intersection_dim,
    orthogonal_complement,
    pluecker_coords,
    pluecker_relations_residual,
)
from grassgeo.pluecker import PlueckerCoords, frame_pairing
from grassgeo.sampling import random_chart_point, random_frame
from grassgeo.schubert import SchubertSymbol


class TestPlueckerCoords:
    def test_base_point(self):
        f = np.hstack([np.eye(2), np.zeros((2, 2))])
        p = pluecker_coords(f)
        np.testing.assert_allclose(p.coords, [1, 0, 0, 0, 0, 0], atol=1e-15)

    def test_single_row_gives_entries(self):
        p = pluecker_coords(np.array([[1.0, 2.0, 3.0]]))
        np.testing.assert_allclose(p.coords, [1, 2, 3])

    def test_hand_computed_minors(self):
        # minors of {(1,0,1,0),(0,1,0,2)}: 12->1, 13->0, 14->2, 23->-1, 24->0, 34->2
        f = np.array([[1.0, 0, 1, 0], [0, 1, 0, 2]])
        p = pluecker_coords(f)
        np.testing.assert_allclose(p.coords, [1, 0, 2, -1, 0, 2], atol=1e-15)
        assert p.get((1, 4)) == pytest.approx(2)
        assert p.get((2, 3)) == pytest.approx(-1)


class TestRelationsResidual:
    def test_decomposable_vectors_satisfy_relations(self):
        rng = np.random.default_rng(1)
        for _ in range(10):
            f = random_frame(rng, 2, 4)
            p = pluecker_coords(f)
            scale = np.max(np.abs(p.coords)) ** 2
            assert pluecker_relations_residual(p) < 1e-10 * scale

    def test_single_quadric_violation(self):
        # only p12 = p34 = 1: the quadric p12 p34 - p13 p24 + p14 p23 = 1
        p = PlueckerCoords(4, 2, np.array([1, 0, 0, 0, 0, 1], dtype=complex))
        assert pluecker_relations_residual(p) == pytest.approx(1.0)

    def test_decomposable_sparse_vector(self):
        # p12 = p24 = 1 comes from the frame rows {(1,0,0,-1),(0,1,0,0)}
        p = PlueckerCoords(4, 2, np.array([1, 0, 0, 0, 1, 0], dtype=complex))
        assert pluecker_relations_residual(p) == pytest.approx(0.0, abs=1e-15)
        f = np.array([[1.0, 0, 0, -1], [0, 1, 0, 0]])
        np.testing.assert_allclose(pluecker_coords(f).coords, p.coords, atol=1e-15)


class TestHermitianProduct:
    def test_base_point_norm(self):
        z = ChartPoint(np.zeros((2, 2)))
        assert hermitian_product(z, z) == pytest.approx(1.0)

    def test_scalar_case(self):
        z = ChartPoint(np.array([[0.5 + 0.5j]]))
        expected = 1 + abs(0.5 + 0.5j) ** 2
        assert hermitian_product(z, z) == pytest.approx(expected)

    @pytest.mark.parametrize("seed", range(5))
    def test_binet_cauchy_oracle(self, seed):
        rng = np.random.default_rng(seed)
        z1 = random_chart_point(rng, 2, 2)
        z2 = random_chart_point(rng, 2, 2)
        p1 = pluecker_coords(z1.extended_frame()).coords
        p2 = pluecker_coords(z2.extended_frame()).coords
        pairing = np.sum(np.conj(p1) * p2)
        value = hermitian_product(z1, z2)
        assert abs(value - pairing) < 1e-10 * max(1.0, abs(value))

    def test_modulus_symmetry(self):
        rng = np.random.default_rng(9)
        for sig in (Signature.COMPACT, Signature.NONCOMPACT):
            z1 = random_chart_point(rng, 2, 3, sig)
            z2 = random_chart_point(rng, 2, 3, sig)
            assert abs(hermitian_product(z1, z2)) == pytest.approx(
                abs(hermitian_product(z2, z1)), abs=1e-12
            )


class TestChartTransition:
    def test_same_chart_is_identity(self):
        rng = np.random.default_rng(2)
        z = random_chart_point(rng, 2, 3)
        out = chart_transition(z.extended_frame(), SchubertSymbol((1, 2)))
        np.testing.assert_allclose(out, z.Z, atol=1e-13)

    def test_projective_line_charts(self):
        # the frame (z, 1) already uses the second chart
        z = 0.3 + 0.7j
        out = chart_transition(np.array([[z, 1.0]]), SchubertSymbol((2,)))
        assert out[0, 0] == pytest.approx(z)
        # the frame (1, z) moves to the second chart as 1/z
        out = chart_transition(np.array([[1.0, z]]), SchubertSymbol((2,)))
        assert out[0, 0] == pytest.approx(1 / z)

    def test_outside_chart(self):
        f = np.array([[0.0, 1.0]])
        with pytest.raises(OutsideChart):
            chart_transition(f, SchubertSymbol((1,)))

    def test_roundtrip_through_other_chart(self):
        rng = np.random.default_rng(4)
        f = random_frame(rng, 2, 4)
        sigma, tau = SchubertSymbol((1, 2)), SchubertSymbol((2, 4))
        z_sigma = chart_transition(f, sigma)
        frame_tau = np.zeros((2, 4), dtype=complex)
        frame_tau[:, tau.columns()] = np.eye(2)
        frame_tau[:, tau.complement(4)] = chart_transition(f, tau)
        back = chart_transition(frame_tau, sigma)
        np.testing.assert_allclose(back, z_sigma, atol=1e-12)


class TestOrthogonalComplement:
    def test_zero_point(self):
        comp = orthogonal_complement(ChartPoint(np.zeros((1, 2))))
        np.testing.assert_allclose(comp, [[0, 1, 0], [0, 0, 1]], atol=1e-15)

    def test_scalar_formula(self):
        z = 0.4 - 0.2j
        comp = orthogonal_complement(ChartPoint(np.array([[z]])))
        np.testing.assert_allclose(comp, [[-np.conj(z), 1.0]])

    def test_rows_orthogonal(self):
        rng = np.random.default_rng(6)
        z = random_chart_point(rng, 2, 3)
        comp = orthogonal_complement(z)
        assert np.abs(comp @ z.extended_frame().conj().T).max() < 1e-12

    def test_noncompact_rejected(self):
        z = ChartPoint(0.3 * np.eye(2), Signature.NONCOMPACT)
        with pytest.raises(SignatureUnsupported):
            orthogonal_complement(z)

    def test_involution_on_spans(self):
        rng = np.random.default_rng(8)
        z = random_chart_point(rng, 2, 3)
        comp = orthogonal_complement(z)  # 3 x 5 frame (-Z^+ | I)
        z_comp = ChartPoint(comp[:, :2])  # swapped-pivot chart of the complement
        comp2 = orthogonal_complement(z_comp)
        frame2 = np.hstack([comp2[:, 3:], comp2[:, :3]])  # undo the block swap
        assert intersection_dim(frame2, z.extended_frame()) == 2


class TestComplementIdentity:
    def test_zero_pair(self):
        z = ChartPoint(np.zeros((2, 3)))
        assert complement_identity_residual(z, z) == pytest.approx(0.0)

    @pytest.mark.parametrize("sig", [Signature.COMPACT, Signature.NONCOMPACT])
    def test_random_pairs(self, sig):
        rng = np.random.default_rng(12)
        for _ in range(10):
            z1 = random_chart_point(rng, 2, 3, sig)
            z2 = random_chart_point(rng, 2, 3, sig)
            assert complement_identity_residual(z1, z2) < 1e-10


class TestPolarDivisor:
    def test_self_is_not_polar(self):
        f = np.hstack([np.eye(2), np.zeros((2, 2))])
        assert not in_polar_divisor(f, f)

    def test_point_at_infinity(self):
        assert in_polar_divisor(np.array([[0.0, 1.0]]), np.array([[1.0, 0.0]]))

    def test_shared_complement_direction(self):
        e = np.eye(4)
        assert in_polar_divisor(e[[1, 2]], e[[0, 1]])

    def test_unitary_rotation_invariance(self):
        rng = np.random.default_rng(13)
        from grassgeo.sampling import random_unitary

        e = np.eye(4, dtype=complex)
        z, base = e[[1, 2]], e[[0, 1]]
        u = random_unitary(rng, 4)
        assert in_polar_divisor(z @ u, base @ u)
        f = random_frame(rng, 2, 4)
        assert in_polar_divisor(f, base) == in_polar_divisor(f @ u, base @ u)


def test_frame_pairing_matches_chart_pairing():
    rng = np.random.default_rng(14)
    for sig in (Signature.COMPACT, Signature.NONCOMPACT):
        z1 = random_chart_point(rng, 2, 2, sig)
        z2 = random_chart_point(rng, 2, 2, sig)
        assert frame_pairing(z1.extended_frame(), z2.extended_frame(), sig) == pytest.approx(
            hermitian_product(z1, z2)
        )


def test_cauchy_identity_many_shapes():
    rng = np.random.default_rng(15)
    for n, m in ((1, 2), (2, 2), (2, 3), (3, 2)):
        z1 = random_chart_point(rng, n, m)
        z2 = random_chart_point(rng, n, m)
        p1 = pluecker_coords(z1.extended_frame()).coords
        p2 = pluecker_coords(z2.extended_frame()).coords
        assert abs(hermitian_product(z1, z2) - np.sum(np.conj(p1) * p2)) < 1e-11
