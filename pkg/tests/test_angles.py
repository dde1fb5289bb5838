import numpy as np
import pytest

from grassgeo import (
    ChartPoint,
    NonPositiveForm,
    NullVector,
    OnPolarDivisor,
    Signature,
    angle_cosine_matrix,
    angle_product_check,
    cayley_distance,
    is_isoclinic_pair,
    principal_angles,
    pluecker_coords,
    stationary_angles,
)
from grassgeo.geodesics import _hermitian_angle_matrix, mobius_action
from grassgeo.pluecker import orthogonal_complement, frame_pairing
from grassgeo.sampling import random_chart_point, random_group_element

COMPACT, NONCOMPACT = Signature.COMPACT, Signature.NONCOMPACT


class TestAngleCosineMatrix:
    def test_equal_points_give_identity(self):
        rng = np.random.default_rng(0)
        z = random_chart_point(rng, 2, 2)
        np.testing.assert_allclose(angle_cosine_matrix(z, z), np.eye(2), atol=1e-12)

    def test_scalar_value(self):
        z0 = ChartPoint(np.zeros((1, 1)))
        z = ChartPoint(np.array([[2.0]]))
        w = angle_cosine_matrix(z0, z)
        assert w[0, 0] == pytest.approx(1 / 5)

    def test_eigenvalues_real_unit_interval(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            z1 = random_chart_point(rng, 2, 2)
            z2 = random_chart_point(rng, 2, 2)
            lam = np.linalg.eigvals(angle_cosine_matrix(z1, z2))
            assert np.abs(lam.imag).max() < 1e-10
            assert lam.real.min() > -1e-10 and lam.real.max() < 1 + 1e-10

    def test_polar_pair_raises(self):
        z1 = ChartPoint(np.array([[1.0]]))
        z2 = ChartPoint(np.array([[-1.0]]))
        with pytest.raises(OnPolarDivisor):
            angle_cosine_matrix(z1, z2)

    def test_noncompact_eigenvalues_at_least_one(self):
        rng = np.random.default_rng(2)
        z1 = random_chart_point(rng, 2, 3, NONCOMPACT)
        z2 = random_chart_point(rng, 2, 3, NONCOMPACT)
        lam = np.linalg.eigvals(angle_cosine_matrix(z1, z2)).real
        assert lam.min() > 1 - 1e-10


class TestStationaryAngles:
    def test_zero_for_equal_points(self):
        rng = np.random.default_rng(3)
        z = random_chart_point(rng, 2, 3)
        np.testing.assert_allclose(stationary_angles(z, z).theta, 0.0, atol=1e-7)

    def test_line_pair_in_three_space(self):
        # spans of e1 and (e1 + e2)/sqrt(2) meet at 45 degrees
        z1 = ChartPoint(np.zeros((1, 2)))
        z2 = ChartPoint(np.array([[1.0, 0.0]]))
        np.testing.assert_allclose(stationary_angles(z1, z2).theta, [np.pi / 4], atol=1e-12)

    def test_half_common_half_orthogonal(self):
        # span{e1,e2} vs span{e1,e3}: one zero angle, one right angle
        e = np.eye(4)
        theta = principal_angles(e[[0, 1]], e[[0, 2]])
        np.testing.assert_allclose(theta, [0.0, np.pi / 2], atol=1e-12)

    def test_scalar_arctan(self):
        z0 = ChartPoint(np.zeros((1, 1)))
        z = ChartPoint(np.array([[1.5]]))
        np.testing.assert_allclose(stationary_angles(z0, z).theta, [np.arctan(1.5)], atol=1e-12)

    def test_oracle_agreement_both_signatures(self):
        rng = np.random.default_rng(4)
        for sig in (COMPACT, NONCOMPACT):
            for n, m in ((2, 2), (3, 2), (2, 3)):
                z1 = random_chart_point(rng, n, m, sig)
                z2 = random_chart_point(rng, n, m, sig)
                spec = stationary_angles(z1, z2)
                oracle = np.sort(
                    principal_angles(z1.extended_frame(), z2.extended_frame(), sig)
                )[-min(n, m):]
                np.testing.assert_allclose(spec.theta, oracle, atol=1e-8)

    def test_polar_pair_falls_back_to_oracle(self):
        z1 = ChartPoint(np.array([[1.0]]))
        z2 = ChartPoint(np.array([[-1.0]]))
        np.testing.assert_allclose(stationary_angles(z1, z2).theta, [np.pi / 2], atol=1e-12)

    def test_mobius_invariance(self):
        rng = np.random.default_rng(5)
        for sig in (COMPACT, NONCOMPACT):
            z1 = random_chart_point(rng, 2, 2, sig)
            z2 = random_chart_point(rng, 2, 2, sig)
            g = random_group_element(rng, 2, 2, sig)
            a = stationary_angles(z1, z2).theta
            b = stationary_angles(mobius_action(g, z1), mobius_action(g, z2)).theta
            np.testing.assert_allclose(a, b, atol=1e-8)

    def test_v_and_w_share_eigenvalues(self):
        rng = np.random.default_rng(6)
        for sig in (COMPACT, NONCOMPACT):
            z1 = random_chart_point(rng, 2, 3, sig)
            z2 = random_chart_point(rng, 2, 3, sig)
            ew = np.sort(np.linalg.eigvals(angle_cosine_matrix(z1, z2)).real)
            ev = np.sort(np.linalg.eigvalsh(_hermitian_angle_matrix(z1, z2)))
            np.testing.assert_allclose(ew, ev, atol=1e-9)


class TestAngleProduct:
    def test_equal_points(self):
        rng = np.random.default_rng(7)
        z = random_chart_point(rng, 2, 2)
        lhs, rhs = angle_product_check(z, z)
        assert lhs == pytest.approx(1.0, abs=1e-12)
        assert rhs == pytest.approx(1.0, abs=1e-12)

    def test_scalar_identity(self):
        z0 = ChartPoint(np.zeros((1, 1)))
        z = ChartPoint(np.array([[2.0]]))
        lhs, rhs = angle_product_check(z0, z)
        assert lhs == pytest.approx(1 / np.sqrt(5))
        assert rhs == pytest.approx(lhs, abs=1e-12)

    @pytest.mark.parametrize("sig", [COMPACT, NONCOMPACT])
    def test_random_pairs(self, sig):
        rng = np.random.default_rng(8)
        for _ in range(10):
            z1 = random_chart_point(rng, 2, 3, sig)
            z2 = random_chart_point(rng, 2, 3, sig)
            lhs, rhs = angle_product_check(z1, z2)
            assert abs(lhs - rhs) < 1e-10 * max(1.0, lhs)

    def test_complement_symmetry(self):
        rng = np.random.default_rng(9)
        z1 = random_chart_point(rng, 2, 3)
        z2 = random_chart_point(rng, 2, 3)
        lhs, _ = angle_product_check(z1, z2)
        c1, c2 = orthogonal_complement(z1), orthogonal_complement(z2)
        num = abs(frame_pairing(c1, c2))
        den = np.sqrt(abs(frame_pairing(c1, c1)) * abs(frame_pairing(c2, c2)))
        assert lhs == pytest.approx(num / den, abs=1e-10)


class TestCayleyDistance:
    def test_same_vector(self):
        assert cayley_distance([1, 2j], [1, 2j]) == pytest.approx(0.0)

    def test_forty_five_degrees(self):
        w1 = np.array([1.0, 0.0])
        w2 = np.array([1.0, 1.0]) / np.sqrt(2)
        assert cayley_distance(w1, w2) == pytest.approx(np.pi / 4)

    def test_null_vector_rejected(self):
        with pytest.raises(NullVector):
            cayley_distance([0.0, 0.0], [1.0, 0.0])

    def test_noncompact_needs_positive_form(self):
        with pytest.raises(NonPositiveForm):
            cayley_distance([0.1, 1.0], [1.0, 0.0], NONCOMPACT)

    def test_noncompact_scalar(self):
        # CP^{1,1} points (1, z): distance arctanh of the Moebius gap
        z1, z2 = 0.3, -0.2
        d = cayley_distance([1.0, z1], [1.0, z2], NONCOMPACT)
        expected = np.arccosh(abs(1 - z1 * z2) / np.sqrt((1 - z1**2) * (1 - z2**2)))
        assert d == pytest.approx(expected)

    def test_matches_angle_product_on_minor_vectors(self):
        rng = np.random.default_rng(10)
        for _ in range(5):
            z1 = random_chart_point(rng, 2, 2)
            z2 = random_chart_point(rng, 2, 2)
            p1 = pluecker_coords(z1.extended_frame()).coords
            p2 = pluecker_coords(z2.extended_frame()).coords
            lhs, _ = angle_product_check(z1, z2)
            assert cayley_distance(p1, p2) == pytest.approx(
                np.arccos(np.clip(lhs, 0, 1)), abs=1e-9
            )


class TestIsoclinic:
    def test_equal_points_are_isoclinic(self):
        rng = np.random.default_rng(11)
        z = random_chart_point(rng, 2, 2)
        assert is_isoclinic_pair(z, z)

    def test_scaled_identity_is_isoclinic(self):
        z0 = ChartPoint(np.zeros((2, 2)))
        z = ChartPoint(0.7 * np.eye(2))
        assert is_isoclinic_pair(z0, z)

    def test_unequal_angles_are_not(self):
        z0 = ChartPoint(np.zeros((2, 2)))
        z = ChartPoint(np.diag([0.0, 2.0]).astype(complex))
        assert not is_isoclinic_pair(z0, z)
