import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassgeo import (
    DimensionMismatch,
    RankDeficient,
    Tolerance,
    intersection_dim,
    orthonormal_basis,
    perp_basis,
)
from grassgeo.core import ChartPoint, InvalidPoint, Signature, numerical_rank
from grassgeo.sampling import complex_normal, random_frame


def gram_schmidt_rows(f):
    """Classical Gram-Schmidt on rows; the independent oracle."""
    rows = []
    for v in np.asarray(f, dtype=complex):
        w = v.copy()
        for u in rows:
            w = w - np.vdot(u, w) * u
        rows.append(w / np.linalg.norm(w))
    return np.array(rows)


class TestOrthonormalBasis:
    def test_identity_frame_is_fixed(self):
        f = np.hstack([np.eye(2), np.zeros((2, 2))])
        q = orthonormal_basis(f)
        np.testing.assert_allclose(q, f, atol=1e-14)

    def test_single_row_normalization(self):
        q = orthonormal_basis(np.array([[3.0, 4.0]]))
        np.testing.assert_allclose(q, [[0.6, 0.8]], atol=1e-15)

    def test_matches_gram_schmidt_oracle(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            f = random_frame(rng, 2, 4)
            q = orthonormal_basis(f)
            assert np.abs(q @ q.conj().T - np.eye(2)).max() < 1e-12
            oracle = gram_schmidt_rows(f)
            np.testing.assert_allclose(q, oracle, atol=1e-10)

    def test_rank_deficient_rejected(self):
        f = np.array([[1.0, 2.0, 0.0], [2.0, 4.0, 0.0]])
        with pytest.raises(RankDeficient):
            orthonormal_basis(f)

    def test_span_preserved(self):
        rng = np.random.default_rng(3)
        f = random_frame(rng, 3, 6)
        assert intersection_dim(f, orthonormal_basis(f)) == 3


class TestIntersectionDim:
    def test_self_intersection(self):
        f = np.hstack([np.eye(2), np.zeros((2, 2))])
        assert intersection_dim(f, f) == 2

    def test_complementary_planes(self):
        a = np.hstack([np.eye(2), np.zeros((2, 2))])
        b = np.hstack([np.zeros((2, 2)), np.eye(2)])
        assert intersection_dim(a, b) == 0

    def test_one_common_direction(self):
        e = np.eye(4)
        a = e[[0, 1]]
        b = e[[1, 2]]
        assert intersection_dim(a, b) == 1

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            intersection_dim(np.eye(2), np.eye(3))

    def test_invariance_under_left_multiplication(self):
        rng = np.random.default_rng(11)
        a = random_frame(rng, 2, 5)
        b = random_frame(rng, 3, 5)
        g = complex_normal(rng, 2, 2) + 2 * np.eye(2)
        assert intersection_dim(g @ a, b) == intersection_dim(a, b)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 3))
    def test_symmetry_and_bound(self, seed, na, nb):
        rng = np.random.default_rng(seed)
        a = random_frame(rng, na, 5)
        b = random_frame(rng, nb, 5)
        d = intersection_dim(a, b)
        assert d == intersection_dim(b, a)
        assert 0 <= d <= min(na, nb)


class TestPerpBasis:
    def test_rows_orthogonal_and_complete(self):
        rng = np.random.default_rng(23)
        f = random_frame(rng, 2, 5)
        p = perp_basis(f)
        assert p.shape == (3, 5)
        assert np.abs(p @ f.conj().T).max() < 1e-12
        assert numerical_rank(np.vstack([f, p])) == 5


class TestChartPoint:
    def test_noncompact_domain_enforced(self):
        ChartPoint(0.5 * np.eye(2), Signature.NONCOMPACT)
        with pytest.raises(InvalidPoint):
            ChartPoint(np.eye(2), Signature.NONCOMPACT)

    def test_extended_frame_shape(self):
        z = ChartPoint(np.ones((2, 3)))
        f = z.extended_frame()
        assert f.shape == (2, 5)
        np.testing.assert_allclose(f[:, :2], np.eye(2))

    def test_tolerance_validation(self):
        with pytest.raises(ValueError):
            Tolerance(rel=-1.0)
