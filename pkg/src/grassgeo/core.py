"""Shared types, tolerances, error hierarchy and rank-revealing utilities.

Conventions used throughout the package:

* A plane is held either as an ``n x m`` complex matrix of chart coordinates
  (:class:`ChartPoint`, the plane spanned by the rows of ``(I_n | Z)``) or as
  an ``n x N`` full-row-rank complex "frame" whose rows span it.
* The hermitian scalar product is linear in its *second* argument,
  ``(a, lam * b) = lam * (a, b)``.
* :attr:`Signature.COMPACT` selects the positively curved manifold,
  :attr:`Signature.NONCOMPACT` its bounded-domain dual; the sign ``epsilon``
  enters every formula through ``I + epsilon * Z @ Z^+``.  Noncompact chart
  matrices must satisfy ``I - Z^+ Z > 0``.

All operations are pure functions of their arguments and are safe to call
concurrently.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np


# ---------------------------------------------------------------------------
# errors

class GrassmannError(Exception):
    """Base class for all domain errors raised by this package."""


class RankDeficient(GrassmannError):
    """A frame does not have full row rank at the working tolerance."""


class DimensionMismatch(GrassmannError):
    """Operands live in incompatible spaces."""


class SignatureUnsupported(GrassmannError):
    """The operation is not defined for the given signature."""


class OutsideChart(GrassmannError):
    """The requested chart minor is numerically singular."""


class OnPolarDivisor(GrassmannError):
    """The two planes pair to zero, so the eigenvalue route degenerates."""


class InternalInconsistency(GrassmannError):
    """Two independent computations of the same predicate disagree."""


class ChartSingularity(GrassmannError):
    """A compact geodesic leaves the chart (some angle reaches pi/2)."""


class DegenerateVector(GrassmannError):
    """A flat-direction vector has a vanishing component."""


class NullVector(GrassmannError):
    """A projective-space representative is (numerically) zero."""


class NonPositiveForm(GrassmannError):
    """The indefinite hermitian form is not positive on the given vector."""


class InfiniteDiastasis(GrassmannError):
    """The normalized overlap vanishes, so the diastasis diverges."""


class InvalidPoint(GrassmannError):
    """A chart matrix violates the domain constraint of its signature."""


# ---------------------------------------------------------------------------
# signature and tolerances

class Signature(enum.Enum):
    """Compact manifold vs. its noncompact (bounded domain) dual."""

    COMPACT = 1
    NONCOMPACT = -1

    @property
    def epsilon(self) -> int:
        return self.value

    @classmethod
    def from_epsilon(cls, epsilon: int) -> "Signature":
        if epsilon == 1:
            return cls.COMPACT
        if epsilon == -1:
            return cls.NONCOMPACT
        raise ValueError(f"signature epsilon must be +1 or -1, got {epsilon!r}")

    @classmethod
    def parse(cls, name: str) -> "Signature":
        key = name.strip().lower()
        if key in ("compact", "c", "+1", "1"):
            return cls.COMPACT
        if key in ("noncompact", "n", "-1"):
            return cls.NONCOMPACT
        raise ValueError(f"unknown signature {name!r}")


@dataclass(frozen=True)
class Tolerance:
    """Relative tolerance and the rank-decision factor.

    Singular values below ``rank_factor * sigma_max`` count as zero; the
    default factor is ``max(dim) * 2**-50``, a conservative multiple of
    machine epsilon.
    """

    rel: float = 1e-9
    rank_factor: float | None = None

    def __post_init__(self):
        if self.rel <= 0:
            raise ValueError("tolerance must be positive")

    def rank_cut(self, shape: tuple[int, ...], sigma_max: float) -> float:
        factor = self.rank_factor
        if factor is None:
            factor = max(shape) * 2.0 ** -50
        return factor * sigma_max


DEFAULT_TOL = Tolerance()


def _tol(tol: Tolerance | None) -> Tolerance:
    return DEFAULT_TOL if tol is None else tol


# ---------------------------------------------------------------------------
# matrix plumbing

def as_complex_matrix(a, name: str = "matrix") -> np.ndarray:
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2:
        raise DimensionMismatch(f"{name} must be two-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def numerical_rank(mat: np.ndarray, tol: Tolerance | None = None) -> int:
    """Rank of ``mat`` with singular values below the rank cut counted as zero."""
    tol = _tol(tol)
    s = np.linalg.svd(mat, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol.rank_cut(mat.shape, s[0])))


@dataclass(frozen=True)
class ChartPoint:
    """An ``n x m`` chart matrix together with its signature.

    The represented plane is the row span of the extended frame ``(I_n | Z)``.
    Noncompact points must lie in the bounded realization ``I - Z^+ Z > 0``.
    """

    Z: np.ndarray
    sig: Signature = Signature.COMPACT

    def __post_init__(self):
        Z = as_complex_matrix(self.Z, "chart matrix")
        if Z.shape[0] < 1 or Z.shape[1] < 1:
            raise DimensionMismatch("chart matrices need at least one row and column")
        object.__setattr__(self, "Z", Z)
        if self.sig is Signature.NONCOMPACT:
            smax = np.linalg.norm(Z, 2)
            if smax >= 1.0:
                raise InvalidPoint(
                    f"noncompact chart matrix must have spectral norm < 1, got {smax:.6g}"
                )

    @property
    def n(self) -> int:
        return self.Z.shape[0]

    @property
    def m(self) -> int:
        return self.Z.shape[1]

    @property
    def epsilon(self) -> int:
        return self.sig.epsilon

    def extended_frame(self) -> np.ndarray:
        """The frame ``(I_n | Z)`` whose rows span the plane."""
        return np.hstack([np.eye(self.n, dtype=complex), self.Z])


def base_frame(n: int, N: int) -> np.ndarray:
    """Frame of the base plane spanned by the first ``n`` coordinate vectors."""
    return np.hstack([np.eye(n, dtype=complex), np.zeros((n, N - n), dtype=complex)])


def coordinate_plane(p: int, N: int) -> np.ndarray:
    """Frame of the coordinate plane spanned by the first ``p`` basis vectors."""
    if not 1 <= p <= N:
        raise DimensionMismatch(f"coordinate plane needs 1 <= p <= {N}, got {p}")
    return np.hstack([np.eye(p, dtype=complex), np.zeros((p, N - p), dtype=complex)])


def signature_metric(n: int, m: int, sig: Signature) -> np.ndarray:
    """Diagonal metric ``diag(I_n, epsilon * I_m)`` of the ambient pairing."""
    d = np.ones(n + m)
    d[n:] = sig.epsilon
    return np.diag(d).astype(complex)


# ---------------------------------------------------------------------------
# operations

def orthonormal_basis(f: np.ndarray, tol: Tolerance | None = None) -> np.ndarray:
    """Row-orthonormal frame with the same row span as ``f``.

    The result ``Q`` satisfies ``Q @ Q^+ = I`` and matches the classical
    Gram-Schmidt output up to rounding (pivot phases are normalized).
    Raises :class:`RankDeficient` if ``f`` is not of full row rank.
    """
    tol = _tol(tol)
    f = as_complex_matrix(f, "frame")
    n = f.shape[0]
    if numerical_rank(f, tol) < n:
        raise RankDeficient(f"frame of shape {f.shape} is rank deficient")
    # QR of the transposed frame orthonormalizes the row space; fixing the
    # phases of the R diagonal reproduces the Gram-Schmidt convention.
    q, r = np.linalg.qr(f.T)
    diag = np.diagonal(r).copy()
    phases = np.where(np.abs(diag) > 0, diag / np.abs(np.where(diag == 0, 1, diag)), 1.0)
    return (q * np.conj(phases)).T


def perp_basis(f: np.ndarray, tol: Tolerance | None = None) -> np.ndarray:
    """Orthonormal frame of the hermitian orthocomplement of ``row span(f)``."""
    tol = _tol(tol)
    f = as_complex_matrix(f, "frame")
    n, N = f.shape
    if numerical_rank(f, tol) < n:
        raise RankDeficient(f"frame of shape {f.shape} is rank deficient")
    _, _, vh = np.linalg.svd(f, full_matrices=True)
    return vh[n:]


def intersection_dim(a: np.ndarray, b: np.ndarray, tol: Tolerance | None = None) -> int:
    """Dimension of the intersection of the row spans of two frames.

    Computed as ``rank(a) + rank(b) - rank(stack)``; both inputs must be full
    row rank frames over the same ambient space.
    """
    tol = _tol(tol)
    a = as_complex_matrix(a, "first frame")
    b = as_complex_matrix(b, "second frame")
    if a.shape[1] != b.shape[1]:
        raise DimensionMismatch(
            f"frames live in different ambient spaces: {a.shape[1]} vs {b.shape[1]} columns"
        )
    for f, name in ((a, "first"), (b, "second")):
        if numerical_rank(f, tol) < f.shape[0]:
            raise RankDeficient(f"{name} frame is rank deficient")
    stacked = np.vstack([a, b])
    return a.shape[0] + b.shape[0] - numerical_rank(stacked, tol)
