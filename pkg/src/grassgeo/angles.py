"""Stationary (principal) angles, product identities and projective distances.

Two routes to the angle spectrum are kept deliberately independent:

* the eigenvalue route: the eigenvalues of the chart-level quotient matrix
  built from ``I + epsilon Z Z'^+`` factors are ``cos^2`` (compact) or
  ``cosh^2`` (noncompact) of the angles;
* the singular-value oracle: orthonormalize the frames in the ambient
  (possibly indefinite) metric and read the angles off the singular values of
  their cross Gram matrix.

The eigenvalue route degenerates exactly when the planes pair to zero, in
which case the oracle silently becomes the result path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    ChartPoint,
    DimensionMismatch,
    NonPositiveForm,
    NullVector,
    OnPolarDivisor,
    Signature,
    SignatureUnsupported,
    Tolerance,
    _tol,
    as_complex_matrix,
    orthonormal_basis,
    signature_metric,
)
from .pluecker import _check_pair, _frame_scale, hermitian_product

# Eigenvalues may stray outside the allowed interval by rounding; beyond this
# band the eigenvalue route is considered ill-conditioned and the oracle wins.
_EIG_BAND = 1e-8


@dataclass(frozen=True)
class AngleSpectrum:
    """The ``r = min(n, m)`` stationary angles between two planes, ascending.

    Compact angles live in ``[0, pi/2]``; noncompact "angles" are the
    nonnegative arguments of hyperbolic cosines.
    """

    theta: np.ndarray
    sig: Signature = Signature.COMPACT

    def __post_init__(self):
        theta = np.sort(np.asarray(self.theta, dtype=float))
        object.__setattr__(self, "theta", theta)

    @property
    def r(self) -> int:
        return self.theta.size

    def cos_like(self) -> np.ndarray:
        """Componentwise ``cos`` (compact) or ``cosh`` (noncompact)."""
        return np.cos(self.theta) if self.sig is Signature.COMPACT else np.cosh(self.theta)

    def max_angle(self) -> float:
        return float(self.theta[-1])


# ---------------------------------------------------------------------------
# frame-level helpers

def metric_gram(f: np.ndarray, sig: Signature) -> np.ndarray:
    n, N = f.shape
    J = signature_metric(n, N - n, sig)
    return f @ J @ f.conj().T


def _metric_orthonormalize(f: np.ndarray, sig: Signature, tol: Tolerance | None) -> np.ndarray:
    """Rows made orthonormal for the (possibly indefinite) ambient metric."""
    if sig is Signature.COMPACT:
        return orthonormal_basis(f, tol)
    gram = metric_gram(f, sig)
    w, v = np.linalg.eigh(gram)
    if w.min() <= 0:
        raise NonPositiveForm(
            "the ambient form is not positive definite on this plane; it does "
            "not represent a point of the noncompact manifold"
        )
    inv_sqrt = (v * (1.0 / np.sqrt(w))) @ v.conj().T
    return inv_sqrt @ f


def principal_angles(
    f1: np.ndarray,
    f2: np.ndarray,
    sig: Signature = Signature.COMPACT,
    tol: Tolerance | None = None,
) -> np.ndarray:
    """Singular-value oracle for the full angle spectrum between two frames.

    Returns all ``min(rank f1, rank f2)`` angles sorted ascending, computed
    from the singular values of ``Q1 @ J @ Q2^+`` for metric-orthonormalized
    frames.  Valid on the whole manifold, including pairs that pair to zero.
    """
    tol = _tol(tol)
    f1 = as_complex_matrix(f1, "first frame")
    f2 = as_complex_matrix(f2, "second frame")
    if f1.shape[1] != f2.shape[1]:
        raise DimensionMismatch("frames live in different ambient spaces")
    q1 = _metric_orthonormalize(f1, sig, tol)
    q2 = _metric_orthonormalize(f2, sig, tol)
    J = signature_metric(q1.shape[0], q1.shape[1] - q1.shape[0], sig)
    s = np.linalg.svd(q1 @ J @ q2.conj().T, compute_uv=False)
    if sig is Signature.COMPACT:
        return np.sort(np.arccos(np.clip(s, 0.0, 1.0)))
    return np.sort(np.arccosh(np.clip(s, 1.0, None)))


# ---------------------------------------------------------------------------
# eigenvalue route

def angle_cosine_matrix(z1: ChartPoint, z2: ChartPoint) -> np.ndarray:
    """Quotient matrix whose eigenvalues are the squared angle cosines.

    For chart points ``Z = z1.Z`` and ``Z' = z2.Z`` this is

        (I + eps Z Z^+)^-1 (I + eps Z Z'^+) (I + eps Z' Z'^+)^-1 (I + eps Z' Z^+),

    real-spectrum similar to a hermitian matrix; compact eigenvalues lie in
    ``[0, 1]``, noncompact ones in ``[1, inf)``.  Raises
    :class:`OnPolarDivisor` for compact pairs whose pairing vanishes, where
    the construction loses the angle information.
    """
    _check_pair(z1, z2)
    eps = z1.epsilon
    Z, Zp = z1.Z, z2.Z
    n = z1.n
    if z1.sig is Signature.COMPACT:
        pairing = hermitian_product(z1, z2)
        scale = _frame_scale(z1.extended_frame()) * _frame_scale(z2.extended_frame())
        if abs(pairing) <= DEFAULT_TOL.rel * scale:
            raise OnPolarDivisor(
                "the planes pair to zero; use the singular-value oracle instead"
            )
    I = np.eye(n)
    return (
        np.linalg.inv(I + eps * Z @ Z.conj().T)
        @ (I + eps * Z @ Zp.conj().T)
        @ np.linalg.inv(I + eps * Zp @ Zp.conj().T)
        @ (I + eps * Zp @ Z.conj().T)
    )


def _angles_from_eigenvalues(lam: np.ndarray, sig: Signature, r: int) -> np.ndarray | None:
    """Angle spectrum from quotient-matrix eigenvalues, or None if unusable."""
    if np.max(np.abs(lam.imag)) > _EIG_BAND * max(1.0, np.max(np.abs(lam))):
        return None
    vals = np.sort(lam.real)
    if sig is Signature.COMPACT:
        if vals[0] < -_EIG_BAND or vals[-1] > 1.0 + _EIG_BAND:
            return None
        # structurally-unit eigenvalues (n - r of them) sit at the top
        kept = np.clip(vals[:r], 0.0, 1.0)
        return np.sort(np.arccos(np.sqrt(kept)))
    if vals[0] < 1.0 - _EIG_BAND:
        return None
    kept = np.clip(vals[-r:], 1.0, None)
    return np.sort(np.arccosh(np.sqrt(kept)))


def stationary_angles(z1: ChartPoint, z2: ChartPoint, tol: Tolerance | None = None) -> AngleSpectrum:
    """Stationary angles between two chart points.

    Primary path: eigenvalues of :func:`angle_cosine_matrix`.  Whenever that
    construction degenerates (zero pairing) or its spectrum is out of range,
    the singular-value oracle on the extended frames takes over, so the
    function is total.
    """
    tol = _tol(tol)
    _check_pair(z1, z2)
    r = min(z1.n, z1.m)
    try:
        lam = np.linalg.eigvals(angle_cosine_matrix(z1, z2))
        theta = _angles_from_eigenvalues(lam, z1.sig, r)
    except OnPolarDivisor:
        theta = None
    if theta is None:
        full = principal_angles(z1.extended_frame(), z2.extended_frame(), z1.sig, tol)
        theta = np.sort(full)[-r:]  # the n - r structural zero angles sit first
    return AngleSpectrum(theta, z1.sig)


def angle_product_check(z1: ChartPoint, z2: ChartPoint) -> tuple[float, float]:
    """Both sides of the angle product identity.

    Returns ``(lhs, rhs)`` where ``lhs`` is the normalized pairing
    ``|det(I + eps Z2 Z1^+)| / (norm(z1) norm(z2))`` and ``rhs`` is the
    product of ``cos`` (compact) or ``cosh`` (noncompact) over the stationary
    angles; the two agree for every pair.
    """
    _check_pair(z1, z2)
    eps = z1.epsilon
    n = z1.n
    I = np.eye(n)
    num = abs(np.linalg.det(I + eps * z2.Z @ z1.Z.conj().T))
    d1 = abs(np.linalg.det(I + eps * z1.Z @ z1.Z.conj().T))
    d2 = abs(np.linalg.det(I + eps * z2.Z @ z2.Z.conj().T))
    lhs = num / np.sqrt(d1 * d2)
    spectrum = stationary_angles(z1, z2)
    rhs = float(np.prod(spectrum.cos_like()))
    return float(lhs), rhs


# ---------------------------------------------------------------------------
# projective distances and the isoclinic predicate

def cayley_distance(w1, w2, sig: Signature = Signature.COMPACT) -> float:
    """Elliptic (arccos) or hyperbolic (arccosh) hermitian distance.

    Vectors are projective representatives.  The noncompact variant uses the
    standard indefinite form with signature ``(+, -, ..., -)`` and requires
    both representatives to have positive self-pairing.
    """
    w1 = np.asarray(w1, dtype=complex).ravel()
    w2 = np.asarray(w2, dtype=complex).ravel()
    if w1.shape != w2.shape:
        raise DimensionMismatch("projective representatives must share a dimension")
    if sig is Signature.COMPACT:
        n1, n2 = np.linalg.norm(w1), np.linalg.norm(w2)
        if n1 == 0.0 or n2 == 0.0:
            raise NullVector("projective representatives must be nonzero")
        c = abs(np.vdot(w1, w2)) / (n1 * n2)
        return float(np.arccos(np.clip(c, 0.0, 1.0)))
    weights = -np.ones(w1.size)
    weights[0] = 1.0
    q1 = float(np.sum(weights * np.abs(w1) ** 2))
    q2 = float(np.sum(weights * np.abs(w2) ** 2))
    if q1 <= 0.0 or q2 <= 0.0:
        raise NonPositiveForm("both representatives must have positive self-pairing")
    pair = np.sum(weights * np.conj(w1) * w2)
    c = abs(pair) / np.sqrt(q1 * q2)
    return float(np.arccosh(np.clip(c, 1.0, None)))


def is_isoclinic_pair(z1: ChartPoint, z2: ChartPoint, tol: Tolerance | None = None) -> bool:
    """Whether all stationary angles of a compact pair coincide.

    Equivalent to the quotient matrix being a multiple of the identity.
    """
    tol = _tol(tol)
    _check_pair(z1, z2)
    if z1.sig is not Signature.COMPACT:
        raise SignatureUnsupported("the isoclinic predicate is a compact-manifold notion")
    try:
        w = angle_cosine_matrix(z1, z2)
    except OnPolarDivisor:
        # all angles are pi/2 exactly when the whole spectrum collapses to 0;
        # check via the oracle instead
        theta = stationary_angles(z1, z2, tol).theta
        return bool(np.max(theta) - np.min(theta) <= 1e-7)
    n = z1.n
    lam = np.trace(w) / n
    scale = max(1.0, float(np.linalg.norm(w)))
    return bool(np.linalg.norm(w - lam * np.eye(n)) <= max(tol.rel * scale, 1e-10))
