"""Exponential and logarithm maps, the invariant metric, group action and
closed-form distances.

The geodesic through the base point with tangent matrix ``B`` has chart
coordinates obtained by applying ``tan`` (compact) or ``tanh`` (noncompact)
to the singular values of ``t B``.  A compact geodesic leaves the chart when
some singular value of ``t B`` reaches ``pi/2``.

Isometries act on chart coordinates by linear fractional transformations
``Z -> (A Z + B)(C Z + D)^-1`` with block matrices preserving the ambient
indefinite metric.  The squared distance between two points is computed three
independent ways (arctan of singular values of a transvected difference,
arccos of eigenvalues of a hermitian quotient, and a complex-logarithm form);
all three agree to rounding and their common value is the euclidean norm of
the stationary-angle vector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .angles import AngleSpectrum, stationary_angles
from .core import (
    DEFAULT_TOL,
    ChartPoint,
    ChartSingularity,
    DimensionMismatch,
    InfiniteDiastasis,
    InternalInconsistency,
    InvalidPoint,
    OutsideChart,
    Signature,
    SignatureUnsupported,
    as_complex_matrix,
)
from .pluecker import _check_pair, _frame_scale, hermitian_product

_GROUP_TOL = 1e-10
_CUT_SV_REL = 1e-13


# ---------------------------------------------------------------------------
# hermitian matrix functions

def _psd_power(A: np.ndarray, power: float) -> np.ndarray:
    """``A**power`` for a hermitian positive definite matrix via eigh."""
    w, v = np.linalg.eigh(A)
    if w.min() <= 0 and power < 0:
        raise InvalidPoint("matrix must be positive definite for negative powers")
    w = np.clip(w, 0.0, None)
    return (v * np.power(w, power)) @ v.conj().T


def _gram_factors(Z: np.ndarray, eps: int):
    n, m = Z.shape
    left = np.eye(n) + eps * Z @ Z.conj().T
    right = np.eye(m) + eps * Z.conj().T @ Z
    return left, right


# ---------------------------------------------------------------------------
# group elements and the fractional-linear action

@dataclass(frozen=True)
class GroupElement:
    """A determinant-one matrix preserving ``diag(eps I_n, I_m)``.

    The block split needs ``n``, which is stored alongside the matrix.  The
    metric relation and the determinant are validated on construction.
    """

    U: np.ndarray
    n: int
    sig: Signature = Signature.COMPACT

    def __post_init__(self):
        U = as_complex_matrix(self.U, "group matrix")
        N = U.shape[0]
        if U.shape != (N, N) or not 0 < self.n < N:
            raise DimensionMismatch("group matrices are square with 0 < n < N")
        object.__setattr__(self, "U", U)
        eps = self.sig.epsilon
        d = np.ones(N)
        d[: self.n] = eps
        I_nm = np.diag(d)
        resid = np.abs(U.conj().T @ I_nm @ U - I_nm).max()
        if resid > _GROUP_TOL * max(1.0, np.abs(U).max() ** 2):
            raise InvalidPoint(f"matrix does not preserve the ambient metric (residual {resid:.3e})")
        det = np.linalg.det(U)
        if abs(det - 1.0) > 1e-8:
            raise InvalidPoint(f"group matrices must have determinant one, got {det:.6g}")

    @property
    def N(self) -> int:
        return self.U.shape[0]

    @property
    def m(self) -> int:
        return self.N - self.n

    def blocks(self):
        n = self.n
        return self.U[:n, :n], self.U[:n, n:], self.U[n:, :n], self.U[n:, n:]

    def inverse(self) -> "GroupElement":
        eps = self.sig.epsilon
        d = np.ones(self.N)
        d[: self.n] = eps
        I_nm = np.diag(d).astype(complex)
        return GroupElement(I_nm @ self.U.conj().T @ I_nm, self.n, self.sig)

    def compose(self, other: "GroupElement") -> "GroupElement":
        if self.n != other.n or self.sig is not other.sig:
            raise DimensionMismatch("group elements are not composable")
        return GroupElement(self.U @ other.U, self.n, self.sig)


def identity_element(n: int, m: int, sig: Signature = Signature.COMPACT) -> GroupElement:
    return GroupElement(np.eye(n + m, dtype=complex), n, sig)


def mobius_action(g: GroupElement, z: ChartPoint) -> ChartPoint:
    """Fractional-linear action ``Z -> (A Z + B)(C Z + D)^-1``."""
    if z.sig is not g.sig:
        raise SignatureUnsupported("group element and point carry different signatures")
    if (g.n, g.m) != (z.n, z.m):
        raise DimensionMismatch("group element does not act on this chart size")
    A, B, C, D = g.blocks()
    denom = C @ z.Z + D
    s = np.linalg.svd(denom, compute_uv=False)
    if s[-1] <= 1e-13 * max(s[0], 1.0):
        raise OutsideChart("the image leaves the chart (denominator block is singular)")
    return ChartPoint(np.linalg.solve(denom.conj().T, (A @ z.Z + B).conj().T).conj().T, z.sig)


def transvection_to_zero(z1: ChartPoint) -> GroupElement:
    """The symmetric-space transvection moving ``z1`` to the origin.

    Blocks are built from the inverse square roots of the Gram factors of
    ``z1`` (unit phase choice); an overall scalar phase makes the determinant
    one, which leaves the action untouched.
    """
    eps = z1.epsilon
    left, right = _gram_factors(z1.Z, eps)
    A = _psd_power(left, -0.5)
    D = _psd_power(right, -0.5)
    B = -A @ z1.Z
    C = eps * D @ z1.Z.conj().T
    U = np.block([[A, B], [C, D]])
    det = np.linalg.det(U)
    U = U * np.exp(-1j * np.angle(det) / U.shape[0])
    return GroupElement(U, z1.n, z1.sig)


# ---------------------------------------------------------------------------
# exponential map and friends

def exp_map(b: np.ndarray, t: float, sig: Signature = Signature.COMPACT) -> ChartPoint:
    """Chart coordinates of the geodesic through the origin at time ``t``.

    Applies ``tan`` (compact) or ``tanh`` (noncompact) to the singular values
    of ``t * b``.  Compact geodesics must stay inside the chart:
    ``t * sigma_max(b) < pi/2``, else :class:`ChartSingularity` is raised.
    """
    b = as_complex_matrix(b, "tangent matrix")
    u, s, vh = np.linalg.svd(t * b, full_matrices=False)
    if sig is Signature.COMPACT:
        if s.size and s[0] >= np.pi / 2 - 1e-12:
            raise ChartSingularity(
                f"t * sigma_max = {s[0]:.6g} reaches pi/2; the geodesic crosses "
                "the chart boundary (the cut locus of the origin)"
            )
        vals = np.tan(s)
    else:
        vals = np.tanh(s)
    return ChartPoint((u * vals) @ vh, sig)


def log_map(z: ChartPoint) -> np.ndarray:
    """Tangent matrix ``B`` with ``exp_map(B, 1) = z``.

    Applies ``arctan`` (compact) or ``arctanh`` (noncompact) to the singular
    values of the chart matrix.
    """
    u, s, vh = np.linalg.svd(z.Z, full_matrices=False)
    vals = np.arctan(s) if z.sig is Signature.COMPACT else np.arctanh(s)
    return (u * vals) @ vh


def ambient_exponential(b: np.ndarray, t: float, sig: Signature = Signature.COMPACT) -> np.ndarray:
    """Closed-form ``(n+m) x (n+m)`` exponential of the tangent block matrix.

    The matrix ``[[0, B], [-eps B^+, 0]]`` exponentiates to cosine blocks on
    the diagonal and sine blocks off it (circular for compact, hyperbolic for
    noncompact), evaluated through the singular value decomposition of ``B``.
    """
    b = as_complex_matrix(b, "tangent matrix")
    n, m = b.shape
    r = min(n, m)
    u, s, vh = np.linalg.svd(t * b)  # full matrices
    co, si = (np.cos, np.sin) if sig is Signature.COMPACT else (np.cosh, np.sinh)
    eps = sig.epsilon
    top_left = (u * co(np.concatenate([s, np.zeros(n - r)]))) @ u.conj().T
    bottom_right = (vh.conj().T * co(np.concatenate([s, np.zeros(m - r)]))) @ vh
    ue, vhe = u[:, :r], vh[:r, :]
    top_right = (ue * si(s)) @ vhe
    bottom_left = -eps * (vhe.conj().T * si(s)) @ ue.conj().T
    return np.block([[top_left, top_right], [bottom_left, bottom_right]])


def geodesic_frame(b: np.ndarray, t: float, sig: Signature = Signature.COMPACT) -> np.ndarray:
    """Frame of the geodesic plane at time ``t``, valid across chart crossings.

    Unlike :func:`exp_map` this never fails: the rows are read off the
    ambient exponential, so compact geodesics can be followed through and
    beyond the chart boundary.
    """
    b = as_complex_matrix(b, "tangent matrix")
    n, m = b.shape
    u, s, vh = np.linalg.svd(t * b, full_matrices=False)
    co, si = (np.cos, np.sin) if sig is Signature.COMPACT else (np.cosh, np.sinh)
    # row i of the frame is co-part on the first block and si-part on the
    # second, matching exp_map where the chart is defined
    left = (u * co(s)) @ u.conj().T + (np.eye(n) - u @ u.conj().T)
    right = (u * si(s)) @ vh
    return np.hstack([left, right])


def metric_form(z: ChartPoint, dz: np.ndarray) -> float:
    """Squared length of the chart displacement ``dz`` at ``z``.

    Evaluates ``Tr[(I + eps Z Z^+)^-1 dZ (I + eps Z^+ Z)^-1 dZ^+]``, the
    group-invariant metric normalized to the euclidean one at the origin.
    """
    dz = as_complex_matrix(dz, "displacement")
    if dz.shape != z.Z.shape:
        raise DimensionMismatch("displacement shape must match the chart matrix")
    eps = z.epsilon
    left, right = _gram_factors(z.Z, eps)
    val = np.trace(np.linalg.solve(left, dz) @ np.linalg.solve(right, dz.conj().T))
    return float(val.real)


def push_displacement(g: GroupElement, z: ChartPoint, dz: np.ndarray) -> np.ndarray:
    """Differential of the fractional-linear action applied to ``dz`` at ``z``."""
    A, B, C, D = g.blocks()
    zp = mobius_action(g, z).Z
    denom = C @ z.Z + D
    return (A - zp @ C) @ dz @ np.linalg.inv(denom)


def geodesic_residual(
    b: np.ndarray, t: float, h: float, sig: Signature = Signature.COMPACT
) -> float:
    """Finite-difference defect of the geodesic differential equation.

    Checks ``Z'' = 2 eps Z' Z^+ (I + eps Z Z^+)^-1 Z'`` with central
    differences of step ``h`` around time ``t``; the result is ``O(h^2)``
    small for the exponential-map curve.
    """
    eps = sig.epsilon
    Zm = exp_map(b, t - h, sig).Z
    Z0 = exp_map(b, t, sig).Z
    Zp = exp_map(b, t + h, sig).Z
    zdot = (Zp - Zm) / (2.0 * h)
    zddot = (Zp - 2.0 * Z0 + Zm) / h**2
    left, _ = _gram_factors(Z0, eps)
    rhs = 2.0 * eps * zdot @ Z0.conj().T @ np.linalg.solve(left, zdot)
    return float(np.linalg.norm(zddot - rhs))


# ---------------------------------------------------------------------------
# distance

def _hermitian_angle_matrix(z1: ChartPoint, z2: ChartPoint) -> np.ndarray:
    """Hermitian matrix sharing its spectrum with the angle-cosine matrix."""
    eps = z1.epsilon
    Z1, Z2 = z1.Z, z2.Z
    n = z1.n
    I = np.eye(n)
    g1_m = _psd_power(I + eps * Z1 @ Z1.conj().T, -0.5)
    mid = (I + eps * Z1 @ Z2.conj().T) @ np.linalg.inv(I + eps * Z2 @ Z2.conj().T) @ (
        I + eps * Z2 @ Z1.conj().T
    )
    v = g1_m @ mid @ g1_m
    return 0.5 * (v + v.conj().T)


def _transvected_difference(z1: ChartPoint, z2: ChartPoint) -> np.ndarray | None:
    """Chart coordinates of ``z2`` after the transvection killing ``z1``.

    Returns None when the mixed Gram block is singular (the pair sits on the
    compact cut locus of each other), where this route loses meaning.
    """
    eps = z1.epsilon
    Z1, Z2 = z1.Z, z2.Z
    m = z1.m
    mixed = np.eye(m) + eps * Z1.conj().T @ Z2
    s = np.linalg.svd(mixed, compute_uv=False)
    if s[-1] <= _CUT_SV_REL * max(s[0], 1.0):
        return None
    left, right = _gram_factors(Z1, eps)
    return _psd_power(left, -0.5) @ (Z2 - Z1) @ np.linalg.inv(mixed) @ _psd_power(right, 0.5)


def distance(z1: ChartPoint, z2: ChartPoint) -> tuple[float, AngleSpectrum]:
    """Geodesic distance and the stationary-angle spectrum behind it.

    Three formulas are evaluated: arctan/arctanh of the singular values of
    the transvected difference, arccos/arccosh of the eigenvalues of the
    hermitian quotient, and the complex-logarithm form; they must agree to
    1e-9 and ``d**2`` is the sum of squared angles.  On the compact cut locus
    (singular mixed Gram block) only the quotient route is defined and is
    used alone; right angles keep the distance finite there.
    """
    _check_pair(z1, z2)
    eps = z1.epsilon
    n, m = z1.n, z1.m
    r = min(n, m)

    V = _hermitian_angle_matrix(z1, z2)
    lam = np.linalg.eigvalsh(V)
    if z1.sig is Signature.COMPACT:
        lam_kept = np.clip(np.sort(lam)[:r], 0.0, 1.0)
        theta_v = np.sort(np.arccos(np.sqrt(lam_kept)))
    else:
        lam_kept = np.clip(np.sort(lam)[-r:], 1.0, None)
        theta_v = np.sort(np.arccosh(np.sqrt(lam_kept)))

    Zt = _transvected_difference(z1, z2)
    if Zt is None:
        spectrum = AngleSpectrum(theta_v, z1.sig)
        return float(np.sqrt(np.sum(theta_v**2))), spectrum

    sv = np.linalg.svd(Zt, compute_uv=False)
    if z1.sig is Signature.COMPACT:
        theta_t = np.sort(np.arctan(sv))
        # complex-log form: (1/2i) log((1 + i s)/(1 - i s))
        theta_l = np.sort((np.log((1 + 1j * sv) / (1 - 1j * sv)) / 2j).real)
    else:
        sv = np.clip(sv, 0.0, 1.0 - 1e-300)
        theta_t = np.sort(np.arctanh(sv))
        theta_l = np.sort(0.5 * np.log((1 + sv) / (1 - sv)))

    d_t = float(np.sqrt(np.sum(theta_t**2)))
    d_v = float(np.sqrt(np.sum(theta_v**2)))
    d_l = float(np.sqrt(np.sum(theta_l**2)))
    scale = max(1.0, d_t)
    if max(abs(d_t - d_v), abs(d_t - d_l), abs(d_v - d_l)) > 1e-9 * scale:
        raise InternalInconsistency(
            f"distance formulas disagree: {d_t!r}, {d_v!r}, {d_l!r}"
        )
    return d_t, AngleSpectrum(theta_t, z1.sig)


# ---------------------------------------------------------------------------
# overlaps

def coherent_overlap(z1: ChartPoint, z2: ChartPoint) -> complex:
    """Reproducing-kernel overlap ``det(I + eps Z2 Z1^+)^eps``.

    Coincides with :func:`grassgeo.pluecker.hermitian_product` for the compact
    manifold and with its reciprocal for the noncompact one.
    """
    _check_pair(z1, z2)
    val = hermitian_product(z1, z2)
    return val if z1.sig is Signature.COMPACT else 1.0 / val


def diastasis(z1: ChartPoint, z2: ChartPoint) -> float:
    """Kaehler potential distance ``-2 eps log`` of the normalized overlap.

    Compact: ``log det[(I+Z1Z1^+)(I+Z2Z2^+)] - 2 log |det(I+Z2Z1^+)|``, which
    diverges on the polar divisor; noncompact: the sign flips so the value
    stays nonnegative.
    """
    _check_pair(z1, z2)
    eps = z1.epsilon
    n = z1.n
    I = np.eye(n)
    num = abs(np.linalg.det(I + eps * z2.Z @ z1.Z.conj().T))
    if z1.sig is Signature.COMPACT:
        scale = _frame_scale(z1.extended_frame()) * _frame_scale(z2.extended_frame())
        if num <= DEFAULT_TOL.rel * scale:
            raise InfiniteDiastasis("the pair lies on the polar divisor")
    d1 = abs(np.linalg.det(I + eps * z1.Z @ z1.Z.conj().T))
    d2 = abs(np.linalg.det(I + eps * z2.Z @ z2.Z.conj().T))
    val = -2.0 * eps * (np.log(num) - 0.5 * (np.log(d1) + np.log(d2)))
    return float(val)


def embedded_vs_intrinsic(z1: ChartPoint, z2: ChartPoint) -> tuple[float, float]:
    """Intrinsic distance and the shorter embedded chordal distance.

    Returns ``(delta, s)`` with ``delta**2`` the sum of squared angles and
    ``co(s)`` the product of angle cosines; ``delta >= s`` always, with
    equality when at most one angle is nonzero.
    """
    spectrum = stationary_angles(z1, z2)
    delta = float(np.sqrt(np.sum(spectrum.theta**2)))
    prod = float(np.prod(spectrum.cos_like()))
    if z1.sig is Signature.COMPACT:
        s = float(np.arccos(np.clip(prod, 0.0, 1.0)))
    else:
        s = float(np.arccosh(np.clip(prod, 1.0, None)))
    return delta, s
