"""Cut-locus predicate, conjugate-locus classification and flat-direction
singular times.

All predicates are taken at the base plane spanned by the first ``n``
coordinate vectors; conjugacy at a general base point reduces to this one by
the group action.  A plane is a cut point exactly when some stationary angle
with the base equals ``pi/2``; a conjugate point either has an angle equal to
``0`` or ``pi/2`` (beyond the ``n - m`` angles that vanish structurally when
``n > m``) or has two coinciding angles.

Along a geodesic with diagonal tangent ``diag(h)`` the singular times of the
exponential map are dictated by the root system of the symmetric pair: the
reciprocal gaps ``pi/|h_p +- h_q|`` produce coinciding angles, the times
``pi/(2|h_p|)`` produce right angles (these are the cut times), and for
``n != m`` the times ``pi/|h_p|`` contribute with multiplicity ``2|m - n|``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .angles import principal_angles
from .core import (
    ChartPoint,
    DegenerateVector,
    DimensionMismatch,
    InternalInconsistency,
    Signature,
    Tolerance,
    _tol,
    as_complex_matrix,
    base_frame,
)
from .pluecker import in_polar_divisor

# Angle coincidence/degeneracy band.  Conjugacy is a measure-zero condition;
# classification within this band of a boundary is tolerance-dependent.
ANGLE_BAND = 1e-7


class ConjugateKind(enum.Enum):
    NOT_CONJUGATE = "not_conjugate"
    W_TYPE = "w_type"
    I_TYPE = "i_type"
    BOTH = "both"


@dataclass(frozen=True)
class ConjugateClass:
    kind: ConjugateKind
    zero_angles: int
    right_angles: int
    coincidences: int


@dataclass(frozen=True)
class ConjugateTime:
    t: float
    multiplicity: int
    family: str  # "t1", "t2" or "t3"


@dataclass(frozen=True)
class CartanVector:
    """Coefficients of a unit-norm flat direction (a diagonal tangent)."""

    h: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.h, dtype=float).ravel()
        if h.size == 0:
            raise DimensionMismatch("flat directions need at least one coefficient")
        norm = np.linalg.norm(h)
        if abs(norm - 1.0) > 1e-6:
            raise ValueError(f"coefficients must be normalized to unit norm, got {norm:.8g}")
        object.__setattr__(self, "h", h)

    @classmethod
    def normalized(cls, values) -> "CartanVector":
        h = np.asarray(values, dtype=float).ravel()
        norm = np.linalg.norm(h)
        if norm == 0.0:
            raise DegenerateVector("cannot normalize the zero vector")
        return cls(h / norm)

    @property
    def r(self) -> int:
        return self.h.size


def _as_frame(z) -> np.ndarray:
    if isinstance(z, ChartPoint):
        return z.extended_frame()
    return as_complex_matrix(z, "frame")


# ---------------------------------------------------------------------------
# cut locus

def in_cut_locus(z, tol: Tolerance | None = None) -> bool:
    """Whether a plane lies in the cut locus of the base plane.

    Chart points are never cut points of the origin of their own chart (the
    chart is the maximal normal neighbourhood), and the noncompact manifold
    has no cut points at all.  For frames, the zero-pairing test and the
    product of angle cosines must agree; they are the same invariant computed
    by two independent routes (pivoted determinants vs singular values).
    """
    tol = _tol(tol)
    if isinstance(z, ChartPoint):
        if z.sig is Signature.NONCOMPACT:
            return False
        f = z.extended_frame()
    else:
        f = as_complex_matrix(z, "frame")
    n, N = f.shape
    if not 1 <= n < N:
        raise DimensionMismatch("frames need 1 <= n < N")
    base = base_frame(n, N)
    det_test = in_polar_divisor(f, base, tol)
    theta = principal_angles(f, base, Signature.COMPACT, tol)
    prod_test = bool(np.prod(np.cos(theta)) <= tol.rel)
    if det_test != prod_test:
        raise InternalInconsistency(
            "cut-locus tests disagree (pairing vs angle product); the plane is "
            "too close to the locus to decide"
        )
    return det_test


# ---------------------------------------------------------------------------
# conjugate locus in the manifold

def classify_conjugate(z, tol: Tolerance | None = None) -> ConjugateClass:
    """Conjugate-point classification of a plane relative to the base.

    Counts, among the ``r = min(n, m)`` meaningful stationary angles with the
    base plane (the ``max(0, n - m)`` structurally zero angles are ignored):
    zero angles, right angles, and coincidences of adjacent angles.  A zero or
    right angle signals the incidence-variety part of the conjugate locus,
    a coincidence the equal-angle part.
    """
    tol = _tol(tol)
    f = _as_frame(z)
    n, N = f.shape
    m = N - n
    base = base_frame(n, N)
    theta = np.sort(principal_angles(f, base, Signature.COMPACT, tol))
    structural = max(0, n - m)
    meaningful = theta[structural:]
    zero_angles = int(np.count_nonzero(meaningful <= ANGLE_BAND))
    right_angles = int(np.count_nonzero(meaningful >= np.pi / 2 - ANGLE_BAND))
    coincidences = int(np.count_nonzero(np.diff(meaningful) <= ANGLE_BAND))
    w_type = zero_angles + right_angles >= 1
    i_type = coincidences >= 1
    if w_type and i_type:
        kind = ConjugateKind.BOTH
    elif w_type:
        kind = ConjugateKind.W_TYPE
    elif i_type:
        kind = ConjugateKind.I_TYPE
    else:
        kind = ConjugateKind.NOT_CONJUGATE
    return ConjugateClass(kind, zero_angles, right_angles, coincidences)


# ---------------------------------------------------------------------------
# singular times in the tangent space

def tangent_conjugate_times(
    h: CartanVector, n: int, m: int, lambda_max: int = 1
) -> list[ConjugateTime]:
    """Positive singular times of the exponential along ``diag(h)``.

    Families: ``pi * k / |h_p +- h_q|`` with multiplicity 2 for each pair and
    sign, ``pi * k / (2 |h_p|)`` with multiplicity 1, and, when ``n != m``,
    ``pi * k / |h_p|`` with multiplicity ``2 |m - n|`` (k = 1 .. lambda_max).
    Coinciding times are merged with multiplicities summed; the reported
    family is the first contributor in the order t1, t2, t3.  Vanishing
    coefficients are rejected, and pairs with ``h_p = h_q`` contribute no
    time from the difference root.
    """
    r = min(n, m)
    if h.r != r:
        raise DimensionMismatch(f"flat direction has {h.r} coefficients, expected {r}")
    if np.min(np.abs(h.h)) < 1e-12:
        raise DegenerateVector(
            "singular-time formulas divide by the coefficients; zero entries "
            "are rejected rather than guessed around"
        )
    if lambda_max < 1:
        raise ValueError("lambda_max must be at least 1")
    raw: list[tuple[float, int, str]] = []
    hv = h.h
    for k in range(1, lambda_max + 1):
        for p in range(r):
            for q in range(p + 1, r):
                for sign in (1.0, -1.0):
                    gap = abs(hv[p] + sign * hv[q])
                    if gap > 1e-12:
                        raw.append((k * np.pi / gap, 2, "t1"))
            raw.append((k * np.pi / (2 * abs(hv[p])), 1, "t2"))
            if n != m:
                raw.append((k * np.pi / abs(hv[p]), 2 * abs(m - n), "t3"))
    family_order = {"t1": 0, "t2": 1, "t3": 2}
    raw.sort(key=lambda item: (item[0], family_order[item[2]]))
    merged: list[ConjugateTime] = []
    for t, mult, family in raw:
        if merged and abs(t - merged[-1].t) <= 1e-12 * max(1.0, t):
            prev = merged[-1]
            merged[-1] = ConjugateTime(prev.t, prev.multiplicity + mult, prev.family)
        else:
            merged.append(ConjugateTime(t, mult, family))
    return merged


def diagonal_geodesic_frame(
    h, t: float, n: int, m: int, sig: Signature = Signature.COMPACT
) -> np.ndarray:
    """Frame of the geodesic with diagonal tangent at time ``t``.

    Row ``i`` is ``co(t h_i) e_i + si(t h_i) e_{n+i}`` for ``i <= r`` and
    ``e_i`` beyond; being a frame, it stays valid when the compact geodesic
    crosses chart boundaries (the continuation that chart changes realize).
    """
    hv = h.h if isinstance(h, CartanVector) else np.asarray(h, dtype=float).ravel()
    r = min(n, m)
    if hv.size != r:
        raise DimensionMismatch(f"need {r} diagonal entries, got {hv.size}")
    N = n + m
    co, si = (np.cos, np.sin) if sig is Signature.COMPACT else (np.cosh, np.sinh)
    f = np.zeros((n, N), dtype=complex)
    for i in range(n):
        if i < r:
            f[i, i] = co(t * hv[i])
            f[i, n + i] = si(t * hv[i])
        else:
            f[i, i] = 1.0
    return f


def conjugate_roundtrip_check(h: CartanVector, n: int, m: int) -> bool:
    """Exponentiate the first singular times and confirm their classification.

    The smallest pair-gap time must land on a plane with two coinciding
    angles, and the smallest half-reciprocal time on a plane with a right
    angle.  Requires distinct nonzero coefficients.
    """
    r = min(n, m)
    if h.r != r:
        raise DimensionMismatch(f"flat direction has {h.r} coefficients, expected {r}")
    hv = np.abs(h.h)
    if np.min(hv) < 1e-9:
        raise DegenerateVector("coefficients must be nonzero")
    if r >= 2 and np.min(np.abs(np.subtract.outer(hv, hv))[~np.eye(r, dtype=bool)]) < 1e-9:
        raise DegenerateVector("coefficients must be distinct in absolute value")

    times = [ct.t for ct in tangent_conjugate_times(h, n, m, lambda_max=1)]

    def listed(t: float) -> bool:
        return any(abs(t - s) <= 1e-9 * max(1.0, t) for s in times)

    ok = True
    if r >= 2:
        gaps = [abs(h.h[p] + sign * h.h[q])
                for p in range(r) for q in range(p + 1, r) for sign in (1.0, -1.0)]
        t1_min = np.pi / max(gaps)
        f1 = diagonal_geodesic_frame(h, t1_min, n, m)
        ok = ok and listed(t1_min) and classify_conjugate(f1).coincidences >= 1
    t2_min = np.pi / (2.0 * np.max(hv))
    f2 = diagonal_geodesic_frame(h, t2_min, n, m)
    ok = ok and listed(t2_min) and classify_conjugate(f2).right_angles >= 1
    return bool(ok)


# ---------------------------------------------------------------------------
# restricted roots

def _unit_matrix(N: int, i: int, j: int) -> np.ndarray:
    M = np.zeros((N, N), dtype=complex)
    M[i, j] = 1.0
    return M


def flat_direction_matrix(h, n: int, m: int) -> np.ndarray:
    """Ambient antisymmetric matrix of the flat direction ``diag(h)``."""
    hv = h.h if isinstance(h, CartanVector) else np.asarray(h, dtype=float).ravel()
    N = n + m
    H = np.zeros((N, N), dtype=complex)
    for i, hi in enumerate(hv):
        H[i, n + i] = hi
        H[n + i, i] = -hi
    return H


def root_system(n: int, m: int, h) -> list[tuple[str, np.ndarray, complex]]:
    """All root vectors with their expected eigenvalues under ``ad(H)``.

    Returns triples ``(family_label, X, lam)`` with ``[H, X] = lam X``.  The
    pair families come in antisymmetric and symmetric flavours (two vectors
    per root), the short roots ``+-i h_a`` have ``2 |m - n|`` vectors each,
    and the long roots ``+-2i h_a`` one each.
    """
    hv = h.h if isinstance(h, CartanVector) else np.asarray(h, dtype=float).ravel()
    r = min(n, m)
    if hv.size != r:
        raise DimensionMismatch(f"need {r} coefficients, got {hv.size}")
    N = n + m
    E = lambda i, j: _unit_matrix(N, i, j)
    D = lambda i, j: E(i, j) - E(j, i)
    S = lambda i, j: E(i, j) + E(j, i)

    out: list[tuple[str, np.ndarray, complex]] = []
    for label, F in (("antisym", D), ("sym", S)):
        for a in range(r):
            for b in range(r):
                if a == b:
                    continue
                f_ab, f_nn = F(a, b), F(n + a, n + b)
                f_na, f_an = F(n + a, b), F(a, n + b)
                out.append((f"pair+{label}", 1j * (f_ab + f_nn) - f_na + f_an,
                            1j * (hv[a] - hv[b])))
                out.append((f"pair-{label}", -1j * (f_ab + f_nn) - f_na + f_an,
                            1j * (hv[b] - hv[a])))
                out.append((f"sum-{label}", 1j * (f_ab - f_nn) + f_na + f_an,
                            -1j * (hv[a] + hv[b])))
                out.append((f"sum+{label}", -1j * (f_ab - f_nn) + f_na + f_an,
                            1j * (hv[a] + hv[b])))
    for a in range(r):
        s_aa, s_nn = S(a, a), S(n + a, n + a)
        s_na, s_an = S(n + a, a), S(a, n + a)
        out.append(("long+", 0.5 * (-1j * (s_aa - s_nn) + s_na + s_an), 2j * hv[a]))
        out.append(("long-", 0.5 * (1j * (s_aa - s_nn) + s_na + s_an), -2j * hv[a]))
    if n < m:
        for a in range(r):
            for b in range(m - n):
                col = 2 * n + b
                out.append(("short+row", E(n + a, col) - 1j * E(a, col), 1j * hv[a]))
                out.append(("short-row", E(n + a, col) + 1j * E(a, col), -1j * hv[a]))
                out.append(("short+col", E(col, a) + 1j * E(col, n + a), 1j * hv[a]))
                out.append(("short-col", E(col, a) - 1j * E(col, n + a), -1j * hv[a]))
    elif n > m:
        for a in range(r):
            for b in range(n - m):
                row = m + b
                out.append(("short+row", E(n + a, row) - 1j * E(a, row), 1j * hv[a]))
                out.append(("short-row", E(n + a, row) + 1j * E(a, row), -1j * hv[a]))
                out.append(("short+col", E(row, a) + 1j * E(row, n + a), 1j * hv[a]))
                out.append(("short-col", E(row, a) - 1j * E(row, n + a), -1j * hv[a]))
    return out


@dataclass(frozen=True)
class RootVerification:
    ok: bool
    max_residual: float
    failures: tuple[str, ...]
    multiplicities: dict


def restricted_roots_verify(
    n: int, m: int, h: CartanVector, tol: Tolerance | None = None
) -> RootVerification:
    """Verify the commutation relations and multiplicities of the root system.

    Checks ``[H, X] = lam X`` for every constructed root vector, groups the
    vectors by root value and compares the rank of each group against the
    expected multiplicity (2 for pair roots, ``2 |m - n|`` for short roots,
    1 for long roots), and confirms that the rank of the flat plus the
    positive multiplicities accounts for the full tangent dimension
    ``2 n m``.  Degenerate coefficient choices (coinciding root values) merge
    groups; expected multiplicities are summed accordingly.
    """
    tol = _tol(tol)
    r = min(n, m)
    hv = h.h
    H = flat_direction_matrix(h, n, m)
    triples = root_system(n, m, h)
    failures: list[str] = []
    max_res = 0.0

    def key_of(value: float) -> int:
        # root values are purely imaginary; bucket the imaginary part
        return int(round(value / 1e-9))

    groups: dict[int, list[np.ndarray]] = {}
    keys: dict[int, float] = {}
    for label, X, lam in triples:
        res = float(np.abs(H @ X - X @ H - lam * X).max())
        max_res = max(max_res, res)
        if res > max(tol.rel, 1e-12) * max(1.0, float(np.abs(X).max())):
            failures.append(f"{label}: commutator residual {res:.3e} for root {lam:.6g}")
        k = key_of(lam.imag)
        groups.setdefault(k, []).append(X.ravel())
        keys[k] = lam.imag

    # Expected multiplicity per distinct root value: 2 from each pair root,
    # 2|m - n| from each short root, 1 from each long root.  The ordered-pair
    # enumeration above lists each pair-root space twice (the reversed pair
    # reproduces the same vectors up to sign), so expectations are accumulated
    # here per root instance, not per listed vector.
    expected: dict[int, int] = {}

    def expect(value: float, mult: int) -> None:
        expected[key_of(value)] = expected.get(key_of(value), 0) + mult

    for a in range(r):
        for b in range(a + 1, r):
            expect(hv[a] - hv[b], 2)
            expect(hv[b] - hv[a], 2)
            expect(hv[a] + hv[b], 2)
            expect(-(hv[a] + hv[b]), 2)
    for a in range(r):
        expect(2 * hv[a], 1)
        expect(-2 * hv[a], 1)
        if n != m:
            expect(hv[a], 2 * abs(m - n))
            expect(-hv[a], 2 * abs(m - n))

    multiplicities: dict[float, tuple[int, int]] = {}
    positive_total = 0
    for k, vecs in groups.items():
        rank = int(np.linalg.matrix_rank(np.stack(vecs), tol=1e-9))
        want = expected.get(k, 0)
        multiplicities[keys[k]] = (rank, want)
        if rank != want:
            failures.append(
                f"root {keys[k]:.6g}i: root space dimension {rank}, expected {want}"
            )
        if keys[k] > 0:
            positive_total += rank

    if r + positive_total != 2 * n * m:
        failures.append(
            f"flat rank {r} plus positive multiplicities {positive_total} "
            f"does not reach the tangent dimension {2 * n * m}"
        )
    return RootVerification(not failures, max_res, tuple(failures), multiplicities)
