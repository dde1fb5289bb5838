"""Minor coordinates, the determinant pairing, charts and polar divisors.

The minor-coordinate vector of an ``n x N`` frame lists all ``n x n`` minors
in lexicographic order of their column sets.  Under the second-argument-linear
scalar product, the projective pairing of two planes equals the determinant
pairing of their frames,

    ((z1, z2)) = det(F2 @ J @ F1^+) = sum_I conj(P1_I) * P2_I,

with ``J = diag(I_n, epsilon I_m)``; for chart points this is
``det(I + epsilon Z2 Z1^+)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import (
    ChartPoint,
    DimensionMismatch,
    InternalInconsistency,
    OutsideChart,
    RankDeficient,
    Signature,
    SignatureUnsupported,
    Tolerance,
    _tol,
    as_complex_matrix,
    numerical_rank,
    perp_basis,
    signature_metric,
)
from .schubert import SchubertSymbol


@dataclass(frozen=True)
class PlueckerCoords:
    """All ``n x n`` minors of a frame, ordered lexicographically by column set."""

    N: int
    n: int
    coords: np.ndarray

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=complex)
        expected = _binomial(self.N, self.n)
        if coords.shape != (expected,):
            raise DimensionMismatch(
                f"expected {expected} coordinates for ({self.N}, {self.n}), "
                f"got shape {coords.shape}"
            )
        object.__setattr__(self, "coords", coords)

    def index_sets(self) -> list[tuple[int, ...]]:
        """One-based column sets in coordinate order."""
        return [tuple(j + 1 for j in c) for c in itertools.combinations(range(self.N), self.n)]

    def get(self, symbol) -> complex:
        cols = tuple(sorted(int(s) for s in symbol))
        idx = list(itertools.combinations(range(1, self.N + 1), self.n)).index(cols)
        return complex(self.coords[idx])


def _binomial(N: int, n: int) -> int:
    from math import comb

    return comb(N, n)


def _frame_scale(f: np.ndarray) -> float:
    """Hadamard bound scale: product of euclidean row norms."""
    return float(np.prod(np.linalg.norm(f, axis=1)))


def frame_pairing(f1: np.ndarray, f2: np.ndarray, sig: Signature = Signature.COMPACT) -> complex:
    """Determinant pairing ``((f1, f2)) = det(f2 @ J @ f1^+)`` of two frames."""
    f1 = as_complex_matrix(f1, "first frame")
    f2 = as_complex_matrix(f2, "second frame")
    if f1.shape != f2.shape:
        raise DimensionMismatch(f"frames must share a shape, got {f1.shape} vs {f2.shape}")
    n, N = f1.shape
    J = signature_metric(n, N - n, sig)
    return complex(np.linalg.det(f2 @ J @ f1.conj().T))


# ---------------------------------------------------------------------------
# minor coordinates

def pluecker_coords(f: np.ndarray, tol: Tolerance | None = None) -> PlueckerCoords:
    """Minor-coordinate vector of a full-row-rank frame."""
    tol = _tol(tol)
    f = as_complex_matrix(f, "frame")
    n, N = f.shape
    if n > N:
        raise DimensionMismatch("frame has more rows than columns")
    if numerical_rank(f, tol) < n:
        raise RankDeficient(f"frame of shape {f.shape} is rank deficient")
    combos = list(itertools.combinations(range(N), n))
    blocks = np.stack([f[:, list(c)] for c in combos])
    return PlueckerCoords(N, n, np.linalg.det(blocks))


def pluecker_relations_residual(p: PlueckerCoords) -> float:
    """Largest residual of the quadratic decomposability relations.

    For every column set ``J`` of size ``n+1`` and ``H`` of size ``n-1`` the
    alternating sum over ``i in J`` of ``P(J \\ i) * P(H + i)`` must vanish;
    the sign of a term is fixed by the parities of ``#{j in J : j < i}`` and
    ``#{h in H : h < i}``.  Returns the maximum absolute value over all
    relations (zero, at tolerance, exactly for decomposable vectors).
    """
    N, n = p.N, p.n
    index = {c: k for k, c in enumerate(itertools.combinations(range(1, N + 1), n))}
    coords = p.coords
    if n == 1 or n == N:
        return 0.0
    worst = 0.0
    for J in itertools.combinations(range(1, N + 1), n + 1):
        J_set = set(J)
        for H in itertools.combinations(range(1, N + 1), n - 1):
            H_set = set(H)
            acc = 0.0 + 0.0j
            for i in J:
                if i in H_set:
                    continue
                j_below = sum(1 for j in J if j < i)
                h_below = sum(1 for h in H if h < i)
                sign = 1.0 if (j_below - h_below) % 2 == 0 else -1.0
                left = tuple(sorted(J_set - {i}))
                right = tuple(sorted(H + (i,)))
                acc += sign * coords[index[left]] * coords[index[right]]
            worst = max(worst, abs(acc))
    return worst


# ---------------------------------------------------------------------------
# chart-level pairings

def _check_pair(z1: ChartPoint, z2: ChartPoint) -> None:
    if z1.Z.shape != z2.Z.shape:
        raise DimensionMismatch(
            f"chart matrices must share a shape, got {z1.Z.shape} vs {z2.Z.shape}"
        )
    if z1.sig is not z2.sig:
        raise SignatureUnsupported("chart points carry different signatures")


def hermitian_product(z1: ChartPoint, z2: ChartPoint) -> complex:
    """Pairing ``det(I + epsilon Z2 Z1^+)`` of two chart points.

    Equals the projective pairing of the minor-coordinate vectors of the
    extended frames (the determinant pairing identity).
    """
    _check_pair(z1, z2)
    eps = z1.epsilon
    n = z1.n
    return complex(np.linalg.det(np.eye(n) + eps * z2.Z @ z1.Z.conj().T))


def complement_identity_residual(z1: ChartPoint, z2: ChartPoint) -> float:
    """Defect of ``det(I_n + eps Z1 Z2^+) = conj(det(I_m + eps Z1^+ Z2))``.

    Both sides express the pairing of the orthocomplement planes; the residual
    vanishes at rounding level for every valid pair.
    """
    _check_pair(z1, z2)
    eps = z1.epsilon
    n, m = z1.n, z1.m
    lhs = np.linalg.det(np.eye(n) + eps * z1.Z @ z2.Z.conj().T)
    rhs = np.conj(np.linalg.det(np.eye(m) + eps * z1.Z.conj().T @ z2.Z))
    return float(abs(lhs - rhs))


def orthogonal_complement(z: ChartPoint) -> np.ndarray:
    """Frame ``(-Z^+ | I_m)`` of the orthocomplement plane (compact only)."""
    if z.sig is not Signature.COMPACT:
        raise SignatureUnsupported("orthocomplements use the definite scalar product")
    return np.hstack([-z.Z.conj().T, np.eye(z.m, dtype=complex)])


def chart_transition(f: np.ndarray, sigma: SchubertSymbol, tol: Tolerance | None = None) -> np.ndarray:
    """Chart coordinates of ``row span(f)`` in the chart of ``sigma``.

    Normalizes the pivot minor to the identity and returns the ``n x m``
    matrix of non-pivot columns in increasing column order.  Raises
    :class:`OutsideChart` when the pivot minor is numerically singular.
    """
    tol = _tol(tol)
    f = as_complex_matrix(f, "frame")
    n, N = f.shape
    sigma.validate_ambient(N)
    if len(sigma) != n:
        raise DimensionMismatch("symbol length must match the frame rank")
    minor = f[:, sigma.columns()]
    if numerical_rank(minor, tol) < n:
        raise OutsideChart(f"pivot minor of {tuple(sigma)} is singular for this plane")
    reduced = np.linalg.solve(minor, f)
    return reduced[:, sigma.complement(N)]


def in_polar_divisor(
    z: np.ndarray, base: np.ndarray, tol: Tolerance | None = None
) -> bool:
    """Whether ``z`` pairs to zero with ``base`` (compact pairing).

    Two independent tests run: the determinant pairing against the Hadamard
    scale, and ``dim(span(z) ^ base-orthocomplement) >= 1``.  They must agree;
    disagreement signals an ill-conditioned input.
    """
    tol = _tol(tol)
    z = as_complex_matrix(z, "frame")
    base = as_complex_matrix(base, "base frame")
    if z.shape != base.shape:
        raise DimensionMismatch(f"frames must share a shape, got {z.shape} vs {base.shape}")
    pairing = frame_pairing(z, base, Signature.COMPACT)
    scale = _frame_scale(z) * _frame_scale(base)
    det_test = abs(pairing) <= tol.rel * scale
    rank_test = intersection_of_complement(z, base, tol) >= 1
    if det_test != rank_test:
        raise InternalInconsistency(
            "polar-divisor tests disagree (determinant vs intersection); "
            "the input is too close to the divisor to decide"
        )
    return det_test


def intersection_of_complement(z: np.ndarray, base: np.ndarray, tol: Tolerance | None = None) -> int:
    """Dimension of ``span(z) ^ span(base)-orthocomplement``."""
    from .core import intersection_dim

    return intersection_dim(z, perp_basis(base, tol), tol)
