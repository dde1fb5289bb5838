"""Schubert symbols, cells, echelon forms, incidence varieties and counts.

Cells are indexed by strictly increasing ``n``-subsets of ``{1..N}`` (written
``sigma``) or equivalently by the monotone offset sequence
``omega(i) = sigma(i) - i``.  Symbols are ordered lexicographically; the open
cell of a frame is the lexicographically *last* symbol whose pivot minor is
nonsingular, which corresponds to an echelon form in which the pivot of each
row is its rightmost nonzero entry.

Incidence conditions are always taken against the standard coordinate flag
``C^1 subset C^2 subset ...``; a congruence moves any other flag onto it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DimensionMismatch,
    InternalInconsistency,
    RankDeficient,
    Tolerance,
    _tol,
    as_complex_matrix,
    coordinate_plane,
    intersection_dim,
)


@dataclass(frozen=True)
class SchubertSymbol:
    """A strictly increasing ``n``-subset of ``{1..N}`` labelling a cell."""

    sigma: tuple[int, ...]

    def __post_init__(self):
        sigma = tuple(int(s) for s in self.sigma)
        if len(sigma) == 0:
            raise ValueError("a symbol needs at least one entry")
        if any(b <= a for a, b in zip(sigma, sigma[1:])):
            raise ValueError(f"symbol entries must be strictly increasing, got {sigma}")
        if sigma[0] < 1:
            raise ValueError(f"symbol entries start at 1, got {sigma}")
        object.__setattr__(self, "sigma", sigma)

    def __len__(self) -> int:
        return len(self.sigma)

    def __iter__(self):
        return iter(self.sigma)

    @property
    def omega(self) -> tuple[int, ...]:
        """Offsets ``sigma(i) - i``; monotone by construction."""
        return tuple(s - i for i, s in enumerate(self.sigma, start=1))

    def dimension(self) -> int:
        return sum(self.omega)

    @classmethod
    def from_omega(cls, omega) -> "SchubertSymbol":
        return cls(tuple(int(w) + i for i, w in enumerate(omega, start=1)))

    def columns(self) -> list[int]:
        """Zero-based pivot column indices."""
        return [s - 1 for s in self.sigma]

    def complement(self, N: int) -> list[int]:
        """Zero-based non-pivot columns in increasing order."""
        pivots = set(self.columns())
        return [j for j in range(N) if j not in pivots]

    def validate_ambient(self, N: int) -> None:
        if self.sigma[-1] > N:
            raise DimensionMismatch(
                f"symbol {self.sigma} does not fit in an ambient space of dimension {N}"
            )


@dataclass(frozen=True)
class JumpSequence:
    """Monotone offset sequence together with its jump positions.

    ``jumps`` lists the row indices ``0 = i_0 < i_1 < ... < i_l = n`` after
    which the offset strictly increases; incidence tests only need the jump
    rows.
    """

    omega: tuple[int, ...]
    jumps: tuple[int, ...]

    @classmethod
    def from_omega(cls, omega) -> "JumpSequence":
        om = tuple(int(w) for w in omega)
        if len(om) == 0:
            raise ValueError("offset sequence may not be empty")
        if om[0] < 0 or any(b < a for a, b in zip(om, om[1:])):
            raise ValueError(f"offsets must be non-negative and monotone, got {om}")
        n = len(om)
        jumps = [0]
        for i in range(1, n):
            if om[i] > om[i - 1]:
                jumps.append(i)
        jumps.append(n)
        return cls(om, tuple(jumps))

    @property
    def n(self) -> int:
        return len(self.omega)

    def symbol(self) -> SchubertSymbol:
        return SchubertSymbol.from_omega(self.omega)

    def conditions(self) -> list[tuple[int, int]]:
        """Pairs ``(p, l)`` meaning ``dim(X ^ C^p) >= l``, one per jump."""
        sigma = self.symbol().sigma
        return [(sigma[i - 1], i) for i in self.jumps[1:]]


# ---------------------------------------------------------------------------
# enumeration and counting

def enumerate_symbols(n: int, N: int) -> list[SchubertSymbol]:
    """All symbols of ``n``-subsets of ``{1..N}`` in lexicographic order."""
    if not 1 <= n <= N:
        raise DimensionMismatch(f"need 1 <= n <= N, got n={n}, N={N}")
    return [SchubertSymbol(c) for c in itertools.combinations(range(1, N + 1), n)]


def cell_dimension(symbol: SchubertSymbol) -> int:
    """Complex dimension of the open cell labelled by ``symbol``."""
    return symbol.dimension()


def characteristic_counts(n: int, m: int):
    """Binomial count, cell count, Euler characteristic and Betti numbers.

    All cells are even-dimensional, so the Euler characteristic equals the
    number of cells and the Betti numbers count symbols by cell dimension.
    Returns ``(binomial, cell_count, euler, poincare)`` with
    ``poincare[k] = #{symbols of dimension k}``.
    """
    if n < 1 or m < 1:
        raise DimensionMismatch("need n, m >= 1")
    N = n + m
    binom = math.comb(N, n)
    symbols = enumerate_symbols(n, N)
    poincare = [0] * (n * m + 1)
    for s in symbols:
        poincare[s.dimension()] += 1
    cell_count = len(symbols)
    euler = cell_count
    if not (binom == cell_count == euler == sum(poincare)):
        raise InternalInconsistency("cell bookkeeping failed")
    return binom, cell_count, euler, tuple(poincare)


# ---------------------------------------------------------------------------
# echelon form and membership

def echelon_form(f: np.ndarray, tol: Tolerance | None = None):
    """Open-cell symbol of a frame and its reduced echelon representative.

    Pivot columns are selected greedily from the right, so the pivot of each
    row of the reduced frame is its rightmost nonzero entry (entries to the
    right of every pivot, and the rest of each pivot column, vanish).  Worked
    2x4 example: the frame ``[[1,0,0,1],[0,1,1,0]]`` has symbol ``{3,4}`` and
    reduced form ``[[0,1,1,0],[1,0,0,1]]``.

    Returns ``(symbol, reduced_frame)``; the reduced frame spans the input.
    """
    tol = _tol(tol)
    f = as_complex_matrix(f, "frame")
    n, N = f.shape
    s = np.linalg.svd(f, compute_uv=False)
    if s[0] == 0.0 or np.count_nonzero(s > tol.rank_cut(f.shape, s[0])) < n:
        raise RankDeficient(f"frame of shape {f.shape} is rank deficient")
    cut = tol.rank_cut(f.shape, s[0])

    # Greedy scan from the rightmost column: a column joins the pivot set
    # when it is independent (at tolerance) of the pivots found so far.
    pivots: list[int] = []
    basis = np.zeros((n, 0), dtype=complex)
    for j in range(N - 1, -1, -1):
        col = f[:, j]
        resid = col - basis @ (basis.conj().T @ col)
        if np.linalg.norm(resid) > cut:
            pivots.append(j)
            basis = np.hstack([basis, (resid / np.linalg.norm(resid))[:, None]])
            if len(pivots) == n:
                break
    if len(pivots) < n:
        raise RankDeficient("could not locate a full pivot set")
    pivots = sorted(pivots)

    symbol = SchubertSymbol(tuple(p + 1 for p in pivots))
    reduced = np.linalg.solve(f[:, pivots], f)
    # The pivot minor normalization forces exact zeros in the structural
    # positions; scrub the rounding noise that survives there.
    for i, p in enumerate(pivots):
        reduced[i, p + 1 :] = 0.0
    for i, p in enumerate(pivots):
        reduced[:, p] = 0.0
        reduced[i, p] = 1.0
    return symbol, reduced


def in_open_cell(f: np.ndarray, symbol: SchubertSymbol, tol: Tolerance | None = None) -> bool:
    """Whether ``f`` lies in the open cell of ``symbol``.

    True when the pivot minor of ``symbol`` is nonsingular while the minors of
    all lexicographically later symbols vanish.
    """
    tol = _tol(tol)
    f = as_complex_matrix(f, "frame")
    n, N = f.shape
    symbol.validate_ambient(N)
    if len(symbol) != n:
        raise DimensionMismatch("symbol length must match the frame rank")
    s0 = np.linalg.svd(f, compute_uv=False)[0]
    scale = max(s0, 1.0) ** n
    det_cut = tol.rel * scale
    own = np.linalg.det(f[:, symbol.columns()])
    if abs(own) <= det_cut:
        return False
    for other in enumerate_symbols(n, N):
        if other.sigma <= symbol.sigma:
            continue
        if abs(np.linalg.det(f[:, other.columns()])) > det_cut:
            return False
    return True


def schubert_membership(
    f: np.ndarray, omega: JumpSequence, tol: Tolerance | None = None
) -> bool:
    """Whether a frame satisfies every jump condition of the closed variety."""
    tol = _tol(tol)
    f = as_complex_matrix(f, "frame")
    n, N = f.shape
    if omega.n != n:
        raise DimensionMismatch(
            f"offset sequence of length {omega.n} does not match a rank-{n} frame"
        )
    if omega.omega[-1] > N - n:
        raise DimensionMismatch("offsets exceed the ambient codimension")
    for p, l in omega.conditions():
        if p >= N:
            continue  # dim(X ^ C^N) = n >= l always holds
        if intersection_dim(f, coordinate_plane(p, N), tol) < l:
            return False
    return True


def intersects_coordinate_plane(
    f: np.ndarray, p: int, l: int, tol: Tolerance | None = None
) -> bool:
    """Whether ``dim(row span(f) ^ C^p) >= l``, cross-checked two ways.

    The direct rank test and the equivalent closed-cell membership with
    offsets ``(p-l, ..., p-l, m, ..., m)`` are both evaluated and must agree.
    Planes with ``l <= p - m`` intersect automatically by dimension count, and
    ``l > min(n, p)`` is impossible.
    """
    tol = _tol(tol)
    f = as_complex_matrix(f, "frame")
    n, N = f.shape
    m = N - n
    if not 1 <= p <= N - 1:
        raise DimensionMismatch(f"need 1 <= p <= {N - 1}, got {p}")
    if l < 1:
        raise DimensionMismatch(f"need l >= 1, got {l}")
    if l > min(n, p):
        return False
    if l <= p - m:
        return True
    direct = intersection_dim(f, coordinate_plane(p, N), tol) >= l
    omega = JumpSequence.from_omega([p - l] * l + [m] * (n - l))
    via_cells = schubert_membership(f, omega, tol)
    if direct != via_cells:
        raise InternalInconsistency(
            f"incidence tests disagree for p={p}, l={l}: rank says {direct}, "
            f"cells say {via_cells}"
        )
    return direct


# ---------------------------------------------------------------------------
# stratification

@dataclass(frozen=True)
class Stratum:
    l: int
    description: str


@dataclass(frozen=True)
class Stratification:
    """Disjoint strata of the smallest nontrivial incidence variety for ``p``."""

    p: int
    n: int
    m: int
    strata: tuple[Stratum, ...]


def stratify(p: int, n: int, m: int) -> Stratification:
    """Stratify planes by their intersection dimension with ``C^p``.

    For ``p <= m`` the variety of planes meeting ``C^p`` splits into the
    locally closed strata of constant intersection dimension ``l = 1 .. r1``
    with ``r1 = min(n, p)``; the deepest stratum is a Grassmannian (a single
    point when ``p = n``).  For ``p > m`` every plane meets ``C^p`` in
    dimension at least ``p - m``, so the variety is the whole manifold.
    """
    N = n + m
    if not 1 < p < N:
        raise DimensionMismatch(f"need 1 < p < {N}, got {p}")
    if p > m:
        return Stratification(
            p, n, m,
            (Stratum(p - m, f"whole manifold: every {n}-plane meets C^{p} "
                            f"in dimension >= {p - m}"),),
        )
    r1 = min(n, p)
    strata = []
    for l in range(1, r1 + 1):
        if l < r1:
            strata.append(Stratum(l, f"planes with dim(X ^ C^{p}) = {l}"))
        elif p == n:
            strata.append(Stratum(l, f"the single plane C^{n} itself"))
        elif p < n:
            strata.append(Stratum(
                l, f"planes containing C^{p}; a copy of the {m}-plane "
                   f"Grassmannian of C^{N - p}"))
        else:
            strata.append(Stratum(
                l, f"planes inside C^{p}; a copy of the {n}-plane "
                   f"Grassmannian of C^{p}"))
    return Stratification(p, n, m, tuple(strata))
