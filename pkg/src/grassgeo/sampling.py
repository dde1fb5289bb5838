"""Seeded random generators for points, frames, tangents and isometries.

Chart entries are independent standard complex normals; noncompact samples
are rescaled to spectral norm at most 0.9 to stay clear of the domain
boundary.  All functions take an explicit ``numpy.random.Generator`` so runs
are reproducible from a single seed.
"""

from __future__ import annotations

import numpy as np

from .core import ChartPoint, Signature
from .geodesics import GroupElement, transvection_to_zero
from .loci import CartanVector

NONCOMPACT_RADIUS = 0.9


def complex_normal(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2.0)


def random_chart_point(
    rng: np.random.Generator, n: int, m: int, sig: Signature = Signature.COMPACT
) -> ChartPoint:
    Z = complex_normal(rng, n, m)
    if sig is Signature.NONCOMPACT:
        top = np.linalg.norm(Z, 2)
        if top > NONCOMPACT_RADIUS:
            Z *= NONCOMPACT_RADIUS / top
    return ChartPoint(Z, sig)


def random_frame(rng: np.random.Generator, n: int, N: int) -> np.ndarray:
    return complex_normal(rng, n, N)


def random_tangent(rng: np.random.Generator, n: int, m: int, scale: float = 1.0) -> np.ndarray:
    return scale * complex_normal(rng, n, m)


def random_unitary(rng: np.random.Generator, k: int) -> np.ndarray:
    q, r = np.linalg.qr(complex_normal(rng, k, k))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_group_element(
    rng: np.random.Generator, n: int, m: int, sig: Signature = Signature.COMPACT
) -> GroupElement:
    """A spread-out isometry: block rotation composed with a transvection."""
    N = n + m
    a = random_unitary(rng, n)
    d = random_unitary(rng, m)
    det = np.linalg.det(a) * np.linalg.det(d)
    a = a * (det.conjugate() / abs(det)) ** (1.0 / n)
    k = np.zeros((N, N), dtype=complex)
    k[:n, :n] = a
    k[n:, n:] = d
    rotation = GroupElement(k, n, sig)
    center = random_chart_point(rng, n, m, sig)
    if sig is Signature.COMPACT:
        center = ChartPoint(0.5 * center.Z, sig)
    return rotation.compose(transvection_to_zero(center))


def random_cartan_vector(
    rng: np.random.Generator, r: int, min_gap: float = 0.15
) -> CartanVector:
    """Unit vector with entries bounded away from zero and from each other."""
    while True:
        h = np.sort(np.abs(rng.standard_normal(r)))[::-1]
        h /= np.linalg.norm(h)
        if h[-1] < min_gap:
            continue
        if r >= 2 and np.min(np.diff(np.sort(h))) < min_gap / 2:
            continue
        return CartanVector(h)
