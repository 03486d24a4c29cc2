"""Vectorized unit scans for matrix rings over Z/m too large for operation tables.

The carrier is decoded chunk by chunk into ``(N, k, k)`` integer arrays in
the ring's own index order, so the first failing index matches what an
element-by-element scan would report.
"""

from __future__ import annotations

import math

import numpy as np

from .rings import FiniteRing, MatrixRing, ZMod

CHUNK = 1 << 16


def matrix_form(ring: FiniteRing) -> tuple[int, int, bool] | None:
    """``(k, m, triangular)`` when ``ring`` is M_k(Z/m) or T_k(Z/m) with k <= 3."""
    if isinstance(ring, MatrixRing) and isinstance(ring.base, ZMod) and ring.k <= 3:
        return ring.k, ring.base.n, ring.triangular
    return None


def decode(ring: MatrixRing, start: int, stop: int) -> np.ndarray:
    k, m = ring.k, ring.base.n
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.zeros((stop - start, k, k), dtype=np.int64)
    for r, c in reversed(ring.positions):
        out[:, r, c] = idx % m
        idx //= m
    return out


def _det(a: np.ndarray) -> np.ndarray:
    k = a.shape[1]
    if k == 1:
        return a[:, 0, 0]
    if k == 2:
        return a[:, 0, 0] * a[:, 1, 1] - a[:, 0, 1] * a[:, 1, 0]
    return (
        a[:, 0, 0] * (a[:, 1, 1] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 1])
        - a[:, 0, 1] * (a[:, 1, 0] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 0])
        + a[:, 0, 2] * (a[:, 1, 0] * a[:, 2, 1] - a[:, 1, 1] * a[:, 2, 0])
    )


def unit_mask(ring: MatrixRing, a: np.ndarray) -> np.ndarray:
    """Units of a matrix ring over the commutative ring Z/m: unit determinant.

    For triangular matrices the determinant is the product of the diagonal,
    a unit exactly when every diagonal entry is.
    """
    m = ring.base.n
    det = _det(a) % m
    return np.gcd(det, m) == 1


def _matmul(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    return np.matmul(a, b) % m


def nilpotent_mask(ring: MatrixRing, a: np.ndarray) -> np.ndarray:
    """x is nilpotent iff x^(2^j) = 0 once 2^j reaches |R|, a bound on any nilpotency index."""
    m = ring.base.n
    x = a % m
    for _ in range(max(1, math.ceil(math.log2(ring.size)))):
        x = _matmul(x, x, m)
    return ~x.reshape(len(x), -1).any(axis=1)


def first_unit_power_not_unipotent(ring: MatrixRing, exponent: int) -> int | None:
    """Least index of a unit u with u^exponent - 1 not nilpotent, or None."""
    k, m = ring.k, ring.base.n
    eye = np.eye(k, dtype=np.int64)
    for start in range(0, ring.size, CHUNK):
        stop = min(ring.size, start + CHUNK)
        a = decode(ring, start, stop)
        units = unit_mask(ring, a)
        if not units.any():
            continue
        u = a[units]
        p = eye
        for _ in range(exponent):
            p = _matmul(p, u, m)
        bad = ~nilpotent_mask(ring, (p - eye) % m)
        if bad.any():
            return start + int(np.flatnonzero(units)[np.argmax(bad)])
    return None
