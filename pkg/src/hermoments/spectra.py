"""Floating point Hermite roots and the semicircle reference.

The roots of ``H_n`` are the eigenvalues of the Jacobi matrix with zero
diagonal and off-diagonal ``sqrt(1), ..., sqrt(n-1)``; they are found with
an implicit QL iteration with Wilkinson shifts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NumericalError, UsageError
from .moments import catalan

MAX_SWEEPS = 50
ZERO_SNAP = 1e-13


def tridiagonal_eigvals(diag, offdiag, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric tridiagonal matrix, ascending.

    ``offdiag[i]`` couples rows i and i+1. Raises :class:`NumericalError`
    when an eigenvalue needs more than ``max_sweeps`` QL sweeps.
    """
    d = [float(v) for v in diag]
    n = len(d)
    if len(offdiag) != max(n - 1, 0):
        raise UsageError("off-diagonal must have length n - 1")
    e = [float(v) for v in offdiag] + [0.0]
    eps = np.finfo(float).eps
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            if sweeps == max_sweeps:
                raise NumericalError(
                    "tridiagonal QL iteration did not converge",
                    index=l,
                    sweeps=sweeps,
                    residual_offdiag=abs(e[l]),
                    size=n,
                )
            sweeps += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.sort(np.array(d))


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a symmetric matrix; returns (diagonal, off-diagonal)."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise UsageError("square matrix required")
    for k in range(n - 2):
        x = a[k + 1 :, k]
        alpha = -math.copysign(np.linalg.norm(x), x[0])
        if alpha == 0.0:
            continue
        v = x.copy()
        v[0] -= alpha
        vnorm = np.linalg.norm(v)
        if vnorm == 0.0:
            continue
        v /= vnorm
        sub = a[k + 1 :, k + 1 :]
        w = sub @ v
        w -= v * (v @ w)
        sub -= 2.0 * (np.outer(v, w) + np.outer(w, v))
        a[k + 1, k] = a[k, k + 1] = alpha
        a[k + 2 :, k] = a[k, k + 2 :] = 0.0
    return np.diag(a).copy(), np.diag(a, 1).copy()


def symmetric_eigvals(a: np.ndarray) -> np.ndarray:
    d, e = tridiagonalize(a)
    return tridiagonal_eigvals(d, e)


@dataclass(frozen=True)
class RootSet:
    n: int
    roots: np.ndarray

    @property
    def scaled(self) -> np.ndarray:
        return self.roots / (2.0 * math.sqrt(self.n))


def hermite_roots(n: int) -> RootSet:
    if n < 1:
        raise UsageError("n must be >= 1")
    off = np.sqrt(np.arange(1, n, dtype=float))
    roots = tridiagonal_eigvals(np.zeros(n), off)
    if n % 2:
        mid = n // 2
        if abs(roots[mid]) < ZERO_SNAP:
            roots[mid] = 0.0
    roots.setflags(write=False)
    return RootSet(n, roots)


def power_sum_float(rs: RootSet, k: int) -> float:
    return float(np.sum(rs.roots**k))


def empirical_moment(rs: RootSet, k: int) -> float:
    """``(1/n) sum lambda_j**k`` with ``lambda_j = xi_j / (2 sqrt n)``."""
    if k < 0:
        raise UsageError("k must be non-negative")
    return float(np.mean(rs.scaled**k))


def semicircle_moment(k: int) -> Fraction:
    if k < 0:
        raise UsageError("k must be non-negative")
    if k % 2:
        return Fraction(0)
    return Fraction(catalan(k // 2), 2**k)


def semicircle_density(x):
    x = np.asarray(x, dtype=float)
    return np.where(np.abs(x) <= 1.0, (2.0 / np.pi) * np.sqrt(np.clip(1.0 - x * x, 0.0, None)), 0.0)


def semicircle_cdf(x):
    x = np.clip(np.asarray(x, dtype=float), -1.0, 1.0)
    return 0.5 + (x * np.sqrt(1.0 - x * x) + np.arcsin(x)) / np.pi


def semicircle_bin_masses(edges) -> np.ndarray:
    return np.diff(semicircle_cdf(edges))
