"""Generating functions of the Hermite power sums, evaluated exactly.

Throughout, ``c(w) = sum C_k w**k = (1 - sqrt(1 - 4w)) / (2w)`` is the
Catalan generating function; the limit of the scaled moment series is
``c(z**2)``. The reversed Hermite polynomials are even, so every quantity
evaluated at ``z / sqrt(n)`` is a rational function of ``t = z**2 / n`` and
is computed here in exact rational arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, UsageError
from .exact_core import Poly, TruncatedSeries, as_rational, series_div
from .hermite import hermite_monic


def catalan_series(K: int) -> TruncatedSeries:
    """``c(z)`` through ``z**K`` via ``C_{k+1} = sum_i C_i C_{k-i}``."""
    if K < 0:
        raise UsageError("order must be non-negative")
    C = [1]
    for k in range(K):
        C.append(sum(C[i] * C[k - i] for i in range(k + 1)))
    return TruncatedSeries(C, K)


def catalan_value(w: float) -> float:
    """Float value of ``c(w)`` for ``0 <= w <= 1/4``."""
    if w == 0:
        return 1.0
    return (1.0 - math.sqrt(1.0 - 4.0 * w)) / (2.0 * w)


def moment_series(n: int, K: int) -> TruncatedSeries:
    """``n - z Hhat_n'(z) / Hhat_n(z)`` through ``z**K``."""
    if n < 1:
        raise UsageError("n must be >= 1")
    if K < 0:
        raise UsageError("order must be non-negative")
    hh = hermite_monic(n).h_hat
    z_dh = Poly([0, 1], "z") * hh.derivative()
    quotient = series_div(TruncatedSeries.from_poly(z_dh, K), TruncatedSeries.from_poly(hh, K))
    return n - quotient


def moment_series_ratio(n: int, K: int) -> TruncatedSeries:
    """``n Hhat_{n-1}(z) / Hhat_n(z)`` through ``z**K``."""
    if n < 1:
        raise UsageError("n must be >= 1")
    num = TruncatedSeries.from_poly(hermite_monic(n - 1).h_hat, K) * n
    return series_div(num, TruncatedSeries.from_poly(hermite_monic(n).h_hat, K))


@lru_cache(maxsize=None)
def even_part(n: int) -> Poly:
    """``E_n`` with ``Hhat_n(z) = E_n(z**2)``, in the variable t."""
    hh = hermite_monic(n).h_hat
    if any(hh.coeff(i) for i in range(1, len(hh.coeffs), 2)):
        raise AssertionError(f"reversed H_{n} is not even")
    return Poly(hh.coeffs[::2], "t")


@lru_cache(maxsize=8192)
def _even_value(n: int, t: Fraction) -> Fraction:
    return Fraction(even_part(n)(t))


def f_n_at_square(n: int, z_squared) -> Fraction:
    """``f_n`` as a function of ``z**2``: ``E_{n-1}(z**2/n) / E_n(z**2/n)``."""
    if n < 1:
        raise UsageError("n must be >= 1")
    z2 = as_rational(z_squared)
    if z2 < 0:
        raise UsageError("z**2 must be non-negative")
    t = z2 / n
    den = _even_value(n, t)
    if den <= 0:
        raise DomainError(f"reversed H_{n} is not positive at z**2 = {z2}")
    return _even_value(n - 1, t) / den


def f_n_eval(n: int, z) -> Fraction:
    """Exact ``Hhat_{n-1}(z/sqrt n) / Hhat_n(z/sqrt n)`` for rational z."""
    z = as_rational(z)
    return f_n_at_square(n, z * z)


def fixed_point_residual(n: int, z) -> Fraction:
    """``f_n(z) - (n-1)/n z^2 f_n(z) f_{n-1}(sqrt((n-1)/n) z) - 1``; exactly 0.

    The inner argument is irrational in general but only its square enters.
    """
    if n < 2:
        raise UsageError("n must be >= 2")
    z = as_rational(z)
    z2 = z * z
    fn = f_n_at_square(n, z2)
    ratio = Fraction(n - 1, n)
    inner = f_n_at_square(n - 1, ratio * z2)
    return fn - ratio * z2 * fn * inner - 1


def below_catalan(f: Fraction, w: Fraction) -> bool:
    """Decide ``f <= c(w)`` for ``0 < w <= 1/4`` without square roots.

    ``f <= c(w)`` iff ``1 - 2wf >= 0`` and ``(1 - 2wf)**2 >= 1 - 4w``.
    """
    g = 1 - 2 * w * f
    return g >= 0 and g * g >= 1 - 4 * w


def bound_check(n: int, z) -> bool:
    """``f_n(z) <= 1/z**2`` and ``f_n(z) <= c(z**2)``, decided exactly."""
    z = as_rational(z)
    if not 0 < z <= Fraction(1, 3):
        raise UsageError("need 0 < z <= 1/3")
    if n < 1:
        raise UsageError("n must be >= 1")
    z2 = z * z
    f = f_n_at_square(n, z2)
    return f * z2 <= 1 and below_catalan(f, z2)


def second_coeff_series(K: int) -> TruncatedSeries:
    """``-z c(z) / (1 - 4z)`` through ``z**K``."""
    if K < 1:
        raise UsageError("K must be >= 1")
    c = catalan_series(K)
    return -series_div(c.shift(1), TruncatedSeries([1, -4], K))


def second_coeff_series_from_derivative(K: int) -> TruncatedSeries:
    """``-z c(z) (z c(z))' / (1 - 2 z c(z))`` through ``z**K``."""
    if K < 1:
        raise UsageError("K must be >= 1")
    zc = catalan_series(K + 1).shift(1)
    dzc = zc.derivative()  # order K
    zc = TruncatedSeries(zc.coeffs, K)
    return -series_div(zc * dzc, 1 - 2 * zc)


def rational_grid(points: int) -> list[Fraction]:
    """``z = j / (3 * points)`` for ``j = 1..points``; ends at 1/3."""
    if points < 1:
        raise UsageError("grid needs at least one point")
    return [Fraction(j, 3 * points) for j in range(1, points + 1)]


def gf_check_rows(n_max: int, grid: Iterable[Fraction]) -> Iterator[dict]:
    """One record per ``(n, z)``: value of f_n, bound and residual verdicts."""
    grid = list(grid)
    for n in range(1, n_max + 1):
        for z in grid:
            f = f_n_eval(n, z)
            residual_ok = True if n == 1 else fixed_point_residual(n, z) == 0
            yield {
                "n": n,
                "z": z,
                "f_n": f,
                "bound_pass": bound_check(n, z),
                "residual_zero": residual_ok,
            }


def convergence_gaps(z, ns: Iterable[int]) -> dict[int, float]:
    """``|f_n(z) - c(z**2)|`` as floats, keyed by n."""
    z = as_rational(z)
    limit = catalan_value(float(z * z))
    return {n: abs(float(f_n_eval(n, z)) - limit) for n in ns}
