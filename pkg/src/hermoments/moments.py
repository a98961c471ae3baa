"""Exact power sums of Hermite roots and their polynomial dependence on n."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .akl import akl_poly, falling_factorial
from .errors import ConsistencyError, UsageError
from .exact_core import Poly, lagrange_interpolate
from .hermite import hermite_monic

ROUTES = ("interp", "det", "akl")


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def second_coefficient_closed(k: int) -> int:
    """``-(2**(2k-1) - C(2k-1, k))``; zero for ``k = 0``."""
    if k == 0:
        return 0
    return -(2 ** (2 * k - 1) - comb(2 * k - 1, k))


def coefficient_targets(k: int) -> tuple[int, int]:
    if k < 1:
        raise UsageError("k must be >= 1")
    return catalan(k), second_coefficient_closed(k)


@dataclass(frozen=True)
class MomentPolynomial:
    k: int
    poly: Poly  # in the variable n

    @property
    def leading(self) -> int:
        return self.poly.coeff(self.k + 1)

    @property
    def second(self) -> int:
        return self.poly.coeff(self.k)


def power_sums_exact(n: int, kmax: int) -> list[int]:
    """Power sums ``M_n(k)`` of the roots of ``H_n`` for ``k = 0..kmax``.

    Index 0 holds ``M_n(0) = n`` so that ``result[k]`` is ``M_n(k)``.
    Uses the Newton recursion ``sum_{j=0}^k m(k-j) b_{n-j} = (n-k) b_{n-k}``.
    """
    if not 1 <= kmax <= n:
        raise UsageError(f"need 1 <= kmax <= n, got n={n}, kmax={kmax}")
    h = hermite_monic(n).h
    b = [h.coeff(n - j) for j in range(kmax + 1)]  # b[j] = b_{n-j}, b[0] = 1
    m = [n]
    for k in range(1, kmax + 1):
        acc = (n - k) * b[k]
        for j in range(1, k + 1):
            acc -= m[k - j] * b[j]
        m.append(acc)
    return m


@lru_cache(maxsize=None)
def moment_polynomial(k: int) -> MomentPolynomial:
    """``M_n(2k)`` as a polynomial in n, by interpolation on ``n = 2k..3k+1``."""
    if k < 1:
        raise UsageError("k must be >= 1")
    nodes = list(range(2 * k, 3 * k + 2))
    values = [power_sums_exact(n, 2 * k)[2 * k] for n in nodes]
    poly = lagrange_interpolate(nodes, values, var="n")
    if not poly.is_integral():
        raise ConsistencyError(f"interpolated M_n({2 * k}) has non-integer coefficients: {poly!r}")
    if poly.degree != k + 1:
        raise ConsistencyError(f"interpolated M_n({2 * k}) has degree {poly.degree}, expected {k + 1}")
    return MomentPolynomial(k, poly)


def hermite_coeff_poly(j: int, var: str = "n") -> Poly:
    """``a_{n-2j}`` of ``H_n`` as a polynomial in n: ``(-1)^j (n)_{2j} / (2^j j!)``."""
    return falling_factorial(2 * j, var=var) * Fraction((-1) ** j, 2**j * factorial(j))


def _det(matrix: list[list[Poly]], var: str) -> Poly:
    """Laplace expansion along rows, memoised on the set of unused columns."""
    size = len(matrix)
    memo: dict[int, Poly] = {}

    def minor(row: int, cols: int) -> Poly:
        if row == size:
            return Poly.const(1, var)
        if cols in memo:
            return memo[cols]
        total = Poly((), var)
        sign = 1
        for c in range(size):
            if not cols >> c & 1:
                continue
            entry = matrix[row][c]
            if not entry.is_zero():
                term = entry * minor(row + 1, cols & ~(1 << c))
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[cols] = total
        return total

    return minor(0, (1 << size) - 1)


def moment_matrix(k: int, var: str = "n") -> list[list[Poly]]:
    """The k x k matrix whose determinant is ``M_n(2k)``.

    Newton's unit lower-triangular system with its last column replaced by
    the right-hand side ``-2j a_{n-2j}``.
    """
    a = [hermite_coeff_poly(j, var) for j in range(k + 1)]
    zero = Poly((), var)
    rows = []
    for i in range(k):
        row = [a[i - c] if i >= c else zero for c in range(k - 1)]
        row.append(a[i + 1] * (-2 * (i + 1)))
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def moment_determinant(k: int) -> Poly:
    if k < 1:
        raise UsageError("k must be >= 1")
    det = _det(moment_matrix(k), "n")
    if not det.is_integral():
        raise ConsistencyError(f"determinant for k={k} is not an integer polynomial: {det!r}")
    return det


def moment_by_route(k: int, route: str) -> Poly:
    """``M_n(2k)`` in the variable n, computed by the named route."""
    if route == "interp":
        return moment_polynomial(k).poly
    if route == "det":
        return moment_determinant(k)
    if route == "akl":
        if k < 1:
            raise UsageError("k must be >= 1")
        return akl_poly(k, 1, var="n")
    raise UsageError(f"unknown route {route!r}; expected one of {', '.join(ROUTES)}")
