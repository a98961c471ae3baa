"""Monic (probabilists') Hermite polynomials and their reversed companions.

``H_0 = 1``, ``H_1 = x``, ``H_{n+1} = x H_n - n H_{n-1}``. The conjugate
``Hhat_n(z) = z**n H_n(1/z)`` is built by coefficient reversal.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import comb, factorial

from .errors import UsageError
from .exact_core import Poly, conjugate

_lock = threading.Lock()
_table: list[Poly] = [Poly([1]), Poly([0, 1])]


@dataclass(frozen=True)
class HermitePair:
    n: int
    h: Poly  # H_n in x
    h_hat: Poly  # conjugate in z

    def coefficient_table(self) -> list[tuple[int, int]]:
        """Rows ``(k, a_{n-k})`` for ``k = 0..n``."""
        return [(k, self.h.coeff(self.n - k)) for k in range(self.n + 1)]


def _hermite_poly(n: int) -> Poly:
    if n < 0:
        raise UsageError("Hermite degree must be non-negative")
    with _lock:
        x = Poly([0, 1])
        while len(_table) <= n:
            m = len(_table) - 1
            _table.append(x * _table[m] - _table[m - 1] * m)
        return _table[n]


def hermite_monic(n: int) -> HermitePair:
    h = _hermite_poly(n)
    return HermitePair(n, h, conjugate(h, n, var="z"))


def double_factorial_odd(k: int) -> int:
    """``(2k-1)!!`` with the empty product ``(-1)!! = 1``."""
    out = 1
    for j in range(1, 2 * k, 2):
        out *= j
    return out


def hermite_coeff_closed(n: int, k: int) -> int:
    """Coefficient of ``x**(n-k)`` in ``H_n`` from the closed product formula."""
    if not 0 <= k <= n:
        raise UsageError(f"need 0 <= k <= n, got n={n}, k={k}")
    if k % 2:
        return 0
    h = k // 2
    num = comb(n, k) * factorial(k)
    den = factorial(h) * 2**h
    assert num % den == 0
    return (-1) ** h * (num // den)


def conjugate_recursion_check(n: int) -> bool:
    """Check ``Hhat_{n+1} = Hhat_n - n z^2 Hhat_{n-1}`` and
    ``z Hhat_n' = n (Hhat_n - Hhat_{n-1})`` as exact identities."""
    if n < 1:
        raise UsageError("n must be >= 1")
    prev, cur, nxt = (hermite_monic(m).h_hat for m in (n - 1, n, n + 1))
    z2 = Poly.monomial(2, var="z")
    z = Poly.monomial(1, var="z")
    three_term = nxt == cur - z2 * prev * n
    derivative = z * cur.derivative() == (cur - prev) * n
    return three_term and derivative


def matching_count_complete(n: int, k: int) -> int:
    """Number of k-edge matchings of the complete graph on n vertices."""
    if k < 0 or 2 * k > n:
        raise UsageError(f"need 0 <= 2k <= n, got n={n}, k={k}")
    return comb(n, 2 * k) * double_factorial_odd(k)
