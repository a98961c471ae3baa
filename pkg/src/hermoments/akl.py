"""The polynomial family A(k, l) built from falling factorials.

``A(0, 1) = x``, ``A(0, l) = 0`` for ``l >= 2``, ``A(1, l) = (x)_{l+1}`` and
for ``k >= 1``::

    A(k, l) = sum_{i=1}^{l+1} A(k-1, i) * (x - i)_{l-i+1}

``A(k, 1)`` evaluated at ``x = n`` is the power sum of the 2k-th powers of
the roots of ``H_n``.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import UsageError
from .exact_core import Poly

_memo: dict[tuple[int, int], Poly] = {}
_memo_lock = threading.RLock()


def falling_factorial(l: int, shift: int = 0, var: str = "x") -> Poly:
    """``(x - shift)_l = (x - shift)(x - shift - 1)...(x - shift - l + 1)``."""
    if l < 0:
        raise UsageError("falling factorial length must be non-negative")
    p = Poly.const(1, var)
    for j in range(l):
        p = p * Poly([-(shift + j), 1], var)
    return p


def akl_poly(k: int, l: int, var: str = "x") -> Poly:
    if k < 0 or l < 1:
        raise UsageError(f"A(k, l) needs k >= 0 and l >= 1, got ({k}, {l})")
    with _memo_lock:
        key = (k, l)
        if key not in _memo:
            _memo[key] = _akl(k, l)
    p = _memo[key]
    return p if var == "x" else Poly(p.coeffs, var)


def _akl(k: int, l: int) -> Poly:
    if k == 0:
        return Poly([0, 1]) if l == 1 else Poly(())
    if k == 1:
        return falling_factorial(l + 1)
    total = Poly(())
    for i in range(1, l + 2):
        total = total + akl_poly(k - 1, i) * falling_factorial(l - i + 1, shift=i)
    return total


def akl_a2l_closed(l: int) -> Poly:
    """Closed form ``(x)_{l+1} / 2 * ((2l+2) x - (l+1)(l+2))``."""
    if l < 1:
        raise UsageError("l must be >= 1")
    factor = Poly([-(l + 1) * (l + 2), 2 * l + 2])
    return falling_factorial(l + 1) * factor * Fraction(1, 2)


def akl_a2l_sum_form(l: int) -> Poly:
    """Alternative expansion ``sum_{i=1}^{l+1} (x)_{i+1} (x - i)_{l-i+1}``."""
    if l < 1:
        raise UsageError("l must be >= 1")
    total = Poly(())
    for i in range(1, l + 2):
        total = total + falling_factorial(i + 1) * falling_factorial(l - i + 1, shift=i)
    return total
