"""Exact scalars, dense univariate polynomials and truncated power series.

Integers are Python ints and rationals are :class:`fractions.Fraction`, which
is already arbitrary precision and kept in lowest terms with a positive
denominator. Polynomial coefficients may be either; a Fraction whose
denominator is 1 is stored as an int so integer polynomials stay integral.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import UsageError

Scalar = Union[int, Fraction]

#: degree of the zero polynomial
NEG_INF = float("-inf")


def _norm(c) -> Scalar:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


def as_rational(v) -> Fraction:
    """Coerce an int, Fraction or decimal string like ``"1/3"`` to a Fraction."""
    if isinstance(v, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    return Fraction(v)


class Poly:
    """Immutable dense polynomial ``sum(coeffs[i] * var**i)``.

    The zero polynomial has an empty coefficient tuple and degree ``-inf``.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # construction helpers

    @classmethod
    def const(cls, c, var: str = "x") -> "Poly":
        return cls([c], var)

    @classmethod
    def monomial(cls, degree: int, c=1, var: str = "x") -> "Poly":
        return cls([0] * degree + [c], var)

    @classmethod
    def from_roots(cls, roots: Iterable, var: str = "x") -> "Poly":
        """Monic polynomial ``prod(var - r)``."""
        p = cls.const(1, var)
        for r in roots:
            p = p * cls([-r, 1], var)
        return p

    # basic properties

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def high_to_low(self) -> list:
        return list(reversed(self.coeffs)) or [0]

    # arithmetic

    def _check(self, other: "Poly"):
        if self.var != other.var:
            raise UsageError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(other, self.var)

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _norm(other)
            return Poly([c * a for a in self.coeffs], self.var)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise UsageError("negative polynomial power")
        out = Poly.const(1, self.var)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale_var(self, s) -> "Poly":
        """Return ``p(s * var)``."""
        s = _norm(s)
        out, f = [], 1
        for c in self.coeffs:
            out.append(c * f)
            f *= s
        return Poly(out, self.var)

    def translate(self, a) -> "Poly":
        """Return ``p(var + a)``."""
        lin = Poly([a, 1], self.var)
        acc = Poly((), self.var)
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, v):
        """Exact evaluation at an int or Fraction.

        Rational points are evaluated homogeneously, ``sum c_j p^j q^(d-j)``,
        so only one fraction reduction happens per call.
        """
        if isinstance(v, float):
            raise TypeError("exact evaluation only; use evalf for floats")
        v = Fraction(v)
        if not self.coeffs:
            return 0
        p, q = v.numerator, v.denominator
        acc, qpow = 0, 1
        for c in reversed(self.coeffs):
            acc = acc * p + c * qpow
            qpow *= q
        return _norm(Fraction(acc) / (qpow // q))

    def evalf(self, v: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * v + float(c)
        return acc

    # comparisons and display

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other, self.var)
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.var))

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                mono = self.var if i == 1 else f"{self.var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def conjugate(p: Poly, n: int, var: str | None = None) -> Poly:
    """Coefficient reversal ``z**n * p(1/z)`` for ``deg p <= n``."""
    if p.degree > n:
        raise UsageError(f"degree {p.degree} exceeds conjugation order {n}")
    cs = list(p.coeffs) + [0] * (n + 1 - len(p.coeffs))
    return Poly(reversed(cs), var or p.var)


def lagrange_interpolate(xs: Sequence, ys: Sequence, var: str = "x") -> Poly:
    """Exact interpolating polynomial through ``(xs[i], ys[i])``."""
    if len(xs) != len(ys) or not xs:
        raise UsageError("need equally many, and at least one, nodes and values")
    if len(set(xs)) != len(xs):
        raise UsageError("interpolation nodes must be distinct")
    result = Poly((), var)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis, denom = Poly.const(1, var), Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly([-xj, 1], var)
                denom *= xi - xj
        result = result + basis * (Fraction(yi) / denom)
    return result


class TruncatedSeries:
    """Formal power series over the rationals, known through ``z**order``.

    Every operation requires equal orders and never extends the order; the
    coefficients beyond ``order`` are unknown, not zero.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        cs = [_norm(Fraction(c)) for c in coeffs]
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "TruncatedSeries":
        return cls(p.coeffs[: order + 1], order)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def _other(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise UsageError(f"series orders differ: {self.order} vs {other.order}")
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other):
        o = self._other(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, o.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries([c * a for a in self.coeffs], self.order)
        o = self._other(other)
        K = self.order
        out = [0] * (K + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(K + 1 - i):
                out[i + j] += a * o.coeffs[j]
        return TruncatedSeries(out, K)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return series_div(self, self._other(other))

    def shift(self, by: int = 1) -> "TruncatedSeries":
        """Multiply by ``z**by``, dropping terms past the order."""
        return TruncatedSeries([0] * by + list(self.coeffs), self.order)

    def derivative(self) -> "TruncatedSeries":
        """Termwise derivative; the top coefficient becomes unknown so the order drops by one."""
        if self.order == 0:
            raise UsageError("cannot differentiate an order-0 series")
        return TruncatedSeries([i * c for i, c in enumerate(self.coeffs)][1:], self.order - 1)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``a / b`` by forward substitution; needs ``b[0] != 0``."""
    if a.order != b.order:
        raise UsageError(f"series orders differ: {a.order} vs {b.order}")
    if b.coeffs[0] == 0:
        raise ZeroDivisionError("series division by a series with zero constant term")
    b0 = Fraction(b.coeffs[0])
    q = []
    for k in range(a.order + 1):
        acc = Fraction(a.coeffs[k])
        for j in range(1, k + 1):
            acc -= b.coeffs[j] * q[k - j]
        q.append(acc / b0)
    return TruncatedSeries(q, a.order)
