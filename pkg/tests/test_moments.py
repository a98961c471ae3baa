import mpmath
import pytest

from hermoments.akl import akl_poly
from hermoments.errors import UsageError
from hermoments.exact_core import Poly
from hermoments.hermite import hermite_monic
from hermoments.moments import (
    catalan,
    coefficient_targets,
    hermite_coeff_poly,
    moment_by_route,
    moment_determinant,
    moment_polynomial,
    power_sums_exact,
    second_coefficient_closed,
)

MN2 = Poly([0, -1, 1], "n")
MN4 = Poly([0, 3, -5, 2], "n")
MN6 = Poly([0, -15, 32, -22, 5], "n")


def mp_power_sums(n, kmax, dps=60):
    """Independent oracle: 60-digit polynomial roots, power sums rounded to integers."""
    with mpmath.workdps(dps):
        h = hermite_monic(n).h
        roots = mpmath.polyroots([h.coeff(j) for j in range(n, -1, -1)], maxsteps=200, extraprec=200)
        out = []
        for k in range(kmax + 1):
            s = mpmath.re(mpmath.fsum(r**k for r in roots))
            nearest = int(mpmath.nint(s))
            assert abs(s - nearest) < mpmath.mpf(10) ** (-20)
            out.append(nearest)
    return out


def test_power_sums_n4():
    m = power_sums_exact(4, 4)
    assert m[2] == 12
    assert m[3] == 0
    assert m[4] == 60  # roots^2 = 3 +- sqrt 6: 2(3+sqrt6)^2 + 2(3-sqrt6)^2 = 60


@pytest.mark.parametrize("n", range(1, 13))
def test_power_sums_against_high_precision_roots(n):
    assert power_sums_exact(n, n) == mp_power_sums(n, n)


def test_power_sums_odd_orders_vanish():
    for n in range(1, 30):
        m = power_sums_exact(n, n)
        assert all(m[k] == 0 for k in range(1, n + 1, 2))


def test_power_sums_preconditions():
    with pytest.raises(UsageError):
        power_sums_exact(4, 5)
    with pytest.raises(UsageError):
        power_sums_exact(4, 0)


@pytest.mark.parametrize("k, expected", [(1, MN2), (2, MN4), (3, MN6)])
def test_moment_polynomial_golden(k, expected):
    mp = moment_polynomial(k)
    assert mp.poly == expected
    assert mp.poly.degree == k + 1


@pytest.mark.parametrize("k, expected", [(1, MN2), (2, MN4)])
def test_moment_determinant_golden(k, expected):
    assert moment_determinant(k) == expected


def test_determinant_k1_is_minus_two_a():
    assert hermite_coeff_poly(1) * -2 == MN2


def test_hermite_coeff_poly_matches_hermite():
    for j in range(5):
        p = hermite_coeff_poly(j)
        for n in range(2 * j, 2 * j + 6):
            assert p(n) == hermite_monic(n).h.coeff(n - 2 * j)


@pytest.mark.parametrize("k", range(1, 11))
def test_three_routes_agree(k):
    interp = moment_polynomial(k).poly
    assert moment_determinant(k) == interp
    assert akl_poly(k, 1, var="n") == interp


@pytest.mark.parametrize("k, expected", [(1, (1, -1)), (2, (2, -5)), (3, (5, -22))])
def test_coefficient_targets(k, expected):
    assert coefficient_targets(k) == expected


@pytest.mark.parametrize("k", range(1, 21))
def test_leading_and_second_coefficients(k):
    mp = moment_polynomial(k)
    assert (mp.leading, mp.second) == coefficient_targets(k)


def test_catalan_values():
    assert [catalan(k) for k in range(9)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    assert second_coefficient_closed(0) == 0


@pytest.mark.parametrize("k", range(1, 9))
def test_moment_polynomial_has_zero_constant(k):
    assert moment_polynomial(k).poly.coeff(0) == 0


def test_polynomial_evaluates_to_power_sums():
    for n in range(1, 61):
        m = power_sums_exact(n, n)
        for k in range(2, n + 1, 2):
            assert moment_polynomial(k // 2).poly(n) == m[k]


def test_polynomial_extends_below_interpolation_nodes():
    # the nodes for k=4 start at n=8; n=4 and n=6 are outside the node range
    p = moment_polynomial(4).poly
    for n in (1, 2, 3, 4, 6, 7):
        assert p(n) == mp_power_sums(n, 8)[8]


def test_unknown_route():
    with pytest.raises(UsageError):
        moment_by_route(2, "magic")
