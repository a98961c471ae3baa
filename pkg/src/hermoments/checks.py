"""Cross-route invariants run by ``hermoments verify-all``.

Each check returns ``(ok, detail)``. ``quick=True`` shrinks the ranges so the
whole table runs in a few seconds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import akl, hermite, lattice, moments, series_analysis, spectra, wigner
from .exact_core import Poly

GOLDEN = {
    1: Poly([0, -1, 1], "n"),
    2: Poly([0, 3, -5, 2], "n"),
    3: Poly([0, -15, 32, -22, 5], "n"),
}

TV_THRESHOLD = 0.05
EDGE_MASS_THRESHOLD = 0.01
RATE_TOLERANCE = 0.15
MC_SIGMAS = 4.0
NEWTON_ROOTS_RTOL = 1e-8


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def golden_polynomials(quick: bool = False):
    for k, want in GOLDEN.items():
        routes = {r: moments.moment_by_route(k, r) for r in moments.ROUTES}
        routes["paths"] = Poly(lattice.reconstruct_A(k).coeffs, "n")
        bad = [r for r, p in routes.items() if p != want]
        if bad:
            return False, f"k={k}: routes {bad} differ from {want}"
    return True, "k=1,2,3 on interp, det, akl, paths"


def route_equivalence(quick: bool = False):
    kmax = 5 if quick else 8
    for k in range(1, kmax + 1):
        interp = moments.moment_polynomial(k).poly
        det = moments.moment_determinant(k)
        rec = akl.akl_poly(k, 1, var="n")
        paths = Poly(lattice.reconstruct_A(k).coeffs, "n")
        if not interp == det == rec == paths:
            return False, f"routes disagree at k={k}"
    return True, f"k<={kmax}"


def leading_and_second(quick: bool = False):
    kmax = 10 if quick else 20
    for k in range(1, kmax + 1):
        mp = moments.moment_polynomial(k)
        if (mp.leading, mp.second) != moments.coefficient_targets(k):
            return False, f"k={k}: got ({mp.leading}, {mp.second})"
    return True, f"k<={kmax}"


def lattice_combinatorics(quick: bool = False):
    kpaths = 9 if quick else 12
    kwalk = 7 if quick else 10
    for k in range(1, kpaths + 1):
        if sum(1 for _ in lattice.iter_paths(k)) != moments.catalan(k):
            return False, f"path count wrong at k={k}"
    s = lattice.second_coeff_recursion(30)
    if any(s[k] != moments.second_coefficient_closed(k) for k in range(31)):
        return False, "s_k recursion differs from closed form"
    if not all(lattice.walk_identity_check(k) for k in range(1, kwalk + 1)):
        return False, "walk identity failed"
    if not all(lattice.lifting_bijection_check(k) for k in range(1, 9)):
        return False, "lifting bijection failed"
    series = series_analysis.second_coeff_series(20)
    if any(series[k] != s[k] for k in range(1, 21)):
        return False, "second-coefficient generating function differs"
    return True, f"paths k<={kpaths}, s_k k<=30, walks k<={kwalk}"


def hermite_identities(quick: bool = False):
    nmax = 20 if quick else 40
    for n in range(nmax + 1):
        pair = hermite.hermite_monic(n)
        if any(pair.h.coeff(n - k) != hermite.hermite_coeff_closed(n, k) for k in range(n + 1)):
            return False, f"closed form differs at n={n}"
        if pair.h_hat(0) != 1 or any(pair.h_hat.coeff(i) for i in range(1, n + 1, 2)):
            return False, f"reversed H_{n} not even with constant 1"
        if n >= 1 and not hermite.conjugate_recursion_check(n):
            return False, f"conjugate recursion fails at n={n}"
    for n in range(21):
        for k in range(n // 2 + 1):
            if (-1) ** k * hermite.hermite_monic(n).h.coeff(n - 2 * k) != hermite.matching_count_complete(n, k):
                return False, f"matching count differs at n={n}, k={k}"
    return True, f"n<={nmax}"


def analysis_identities(quick: bool = False):
    nmax = 100 if quick else 500
    grid = series_analysis.rational_grid(6)
    for row in series_analysis.gf_check_rows(nmax, grid):
        if not (row["bound_pass"] and row["residual_zero"]):
            return False, f"failed at n={row['n']}, z={row['z']}"
    return True, f"n<={nmax}, z in {{1/18..1/3}}"


def newton_series_roots(quick: bool = False):
    nmax = 30 if quick else 60
    worst = 0.0
    for n in range(1, nmax + 1):
        newton = moments.power_sums_exact(n, n)
        series = series_analysis.moment_series(n, n)
        if list(series.coeffs) != newton:
            return False, f"series and Newton differ at n={n}"
        rs = spectra.hermite_roots(n)
        for k in range(2, n + 1, 2):
            rel = abs(spectra.power_sum_float(rs, k) - newton[k]) / abs(newton[k])
            worst = max(worst, rel)
    if worst > NEWTON_ROOTS_RTOL:
        return False, f"worst relative error {worst:.3e}"
    return True, f"n<={nmax}, worst root relative error {worst:.2e}"


def semicircle_rate(quick: bool = False):
    rs = spectra.hermite_roots(400)
    worst = 0.0
    for k in (2, 4, 6):
        target = -moments.second_coefficient_closed(k // 2) / 2**k
        got = 400 * (float(spectra.semicircle_moment(k)) - spectra.empirical_moment(rs, k))
        worst = max(worst, abs(got - target) / abs(target))
    return worst <= RATE_TOLERANCE, f"worst relative deviation {worst:.3%} at n=400"


def wigner_exact(quick: bool = False):
    nmax = 4 if quick else 5
    for n in range(1, nmax + 1):
        if wigner.exact_expected_charpoly(n) != wigner.hermite_targets(n):
            return False, f"n={n}"
    return True, f"n<={nmax}"


def wigner_monte_carlo(quick: bool = False, threads: int | None = None):
    samples = 20_000 if quick else 100_000
    worst = 0.0
    for dist, c in (("rademacher", 1), ("gaussian", 2)):
        cfg = wigner.EnsembleConfig(4, dist, c, samples, wigner.DEFAULT_SEED)
        worst = max(worst, max(wigner.mc_expected_charpoly(cfg, threads).z_scores()))
    return worst <= MC_SIGMAS, f"worst |z| = {worst:.2f} over {samples} samples"


def spectral_histogram(quick: bool = False, threads: int | None = None):
    n, samples = (100, 50) if quick else (200, 200)
    cfg = wigner.EnsembleConfig(n, "gaussian", 1.0, samples, wigner.DEFAULT_SEED)
    hist = wigner.spectrum_histogram(cfg, 24, threads=threads)
    tv = hist.total_variation
    edge = max(hist.mass_between(1.0, 1.2), hist.mass_between(-1.2, -1.0))
    ok = tv <= TV_THRESHOLD and edge <= EDGE_MASS_THRESHOLD and abs(hist.masses.sum() - 1) < 1e-12
    return ok, f"n={n}, TV={tv:.4f}, edge-bin mass={edge:.4f}"


CHECKS: list[tuple[str, Callable]] = [
    ("golden-polynomials", golden_polynomials),
    ("route-equivalence", route_equivalence),
    ("leading-second-coefficients", leading_and_second),
    ("lattice-combinatorics", lattice_combinatorics),
    ("hermite-identities", hermite_identities),
    ("exact-analysis-identities", analysis_identities),
    ("newton-series-roots", newton_series_roots),
    ("semicircle-rate", semicircle_rate),
    ("wigner-exact", wigner_exact),
    ("wigner-monte-carlo", wigner_monte_carlo),
    ("spectral-histogram", spectral_histogram),
]

_THREADED = {"wigner-monte-carlo", "spectral-histogram"}


def run_all(quick: bool = False, threads: int | None = None) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        start = time.perf_counter()
        try:
            ok, detail = fn(quick, threads) if name in _THREADED else fn(quick)
        except Exception as exc:  # a crash is a failed check, reported not raised
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail, time.perf_counter() - start))
    return results
