from fractions import Fraction

import numpy as np
import pytest

from hermoments.errors import UsageError
from hermoments.wigner import (
    DEFAULT_SEED,
    EnsembleConfig,
    RunningStats,
    char_poly,
    char_poly_batch,
    exact_expected_charpoly,
    hermite_targets,
    mc_expected_charpoly,
    sample_batch,
    sample_matrix,
    spectrum_histogram,
    stream_rng,
)


def test_rademacher_entries():
    a = sample_matrix(EnsembleConfig(6))
    assert np.array_equal(a, a.T)
    assert set(np.unique(a)) <= {-1, 1}


def test_gaussian_variance():
    cfg = EnsembleConfig(2, "gaussian", 2.0)
    mats = sample_batch(cfg, stream_rng(DEFAULT_SEED, 3), 100_000)
    off = mats[:, 0, 1]
    assert 3.9 <= off.var() <= 4.1
    assert abs(off.mean()) < 0.03


def test_sampling_is_deterministic():
    cfg = EnsembleConfig(5, "gaussian")
    assert np.array_equal(sample_matrix(cfg, 4), sample_matrix(cfg, 4))
    assert not np.array_equal(sample_matrix(cfg, 4), sample_matrix(cfg, 5))


@pytest.mark.parametrize(
    "kwargs",
    [dict(n=0), dict(n=3, dist="cauchy"), dict(n=3, c=0.0), dict(n=3, samples=0), dict(n=3, seed=-1)],
)
def test_config_validation(kwargs):
    with pytest.raises(UsageError):
        EnsembleConfig(**kwargs)


def test_char_poly_examples():
    assert char_poly(np.array([[0, 1], [1, 0]])) == [-1, 0, 1]
    assert char_poly(np.array([[2]])) == [-2, 1]
    assert char_poly(np.eye(3, dtype=int)) == [-1, 3, -3, 1]


def test_char_poly_matches_eigenvalues():
    rng = np.random.default_rng(5)
    a = rng.normal(size=(6, 6))
    a = a + a.T
    expected = np.poly(np.linalg.eigvalsh(a))[::-1]
    np.testing.assert_allclose(char_poly(a), expected, atol=1e-8)


def test_char_poly_big_integers_fall_back_to_python_ints():
    a = np.full((3, 3), 10**6, dtype=np.int64)
    assert char_poly(a) == [0, 0, -3 * 10**6, 1]
    rows = char_poly_batch(np.array([a]))
    assert rows.dtype == object


@pytest.mark.parametrize("n", range(1, 6))
def test_exact_average_is_hermite(n):
    assert exact_expected_charpoly(n) == hermite_targets(n)


def test_exact_average_scales_with_c():
    assert exact_expected_charpoly(3, 2) == hermite_targets(3, 2) == [0, -12, 0, 1]
    assert exact_expected_charpoly(2, Fraction(1, 2)) == [Fraction(-1, 4), 0, 1]


def test_exact_average_size_limit():
    with pytest.raises(UsageError):
        exact_expected_charpoly(6)


@pytest.mark.parametrize("dist, c", [("rademacher", 1.0), ("gaussian", 2.0)])
def test_monte_carlo_within_four_standard_errors(dist, c):
    stats = mc_expected_charpoly(EnsembleConfig(4, dist, c, 100_000))
    assert max(stats.z_scores()) <= 4.0
    assert stats.mean[4] == 1.0 and stats.stderr[4] == 0.0
    for j in (1, 3):
        assert abs(stats.mean[j]) <= 4 * stats.stderr[j]


def test_records_are_keyed_by_descending_power():
    stats = mc_expected_charpoly(EnsembleConfig(2, samples=100))
    rows = stats.records()
    assert rows[0]["k"] == 0 and rows[0]["target"] == 1
    assert rows[2]["target"] == -1


def test_running_stats_merge_is_order_independent():
    rng = np.random.default_rng(1)
    data = rng.normal(size=(1000, 3))
    whole = RunningStats(3)
    whole.push_batch(data)
    parts = [RunningStats(3) for _ in range(3)]
    for p, chunk in zip(parts, (data[:100], data[100:650], data[650:])):
        p.push_batch(chunk)
    merged = RunningStats(3)
    for p in reversed(parts):
        merged.merge(p)
    np.testing.assert_allclose(merged.mean, whole.mean, atol=1e-10)
    np.testing.assert_allclose(merged.variance, whole.variance, atol=1e-10)
    np.testing.assert_allclose(whole.variance, data.var(axis=0, ddof=1), atol=1e-10)


def test_results_do_not_depend_on_thread_count():
    cfg = EnsembleConfig(3, "gaussian", 1.0, 20_000)
    one = mc_expected_charpoly(cfg, threads=1)
    four = mc_expected_charpoly(cfg, threads=4)
    np.testing.assert_allclose(one.mean, four.mean, atol=1e-10)
    np.testing.assert_allclose(one.stderr, four.stderr, atol=1e-10)


def test_small_histogram():
    hist = spectrum_histogram(EnsembleConfig(60, "gaussian", 1.0, 20), bins=12)
    assert hist.masses.sum() == pytest.approx(1.0, abs=1e-12)
    assert hist.eigenvalue_count == 1200
    assert hist.total_variation < 0.1


def test_histogram_thread_independent():
    cfg = EnsembleConfig(30, "rademacher", 1.0, 40)
    a = spectrum_histogram(cfg, threads=1)
    b = spectrum_histogram(cfg, threads=3)
    assert np.array_equal(a.masses, b.masses)
