"""Wigner ensembles: sampling, characteristic polynomials and spectra.

The expected characteristic polynomial of a Wigner matrix whose
off-diagonal entries have variance ``c**2`` is ``c**n H_n(x / c)``. This
module checks that exactly for small Rademacher matrices by enumerating every
sign pattern, and statistically by Monte Carlo for larger sample counts.

Randomness comes from numpy's PCG64 seeded through ``SeedSequence(seed,
spawn_key=(stream,))``: each chunk of samples has its own stream index, so
results do not depend on how many worker threads are used.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import UsageError
from .hermite import hermite_monic
from .spectra import semicircle_bin_masses, symmetric_eigvals

DISTRIBUTIONS = ("rademacher", "gaussian")
DEFAULT_SEED = 20_160_321
CHUNK = 8192


@dataclass(frozen=True)
class EnsembleConfig:
    n: int
    dist: str = "rademacher"
    c: float = 1.0
    samples: int = 1000
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.n < 1:
            raise UsageError("matrix size must be >= 1")
        if self.dist not in DISTRIBUTIONS:
            raise UsageError(f"unknown distribution {self.dist!r}")
        if not self.c > 0:
            raise UsageError("c must be positive")
        if self.samples < 1:
            raise UsageError("need at least one sample")
        if not 0 <= self.seed < 2**64:
            raise UsageError("seed must be a 64-bit unsigned integer")

    @property
    def integer_entries(self) -> bool:
        return self.dist == "rademacher" and float(self.c).is_integer()


def stream_rng(seed: int, stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream,))))


def sample_batch(cfg: EnsembleConfig, rng: np.random.Generator, count: int) -> np.ndarray:
    """``count`` symmetric matrices of shape ``(count, n, n)``."""
    n = cfg.n
    iu = np.triu_indices(n)
    m = len(iu[0])
    if cfg.dist == "rademacher":
        signs = rng.integers(0, 2, size=(count, m), dtype=np.int64) * 2 - 1
        vals = signs * int(cfg.c) if cfg.integer_entries else signs * float(cfg.c)
    else:
        vals = rng.normal(0.0, float(cfg.c), size=(count, m))
    out = np.zeros((count, n, n), dtype=vals.dtype)
    out[:, iu[0], iu[1]] = vals
    out[:, iu[1], iu[0]] = vals
    return out


def sample_matrix(cfg: EnsembleConfig, stream: int = 0) -> np.ndarray:
    """One matrix, determined by ``(cfg.seed, stream)``."""
    return sample_batch(cfg, stream_rng(cfg.seed, stream), 1)[0]


def _int64_safe(n: int, max_entry: int) -> bool:
    # crude bound on every intermediate of Faddeev-LeVerrier
    return math.factorial(n) * 2**n * (n * max(max_entry, 1)) ** (n + 1) < 2**62


def char_poly_batch(mats: np.ndarray) -> np.ndarray:
    """Faddeev-LeVerrier on a stack ``(S, n, n)``; coefficients lowest-first.

    Integer stacks stay in integer arithmetic (int64 when provably safe,
    Python ints otherwise) and the divisions by k are exact.
    """
    mats = np.asarray(mats)
    if mats.ndim != 3 or mats.shape[1] != mats.shape[2]:
        raise UsageError("expected a stack of square matrices")
    S, n, _ = mats.shape
    integer = np.issubdtype(mats.dtype, np.integer) or mats.dtype == object
    if integer:
        max_entry = int(np.max(np.abs(mats))) if mats.size else 0
        mats = mats.astype(np.int64 if _int64_safe(n, max_entry) else object)
    else:
        mats = mats.astype(float)
    coeffs = np.zeros((S, n + 1), dtype=mats.dtype)
    coeffs[:, n] = 1
    eye = np.eye(n, dtype=mats.dtype)
    M = np.zeros_like(mats)
    for k in range(1, n + 1):
        M = mats @ M + coeffs[:, n - k + 1, None, None] * eye
        tr = np.trace(mats @ M, axis1=1, axis2=2)
        if integer:
            if np.any(tr % k != 0):
                raise AssertionError("inexact division in Faddeev-LeVerrier")
            coeffs[:, n - k] = -(tr // k)
        else:
            coeffs[:, n - k] = -tr / k
    return coeffs


def char_poly(a) -> list:
    """Coefficients of ``det(x I - A)``, lowest degree first; exact for integer A."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise UsageError("square matrix required")
    if np.issubdtype(a.dtype, np.integer):
        a = a.astype(object)
    row = char_poly_batch(a[None])[0]
    return [int(v) for v in row] if row.dtype == object or np.issubdtype(row.dtype, np.integer) else [float(v) for v in row]


def hermite_targets(n: int, c=1) -> list:
    """Coefficients (lowest-first) of ``c**n H_n(x / c)``."""
    h = hermite_monic(n).h
    return [h.coeff(j) * c ** (n - j) for j in range(n + 1)]


def exact_expected_charpoly(n: int, c: int | Fraction = 1) -> list:
    """Average characteristic polynomial over all ``2**(n(n+1)/2)`` sign
    patterns with entries ``+-c``; exact rationals, lowest-first."""
    if not 1 <= n <= 5:
        raise UsageError("exhaustive enumeration is limited to 1 <= n <= 5")
    iu = np.triu_indices(n)
    m = len(iu[0])
    signs = np.array(list(itertools.product((-1, 1), repeat=m)), dtype=np.int64)
    mats = np.zeros((len(signs), n, n), dtype=np.int64)
    mats[:, iu[0], iu[1]] = signs
    mats[:, iu[1], iu[0]] = signs
    total = char_poly_batch(mats).sum(axis=0)
    count = len(signs)
    c = Fraction(c)
    # entries +-c scale the degree-j coefficient by c**(n-j)
    return [_exact(Fraction(int(total[j]), count) * c ** (n - j)) for j in range(n + 1)]


def _exact(v: Fraction):
    return v.numerator if v.denominator == 1 else v


@dataclass
class RunningStats:
    """Mergeable mean and variance accumulator (Welford / Chan)."""

    width: int
    count: int = 0
    mean: np.ndarray = field(default=None)
    m2: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.mean is None:
            self.mean = np.zeros(self.width)
        if self.m2 is None:
            self.m2 = np.zeros(self.width)

    def push_batch(self, rows: np.ndarray) -> None:
        rows = np.asarray(rows, dtype=float)
        other = RunningStats(self.width, len(rows), rows.mean(axis=0), ((rows - rows.mean(axis=0)) ** 2).sum(axis=0))
        self.merge(other)

    def merge(self, other: "RunningStats") -> None:
        if other.count == 0:
            return
        if self.count == 0:
            self.count, self.mean, self.m2 = other.count, other.mean.copy(), other.m2.copy()
            return
        total = self.count + other.count
        delta = other.mean - self.mean
        self.mean = self.mean + delta * (other.count / total)
        self.m2 = self.m2 + other.m2 + delta**2 * (self.count * other.count / total)
        self.count = total

    @property
    def variance(self) -> np.ndarray:
        if self.count < 2:
            return np.zeros(self.width)
        return self.m2 / (self.count - 1)

    @property
    def stderr(self) -> np.ndarray:
        if self.count < 2:
            return np.zeros(self.width)
        return np.sqrt(self.variance / self.count)


@dataclass(frozen=True)
class CharPolyStats:
    n: int
    samples: int
    mean: tuple  # by power of x, lowest first
    stderr: tuple
    target: tuple

    def z_scores(self) -> list[float]:
        out = []
        for m, s, t in zip(self.mean, self.stderr, self.target):
            if s == 0:
                out.append(0.0 if m == t else math.inf)
            else:
                out.append(abs(m - float(t)) / s)
        return out

    def records(self) -> list[dict]:
        """Rows keyed by k, the coefficient of ``x**(n-k)``."""
        return [
            {"k": k, "mean": self.mean[self.n - k], "stderr": self.stderr[self.n - k], "target": self.target[self.n - k]}
            for k in range(self.n + 1)
        ]


def _chunks(total: int, size: int = CHUNK) -> list[tuple[int, int]]:
    return [(i, min(size, total - i * size)) for i in range((total + size - 1) // size)]


def _map_chunks(func, chunks, threads):
    if threads is None or threads <= 1 or len(chunks) <= 1:
        return [func(ch) for ch in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, chunks))


def mc_expected_charpoly(cfg: EnsembleConfig, threads: int | None = None) -> CharPolyStats:
    """Monte Carlo mean and standard error of each characteristic polynomial
    coefficient, with the ``c**n H_n(x/c)`` targets alongside."""

    def run(chunk):
        stream, count = chunk
        mats = sample_batch(cfg, stream_rng(cfg.seed, stream), count)
        stats = RunningStats(cfg.n + 1)
        stats.push_batch(char_poly_batch(mats).astype(float))
        return stats

    total = RunningStats(cfg.n + 1)
    for part in _map_chunks(run, _chunks(cfg.samples), threads):
        total.merge(part)
    c = int(cfg.c) if float(cfg.c).is_integer() else cfg.c
    target = tuple(hermite_targets(cfg.n, c))
    return CharPolyStats(cfg.n, total.count, tuple(float(v) for v in total.mean), tuple(float(v) for v in total.stderr), target)


@dataclass(frozen=True)
class SpectrumHistogram:
    edges: np.ndarray
    masses: np.ndarray  # empirical, sums to 1
    semicircle: np.ndarray  # reference bin masses
    eigenvalue_count: int

    @property
    def total_variation(self) -> float:
        return 0.5 * float(np.abs(self.masses - self.semicircle).sum())

    def mass_between(self, lo: float, hi: float) -> float:
        centers = 0.5 * (self.edges[1:] + self.edges[:-1])
        return float(self.masses[(centers >= lo) & (centers <= hi)].sum())


def spectrum_histogram(
    cfg: EnsembleConfig,
    bins: int = 24,
    span: Sequence[float] = (-1.2, 1.2),
    threads: int | None = None,
) -> SpectrumHistogram:
    """Histogram of eigenvalues scaled by ``1 / (2 c sqrt n)``.

    Values outside ``span`` are clamped into the end bins so the masses sum
    to one.
    """
    if bins < 1:
        raise UsageError("bins must be >= 1")
    lo, hi = float(span[0]), float(span[1])
    edges = np.linspace(lo, hi, bins + 1)
    scale = 2.0 * float(cfg.c) * math.sqrt(cfg.n)
    spectra_per_chunk = 16

    def run(chunk):
        stream, count = chunk
        mats = sample_batch(cfg, stream_rng(cfg.seed, stream), count)
        counts = np.zeros(bins, dtype=np.int64)
        for a in mats:
            lam = np.clip(symmetric_eigvals(a) / scale, lo, hi)
            counts += np.histogram(lam, bins=edges)[0]
        return counts

    parts = _map_chunks(run, _chunks(cfg.samples, spectra_per_chunk), threads)
    counts = np.sum(parts, axis=0)
    total = int(counts.sum())
    return SpectrumHistogram(edges, counts / total, semicircle_bin_masses(edges), total)
