"""Exact and numerical tools for the power sums of Hermite roots, the
Catalan/semicircle limit, and expected characteristic polynomials of Wigner
matrices."""

__version__ = "0.1.0"

from .akl import akl_a2l_closed, akl_poly, falling_factorial
from .errors import ConsistencyError, DomainError, HermomentsError, NumericalError, UsageError
from .exact_core import Poly, TruncatedSeries, conjugate, series_div
from .hermite import HermitePair, hermite_coeff_closed, hermite_monic, matching_count_complete
from .lattice import LatticePath, enumerate_paths, reconstruct_A, second_coeff_recursion
from .moments import MomentPolynomial, coefficient_targets, moment_determinant, moment_polynomial, power_sums_exact
from .series_analysis import bound_check, catalan_series, f_n_eval, fixed_point_residual, moment_series
from .spectra import RootSet, empirical_moment, hermite_roots, semicircle_moment
from .wigner import EnsembleConfig, char_poly, exact_expected_charpoly, mc_expected_charpoly, spectrum_histogram
