"""Empirical laboratory for the prime counting function and its error term."""

from .chebyshev import (
    SignChangeReport,
    psi,
    psi_checkpoints,
    psi_from_mangoldt,
    psi_minus_theta,
    sign_change_scan,
    theta,
    theta_ap,
    theta_checkpoints,
)
from .counting import (
    IntervalBoundReport,
    brun_titchmarsh_ratio,
    pi,
    pi_ap,
    pi_checkpoints,
    pi_interval,
    pi_legendre,
)
from .errorfit import (
    ErrorProfile,
    EnvelopeReport,
    EpsilonFitReport,
    FamilyReport,
    ProfileRow,
    build_profile,
    default_grid,
    envelope_report,
    epsilon_fit,
)
from .explicit import (
    ZeroList,
    ZeroTableError,
    bundled_zeros_path,
    load_zeros,
    pi_riemann,
    psi_landau,
    zero_count_check,
)
from .logint import (
    ApConversionReport,
    EiConfig,
    EnvelopeIntegralReport,
    IdentityReport,
    QuadratureSpec,
    ap_conversions,
    ei,
    ei_real,
    integral_envelope_check,
    li,
    li_quadrature,
    li_series,
    mangoldt_identity,
    mangoldt_log_sum,
    pi_from_theta,
    reciprocal_prime_identity,
    reciprocal_prime_sum,
    theta_from_pi,
)
from .mertens import (
    MertensEnvelopeReport,
    MertensScanReport,
    inverse_zeta_partial,
    mertens,
    mertens_checkpoints,
    mertens_envelope,
    mertens_scan,
    squarefree_count,
)
from .shortint import (
    DensityScanReport,
    GapScanReport,
    IncrementDeviationReport,
    IntervalStat,
    MaierReport,
    VarianceReport,
    YRule,
    bhp_gap_check,
    default_gap_grid,
    density_scan,
    increment_deviation,
    interval_stat,
    interval_variance,
    log_grid,
    maier_ratio_stats,
)
from .sieve import PrimeSegment, is_prime, iter_segments, mangoldt_range, mobius_range, primes_in

__version__ = "0.1.0"

__all__ = [
    "ApConversionReport",
    "DensityScanReport",
    "EiConfig",
    "EnvelopeIntegralReport",
    "EnvelopeReport",
    "EpsilonFitReport",
    "ErrorProfile",
    "FamilyReport",
    "GapScanReport",
    "IdentityReport",
    "IncrementDeviationReport",
    "IntervalBoundReport",
    "IntervalStat",
    "MaierReport",
    "MertensEnvelopeReport",
    "MertensScanReport",
    "PrimeSegment",
    "ProfileRow",
    "QuadratureSpec",
    "SignChangeReport",
    "VarianceReport",
    "YRule",
    "ZeroList",
    "ZeroTableError",
    "ap_conversions",
    "bhp_gap_check",
    "brun_titchmarsh_ratio",
    "build_profile",
    "bundled_zeros_path",
    "default_gap_grid",
    "default_grid",
    "density_scan",
    "ei",
    "ei_real",
    "envelope_report",
    "epsilon_fit",
    "increment_deviation",
    "integral_envelope_check",
    "interval_stat",
    "interval_variance",
    "inverse_zeta_partial",
    "is_prime",
    "iter_segments",
    "li",
    "li_quadrature",
    "li_series",
    "load_zeros",
    "log_grid",
    "maier_ratio_stats",
    "mangoldt_identity",
    "mangoldt_log_sum",
    "mangoldt_range",
    "mertens",
    "mertens_checkpoints",
    "mertens_envelope",
    "mertens_scan",
    "mobius_range",
    "pi",
    "pi_ap",
    "pi_checkpoints",
    "pi_from_theta",
    "pi_interval",
    "pi_legendre",
    "pi_riemann",
    "primes_in",
    "psi",
    "psi_checkpoints",
    "psi_from_mangoldt",
    "psi_landau",
    "psi_minus_theta",
    "reciprocal_prime_identity",
    "reciprocal_prime_sum",
    "sign_change_scan",
    "squarefree_count",
    "theta",
    "theta_ap",
    "theta_checkpoints",
    "theta_from_pi",
    "zero_count_check",
    "__version__",
]
