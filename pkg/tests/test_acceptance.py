"""Acceptance gate: ten criteria, one pytest result line each.

Run with -v; the PASSED/FAILED status of each test_criterion_* function is
the pass/fail line for that criterion. Criteria that the arithmetic genuinely
breaks are asserted as stated and fail honestly with the measured
counterexamples in the assertion message (see the project decisions ledger).
"""

import math
import time

import numpy as np
import pytest

from primelab import (
    EiConfig,
    YRule,
    ap_conversions,
    bhp_gap_check,
    brun_titchmarsh_ratio,
    build_profile,
    bundled_zeros_path,
    default_gap_grid,
    default_grid,
    density_scan,
    ei,
    integral_envelope_check,
    interval_variance,
    inverse_zeta_partial,
    li,
    li_quadrature,
    li_series,
    load_zeros,
    log_grid,
    mangoldt_identity,
    mertens_scan,
    pi,
    pi_from_theta,
    pi_legendre,
    pi_riemann,
    psi,
    psi_landau,
    reciprocal_prime_identity,
    squarefree_count,
    theta,
    theta_from_pi,
    zero_count_check,
)
from primelab import cli as cli_mod

ENVELOPE = 7.0 / 12.0


@pytest.fixture(scope="module")
def zeros():
    return load_zeros(bundled_zeros_path())


@pytest.fixture(scope="module")
def wide_profile():
    return build_profile(default_grid(10, 10**8, 8))


def test_criterion_01_counting_routes_agree_to_hundred_million():
    """Two independent counting routes coincide at the decade anchors."""
    start = time.monotonic()
    for x in (10**4, 10**5, 10**6, 10**7, 10**8):
        assert pi_legendre(x) == pi(x), f"count mismatch at {x}"
    elapsed = time.monotonic() - start
    assert elapsed <= 60.0, f"counting comparison took {elapsed:.1f}s"


def test_criterion_02_conversion_identities_hold_everywhere_sampled():
    """All partial-summation identities agree to 1e-9 on a 50-point log grid."""
    for x in log_grid(10, 10**7, 50):
        lead = pi_from_theta(x)
        assert abs(lead - pi(x)) <= 1e-9 * max(1.0, pi(x)), f"count-from-theta at {x}"
        back = theta_from_pi(x)
        assert abs(back - theta(x)) <= 1e-9 * max(1.0, abs(theta(x))), f"theta-from-count at {x}"
        mg = mangoldt_identity(x)
        assert mg.rel_discrepancy <= 1e-9, f"prime-power-count at {x}"
        rp = reciprocal_prime_identity(x)
        assert rp.rel_discrepancy <= 1e-9, f"reciprocal-sum at {x}"
    for q, a in ((3, 1), (3, 2), (4, 1), (4, 3)):
        rep = ap_conversions(10**5, q, a)
        assert rep.max_rel_discrepancy <= 1e-9, f"residue identities at ({q}, {a})"


def test_criterion_03a_pi_error_inside_power_envelope(wide_profile):
    """|pi(x) - li(x)| stays below x**(7/12) across the default grid."""
    bad = [r.x for r in wide_profile if abs(r.e_pi) > r.x**ENVELOPE]
    assert not bad, f"pi error escapes x**(7/12) at {bad}"


def test_criterion_03b_theta_error_inside_power_envelope(wide_profile):
    """|theta(x) - x| stays below x**(7/12) across the default grid."""
    bad = [(r.x, round(float(abs(r.e_theta)), 4), round(r.x**ENVELOPE, 4))
           for r in wide_profile if abs(r.e_theta) > r.x**ENVELOPE]
    assert not bad, (
        "theta error escapes x**(7/12) at (x, |error|, bound): "
        f"{bad}; the bound only holds from x = 1427 on, see decisions ledger")


def test_criterion_03c_mertens_envelope_holds_for_every_integer(wide_profile):
    """|M(x)| <= x**(7/12) for every single x up to 1e8, within budget."""
    start = time.monotonic()
    rep = mertens_scan(10**8)
    elapsed = time.monotonic() - start
    assert rep.violations == [], f"Mertens envelope broken at {rep.violations[:5]}"
    assert rep.final_value == 1928
    assert elapsed <= 600.0, f"full scan took {elapsed:.1f}s"


def test_criterion_04_truncated_formula_sharpens_with_more_zeros(zeros):
    """RMS psi reconstruction error is non-increasing in the zero count."""
    xs = np.arange(10.5, 301.0, 1.0)
    actual = np.array([psi(float(x)) for x in xs])
    rms = {}
    for k in (10, 25, 50, 100):
        rec = np.array([psi_landau(float(x), zeros, k) for x in xs])
        rms[k] = float(np.sqrt(np.mean((rec - actual) ** 2)))
    ks = (10, 25, 50, 100)
    for a, b in zip(ks, ks[1:]):
        assert rms[b] <= 1.05 * rms[a], f"RMS rose from K={a} ({rms[a]:.4f}) to K={b} ({rms[b]:.4f})"
    smooth = pi_riemann(1000.0, 9, zeros, 0, include_tail=False)
    assert abs(smooth - 168) < abs(li(1000.0) - 168), "weighted series not closer than li"


def test_criterion_05_zero_table_counts_track_smooth_law(zeros):
    """Counted ordinates below T match the smooth law within 2, and the
    leading ordinates match the reference values."""
    for t in np.linspace(30.0, 236.0, 20):
        rep = zero_count_check(zeros, float(t))
        assert abs(rep.deviation) <= 2.0, f"deviation {rep.deviation:.3f} at T={t:.2f}"
    ref = (14.134725, 21.022040, 25.010858)
    for got, want in zip(zeros.gammas[:3], ref):
        assert abs(float(got) - want) <= 1e-4


def test_criterion_06_short_intervals_behave():
    """No prime-free target window, density ratios near 1, window counts
    below the sieve bound."""
    gap = bhp_gap_check(default_gap_grid(10000, 10**3, 10**8))
    assert list(gap.violations) == [], f"empty windows at {list(gap.violations)[:5]}"
    assert list(gap.sandwich_failures) == []

    dens = density_scan(10**6, 10**8, 50, YRule.power(ENVELOPE))
    assert 0.9 <= dens.mean_ratio <= 1.1, f"mean density ratio {dens.mean_ratio:.4f}"
    assert 0.7 <= dens.min_ratio and dens.max_ratio <= 1.3, (
        f"density ratio range [{dens.min_ratio:.4f}, {dens.max_ratio:.4f}]")

    for x in log_grid(10**4, 10**8, 25):
        for exponent in (0.55, 0.7):
            y = max(2, int(x**exponent))
            rep = brun_titchmarsh_ratio(x, y)
            assert rep.satisfied, f"window count {rep.count} over bound {rep.bound:.1f} at ({x}, {y})"


def test_criterion_07_increment_variance_matches_prediction():
    """Empirical psi-increment variance sits within 3x of y*log(N/y)."""
    start = time.monotonic()
    rep = interval_variance(10**6, 10**3)
    elapsed = time.monotonic() - start
    assert 1.0 / 3.0 <= rep.ratio <= 3.0, f"variance ratio {rep.ratio:.4f}"
    assert elapsed <= 300.0, f"variance pass took {elapsed:.1f}s"


def test_criterion_08_squarefree_density():
    """Squarefree counts track 6x/pi^2 within 2*sqrt(x), and the partial
    reciprocal-zeta sum converges to the same constant."""
    target = 6.0 / math.pi**2
    for x in log_grid(100, 10**8, 30):
        err = abs(squarefree_count(x) - target * x)
        assert err <= 2.0 * math.sqrt(x), f"|Q({x}) - 6x/pi^2| = {err:.2f}"
    assert abs(inverse_zeta_partial(10**7, 2.0) - target) <= 1e-3


def test_criterion_09_integral_routes_and_envelopes():
    """Dual li routes agree to 1e-10, the ei branch seam is tight, and the
    envelope integrals stay within a factor 10 of their bounds."""
    x = 2.5
    while x <= 10.0**8:
        s, q = li_series(x), li_quadrature(x)
        assert abs(s - q) <= 1e-10 * max(1.0, abs(s)), f"li routes split at {x}"
        x *= 3.7
    series_side, cf_side = EiConfig(series_radius=45.0), EiConfig(series_radius=30.0)
    for z in (0.5 + 39.0j, -20.0 + 30.0j, 35.0 + 10.0j):
        a, b = ei(z, series_side), ei(z, cf_side)
        assert abs(a - b) <= 1e-10 * max(1.0, abs(a)), f"ei seam at {z}"
    for nu, c in ((5.0 / 12.0, 2.0), (0.5, 1.0)):
        for x in (10.0**3, 10.0**5, 10.0**8):
            rep = integral_envelope_check(nu, c, x)
            assert rep.ratio <= 10.0, f"envelope ratio {rep.ratio:.2f} at ({nu}, {c}, {x})"


def test_criterion_10_cli_is_byte_deterministic(capsys):
    """Each subcommand emits identical bytes across reruns and worker counts."""
    runs = [
        ["pi", "--x", "100000"],
        ["theta", "--at", "100,10000"],
        ["psi", "--x", "10000", "--route", "mangoldt"],
        ["mertens", "--scan", "20000"],
        ["li", "--x", "12345"],
        ["convert", "--x", "10000"],
        ["explicit", "--x", "1000", "--formula", "pi", "--n", "6", "--k", "50"],
        ["zeros", "--t", "100"],
        ["scan-density", "--x-lo", "100000", "--x-hi", "1000000", "--samples", "5"],
        ["scan-gap", "--points", "25", "--lo", "1000", "--hi", "100000"],
        ["scan-variance", "--n", "20000", "--y", "50"],
        ["profile-error", "--grid-lo", "100", "--grid-hi", "100000", "--per-decade", "2"],
        ["fit-epsilon", "--grid-lo", "1000", "--grid-hi", "1000000", "--per-decade", "3"],
    ]
    parallel = {"scan-density", "scan-gap", "scan-variance", "profile-error", "fit-epsilon"}

    def run(argv):
        code = cli_mod.main(argv)
        out = capsys.readouterr().out
        assert code == 0, argv
        return out

    for argv in runs:
        first, second = run(argv), run(argv)
        assert first == second, f"rerun bytes differ for {argv[0]}"
        if argv[0] in parallel:
            solo = run(argv + ["--workers", "1"])
            quad = run(argv + ["--workers", "4"])
            assert solo == quad == first, f"worker bytes differ for {argv[0]}"
