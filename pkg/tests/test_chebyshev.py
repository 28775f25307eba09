"""Chebyshev sums: theta, psi, their difference, checkpoints, sign scan."""

import math

import numpy as np
import pytest

from primelab import (
    primes_in,
    psi,
    psi_checkpoints,
    psi_from_mangoldt,
    psi_minus_theta,
    sign_change_scan,
    theta,
    theta_ap,
    theta_checkpoints,
)


def test_theta_frozen_values():
    assert theta(100) == pytest.approx(83.72839039906393, abs=1e-10)
    assert theta(10**6) == pytest.approx(998484.1750256341, rel=1e-12)


def test_theta_matches_direct_log_sum():
    want = math.fsum(math.log(int(p)) for p in primes_in(2, 10**4))
    assert theta(10**4 - 1) == pytest.approx(want, rel=1e-14)


def test_psi_frozen_values():
    assert psi(100) == pytest.approx(94.0453112293574, abs=1e-10)
    assert psi(10**6) == pytest.approx(999586.5974956327, rel=1e-12)


def test_psi_is_theta_plus_prime_power_tail():
    for x in (100, 10**4, 10**6):
        assert psi(x) == pytest.approx(theta(x) + psi_minus_theta(x), rel=1e-14)


def test_psi_minus_theta_frozen_value():
    assert psi_minus_theta(100) == pytest.approx(10.31692083029347, abs=1e-10)


def test_psi_routes_agree():
    for x in (100, 9973, 10**5):
        assert psi_from_mangoldt(x) == pytest.approx(psi(x), rel=1e-12), x


def test_theta_ap_residue_split():
    total = theta_ap(10**6, 3, 1) + theta_ap(10**6, 3, 2) + math.log(3)
    assert total == pytest.approx(theta(10**6), rel=1e-12)
    assert theta_ap(10**6, 3, 2) == pytest.approx(499375.2250123252, rel=1e-12)


def test_theta_checkpoints_match_single_calls():
    xs = [100, 1000, 10**4, 10**5]
    counts, sums = theta_checkpoints(xs)
    for x, c, s in zip(xs, counts, sums):
        assert int(c) == len(primes_in(2, x + 1))
        assert float(s) == pytest.approx(theta(x), rel=1e-14)


def test_psi_checkpoints_match_single_calls():
    xs = [100, 1000, 10**4]
    vals = psi_checkpoints(xs)
    for x, v in zip(xs, vals):
        assert float(v) == pytest.approx(psi(x), rel=1e-14)


def test_sign_change_scan_frozen_summary():
    rep = sign_change_scan(2, 10**4, 1)
    assert rep.count == 621
    assert rep.witnesses[:2] == [(18, 19), (19, 20)]
    assert rep.samples == 9999
    assert rep.window_coverage_short == pytest.approx(0.9985855728429985, rel=1e-12)
    assert rep.window_coverage_long == 1.0


def test_sign_change_scan_rejects_bad_range():
    with pytest.raises(ValueError):
        sign_change_scan(10, 10, 1)
    with pytest.raises(ValueError):
        sign_change_scan(2, 100, 0)


def test_theta_psi_empty_below_two():
    assert theta(1) == 0.0
    assert psi(0) == 0.0


def test_psi_minus_theta_rejects_tiny_argument():
    with pytest.raises(ValueError):
        psi_minus_theta(1.5)
