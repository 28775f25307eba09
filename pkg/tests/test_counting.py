"""Prime counting routes: streaming sieve, Legendre recursion, windows, residues."""

import pytest

from primelab import (
    brun_titchmarsh_ratio,
    pi,
    pi_ap,
    pi_checkpoints,
    pi_interval,
    pi_legendre,
    primes_in,
)


def test_pi_known_anchors():
    assert pi(10) == 4
    assert pi(100) == 25
    assert pi(1000) == 168
    assert pi(10**4) == 1229
    assert pi(10**6) == 78498


def test_pi_small_edge_cases():
    assert pi(1) == 0
    assert pi(2) == 1
    assert pi(3) == 2


def test_pi_legendre_matches_sieve_on_sweep():
    for x in (10, 97, 1000, 4999, 10**4, 10**5, 123456):
        assert pi_legendre(x) == pi(x), x


def test_pi_legendre_at_million():
    assert pi_legendre(10**6) == 78498


def test_pi_checkpoints_matches_single_calls():
    xs = [10, 100, 1000, 10**4, 10**5]
    counts = pi_checkpoints(xs)
    assert [int(c) for c in counts] == [pi(x) for x in xs]


def test_pi_interval_counts_window():
    assert pi_interval(10**6, 1000) == 75
    assert pi_interval(100, 20) == len(primes_in(101, 121))


def test_pi_ap_residue_classes_partition():
    # mod 4: every odd prime is 1 or 3; the prime 2 sits in neither class
    assert pi_ap(10**5, 4, 1) == 4783
    assert pi_ap(10**5, 4, 3) == 4808
    assert pi_ap(10**5, 4, 1) + pi_ap(10**5, 4, 3) + 1 == pi(10**5)
    assert pi_ap(10**5, 3, 1) == 4784
    assert pi_ap(10**5, 3, 2) == 4807


def test_pi_ap_small_brute():
    # primes <= 20 congruent to 3 mod 4: 3, 7, 11, 19
    assert pi_ap(20, 4, 3) == 4


def test_pi_ap_rejects_shared_factor():
    with pytest.raises(ValueError):
        pi_ap(100, 4, 2)


def test_brun_titchmarsh_window_bound():
    rep = brun_titchmarsh_ratio(10**6, 1000)
    assert rep.count == 75
    assert rep.count <= rep.bound
    assert rep.satisfied


def test_brun_titchmarsh_rejects_short_window():
    with pytest.raises(ValueError):
        brun_titchmarsh_ratio(10**6, 1)


def test_pi_below_two_is_zero():
    assert pi(0) == 0
    assert pi(-5) == 0
    assert pi(1.9) == 0


def test_pi_legendre_rejects_tiny_argument():
    with pytest.raises(ValueError):
        pi_legendre(0)
