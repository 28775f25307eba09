"""Sieve primitives against brute-force oracles."""

import math

import numpy as np
import pytest

from primelab import PrimeSegment, is_prime, iter_segments, mangoldt_range, mobius_range, primes_in


def _trial_division(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def _mu_brute(n: int) -> int:
    if n == 1:
        return 1
    sign, m = 1, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            sign = -sign
        p += 1
    if m > 1:
        sign = -sign
    return sign


def _lambda_brute(n: int) -> float:
    for p in range(2, n + 1):
        if _trial_division(p):
            m = p
            while m <= n:
                if m == n:
                    return math.log(p)
                m *= p
    return 0.0


def test_primes_in_small_window():
    assert list(primes_in(10, 30)) == [11, 13, 17, 19, 23, 29]


def test_primes_in_matches_trial_division():
    got = set(int(p) for p in primes_in(2, 1000))
    want = {n for n in range(2, 1000) if _trial_division(n)}
    assert got == want


def test_primes_in_empty_window():
    assert len(primes_in(24, 28)) == 0


def test_is_prime_spot_checks():
    for n in (2, 3, 5, 97, 7919, 2**31 - 1):
        assert is_prime(n)
    for n in (0, 1, 4, 100, 7917, 2**31 + 1):
        assert not is_prime(n)


def test_is_prime_matches_trial_division():
    for n in range(2000):
        assert is_prime(n) == _trial_division(n), n


def test_mobius_range_first_values():
    assert list(mobius_range(1, 13)) == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_mobius_range_matches_brute_force():
    got = mobius_range(500, 1500)
    for offset, n in enumerate(range(500, 1500)):
        assert int(got[offset]) == _mu_brute(n), n


def test_mangoldt_range_first_values():
    got = mangoldt_range(1, 11)
    want = [0.0, math.log(2), math.log(3), math.log(2), math.log(5),
            0.0, math.log(7), math.log(2), math.log(3), 0.0]
    assert np.allclose(got, want, rtol=0, atol=1e-12)


def test_mangoldt_range_matches_brute_force():
    got = mangoldt_range(100, 300)
    for offset, n in enumerate(range(100, 300)):
        assert abs(float(got[offset]) - _lambda_brute(n)) < 1e-12, n


def test_iter_segments_concatenation_matches_whole_range():
    parts = list(iter_segments(2, 10**5, segment_size=7919))
    joined = np.concatenate(parts)
    assert np.array_equal(joined, primes_in(2, 10**5))
    assert len(joined) == 9592


def test_iter_segments_yields_sorted_blocks():
    for arr in iter_segments(10**4, 2 * 10**4, segment_size=3000):
        assert np.all(arr[:-1] < arr[1:])


def test_prime_segment_build_tables_agree():
    seg = PrimeSegment.build(100, 400, with_mu=True, with_mangoldt=True)
    assert len(seg) == 300
    assert np.array_equal(seg.primes(), primes_in(100, 400))
    assert np.array_equal(seg.mu, mobius_range(100, 400))
    assert np.allclose(seg.mangoldt, mangoldt_range(100, 400), rtol=0, atol=0)


def test_range_validation_rejects_bad_bounds():
    with pytest.raises(ValueError):
        primes_in(1, 10)
    with pytest.raises(ValueError):
        primes_in(10, 10)
    with pytest.raises(ValueError):
        mobius_range(0, 5)
    with pytest.raises(ValueError):
        mangoldt_range(5, 5)
