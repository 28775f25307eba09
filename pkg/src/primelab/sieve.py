"""Segmented sieves and arithmetic-function tables.

Everything downstream (counting, Chebyshev sums, Mertens scans) is built on
the block primitives here: an odd-only segmented sieve of Eratosthenes, plus
block tables for the Mobius and von Mangoldt functions.  Segments are plain
numpy arrays so the crossing-off loops stay vectorized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

# Integers per segment.  One odd-mask byte per odd integer, so a segment
# costs segment_size / 2 bytes; the default keeps the working set cache-sized
# while amortizing per-slice numpy overhead.
DEFAULT_SEGMENT_SIZE = 1 << 21

MAX_SIEVE_BOUND = 1 << 63

# Deterministic Miller-Rabin witness set: correct for every n < 3.3e24,
# which covers the full supported range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_base_mask: Optional[np.ndarray] = None  # odd-index primality mask, cached
_base_limit = 0


def _simple_odd_mask(limit: int) -> np.ndarray:
    """Odd-index primality mask for [0, limit): mask[i] covers n = 2*i + 1."""
    half = (limit + 1) // 2
    mask = np.ones(half, dtype=bool)
    mask[0] = False  # n = 1
    for i in range(1, (math.isqrt(limit) + 1) // 2 + 1):
        if mask[i]:
            p = 2 * i + 1
            start = (p * p) // 2
            if start < half:
                mask[start::p] = False
    return mask


def _ensure_base(limit: int) -> np.ndarray:
    """Grow and cache the base odd mask to cover primes up to `limit`."""
    global _base_mask, _base_limit
    if limit > _base_limit:
        new_limit = max(limit, 1 << 16, 2 * _base_limit)
        _base_mask = _simple_odd_mask(new_limit + 1)
        _base_limit = new_limit
    return _base_mask


def base_primes(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (cached, grows on demand)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = _ensure_base(limit)
    idx = np.flatnonzero(mask[: limit // 2 + 1])
    odd = 2 * idx.astype(np.int64) + 1
    odd = odd[odd <= limit]
    return np.concatenate(([np.int64(2)], odd))


def _odd_mask_block(lo: int, hi: int, primes: np.ndarray) -> tuple[int, np.ndarray]:
    """Primality mask over odd integers of [lo, hi).

    Returns (first_odd, mask) with mask[i] describing first_odd + 2*i.
    `primes` must contain every odd prime <= sqrt(hi - 1).
    """
    first_odd = lo | 1
    count = max(0, (hi - first_odd + 1) // 2)
    mask = np.ones(count, dtype=bool)
    if count == 0:
        return first_odd, mask
    root = math.isqrt(hi - 1)
    for p in primes:
        p = int(p)
        if p == 2:
            continue
        if p > root:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start % 2 == 0:
            start += p
        if start < hi:
            mask[(start - first_odd) // 2 :: p] = False
    # 1 is not prime; odd primes below sqrt are their own first multiples,
    # so they survive the loop above.
    if first_odd == 1:
        mask[0] = False
    return first_odd, mask


def iter_segments(
    lo: int, hi: int, *, segment_size: int = DEFAULT_SEGMENT_SIZE
) -> Iterator[np.ndarray]:
    """Yield int64 arrays of the primes in [lo, hi), in ascending order.

    Segments are sieved independently; concatenating the yields is identical
    to sieving the whole range at once.
    """
    lo = max(lo, 2)
    if hi <= lo:
        return
    primes = base_primes(math.isqrt(hi - 1))
    for seg_lo in range(lo, hi, segment_size):
        seg_hi = min(seg_lo + segment_size, hi)
        first_odd, mask = _odd_mask_block(seg_lo, seg_hi, primes)
        found = first_odd + 2 * np.flatnonzero(mask).astype(np.int64)
        if seg_lo <= 2 < seg_hi:
            found = np.concatenate(([np.int64(2)], found))
        yield found


def primes_in(lo: int, hi: int, *, segment_size: int = DEFAULT_SEGMENT_SIZE) -> np.ndarray:
    """All primes p with lo <= p < hi, ascending.

    Requires 2 <= lo < hi <= 2**63.
    """
    _check_range(lo, hi)
    parts = list(iter_segments(lo, hi, segment_size=segment_size))
    if not parts:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(parts)


def count_primes_block(lo: int, hi: int, *, segment_size: int = DEFAULT_SEGMENT_SIZE) -> int:
    """Number of primes in [lo, hi) without materializing them all at once."""
    lo = max(lo, 2)
    if hi <= lo:
        return 0
    primes = base_primes(math.isqrt(hi - 1))
    total = 0
    for seg_lo in range(lo, hi, segment_size):
        seg_hi = min(seg_lo + segment_size, hi)
        _, mask = _odd_mask_block(seg_lo, seg_hi, primes)
        total += int(np.count_nonzero(mask))
        if seg_lo <= 2 < seg_hi:
            total += 1
    return total


def mobius_range(lo: int, hi: int) -> np.ndarray:
    """Mobius function over [lo, hi) as an int8 array; requires 1 <= lo < hi.

    Block algorithm: accumulate the product of distinct small primes dividing
    each n and a running sign; entries hit by a prime square are zeroed; any
    n whose accumulated product falls short of n has exactly one prime factor
    above sqrt(hi), which flips the sign once more.
    """
    if lo < 1:
        raise ValueError(f"mobius_range needs lo >= 1, got lo={lo}")
    _check_order(lo, hi)
    n = hi - lo
    sign = np.ones(n, dtype=np.int8)
    prod = np.ones(n, dtype=np.int64)
    squareful = np.zeros(n, dtype=bool)
    for p in base_primes(math.isqrt(hi - 1)):
        p = int(p)
        start = ((lo + p - 1) // p) * p
        if start < hi:
            sl = slice(start - lo, None, p)
            sign[sl] *= -1
            prod[sl] *= p
        p2 = p * p
        start2 = ((lo + p2 - 1) // p2) * p2
        if start2 < hi:
            squareful[start2 - lo :: p2] = True
    values = np.arange(lo, hi, dtype=np.int64)
    sign[prod != values] *= -1
    sign[squareful] = 0
    return sign


def mangoldt_range(lo: int, hi: int) -> np.ndarray:
    """Von Mangoldt function over [lo, hi) as float64; requires 1 <= lo < hi.

    lam[n - lo] = log p when n = p**k, else 0.
    """
    if lo < 1:
        raise ValueError(f"mangoldt_range needs lo >= 1, got lo={lo}")
    _check_order(lo, hi)
    lam = np.zeros(hi - lo, dtype=np.float64)
    for ps in iter_segments(max(lo, 2), hi):
        lam[ps - lo] = np.log(ps)
    # Proper prime powers p**k, k >= 2; their bases are at most sqrt(hi).
    for p in base_primes(math.isqrt(hi - 1)):
        p = int(p)
        logp = math.log(p)
        pk = p * p
        while pk < hi:
            if pk >= lo:
                lam[pk - lo] = logp
            pk *= p
    return lam


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**63; n < 2 is False."""
    if n < 2:
        return False
    if n >= MAX_SIEVE_BOUND:
        raise ValueError(f"is_prime supports n < 2**63, got {n}")
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeSegment:
    """Materialized block [lo, hi): primality flags plus optional tables."""

    lo: int
    hi: int
    flags: np.ndarray
    mu: Optional[np.ndarray] = None
    mangoldt: Optional[np.ndarray] = None

    @classmethod
    def build(
        cls, lo: int, hi: int, *, with_mu: bool = False, with_mangoldt: bool = False
    ) -> "PrimeSegment":
        _check_range(lo, hi)
        flags = np.zeros(hi - lo, dtype=bool)
        for ps in iter_segments(lo, hi):
            flags[ps - lo] = True
        mu = mobius_range(lo, hi) if with_mu else None
        lam = mangoldt_range(lo, hi) if with_mangoldt else None
        return cls(lo=lo, hi=hi, flags=flags, mu=mu, mangoldt=lam)

    def primes(self) -> np.ndarray:
        return self.lo + np.flatnonzero(self.flags).astype(np.int64)

    def __len__(self) -> int:
        return self.hi - self.lo


def _check_order(lo: int, hi: int) -> None:
    if hi <= lo:
        raise ValueError(f"empty or inverted range [{lo}, {hi}): need lo < hi")
    if hi > MAX_SIEVE_BOUND:
        raise ValueError(f"range end {hi} exceeds supported bound 2**63")


def _check_range(lo: int, hi: int) -> None:
    if lo < 2:
        raise ValueError(f"prime ranges start at 2; got lo={lo}")
    _check_order(lo, hi)
