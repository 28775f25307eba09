"""Prime counting: direct sieve counts, the partial-sieve formula, intervals,
and arithmetic-progression counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import sieve

# Brun-Titchmarsh style bound: pi(x + y) - pi(x) <= 2 y / (log y + 3.53).
BT_SHIFT = 3.53

# First primes used by the precomputed coprimality wheel in the partial-sieve
# recursion; their product is the wheel modulus.
_WHEEL_PRIMES = (2, 3, 5, 7, 11, 13)
_WHEEL_MOD = 30030
_WHEEL_TOTIENT = 5760

_wheel_table: np.ndarray | None = None

_small_counts: np.ndarray | None = None  # cumulative pi over [0, limit]
_small_limit = 0
_SMALL_TABLE_CAP = 1 << 21


def _small_pi_table(limit: int) -> np.ndarray:
    """Cumulative prime counts up to `limit` (table[n] = pi(n))."""
    global _small_counts, _small_limit
    if limit > _small_limit:
        new_limit = max(limit, _SMALL_TABLE_CAP)
        flags = np.zeros(new_limit + 1, dtype=bool)
        for ps in sieve.iter_segments(2, new_limit + 1):
            flags[ps] = True
        _small_counts = np.cumsum(flags, dtype=np.int64)
        _small_limit = new_limit
    return _small_counts


def pi(x: float) -> int:
    """Exact number of primes <= x (x may be real); 0 for x < 2."""
    xi = math.floor(x)
    if xi < 2:
        return 0
    if xi <= _small_limit:
        return int(_small_counts[xi])
    if xi <= _SMALL_TABLE_CAP:
        return int(_small_pi_table(xi)[xi])
    return sieve.count_primes_block(2, xi + 1)


def _wheel() -> np.ndarray:
    global _wheel_table
    if _wheel_table is None:
        coprime = np.ones(_WHEEL_MOD, dtype=bool)
        for p in _WHEEL_PRIMES:
            coprime[::p] = False
        _wheel_table = np.cumsum(coprime, dtype=np.int64)
    return _wheel_table


def _phi_wheel(x: int) -> int:
    """Count of 1 <= n <= x coprime to the wheel primes."""
    if x <= 0:
        return 0
    table = _wheel()
    return (x // _WHEEL_MOD) * _WHEEL_TOTIENT + int(table[x % _WHEEL_MOD])


def pi_legendre(x: int) -> int:
    """Prime count by the partial-sieve identity
    pi(x) = pi(sqrt(x)) - 1 + sum_d mu(d) * floor(x / d)
    with d running over divisors of the product of primes <= sqrt(x).

    The inclusion-exclusion sum is evaluated as the classical phi(x, a)
    recursion phi(x, a) = phi(x, a-1) - phi(x // p_a, a-1), seeded by a
    coprimality wheel over the first six primes.  Exact integer arithmetic
    throughout.  Requires 4 <= x.
    """
    if x < 4:
        raise ValueError(f"pi_legendre needs x >= 4, got {x}")
    root = math.isqrt(x)
    primes = [int(p) for p in sieve.base_primes(root)]
    a = len(primes)
    table = _small_pi_table(min(max(root * root, 4), _SMALL_TABLE_CAP))
    table_limit = len(table) - 1
    use_wheel = a >= len(_WHEEL_PRIMES)
    floor_level = len(_WHEEL_PRIMES) if use_wheel else 0
    memo: dict[tuple[int, int], int] = {}

    def phi(n: int, b: int) -> int:
        if use_wheel and b == floor_level:
            return _phi_wheel(n)
        if b == 0:
            return n
        if n < primes[b - 1]:
            return 1 if n >= 1 else 0
        # Once every composite survivor would need a factor > sqrt(n), the
        # survivors are 1 and the primes in (p_b, n].
        if n <= table_limit and (b >= a or primes[b] * primes[b] > n):
            return int(table[n]) - b + 1
        key = (n, b)
        cached = memo.get(key)
        if cached is not None:
            return cached
        # Unroll phi(n, b) = phi(n, b-1) - phi(n // p_b, b-1) down to the
        # wheel; neither shortcut above can newly fire at (n, j) for j < b,
        # so the chain is exact and keeps the recursion depth logarithmic.
        total = _phi_wheel(n) if use_wheel else n
        for j in range(b, floor_level, -1):
            total -= phi(n // primes[j - 1], j - 1)
        memo[key] = total
        return total

    return pi(root) - 1 + phi(x, a)


def pi_interval(x: int, y: int) -> int:
    """Primes in the half-open interval (x, x + y], by sieving only it."""
    if y < 1:
        raise ValueError(f"interval length must be >= 1, got y={y}")
    if x < 0:
        raise ValueError(f"interval start must be >= 0, got x={x}")
    lo = max(x + 1, 2)
    hi = x + y + 1
    if hi <= lo:
        return 0
    return sieve.count_primes_block(lo, hi)


def pi_ap(x: int, q: int, a: int) -> int:
    """Primes p <= x with p congruent to a modulo q; requires gcd(a, q) = 1."""
    if q < 2:
        raise ValueError(f"modulus must be >= 2, got q={q}")
    if math.gcd(a, q) != 1:
        raise ValueError(f"residue {a} shares a factor with modulus {q}")
    if x < 2:
        return 0
    a %= q
    total = 0
    for ps in sieve.iter_segments(2, x + 1):
        total += int(np.count_nonzero(ps % q == a))
    return total


@dataclass(frozen=True)
class IntervalBoundReport:
    """Sieve count for (x, x+y] against the 2y/(log y + 3.53) bound."""

    x: int
    y: int
    count: int
    bound: float

    @property
    def satisfied(self) -> bool:
        return self.count <= self.bound


def brun_titchmarsh_ratio(x: int, y: int) -> IntervalBoundReport:
    """Compare the exact count of primes in (x, x+y] with the sieve bound."""
    if y < 2:
        raise ValueError(f"window must satisfy y >= 2, got y={y}")
    count = pi_interval(x, y)
    bound = 2.0 * y / (math.log(y) + BT_SHIFT)
    return IntervalBoundReport(x=x, y=y, count=count, bound=bound)


def pi_checkpoints(xs: Sequence[int]) -> np.ndarray:
    """pi at each checkpoint of ascending `xs`, via one streaming pass."""
    xs = np.asarray(xs, dtype=np.int64)
    if xs.size == 0:
        return np.zeros(0, dtype=np.int64)
    if np.any(np.diff(xs) <= 0):
        raise ValueError("checkpoints must be strictly ascending")
    out = np.zeros(xs.size, dtype=np.int64)
    running = 0
    next_idx = 0
    hi = int(xs[-1]) + 1
    for ps in sieve.iter_segments(2, hi):
        if ps.size == 0:
            continue
        seg_hi = int(ps[-1])
        while next_idx < xs.size and xs[next_idx] < seg_hi:
            out[next_idx] = running + int(np.searchsorted(ps, xs[next_idx], side="right"))
            next_idx += 1
        running += ps.size
    while next_idx < xs.size:
        out[next_idx] = running
        next_idx += 1
    return out
