"""Chebyshev prime log-sums theta and psi, their difference, and sign-change
scans of psi(x) - x.

All big sums are accumulated segment by segment: numpy pairwise summation
inside a segment, math.fsum across segment subtotals, so results are stable
to well below the 1e-9 relative tolerances used by the identity checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import sieve


def _integer_root(x: int, k: int) -> int:
    """Largest r with r**k <= x, exact."""
    if k == 1:
        return x
    if k == 2:
        return math.isqrt(x)
    r = int(round(x ** (1.0 / k)))
    while r > 1 and r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def theta(x: float) -> float:
    """Sum of log p over primes p <= x; 0 for x < 2."""
    xi = math.floor(x)
    if xi < 2:
        return 0.0
    parts = [float(np.sum(np.log(ps))) for ps in sieve.iter_segments(2, xi + 1)]
    return math.fsum(parts)


def theta_ap(x: float, q: int, a: int) -> float:
    """Sum of log p over primes p <= x with p congruent to a modulo q."""
    if q < 2:
        raise ValueError(f"modulus must be >= 2, got q={q}")
    if math.gcd(a, q) != 1:
        raise ValueError(f"residue {a} shares a factor with modulus {q}")
    xi = math.floor(x)
    if xi < 2:
        return 0.0
    a %= q
    parts = []
    for ps in sieve.iter_segments(2, xi + 1):
        sel = ps[ps % q == a]
        if sel.size:
            parts.append(float(np.sum(np.log(sel))))
    return math.fsum(parts)


def psi_minus_theta(x: float) -> float:
    """The proper-prime-power part of psi: sum of theta(x**(1/k)) for k >= 2.

    Requires x >= 4 (below that the difference is identically 0).
    """
    if x < 4:
        raise ValueError(f"psi_minus_theta needs x >= 4, got {x}")
    xi = math.floor(x)
    parts = []
    for k in range(2, xi.bit_length() + 1):
        r = _integer_root(xi, k)
        if r < 2:
            break
        parts.append(theta(r))
    return math.fsum(parts)


def psi(x: float) -> float:
    """Chebyshev psi(x) = sum of Lambda(n) for n <= x, via the finite series
    theta(x) + theta(x**(1/2)) + theta(x**(1/3)) + ...; 0 for x < 2."""
    xi = math.floor(x)
    if xi < 2:
        return 0.0
    if xi < 4:
        return theta(xi)
    return theta(xi) + psi_minus_theta(xi)


def psi_from_mangoldt(x: float, *, segment_size: int = sieve.DEFAULT_SEGMENT_SIZE) -> float:
    """psi(x) summed directly over the von Mangoldt table (independent route)."""
    xi = math.floor(x)
    if xi < 2:
        return 0.0
    parts = []
    for lo in range(2, xi + 1, segment_size):
        hi = min(lo + segment_size, xi + 1)
        parts.append(float(np.sum(sieve.mangoldt_range(lo, hi))))
    return math.fsum(parts)


def theta_checkpoints(xs: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """(pi, theta) at each checkpoint of strictly ascending integer `xs`.

    One streaming pass over [2, max(xs)]; each theta value is a compensated
    total of every prime log below the checkpoint.
    """
    xs = np.asarray(xs, dtype=np.int64)
    if xs.size == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0)
    if np.any(np.diff(xs) <= 0):
        raise ValueError("checkpoints must be strictly ascending")
    counts = np.zeros(xs.size, dtype=np.int64)
    sums = np.zeros(xs.size, dtype=np.float64)
    run_count = 0
    run_parts: list[float] = []
    next_idx = 0
    hi = int(xs[-1]) + 1
    for ps in sieve.iter_segments(2, hi):
        if ps.size == 0:
            continue
        logs = np.log(ps)
        while next_idx < xs.size and xs[next_idx] < ps[-1]:
            cut = int(np.searchsorted(ps, xs[next_idx], side="right"))
            counts[next_idx] = run_count + cut
            sums[next_idx] = math.fsum(run_parts + [float(np.sum(logs[:cut]))])
            next_idx += 1
        run_count += ps.size
        run_parts.append(float(np.sum(logs)))
        if len(run_parts) > 256:
            run_parts = [math.fsum(run_parts)]
    total = math.fsum(run_parts)
    while next_idx < xs.size:
        counts[next_idx] = run_count
        sums[next_idx] = total
        next_idx += 1
    return counts, sums


def psi_checkpoints(xs: Sequence[int]) -> np.ndarray:
    """psi at each checkpoint of strictly ascending integer `xs`, by one
    streaming pass over the von Mangoldt table."""
    xs = np.asarray(xs, dtype=np.int64)
    if xs.size == 0:
        return np.zeros(0)
    if np.any(np.diff(xs) <= 0):
        raise ValueError("checkpoints must be strictly ascending")
    out = np.zeros(xs.size, dtype=np.float64)
    run_parts: list[float] = []
    next_idx = 0
    hi = int(xs[-1]) + 1
    step = sieve.DEFAULT_SEGMENT_SIZE
    for lo in range(2, hi, step):
        seg_hi = min(lo + step, hi)
        lam = sieve.mangoldt_range(lo, seg_hi)
        while next_idx < xs.size and xs[next_idx] < seg_hi:
            cut = int(xs[next_idx]) - lo + 1
            out[next_idx] = math.fsum(run_parts + [float(np.sum(lam[:cut]))])
            next_idx += 1
        run_parts.append(float(np.sum(lam)))
        if len(run_parts) > 256:
            run_parts = [math.fsum(run_parts)]
    total = math.fsum(run_parts)
    while next_idx < xs.size:
        out[next_idx] = total
        next_idx += 1
    return out


@dataclass(frozen=True)
class SignChangeReport:
    """Sign changes of psi(x) - x over a sampled integer range."""

    lo: int
    hi: int
    step: int
    witnesses: list[tuple[int, int]] = field(default_factory=list)
    samples: int = 0
    window_coverage_short: float = 0.0  # windows [x, 2.02 x] holding a witness
    window_coverage_long: float = 0.0  # windows [x, 19 x] holding a witness

    @property
    def count(self) -> int:
        return len(self.witnesses)


def sign_change_scan(lo: int, hi: int, step: int = 1) -> SignChangeReport:
    """Scan psi(x) - x at x = lo, lo+step, ... <= hi for sign changes.

    A witness (a, b) is a consecutive sample pair with strictly opposite
    signs.  Coverage fields report the fraction of scanned windows
    [x, 2.02 x] and [x, 19 x] (those fully inside [lo, hi]) that contain at
    least one witness; coverage is reported, not asserted.
    """
    if lo < 2:
        raise ValueError(f"scan start must be >= 2, got {lo}")
    if hi <= lo:
        raise ValueError(f"empty scan range [{lo}, {hi}]")
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    xs = np.arange(lo, hi + 1, step, dtype=np.int64)
    psis = psi_checkpoints(xs)
    delta = psis - xs.astype(np.float64)
    signs = np.sign(delta)
    flips = np.flatnonzero(signs[:-1] * signs[1:] < 0)
    witnesses = [(int(xs[i]), int(xs[i + 1])) for i in flips]

    def coverage(factor: float) -> float:
        starts = np.array([a for a, _ in witnesses], dtype=np.float64)
        total = 0
        covered = 0
        for xv in xs:
            upper = factor * float(xv)
            if upper > hi:
                break
            total += 1
            if starts.size and np.any((starts >= xv) & (starts <= upper)):
                covered += 1
        return covered / total if total else 0.0

    return SignChangeReport(
        lo=lo,
        hi=hi,
        step=step,
        witnesses=witnesses,
        samples=int(xs.size),
        window_coverage_short=coverage(2.02),
        window_coverage_long=coverage(19.0),
    )
