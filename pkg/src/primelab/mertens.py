"""Mertens partial sums of the Mobius function, squarefree counts, envelope
scans, and the truncated reciprocal-zeta shadow sum."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import sieve

ENVELOPE_EXPONENT = 7.0 / 12.0


def mertens(x: int) -> int:
    """M(x) = sum of mu(n) for n <= x; requires x >= 1."""
    if x < 1:
        raise ValueError(f"mertens needs x >= 1, got {x}")
    total = 0
    step = sieve.DEFAULT_SEGMENT_SIZE
    for lo in range(1, x + 1, step):
        hi = min(lo + step, x + 1)
        total += int(sieve.mobius_range(lo, hi).sum(dtype=np.int64))
    return total


def mertens_checkpoints(xs: Sequence[int]) -> np.ndarray:
    """M at each checkpoint of strictly ascending integer `xs` (one pass)."""
    xs = np.asarray(xs, dtype=np.int64)
    if xs.size == 0:
        return np.zeros(0, dtype=np.int64)
    if xs[0] < 1:
        raise ValueError("checkpoints must be >= 1")
    if np.any(np.diff(xs) <= 0):
        raise ValueError("checkpoints must be strictly ascending")
    out = np.zeros(xs.size, dtype=np.int64)
    running = 0
    next_idx = 0
    hi = int(xs[-1]) + 1
    step = sieve.DEFAULT_SEGMENT_SIZE
    for lo in range(1, hi, step):
        seg_hi = min(lo + step, hi)
        cs = np.cumsum(sieve.mobius_range(lo, seg_hi), dtype=np.int64)
        while next_idx < xs.size and xs[next_idx] < seg_hi:
            out[next_idx] = running + int(cs[int(xs[next_idx]) - lo])
            next_idx += 1
        running += int(cs[-1])
    return out


def squarefree_count(x: int) -> int:
    """Q(x) = number of squarefree n <= x, via Q(x) = sum_d mu(d) floor(x/d^2).

    Exact integer arithmetic; the d-sum runs over d <= sqrt(x), so this route
    is independent of any |mu| prefix accumulation.
    """
    if x < 1:
        raise ValueError(f"squarefree_count needs x >= 1, got {x}")
    root = math.isqrt(x)
    mu = sieve.mobius_range(1, root + 1).astype(np.int64)
    d = np.arange(1, root + 1, dtype=np.int64)
    return int(np.sum(mu * (x // (d * d))))


@dataclass(frozen=True)
class MertensScanReport:
    """Streaming check of |M(x)| <= x**(7/12) for every integer x <= limit."""

    limit: int
    violations: list[tuple[int, int]]
    max_envelope_ratio: float
    argmax_envelope: int
    min_sqrt_ratio: float
    argmin_sqrt: int
    max_sqrt_ratio: float
    argmax_sqrt: int
    final_value: int

    @property
    def satisfied(self) -> bool:
        return not self.violations


def mertens_scan(
    limit: int, *, segment_size: int = sieve.DEFAULT_SEGMENT_SIZE
) -> MertensScanReport:
    """Scan M(x) for all integer x in [1, limit] against the x**(7/12)
    envelope, tracking the extreme normalized ratios M(x)/sqrt(x).

    Single sequential pass (the prefix-sum merge is order-dependent); each
    segment first tries the cheap bound max|M| <= seg_lo**(7/12) and only
    falls back to an elementwise comparison when that fails.
    """
    if limit < 1:
        raise ValueError(f"scan limit must be >= 1, got {limit}")
    violations: list[tuple[int, int]] = []
    max_env = -1.0
    argmax_env = 1
    min_sqrt = math.inf
    argmin_sqrt = 1
    max_sqrt = -math.inf
    argmax_sqrt = 1
    running = 0
    for lo in range(1, limit + 1, segment_size):
        hi = min(lo + segment_size, limit + 1)
        cs = np.cumsum(sieve.mobius_range(lo, hi), dtype=np.int64) + running
        xs = np.arange(lo, hi, dtype=np.float64)
        abs_cs = np.abs(cs)
        peak = int(abs_cs.max())
        envelope_floor = float(lo) ** ENVELOPE_EXPONENT
        if peak > envelope_floor:
            env = xs**ENVELOPE_EXPONENT
            bad = np.flatnonzero(abs_cs > env)
            for i in bad:
                violations.append((lo + int(i), int(cs[i])))
            ratios = abs_cs / env
            j = int(np.argmax(ratios))
            if float(ratios[j]) > max_env:
                max_env = float(ratios[j])
                argmax_env = lo + j
        else:
            # Cheap upper bound on the ratio within this segment.
            ratio_bound = peak / envelope_floor
            if ratio_bound > max_env:
                env = xs**ENVELOPE_EXPONENT
                ratios = abs_cs / env
                j = int(np.argmax(ratios))
                if float(ratios[j]) > max_env:
                    max_env = float(ratios[j])
                    argmax_env = lo + j
        sq = cs / np.sqrt(xs)
        j = int(np.argmin(sq))
        if float(sq[j]) < min_sqrt:
            min_sqrt = float(sq[j])
            argmin_sqrt = lo + j
        j = int(np.argmax(sq))
        if float(sq[j]) > max_sqrt:
            max_sqrt = float(sq[j])
            argmax_sqrt = lo + j
        running = int(cs[-1])
    return MertensScanReport(
        limit=limit,
        violations=violations,
        max_envelope_ratio=max_env,
        argmax_envelope=argmax_env,
        min_sqrt_ratio=min_sqrt,
        argmin_sqrt=argmin_sqrt,
        max_sqrt_ratio=max_sqrt,
        argmax_sqrt=argmax_sqrt,
        final_value=running,
    )


@dataclass(frozen=True)
class MertensEnvelopeReport:
    """Grid rows (x, M(x), |M| / x**(7/12), M / sqrt(x)) plus violations."""

    xs: np.ndarray
    values: np.ndarray
    envelope_ratios: np.ndarray
    sqrt_ratios: np.ndarray
    violations: list[int] = field(default_factory=list)

    @property
    def satisfied(self) -> bool:
        return not self.violations


def mertens_envelope(xs: Sequence[int]) -> MertensEnvelopeReport:
    """Evaluate M on an ascending integer grid against the x**(7/12) envelope."""
    grid = np.asarray(xs, dtype=np.int64)
    values = mertens_checkpoints(grid)
    fx = grid.astype(np.float64)
    env_ratios = np.abs(values) / fx**ENVELOPE_EXPONENT
    sqrt_ratios = values / np.sqrt(fx)
    violations = [int(grid[i]) for i in np.flatnonzero(env_ratios > 1.0)]
    return MertensEnvelopeReport(
        xs=grid,
        values=values,
        envelope_ratios=env_ratios,
        sqrt_ratios=sqrt_ratios,
        violations=violations,
    )


def inverse_zeta_partial(n_terms: int, s: float = 2.0) -> float:
    """Truncated Abel-summed series sum_{n<=N} M(n) (n**-s - (n+1)**-s).

    For s > 1 the full series equals 1/zeta(s); at s = 2 the partial sums
    approach 6/pi**2.  Streaming evaluation alongside the Mobius scan.
    """
    if n_terms < 1:
        raise ValueError(f"need at least one term, got {n_terms}")
    if s <= 1:
        raise ValueError(f"series requires s > 1, got s={s}")
    parts: list[float] = []
    running = 0
    step = sieve.DEFAULT_SEGMENT_SIZE
    for lo in range(1, n_terms + 1, step):
        hi = min(lo + step, n_terms + 1)
        cs = np.cumsum(sieve.mobius_range(lo, hi), dtype=np.int64) + running
        ns = np.arange(lo, hi, dtype=np.float64)
        weights = ns**-s - (ns + 1.0) ** -s
        parts.append(float(np.dot(cs.astype(np.float64), weights)))
        running = int(cs[-1])
    return math.fsum(parts)
