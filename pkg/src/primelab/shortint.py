"""Short-interval statistics: density ratios, the x**0.525 gap check, the
increment deviation envelope, and the interval-variance statistic.

Every scan runs on a deterministic log-spaced integer grid and assembles
results in input order, so reports are reproducible regardless of worker
count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import sieve
from .chebyshev import psi_checkpoints, psi_minus_theta, theta_checkpoints
from .counting import BT_SHIFT

GAP_EXPONENT = 0.525
DENSITY_EXPONENT = 7.0 / 12.0
HIST_EDGES = tuple(0.25 * i for i in range(13))  # fixed [0, 3) bins, width 1/4


@dataclass(frozen=True)
class IntervalStat:
    """Prime and Chebyshev increments over one interval (x, x+y]."""

    x: int
    y: int
    count: int
    density_ratio: float
    theta_inc: float
    psi_inc: float

    def __post_init__(self) -> None:
        if self.count < 0 or self.density_ratio < 0:
            raise ValueError("interval statistics cannot be negative")
        if self.theta_inc > self.psi_inc:
            raise ValueError(
                f"theta increment {self.theta_inc} exceeds psi increment "
                f"{self.psi_inc} on ({self.x}, {self.x + self.y}]"
            )


def interval_stat(x: int, y: int) -> IntervalStat:
    """Sieve (x, x+y] for the prime count, theta and psi increments, and the
    density ratio count*log(x)/y.  Permissive: any x >= 2, y >= 1."""
    if x < 2:
        raise ValueError(f"interval start must be >= 2, got {x}")
    if y < 1:
        raise ValueError(f"interval length must be >= 1, got {y}")
    count = 0
    theta_parts = []
    for ps in sieve.iter_segments(x + 1, x + y + 1):
        count += ps.size
        theta_parts.append(float(np.sum(np.log(ps))))
    theta_inc = math.fsum(theta_parts)
    # psi = theta + prime-power correction; building psi_inc additively keeps
    # theta_inc <= psi_inc exact instead of at the mercy of summation order.
    power_inc = _power_tail(x + y) - _power_tail(x)
    psi_inc = theta_inc + power_inc
    return IntervalStat(
        x=x,
        y=y,
        count=count,
        density_ratio=count * math.log(x) / y,
        theta_inc=theta_inc,
        psi_inc=psi_inc,
    )


def _power_tail(x: int) -> float:
    return psi_minus_theta(x) if x >= 4 else 0.0


@dataclass(frozen=True)
class YRule:
    """Interval-length rule: fixed y, y = x**beta, or y = log(x)**delta."""

    kind: str
    value: float

    def __post_init__(self) -> None:
        if self.kind == "fixed":
            if self.value < 1:
                raise ValueError(f"fixed interval length must be >= 1, got {self.value}")
        elif self.kind == "power":
            if not 0.0 < self.value < 1.0:
                raise ValueError(f"power exponent must lie in (0, 1), got {self.value}")
        elif self.kind == "log-power":
            if not self.value > 1.0:
                raise ValueError(f"log-power exponent must exceed 1, got {self.value}")
        else:
            raise ValueError(f"unknown interval rule {self.kind!r}")

    @classmethod
    def fixed(cls, y: float) -> "YRule":
        return cls(kind="fixed", value=float(y))

    @classmethod
    def power(cls, beta: float) -> "YRule":
        return cls(kind="power", value=float(beta))

    @classmethod
    def log_power(cls, delta: float) -> "YRule":
        return cls(kind="log-power", value=float(delta))

    def length_at(self, x: int) -> int:
        if self.kind == "fixed":
            return int(self.value)
        if self.kind == "power":
            return int(float(x) ** self.value)
        return int(math.log(x) ** self.value)


def log_grid(lo: int, hi: int, points: int) -> tuple[int, ...]:
    """Deterministic log-spaced integer grid, deduplicated, ascending."""
    if lo < 2 or hi < lo:
        raise ValueError(f"grid bounds must satisfy 2 <= lo <= hi, got [{lo}, {hi}]")
    if points < 1:
        raise ValueError(f"grid needs >= 1 points, got {points}")
    if points == 1 or lo == hi:
        return (lo,)
    xs = np.geomspace(float(lo), float(hi), points)
    ints = np.unique(np.rint(xs).astype(np.int64))
    return tuple(int(v) for v in ints)


def _ordered_map(fn: Callable, items: Sequence, workers: int) -> list:
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class DensityScanReport:
    """Interval density ratios over a log grid under one length rule."""

    rule: YRule
    stats: tuple[IntervalStat, ...]
    skipped: tuple[tuple[int, int], ...]

    @property
    def mean_ratio(self) -> float:
        if not self.stats:
            return math.nan
        return math.fsum(s.density_ratio for s in self.stats) / len(self.stats)

    @property
    def min_ratio(self) -> float:
        return min((s.density_ratio for s in self.stats), default=math.nan)

    @property
    def max_ratio(self) -> float:
        return max((s.density_ratio for s in self.stats), default=math.nan)


def density_scan(
    x_lo: int,
    x_hi: int,
    samples: int,
    y_rule: YRule,
    workers: int = 1,
) -> DensityScanReport:
    """Interval statistics on a log-spaced grid of `samples` points in
    [x_lo, x_hi]; grid points whose rule gives y < 1 are recorded as skips."""
    if x_lo < 10**3:
        raise ValueError(f"density scans start at 10^3, got x_lo={x_lo}")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    xs = log_grid(x_lo, x_hi, samples)
    accepted = []
    skipped = []
    for x in xs:
        y = y_rule.length_at(x)
        if y < 1:
            skipped.append((x, y))
        else:
            accepted.append((x, y))
    stats = _ordered_map(lambda xy: interval_stat(*xy), accepted, workers)
    return DensityScanReport(rule=y_rule, stats=tuple(stats), skipped=tuple(skipped))


@dataclass(frozen=True)
class GapPoint:
    """One gap-check sample: the interval (x - L, x] with L = ceil(x**0.525)."""

    x: int
    length: int
    count: int
    log_sum: float

    @property
    def lower_ok(self) -> bool:
        # log x < sum of log p over the interval
        return math.log(self.x) < self.log_sum

    @property
    def upper_ok(self) -> bool:
        # sum of log p <= (interval count bound) * log(x + L)
        bound = 2.0 * self.length / (math.log(self.length) + BT_SHIFT)
        return self.log_sum <= bound * math.log(self.x + self.length)


@dataclass(frozen=True)
class GapScanReport:
    points: tuple[GapPoint, ...]
    violations: tuple[int, ...]
    sandwich_failures: tuple[int, ...]

    @property
    def satisfied(self) -> bool:
        return not self.violations


def default_gap_grid(points: int = 10_000, lo: int = 10**3, hi: int = 10**8) -> tuple[int, ...]:
    """The default gap-scan grid: a 10^4-node log mesh in [10^3, 10^8]."""
    return log_grid(lo, hi, points)


def _gap_point(x: int) -> GapPoint:
    length = math.ceil(float(x) ** GAP_EXPONENT)
    count = 0
    parts = []
    for ps in sieve.iter_segments(x - length + 1, x + 1):
        count += ps.size
        parts.append(float(np.sum(np.log(ps))))
    return GapPoint(x=x, length=length, count=count, log_sum=math.fsum(parts))


def bhp_gap_check(x_grid: Iterable[int], workers: int = 1) -> GapScanReport:
    """Check that every interval (x - x**0.525, x] on the grid contains a
    prime, and evaluate the log-sum sandwich at each point."""
    xs = [int(x) for x in x_grid]
    if not xs:
        raise ValueError("gap check needs a nonempty grid")
    for x in xs:
        if not 10**3 <= x <= 10**8:
            raise ValueError(f"gap-check grid point {x} outside [10^3, 10^8]")
    points = _ordered_map(_gap_point, xs, workers)
    violations = tuple(p.x for p in points if p.count == 0)
    failures = tuple(p.x for p in points if not (p.lower_ok and p.upper_ok))
    return GapScanReport(points=tuple(points), violations=violations, sandwich_failures=failures)


@dataclass(frozen=True)
class MaierReport:
    """Observed spread of normalized prime counts in (x, x + log(x)**delta]."""

    delta: float
    min_ratio: float
    max_ratio: float
    bin_edges: tuple[float, ...]
    bin_counts: tuple[int, ...]
    overflow: int
    samples: int
    skipped: tuple[int, ...]


def maier_ratio_stats(
    delta: float, x_lo: int, x_hi: int, samples: int, workers: int = 1
) -> MaierReport:
    """Histogram of (pi(x + f) - pi(x)) / (f / log x) with f = log(x)**delta
    over a log grid; extremes are reported, never asserted."""
    if not delta > 1.0:
        raise ValueError(f"delta must exceed 1, got {delta}")
    if x_lo < 10:
        raise ValueError(f"x_lo must be >= 10, got {x_lo}")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    xs = log_grid(x_lo, x_hi, samples)
    accepted = []
    skipped = []
    for x in xs:
        f = math.log(x) ** delta
        if int(f) < 1:
            skipped.append(x)
        else:
            accepted.append((x, f))

    def ratio_at(xf: tuple[int, float]) -> float:
        x, f = xf
        count = 0
        for ps in sieve.iter_segments(x + 1, x + int(f) + 1):
            count += ps.size
        return count / (f / math.log(x))

    ratios = _ordered_map(ratio_at, accepted, workers)
    edges = np.array(HIST_EDGES)
    counts = np.zeros(len(HIST_EDGES) - 1, dtype=np.int64)
    overflow = 0
    for r in ratios:
        if r >= edges[-1]:
            overflow += 1
        else:
            counts[int(np.searchsorted(edges, r, side="right")) - 1] += 1
    return MaierReport(
        delta=delta,
        min_ratio=min(ratios, default=math.nan),
        max_ratio=max(ratios, default=math.nan),
        bin_edges=HIST_EDGES,
        bin_counts=tuple(int(c) for c in counts),
        overflow=overflow,
        samples=len(ratios),
        skipped=tuple(skipped),
    )


@dataclass(frozen=True)
class VarianceReport:
    """Mean and variance of psi(x+y) - psi(x) - y over x in [N, 2N]."""

    n: int
    y: int
    stride: int
    sample_count: int
    empirical_mean: float
    empirical_variance: float
    predicted_variance: float

    @property
    def ratio(self) -> float:
        return self.empirical_variance / self.predicted_variance


def interval_variance(n: int, y: int, stride: int = 1) -> VarianceReport:
    """Sliding-window psi increments on [N, 2N] against the conjectured
    variance y * log(N/y).  Requires N >= 10^4 and 10 <= y <= N/10.

    Memory scales with N (one float per integer in [N, 2N+y])."""
    if n < 10**4:
        raise ValueError(f"variance scan needs N >= 10^4, got {n}")
    if not 10 <= y <= n // 10:
        raise ValueError(f"window y={y} outside the admissible band [10, N/10]")
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    lam = sieve.mangoldt_range(n + 1, 2 * n + y + 1)
    cum = np.concatenate(([0.0], np.cumsum(lam)))
    offsets = np.arange(0, n + 1, stride, dtype=np.int64)
    increments = cum[offsets + y] - cum[offsets]
    deviations = increments - float(y)
    mean = float(np.mean(deviations))
    variance = float(np.var(deviations))
    return VarianceReport(
        n=n,
        y=y,
        stride=stride,
        sample_count=int(offsets.size),
        empirical_mean=mean,
        empirical_variance=variance,
        predicted_variance=y * math.log(n / y),
    )


@dataclass(frozen=True)
class IncrementDeviationReport:
    """Worst theta/psi increment deviations |inc - y| over sampled y."""

    x: int
    envelope: float
    max_theta_dev: float
    max_psi_dev: float
    skipped: tuple[int, ...]

    @property
    def theta_ratio(self) -> float:
        return self.max_theta_dev / self.envelope

    @property
    def psi_ratio(self) -> float:
        return self.max_psi_dev / self.envelope

    @property
    def satisfied(self) -> bool:
        return self.theta_ratio <= 10.0 and self.psi_ratio <= 10.0


def increment_deviation(x: int, y_samples: Iterable[int]) -> IncrementDeviationReport:
    """Deviations theta(x+y) - theta(x) - y and the psi analogue over y
    samples in [ceil(x**(7/12)), x]; out-of-band y are recorded as skips."""
    if x < 10:
        raise ValueError(f"x must be >= 10, got {x}")
    floor = math.ceil(float(x) ** DENSITY_EXPONENT)
    accepted = []
    skipped = []
    for y in y_samples:
        y = int(y)
        if floor <= y <= x:
            accepted.append(y)
        else:
            skipped.append(y)
    if not accepted:
        raise ValueError("no admissible y samples (all below x**(7/12) or above x)")
    points = [x] + [x + y for y in sorted(set(accepted))]
    _, theta_vals = theta_checkpoints(points)
    psi_vals = psi_checkpoints(points)
    theta_at = dict(zip(points, theta_vals))
    psi_at = dict(zip(points, psi_vals))
    max_theta = max(abs(theta_at[x + y] - theta_at[x] - y) for y in accepted)
    max_psi = max(abs(psi_at[x + y] - psi_at[x] - y) for y in accepted)
    return IncrementDeviationReport(
        x=x,
        envelope=float(x) ** DENSITY_EXPONENT,
        max_theta_dev=max_theta,
        max_psi_dev=max_psi,
        skipped=tuple(skipped),
    )
