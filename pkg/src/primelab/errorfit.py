"""Error-term profiling: E_pi = pi - li, E_theta = theta - x, E_psi = psi - x
over log grids, envelope-family ratio reports, and effective-exponent fits.

The effective exponent of an error value is log|E|/log x; rows with E = 0
carry nan there and are excluded from fits.
"""

from __future__ import annotations

import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .chebyshev import psi_minus_theta, theta_checkpoints
from .logint import DEFAULT_QUADRATURE, QuadratureSpec, li

ENVELOPE_EXPONENT = 7.0 / 12.0
REPORTED_EXPONENT = 21.0 / 40.0

_QUAD_LOCK = threading.Lock()


@dataclass(frozen=True)
class ProfileRow:
    x: int
    pi: int
    theta: float
    psi: float
    li: float
    e_pi: float
    e_theta: float
    e_psi: float
    eps_eff_pi: float
    eps_eff_theta: float


@dataclass(frozen=True)
class ErrorProfile:
    """Ascending rows of exact counts against their smooth approximations."""

    rows: tuple[ProfileRow, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("profile must contain at least one row")
        xs = [r.x for r in self.rows]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("profile rows must be strictly ascending in x")

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[ProfileRow]:
        return iter(self.rows)

    @property
    def span_decades(self) -> float:
        return math.log10(self.rows[-1].x / self.rows[0].x)


def default_grid(lo: int = 10, hi: int = 10**8, per_decade: int = 8) -> tuple[int, ...]:
    """Log grid of about per_decade points per decade: round(10**(k/per_decade))
    for integer k, deduplicated, clipped to [lo, hi]."""
    if not 10 <= lo < hi <= 10**8:
        raise ValueError(f"grid bounds must satisfy 10 <= lo < hi <= 10^8, got [{lo}, {hi}]")
    if per_decade < 1:
        raise ValueError(f"per_decade must be >= 1, got {per_decade}")
    k_lo = math.ceil(per_decade * math.log10(lo))
    k_hi = math.floor(per_decade * math.log10(hi))
    xs = sorted({int(round(10.0 ** (k / per_decade))) for k in range(k_lo, k_hi + 1)})
    return tuple(x for x in xs if lo <= x <= hi)


def _eps_eff(e: float, x: int) -> float:
    if e == 0.0:
        return math.nan
    return math.log(abs(e)) / math.log(x)


def build_profile(
    x_grid: Iterable[int],
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
    workers: int = 1,
) -> ErrorProfile:
    """Exact pi/theta/psi at each grid point (one streaming sieve pass) versus
    the dual-route li; rows carry signed errors and effective exponents."""
    xs = [int(x) for x in x_grid]
    if not xs:
        raise ValueError("profile grid is empty")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise ValueError("profile grid must be strictly ascending")
    if xs[0] < 10 or xs[-1] > 10**8:
        raise ValueError(f"profile grid must lie within [10, 10^8], got [{xs[0]}, {xs[-1]}]")
    counts, theta_sums = theta_checkpoints(xs)

    def finish(i: int) -> ProfileRow:
        x = xs[i]
        theta = theta_sums[i]
        psi = theta + psi_minus_theta(x)
        with _QUAD_LOCK:
            li_x = li(float(x), quad)
        e_pi = counts[i] - li_x
        e_theta = theta - x
        e_psi = psi - x
        return ProfileRow(
            x=x,
            pi=int(counts[i]),
            theta=theta,
            psi=psi,
            li=li_x,
            e_pi=e_pi,
            e_theta=e_theta,
            e_psi=e_psi,
            eps_eff_pi=_eps_eff(e_pi, x),
            eps_eff_theta=_eps_eff(e_theta, x),
        )

    indices = range(len(xs))
    if workers <= 1 or len(xs) <= 1:
        rows = [finish(i) for i in indices]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(finish, indices))
    return ErrorProfile(rows=tuple(rows))


@dataclass(frozen=True)
class FamilyReport:
    """Worst |E|/envelope ratios for one envelope family."""

    name: str
    max_ratio_pi: float
    argmax_pi: int
    max_ratio_theta: float
    argmax_theta: int
    max_ratio_psi: float
    argmax_psi: int


@dataclass(frozen=True)
class EnvelopeReport:
    c: float
    families: tuple[FamilyReport, ...]
    violations: tuple[tuple[int, str], ...]

    @property
    def satisfied(self) -> bool:
        return not self.violations


def _envelope_families(c: float) -> tuple[tuple[str, object], ...]:
    return (
        ("power-7-12", lambda x: x**ENVELOPE_EXPONENT),
        ("power-21-40", lambda x: x**REPORTED_EXPONENT),
        ("sqrt-log", lambda x: math.sqrt(x) * math.log(x)),
        ("exp-sqrt-log", lambda x: x * math.exp(-c * math.sqrt(math.log(x)))),
        (
            "vinogradov",
            lambda x: x
            * math.exp(-c * math.log(x) ** 0.6 * math.log(math.log(x)) ** -0.2),
        ),
    )


def envelope_report(profile: ErrorProfile, c: float = 1.0) -> EnvelopeReport:
    """Max |E|/envelope per family; rows breaking |E_pi| <= x^(7/12) or
    |E_theta| <= x^(7/12) are listed as violations (asserted only for the
    7/12 family; the others are informational)."""
    if c <= 0:
        raise ValueError(f"envelope constant c must be positive, got {c}")
    families = []
    for name, env in _envelope_families(c):
        worst = {"pi": (0.0, profile.rows[0].x), "theta": (0.0, profile.rows[0].x),
                 "psi": (0.0, profile.rows[0].x)}
        for row in profile:
            denom = env(row.x)
            for key, e in (("pi", row.e_pi), ("theta", row.e_theta), ("psi", row.e_psi)):
                ratio = abs(e) / denom
                if ratio > worst[key][0]:
                    worst[key] = (ratio, row.x)
        families.append(
            FamilyReport(
                name=name,
                max_ratio_pi=worst["pi"][0],
                argmax_pi=worst["pi"][1],
                max_ratio_theta=worst["theta"][0],
                argmax_theta=worst["theta"][1],
                max_ratio_psi=worst["psi"][0],
                argmax_psi=worst["psi"][1],
            )
        )
    violations = []
    for row in profile:
        env = row.x**ENVELOPE_EXPONENT
        if abs(row.e_pi) > env:
            violations.append((row.x, "pi"))
        if abs(row.e_theta) > env:
            violations.append((row.x, "theta"))
    return EnvelopeReport(c=c, families=tuple(families), violations=tuple(violations))


@dataclass(frozen=True)
class EpsilonFitReport:
    """Per-row implied exponents eps(x) = 7/12 - eps_eff and their OLS trend."""

    rows: tuple[tuple[int, float, float], ...]
    slope_pi: float
    intercept_pi: float
    slope_theta: float
    intercept_theta: float

    @property
    def all_positive_pi(self) -> bool:
        return all(e > 0 for _, e, _ in self.rows if not math.isnan(e))

    @property
    def all_positive_theta(self) -> bool:
        return all(e > 0 for _, _, e in self.rows if not math.isnan(e))


def _ols(xs: list[float], ys: list[float]) -> tuple[float, float]:
    if len(xs) < 2 or len(set(xs)) < 2:
        raise ValueError("exponent fit is degenerate: fewer than two distinct points")
    slope, intercept = np.polyfit(np.array(xs), np.array(ys), 1)
    return float(slope), float(intercept)


def epsilon_fit(profile: ErrorProfile) -> EpsilonFitReport:
    """Implied eps(x) rows and least-squares slopes of eps_eff against log x.

    Needs >= 10 rows spanning >= 3 decades with nondegenerate errors; the
    trend is reported, never extrapolated.
    """
    if len(profile) < 10:
        raise ValueError(f"exponent fit needs >= 10 rows, got {len(profile)}")
    if profile.span_decades < 3.0:
        raise ValueError(
            f"exponent fit needs >= 3 decades of x, got {profile.span_decades:.2f}"
        )
    rows = []
    pi_pts: tuple[list[float], list[float]] = ([], [])
    theta_pts: tuple[list[float], list[float]] = ([], [])
    for row in profile:
        implied_pi = ENVELOPE_EXPONENT - row.eps_eff_pi
        implied_theta = ENVELOPE_EXPONENT - row.eps_eff_theta
        rows.append((row.x, implied_pi, implied_theta))
        if not math.isnan(row.eps_eff_pi):
            pi_pts[0].append(math.log(row.x))
            pi_pts[1].append(row.eps_eff_pi)
        if not math.isnan(row.eps_eff_theta):
            theta_pts[0].append(math.log(row.x))
            theta_pts[1].append(row.eps_eff_theta)
    slope_pi, intercept_pi = _ols(*pi_pts)
    slope_theta, intercept_theta = _ols(*theta_pts)
    return EpsilonFitReport(
        rows=tuple(rows),
        slope_pi=slope_pi,
        intercept_pi=intercept_pi,
        slope_theta=slope_theta,
        intercept_theta=intercept_theta,
    )
