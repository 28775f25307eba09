"""Logarithmic and exponential integrals plus the partial-summation
conversion identities between the prime counting functions.

li here is the lower-limit-2 convention: li(x) = integral of dt/log t from 2
to x, so li(2) = 0.  Two independent evaluation routes are kept alive: an
adaptive-quadrature route and an exponential-integral series route; li()
evaluates both and insists they agree.

The complex exponential integral switches between the defining power series
and a continued fraction at a configurable radius.  Inside the series region
the working precision is raised adaptively (the series suffers cancellation
of order exp(|z| - Re z)), so both branches stay accurate to well below the
1e-10 seam tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Literal

import mpmath
import numpy as np
from scipy.integrate import quad

from . import sieve

EULER_GAMMA = 0.5772156649015328606


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances for the adaptive-quadrature route."""

    abs_tol: float = 1e-11
    rel_tol: float = 1e-11
    max_depth: int = 200

    def __post_init__(self) -> None:
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("quadrature tolerances must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")


@dataclass(frozen=True)
class EiConfig:
    """Switchover control for the exponential integral."""

    series_radius: float = 40.0
    cf_max_iter: int = 600

    def __post_init__(self) -> None:
        if self.series_radius <= 0:
            raise ValueError("series radius must be positive")
        if self.cf_max_iter < 10:
            raise ValueError("cf_max_iter must be >= 10")


DEFAULT_QUADRATURE = QuadratureSpec()
DEFAULT_EI = EiConfig()


# ---------------------------------------------------------------------------
# exponential integral


def _ei_series_positive(x: float) -> float:
    # All series terms are positive for x > 0, so float64 is stable here.
    total = 0.0
    term = 1.0
    k = 1
    while True:
        term *= x / k
        contrib = term / k
        total += contrib
        if contrib < 1e-18 * total and k > x:
            break
        k += 1
        if k > 10000:
            raise ArithmeticError(f"ei series failed to converge at x={x}")
    return EULER_GAMMA + math.log(x) + total


def _ei_asymptotic_positive(x: float) -> float:
    # Divergent tail sum m! / x**m truncated at the smallest term.
    total = 1.0
    term = 1.0
    for m in range(1, int(x) + 1):
        nxt = term * m / x
        if nxt >= term:
            break
        term = nxt
        total += term
        if term < 1e-18 * total:
            break
    return math.exp(x) / x * total


def _lentz_e1(w: complex, config: EiConfig) -> complex:
    """E1(w) by the modified Lentz continued fraction; w off (-inf, 0]."""
    tiny = 1e-300
    b = w + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, config.cf_max_iter + 1):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h * _cexp(-w)
    raise ArithmeticError(
        f"continued fraction for E1 did not converge at w={w}; "
        "the argument is too close to the branch cut"
    )


def _cexp(z: complex) -> complex:
    return complex(math.exp(z.real) * math.cos(z.imag), math.exp(z.real) * math.sin(z.imag))


def _ei_series_complex(z: complex, config: EiConfig) -> complex:
    # Cancellation loses about (|z| - max(Re z, 0)) / ln 10 digits; switch to
    # arbitrary precision once float64 would drop meaningful digits.
    r = abs(z)
    lost_digits = (r - max(z.real, 0.0)) * 0.4343
    if lost_digits <= 1.5:
        total = 0.0 + 0.0j
        term = 1.0 + 0.0j
        k = 1
        while True:
            term *= z / k
            contrib = term / k
            total += contrib
            if abs(contrib) < 1e-18 * (abs(total) + 1e-30) and k > r:
                break
            k += 1
            if k > 10000:
                raise ArithmeticError(f"ei series failed to converge at z={z}")
        return total + EULER_GAMMA + _clog(z)
    dps = 25 + int(lost_digits)
    with mpmath.workdps(dps):
        mz = mpmath.mpc(z.real, z.imag)
        total = mpmath.mpc(0)
        term = mpmath.mpc(1)
        k = 1
        limit = int(4 * r) + 200
        while True:
            term *= mz / k
            contrib = term / k
            total += contrib
            if abs(contrib) < mpmath.mpf(10) ** (-dps) and k > r:
                break
            k += 1
            if k > limit:
                raise ArithmeticError(f"ei series failed to converge at z={z}")
        value = total + mpmath.euler + mpmath.log(mz)
        return complex(value)


def _clog(z: complex) -> complex:
    return complex(math.log(abs(z)), math.atan2(z.imag, z.real))


def ei_real(x: float, config: EiConfig = DEFAULT_EI) -> float:
    """Exponential integral Ei on the real line (principal value for x < 0)."""
    if x == 0.0:
        raise ValueError("ei is singular at 0")
    if x > 0:
        if x <= config.series_radius:
            return _ei_series_positive(x)
        return _ei_asymptotic_positive(x)
    w = -x
    if w <= 1.5:
        # Alternating series; harmless cancellation at this size.
        total = 0.0
        term = 1.0
        for k in range(1, 200):
            term *= x / k
            contrib = term / k
            total += contrib
            if abs(contrib) < 1e-18:
                break
        return EULER_GAMMA + math.log(w) + total
    return -(_lentz_e1(complex(w, 0.0), config).real)


def ei(z: complex, config: EiConfig = DEFAULT_EI) -> complex:
    """Complex exponential integral, principal branch.

    Power series for |z| <= config.series_radius, continued fraction beyond;
    real arguments take the real path (asymptotic expansion past the radius).
    On the negative real axis the principal value (real part) is returned.
    """
    z = complex(z)
    if z == 0:
        raise ValueError("ei is singular at 0")
    if z.imag == 0.0:
        return complex(ei_real(z.real, config), 0.0)
    if abs(z) <= config.series_radius:
        return _ei_series_complex(z, config)
    return -_lentz_e1(-z, config) + complex(0.0, math.copysign(math.pi, z.imag))


# ---------------------------------------------------------------------------
# logarithmic integral, dual routes

_EI_LN2: float | None = None


def _ei_ln2() -> float:
    global _EI_LN2
    if _EI_LN2 is None:
        _EI_LN2 = ei_real(math.log(2.0))
    return _EI_LN2


def li_series(x: float) -> float:
    """li(x) through the exponential integral: Ei(log x) - Ei(log 2)."""
    _check_li_domain(x)
    if x == 2.0:
        return 0.0
    return ei_real(math.log(x)) - _ei_ln2()


def li_quadrature(x: float, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """li(x) by adaptive quadrature of dt/log t over [2, x], split per decade."""
    _check_li_domain(x)
    if x == 2.0:
        return 0.0
    edges = [2.0]
    while edges[-1] < x:
        edges.append(min(edges[-1] * 10.0, float(x)))
    parts = []
    for a, b in zip(edges[:-1], edges[1:]):
        val, _ = quad(
            lambda t: 1.0 / math.log(t),
            a,
            b,
            epsabs=spec.abs_tol / len(edges),
            epsrel=spec.rel_tol,
            limit=spec.max_depth,
        )
        parts.append(val)
    return math.fsum(parts)


def li(x: float, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Offset logarithmic integral with both routes cross-checked.

    Returns the series-route value after verifying the quadrature route
    agrees within max(abs_tol, rel_tol * |value|); disagreement raises.
    """
    s = li_series(x)
    q = li_quadrature(x, spec)
    tol = max(spec.abs_tol, spec.rel_tol * abs(s)) * 10.0
    if abs(s - q) > tol:
        raise ArithmeticError(
            f"li routes disagree at x={x}: series={s!r} quadrature={q!r} "
            f"(|diff|={abs(s - q):.3e} > {tol:.3e})"
        )
    return s


def _check_li_domain(x: float) -> None:
    if not x >= 2.0:
        raise ValueError(f"li is defined on [2, inf) here; got x={x}")


# ---------------------------------------------------------------------------
# partial-summation conversion identities


@dataclass(frozen=True)
class IdentityReport:
    """Two independently evaluated sides of one identity."""

    left: float
    right: float

    @property
    def abs_discrepancy(self) -> float:
        return abs(self.left - self.right)

    @property
    def rel_discrepancy(self) -> float:
        scale = max(abs(self.left), abs(self.right), 1e-300)
        return self.abs_discrepancy / scale


def _prime_segments_upto(x: int) -> Iterator[np.ndarray]:
    return sieve.iter_segments(2, x + 1)


def pi_from_theta(
    x: int, mode: Literal["exact-sum", "piecewise-integral"] = "exact-sum"
) -> float:
    """Reconstruct pi(x) from theta via
    pi(x) = theta(x)/log x + integral(theta(t) / (t log^2 t), t=2..x).

    "exact-sum" evaluates the telescoped form sum_{p<=x} log p * (1/log p -
    1/log x) for the integral; "piecewise-integral" integrates the step
    function theta in closed form between consecutive jumps.  Requires x >= 3.
    """
    if x < 3:
        raise ValueError(f"pi_from_theta needs x >= 3, got {x}")
    log_x = math.log(x)
    if mode == "exact-sum":
        parts = []
        theta_parts = []
        for ps in _prime_segments_upto(x):
            logs = np.log(ps)
            parts.append(float(np.sum(1.0 - logs / log_x)))
            theta_parts.append(float(np.sum(logs)))
        return math.fsum(parts) + math.fsum(theta_parts) / log_x
    if mode != "piecewise-integral":
        raise ValueError(f"unknown mode {mode!r}")
    integral_parts = []
    theta_prefix = 0.0
    prev_prime: float | None = None
    prev_theta = 0.0
    for ps in _prime_segments_upto(x):
        logs = np.log(ps)
        cums = theta_prefix + np.cumsum(logs)
        if prev_prime is not None:
            integral_parts.append(prev_theta * (1.0 / math.log(prev_prime) - 1.0 / logs[0]))
        if ps.size > 1:
            block = cums[:-1] * (1.0 / logs[:-1] - 1.0 / logs[1:])
            integral_parts.append(float(np.sum(block)))
        prev_prime = float(ps[-1])
        prev_theta = float(cums[-1])
        theta_prefix = prev_theta
    if prev_prime is None:
        return 0.0
    integral_parts.append(prev_theta * (1.0 / math.log(prev_prime) - 1.0 / log_x))
    return math.fsum(integral_parts) + theta_prefix / log_x


def theta_from_pi(x: int) -> float:
    """Reconstruct theta(x) from pi via
    theta(x) = pi(x) log x - integral(pi(t)/t, t=2..x),
    the integral taken in closed form over the constant blocks of pi."""
    if x < 3:
        raise ValueError(f"theta_from_pi needs x >= 3, got {x}")
    integral_parts = []
    count_prefix = 0
    prev_prime: float | None = None
    for ps in _prime_segments_upto(x):
        logs = np.log(ps)
        if prev_prime is not None:
            integral_parts.append(count_prefix * (logs[0] - math.log(prev_prime)))
        if ps.size > 1:
            counts = count_prefix + np.arange(1, ps.size, dtype=np.float64)
            integral_parts.append(float(np.sum(counts * (logs[1:] - logs[:-1]))))
        prev_prime = float(ps[-1])
        count_prefix += ps.size
    if prev_prime is None:
        return 0.0
    integral_parts.append(count_prefix * (math.log(x) - math.log(prev_prime)))
    return count_prefix * math.log(x) - math.fsum(integral_parts)


RECIPROCAL_TOL = 1e-12
MANGOLDT_TOL = 1e-9


def reciprocal_prime_identity(x: int) -> IdentityReport:
    """sum_{p<=x} 1/p computed directly (left) and through
    pi(x)/x + integral(pi(t)/t^2, t=2..x) in closed blocks (right)."""
    if x < 2:
        raise ValueError(f"reciprocal_prime_sum needs x >= 2, got {x}")
    direct_parts = []
    integral_parts = []
    count_prefix = 0
    prev_prime: float | None = None
    for ps in _prime_segments_upto(x):
        inv = 1.0 / ps
        direct_parts.append(float(np.sum(inv)))
        if prev_prime is not None:
            integral_parts.append(count_prefix * (1.0 / prev_prime - inv[0]))
        if ps.size > 1:
            counts = count_prefix + np.arange(1, ps.size, dtype=np.float64)
            integral_parts.append(float(np.sum(counts * (inv[:-1] - inv[1:]))))
        prev_prime = float(ps[-1])
        count_prefix += ps.size
    if prev_prime is None:
        return IdentityReport(left=0.0, right=0.0)
    integral_parts.append(count_prefix * (1.0 / prev_prime - 1.0 / x))
    right = count_prefix / float(x) + math.fsum(integral_parts)
    return IdentityReport(left=math.fsum(direct_parts), right=right)


def reciprocal_prime_sum(x: int) -> float:
    """sum_{p<=x} 1/p, with the partial-summation route required to agree
    with the direct sum to RECIPROCAL_TOL relative."""
    rep = reciprocal_prime_identity(x)
    if rep.rel_discrepancy > RECIPROCAL_TOL:
        raise ArithmeticError(
            f"reciprocal prime sum routes disagree at x={x}: "
            f"direct={rep.left!r} partial-summation={rep.right!r}"
        )
    return rep.left


def _prime_powers_upto(x: int) -> tuple[np.ndarray, np.ndarray]:
    """Sorted prime powers n = p**k <= x with their log p weights."""
    segs = list(_prime_segments_upto(x))
    if not segs:
        return np.zeros(0, dtype=np.int64), np.zeros(0)
    primes = np.concatenate(segs)
    values = [primes]
    weights = [np.log(primes.astype(np.float64))]
    k = 2
    while True:
        root = _int_root(x, k)
        if root < 2:
            break
        base = primes[: int(np.searchsorted(primes, root, side="right"))]
        values.append(base**k)
        weights.append(np.log(base.astype(np.float64)))
        k += 1
    ns = np.concatenate(values)
    ws = np.concatenate(weights)
    order = np.argsort(ns, kind="stable")
    return ns[order], ws[order]


def _int_root(x: int, k: int) -> int:
    if k == 2:
        return math.isqrt(x)
    r = int(round(x ** (1.0 / k)))
    while r > 1 and r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def mangoldt_identity(x: int) -> IdentityReport:
    """sum_{n<=x} Lambda(n)/log n both directly over prime powers (left) and
    as psi(x)/log x + integral(psi(t)/(t log^2 t), t=2..x) in closed blocks
    (right).  The common value counts prime powers p**k with weight 1/k."""
    if x < 2:
        raise ValueError(f"mangoldt_log_sum needs x >= 2, got {x}")
    ns, ws = _prime_powers_upto(x)
    logs = np.log(ns.astype(np.float64))
    left = float(np.sum(ws / logs))
    psi_cum = np.cumsum(ws)
    log_x = math.log(x)
    blocks = psi_cum[:-1] * (1.0 / logs[:-1] - 1.0 / logs[1:])
    tail = psi_cum[-1] * (1.0 / logs[-1] - 1.0 / log_x)
    right = psi_cum[-1] / log_x + float(np.sum(blocks)) + tail
    return IdentityReport(left=left, right=right)


def mangoldt_log_sum(x: int) -> float:
    """Weighted prime-power count sum_{n<=x} Lambda(n)/log n; the two
    independent evaluations must agree to MANGOLDT_TOL relative."""
    rep = mangoldt_identity(x)
    if rep.rel_discrepancy > MANGOLDT_TOL:
        raise ArithmeticError(
            f"Mangoldt log-sum routes disagree at x={x}: "
            f"direct={rep.left!r} partial-summation={rep.right!r}"
        )
    return rep.left


def _ap_primes(x: int, q: int, a: int) -> np.ndarray:
    parts = []
    for ps in _prime_segments_upto(x):
        sel = ps[ps % q == a]
        if sel.size:
            parts.append(sel)
    if not parts:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(parts)


@dataclass(frozen=True)
class ApConversionReport:
    """Partial-summation identities restricted to one residue class."""

    x: int
    q: int
    a: int
    count_from_logsum: IdentityReport
    logsum_from_count: IdentityReport
    reciprocal_sum: IdentityReport

    @property
    def max_rel_discrepancy(self) -> float:
        return max(
            self.count_from_logsum.rel_discrepancy,
            self.logsum_from_count.rel_discrepancy,
            self.reciprocal_sum.rel_discrepancy,
        )


def ap_conversions(x: int, q: int, a: int) -> ApConversionReport:
    """The three partial-summation identities restricted to primes congruent
    to a modulo q: counting from log-sums, log-sums from counting, and the
    reciprocal sum.  Requires gcd(a, q) = 1 and x >= 2."""
    if q < 2:
        raise ValueError(f"modulus must be >= 2, got q={q}")
    if math.gcd(a, q) != 1:
        raise ValueError(f"residue {a} shares a factor with modulus {q}")
    if x < 2:
        raise ValueError(f"ap_conversions needs x >= 2, got {x}")
    a %= q
    ps = _ap_primes(x, q, a)
    if ps.size == 0:
        zero = IdentityReport(left=0.0, right=0.0)
        return ApConversionReport(
            x=x, q=q, a=a,
            count_from_logsum=zero, logsum_from_count=zero, reciprocal_sum=zero,
        )
    fp = ps.astype(np.float64)
    logs = np.log(fp)
    log_x = math.log(x)
    theta_cum = np.cumsum(logs)
    counts = np.arange(1, ps.size + 1, dtype=np.float64)

    # pi_ap(x) = theta_ap(x)/log x + integral theta_ap/(t log^2 t)
    blocks = theta_cum[:-1] * (1.0 / logs[:-1] - 1.0 / logs[1:])
    integral = float(np.sum(blocks)) + theta_cum[-1] * (1.0 / logs[-1] - 1.0 / log_x)
    count_from_logsum = IdentityReport(
        left=float(ps.size), right=theta_cum[-1] / log_x + integral
    )

    # theta_ap(x) = pi_ap(x) log x - integral pi_ap(t)/t
    blocks = counts[:-1] * (logs[1:] - logs[:-1])
    integral = float(np.sum(blocks)) + counts[-1] * (log_x - logs[-1])
    logsum_from_count = IdentityReport(
        left=float(theta_cum[-1]), right=ps.size * log_x - integral
    )

    # sum 1/p = pi_ap(x)/x + integral pi_ap(t)/t^2
    inv = 1.0 / fp
    blocks = counts[:-1] * (inv[:-1] - inv[1:])
    integral = float(np.sum(blocks)) + counts[-1] * (inv[-1] - 1.0 / x)
    reciprocal = IdentityReport(left=float(np.sum(inv)), right=ps.size / float(x) + integral)

    return ApConversionReport(
        x=x, q=q, a=a,
        count_from_logsum=count_from_logsum,
        logsum_from_count=logsum_from_count,
        reciprocal_sum=reciprocal,
    )


@dataclass(frozen=True)
class EnvelopeIntegralReport:
    """integral(dt / (t**nu log^C t), 2..x) against x**(1-nu)/log^C x."""

    nu: float
    c: float
    x: float
    integral: float
    bound: float

    @property
    def ratio(self) -> float:
        return self.integral / self.bound


def integral_envelope_check(
    nu: float, c: float, x: float, spec: QuadratureSpec = DEFAULT_QUADRATURE
) -> EnvelopeIntegralReport:
    """Quadrature of the envelope integrand t**(-nu) log(t)**(-c) over [2, x],
    compared with the closed-form envelope x**(1-nu)/log(x)**c."""
    if nu <= 0.0:
        raise ValueError(f"exponent nu must be positive, got {nu}")
    if c <= 0.0:
        raise ValueError(f"log power must be positive, got {c}")
    if not x > 2.0:
        raise ValueError(f"upper limit must exceed 2, got {x}")
    edges = [2.0]
    while edges[-1] < x:
        edges.append(min(edges[-1] * 10.0, float(x)))
    parts = []
    for a, b in zip(edges[:-1], edges[1:]):
        val, _ = quad(
            lambda t: t**-nu * math.log(t) ** -c,
            a,
            b,
            epsabs=spec.abs_tol / len(edges),
            epsrel=spec.rel_tol,
            limit=spec.max_depth,
        )
        parts.append(val)
    integral = math.fsum(parts)
    bound = float(x) ** (1.0 - nu) / math.log(x) ** c
    return EnvelopeIntegralReport(nu=nu, c=c, x=float(x), integral=integral, bound=bound)
