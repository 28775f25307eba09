"""Explicit-formula reconstructions driven by a table of zeta zero ordinates.

The zero table is ingested from a text file and validated, never computed
here.  psi_landau rebuilds the Chebyshev psi function from a truncated sum
over zeros; pi_riemann rebuilds the prime counting function from the
Moebius-weighted stack of prime-power terms, each expanded through the
logarithm-integral of x**rho.

Convention note: inside pi_riemann every logarithm integral, real or
complex, is the analytic one li0(y) = Ei(log y) (lower limit 0, principal
value).  That is forced by the complex terms, where Ei(rho log y) is the
only sensible reading, and the constant term -log 2 of the prime-power
expansion is calibrated against exactly that convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from importlib import resources

import numpy as np
from scipy.integrate import quad

from . import sieve
from .logint import ei, ei_real

FIRST_ORDINATES = (14.134725, 21.022040, 25.010858)
_ORDINATE_TOL = 1e-4
_LOG2 = math.log(2.0)


class ZeroTableError(ValueError):
    """Raised for unreadable, unparseable, or inconsistent zero tables."""


@dataclass(frozen=True)
class ZeroList:
    """Validated ascending ordinates of zeros on the critical line."""

    gammas: np.ndarray
    source: str

    def __post_init__(self) -> None:
        arr = np.asarray(self.gammas, dtype=np.float64)
        object.__setattr__(self, "gammas", arr)
        if arr.ndim != 1 or arr.size == 0:
            raise ZeroTableError(f"zero table from {self.source!r} is empty")
        if arr.size < len(FIRST_ORDINATES):
            raise ZeroTableError(
                f"zero table from {self.source!r} has only {arr.size} entries; "
                f"at least {len(FIRST_ORDINATES)} are required for validation"
            )
        if not np.all(arr > 14.0):
            raise ZeroTableError(
                f"zero table from {self.source!r} contains an ordinate <= 14; "
                "the smallest ordinate exceeds 14"
            )
        if not np.all(np.diff(arr) > 0):
            k = int(np.argmax(np.diff(arr) <= 0))
            raise ZeroTableError(
                f"zero table from {self.source!r} is not strictly ascending "
                f"at entry {k + 2}"
            )
        for j, ref in enumerate(FIRST_ORDINATES):
            if abs(float(arr[j]) - ref) > _ORDINATE_TOL:
                raise ZeroTableError(
                    f"zero table from {self.source!r}: ordinate {j + 1} is "
                    f"{float(arr[j])}, expected {ref} within {_ORDINATE_TOL}"
                )
        arr.setflags(write=False)

    def __len__(self) -> int:
        return int(self.gammas.size)

    @property
    def max_ordinate(self) -> float:
        return float(self.gammas[-1])


def bundled_zeros_path() -> Path:
    """Path of the packaged 100-ordinate zero table."""
    return Path(str(resources.files("primelab").joinpath("data", "zeta_zeros_100.txt")))


def load_zeros(path: str | Path) -> ZeroList:
    """Parse and validate a zero table: one ascending decimal ordinate per
    line, blank lines and '#' comments ignored."""
    p = Path(path)
    try:
        text = p.read_text(encoding="ascii")
    except OSError as exc:
        raise ZeroTableError(f"cannot read zero table {str(p)!r}: {exc}") from exc
    values: list[float] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        token = line.split()[0]
        try:
            value = float(token)
        except ValueError as exc:
            raise ZeroTableError(
                f"zero table {str(p)!r}: cannot parse ordinate on line {lineno}: {raw!r}"
            ) from exc
        if not math.isfinite(value) or value <= 0.0:
            raise ZeroTableError(
                f"zero table {str(p)!r}: nonpositive ordinate on line {lineno}: {raw!r}"
            )
        if values and value <= values[-1]:
            raise ZeroTableError(
                f"zero table {str(p)!r}: ordinates not ascending on line {lineno}: {raw!r}"
            )
        values.append(value)
    if not values:
        raise ZeroTableError(f"zero table {str(p)!r} contains no ordinates")
    return ZeroList(gammas=np.array(values, dtype=np.float64), source=str(p))


@dataclass(frozen=True)
class ZeroCountReport:
    """Observed zero count against the smooth counting term."""

    t: float
    counted: int
    main_term: float

    @property
    def deviation(self) -> float:
        return self.counted - self.main_term


def zero_count_check(zeros: ZeroList, t: float) -> ZeroCountReport:
    """Count ordinates <= t and compare with
    (t/2pi) log(t/2pi) - t/2pi + 7/8.

    Rejects t beyond the table height (the count would silently saturate)
    and raises if the deviation leaves the |dev| <= 2 band for t >= 30.
    """
    if not t > 0:
        raise ValueError(f"height t must be positive, got {t}")
    if t > zeros.max_ordinate:
        raise ValueError(
            f"t={t} exceeds the table height {zeros.max_ordinate}; "
            "counting above the table would silently undercount"
        )
    counted = int(np.searchsorted(zeros.gammas, t, side="right"))
    u = t / (2.0 * math.pi)
    main = u * math.log(u) - u + 0.875
    report = ZeroCountReport(t=float(t), counted=counted, main_term=main)
    if t >= 30.0 and abs(report.deviation) > 2.0:
        raise ArithmeticError(
            f"zero count at t={t} deviates from the main term by "
            f"{report.deviation:.3f} (> 2); the table is inconsistent"
        )
    return report


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    for k in range(1, n.bit_length()):
        r = _kth_root(n, k)
        if r**k == n and sieve.is_prime(r):
            return True
    return False


def _kth_root(n: int, k: int) -> int:
    if k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    r = int(round(n ** (1.0 / k)))
    while r > 1 and r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def psi_landau(x: float, zeros: ZeroList, k: int) -> float:
    """Truncated explicit formula for psi:
    x - sum over the first k zeros of 2 Re(x**rho / rho), rho = 1/2 + i gamma.

    x must be >= 2 and not a prime power (the formula converges to the jump
    midpoint there, making comparisons ambiguous); k <= table length.
    """
    if not x >= 2.0:
        raise ValueError(f"psi_landau needs x >= 2, got {x}")
    if float(x).is_integer() and _is_prime_power(int(x)):
        raise ValueError(
            f"x={x} is a prime power; evaluate between jumps (e.g. half-integers)"
        )
    if not 0 <= k <= len(zeros):
        raise ValueError(f"k={k} outside the table (length {len(zeros)})")
    if k == 0:
        return float(x)
    g = zeros.gammas[:k]
    log_x = math.log(x)
    terms = (0.5 * np.cos(g * log_x) + g * np.sin(g * log_x)) / (0.25 + g * g)
    return float(x - 2.0 * math.sqrt(x) * np.sum(terms))


def _tail_integral(y: float) -> float:
    # integral over [y, inf) of dt / (t (t^2 - 1) log t); the substitution
    # u = 1/t maps it to a finite interval with integrand u/((1-u^2)(-log u)),
    # which vanishes at u = 0.
    val, _ = quad(
        lambda u: u / ((1.0 - u * u) * -math.log(u)),
        0.0,
        1.0 / y,
        epsabs=1e-13,
        epsrel=1e-12,
        limit=200,
    )
    return val


def pi_riemann(
    x: float,
    n_max: int,
    zeros: ZeroList,
    k: int,
    include_tail: bool = True,
) -> float:
    """Riemann's prime counting reconstruction:
    sum over n <= n_max (while x**(1/n) >= 2) of mu(n)/n times the
    prime-power term at y = x**(1/n), each term expanded as
    li0(y) - sum over the first k zeros of 2 Re Ei(rho log y)
    [- log 2 + integral(dt / (t (t^2-1) log t), y..inf) when include_tail].

    With n_max = 1, k = 0 and the tail off this reduces to li0(x) = Ei(log x).
    """
    if not x >= 2.0:
        raise ValueError(f"pi_riemann needs x >= 2, got {x}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if not 0 <= k <= len(zeros):
        raise ValueError(f"k={k} outside the table (length {len(zeros)})")
    mu = sieve.mobius_range(1, n_max + 1)
    log_x = math.log(x)
    g = zeros.gammas[:k]
    total = 0.0
    for n in range(1, n_max + 1):
        if log_x / n < _LOG2:
            break
        m = int(mu[n - 1])
        if m == 0:
            continue
        log_y = log_x / n
        bracket = ei_real(log_y)
        zero_sum = 0.0
        for gamma in g:
            z = complex(0.5 * log_y, float(gamma) * log_y)
            zero_sum += 2.0 * ei(z).real
        bracket -= zero_sum
        if include_tail:
            bracket += -_LOG2 + _tail_integral(math.exp(log_y))
        total += m / n * bracket
    return total
