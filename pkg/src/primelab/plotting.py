"""Optional matplotlib figures for the report-emitting subcommands.

Uses the Agg backend; figures are written to files, never shown.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .errorfit import ENVELOPE_EXPONENT, EpsilonFitReport, ErrorProfile
from .shortint import DensityScanReport

_SAVE_OPTS = {"dpi": 120, "bbox_inches": "tight", "metadata": {"Software": "primelab"}}


def plot_profile(profile: ErrorProfile, path: str | Path) -> None:
    """Log-log |E| curves for pi/theta/psi against the x**(7/12) envelope."""
    xs = [r.x for r in profile]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, values in (
        ("|pi - li|", [abs(r.e_pi) for r in profile]),
        ("|theta - x|", [abs(r.e_theta) for r in profile]),
        ("|psi - x|", [abs(r.e_psi) for r in profile]),
    ):
        ax.plot(xs, values, marker=".", linewidth=1.0, label=label)
    ax.plot(
        xs,
        [x**ENVELOPE_EXPONENT for x in xs],
        linestyle="--",
        color="black",
        label="x^(7/12)",
    )
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("x")
    ax.set_ylabel("|error|")
    ax.legend(fontsize=8)
    fig.savefig(path, **_SAVE_OPTS)
    plt.close(fig)


def plot_density(report: DensityScanReport, path: str | Path) -> None:
    """Density ratios across the scan grid with the unit line."""
    xs = [s.x for s in report.stats]
    ys = [s.density_ratio for s in report.stats]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(xs, ys, marker=".", linewidth=0.8)
    ax.axhline(1.0, linestyle="--", color="black", linewidth=0.8)
    ax.set_xscale("log")
    ax.set_xlabel("x")
    ax.set_ylabel("count * log x / y")
    fig.savefig(path, **_SAVE_OPTS)
    plt.close(fig)


def plot_epsilon(fit: EpsilonFitReport, path: str | Path) -> None:
    """Implied exponent margins eps(x) = 7/12 - eps_eff on a log-x axis."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    xs = [row[0] for row in fit.rows]
    pi_eps = [row[1] for row in fit.rows]
    theta_eps = [row[2] for row in fit.rows]
    ax.plot(xs, pi_eps, marker=".", linewidth=0.8, label="pi error")
    ax.plot(xs, theta_eps, marker=".", linewidth=0.8, label="theta error")
    ax.axhline(0.0, linestyle="--", color="black", linewidth=0.8)
    ax.set_xscale("log")
    ax.set_xlabel("x")
    ax.set_ylabel("implied epsilon")
    ax.legend(fontsize=8)
    fig.savefig(path, **_SAVE_OPTS)
    plt.close(fig)
