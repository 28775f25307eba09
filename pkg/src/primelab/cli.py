"""Command-line front end: one subcommand per analysis family, deterministic
CSV/JSON artifacts, and explicit exit codes.

Exit codes: 0 success, 1 usage error, 2 validation or data error,
3 check failure (an asserted bound did not hold).

Subcommand map: pi/theta/psi/mertens expose the counting oracles and their
scans; li the logarithm/exponential integrals; convert the partial-summation
identity checks; explicit and zeros the zero-table machinery; scan-density,
scan-gap, scan-variance the short-interval statistics; profile-error and
fit-epsilon the error-term profiling.  The zeros table defaults to the
PRIMELAB_ZEROS environment variable, then the bundled 100-ordinate file.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import chebyshev, counting, errorfit, explicit, logint, shortint
from .mertens import (
    inverse_zeta_partial,
    mertens,
    mertens_checkpoints,
    mertens_envelope,
    mertens_scan,
    squarefree_count,
)
from .report import format_cell, render_csv, render_json

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_CHECK = 3

IDENTITY_TOL = 1e-9
ENVELOPE_RATIO_LIMIT = 10.0
ZEROS_ENV = "PRIMELAB_ZEROS"


class UsageError(Exception):
    """Bad command line (unknown flag, missing argument)."""


class CheckFailure(Exception):
    """A check-style subcommand found its asserted bound broken."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1, not argparse's default 2
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _add_output_flags(p: argparse.ArgumentParser, plot: bool = False) -> None:
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--stamp", action="store_true", help="add a timestamp comment")
    p.add_argument("--workers", type=int, default=1)
    if plot:
        p.add_argument("--plot", default=None, help="also render a figure to this file")


def _config(ns: argparse.Namespace) -> dict[str, Any]:
    # workers is excluded so outputs stay byte-identical across worker counts
    skip = {"handler", "out", "stamp", "plot", "zeros", "workers"}
    cfg: dict[str, Any] = {"command": ns.command}
    for key, value in vars(ns).items():
        if key in skip or key == "command" or value is None or callable(value):
            continue
        cfg[key] = value
    return cfg


def _emit(text: str, ns: argparse.Namespace) -> None:
    out = getattr(ns, "out", None)
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _scalar(value: Any) -> str:
    return format_cell(value) + "\n"


def _table(ns: argparse.Namespace, columns: Sequence[str], rows, extra: Sequence[str] = ()) -> str:
    stamp = getattr(ns, "stamp", False)
    if getattr(ns, "format", "csv") == "json":
        payload = [dict(zip(columns, row)) for row in rows]
        return render_json(payload, _config(ns), stamp)
    return render_csv(columns, rows, _config(ns), stamp, extra_comments=extra)


def _report(ns: argparse.Namespace, report: dict[str, Any]) -> str:
    stamp = getattr(ns, "stamp", False)
    if getattr(ns, "format", "csv") == "json":
        return render_json(report, _config(ns), stamp)
    cols = list(report.keys())
    return render_csv(cols, [[report[c] for c in cols]], _config(ns), stamp)


def _check_workers(ns: argparse.Namespace) -> int:
    workers = getattr(ns, "workers", 1)
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    return workers


def _zero_table(ns: argparse.Namespace) -> explicit.ZeroList:
    path = getattr(ns, "zeros", None) or os.environ.get(ZEROS_ENV)
    if path is None:
        path = explicit.bundled_zeros_path()
    return explicit.load_zeros(path)


# ---------------------------------------------------------------------------
# handlers


def _run_pi(ns: argparse.Namespace) -> str:
    if ns.at is not None:
        counts = counting.pi_checkpoints(ns.at)
        return _table(ns, ("x", "pi"), zip(ns.at, (int(c) for c in counts)))
    if ns.x is None:
        raise ValueError("pi requires --x or --at")
    if ns.bt_window is not None:
        rep = counting.brun_titchmarsh_ratio(ns.x, ns.bt_window)
        return _table(
            ns,
            ("x", "y", "count", "bound", "satisfied"),
            [(rep.x, rep.y, rep.count, rep.bound, rep.satisfied)],
        )
    if ns.mod is not None:
        if ns.residue is None:
            raise ValueError("--mod requires --residue")
        return _scalar(counting.pi_ap(ns.x, ns.mod, ns.residue))
    if ns.window is not None:
        return _scalar(counting.pi_interval(ns.x, ns.window))
    if ns.method == "legendre":
        return _scalar(counting.pi_legendre(ns.x))
    return _scalar(counting.pi(ns.x))


def _run_theta(ns: argparse.Namespace) -> str:
    if ns.at is not None:
        counts, sums = chebyshev.theta_checkpoints(ns.at)
        rows = [(x, int(c), float(s)) for x, c, s in zip(ns.at, counts, sums)]
        return _table(ns, ("x", "pi", "theta"), rows)
    if ns.x is None:
        raise ValueError("theta requires --x or --at")
    if ns.mod is not None:
        if ns.residue is None:
            raise ValueError("--mod requires --residue")
        return _scalar(chebyshev.theta_ap(ns.x, ns.mod, ns.residue))
    return _scalar(chebyshev.theta(ns.x))


def _run_psi(ns: argparse.Namespace) -> str:
    if ns.sign_scan is not None:
        lo, hi, step = ns.sign_scan
        rep = chebyshev.sign_change_scan(lo, hi, step)
        if ns.format == "json":
            return render_json(
                {
                    "lo": rep.lo,
                    "hi": rep.hi,
                    "step": rep.step,
                    "sign_changes": rep.count,
                    "witnesses": [list(w) for w in rep.witnesses],
                    "samples": rep.samples,
                    "window_coverage_short": rep.window_coverage_short,
                    "window_coverage_long": rep.window_coverage_long,
                },
                _config(ns),
                ns.stamp,
            )
        extra = (
            f"sign_changes={rep.count} samples={rep.samples}",
            f"coverage_short={format_cell(rep.window_coverage_short)} "
            f"coverage_long={format_cell(rep.window_coverage_long)}",
        )
        return _table(ns, ("witness_lo", "witness_hi"), rep.witnesses, extra)
    if ns.at is not None:
        vals = chebyshev.psi_checkpoints(ns.at)
        return _table(ns, ("x", "psi"), [(x, float(v)) for x, v in zip(ns.at, vals)])
    if ns.x is None:
        raise ValueError("psi requires --x, --at, or --sign-scan")
    if ns.minus_theta:
        return _scalar(chebyshev.psi_minus_theta(ns.x))
    if ns.route == "mangoldt":
        return _scalar(chebyshev.psi_from_mangoldt(ns.x))
    return _scalar(chebyshev.psi(ns.x))


def _run_mertens(ns: argparse.Namespace) -> str:
    if ns.scan is not None:
        rep = mertens_scan(ns.scan)
        doc = {
            "limit": rep.limit,
            "violations": [list(v) for v in rep.violations],
            "max_envelope_ratio": rep.max_envelope_ratio,
            "argmax_envelope": rep.argmax_envelope,
            "min_sqrt_ratio": rep.min_sqrt_ratio,
            "argmin_sqrt": rep.argmin_sqrt,
            "max_sqrt_ratio": rep.max_sqrt_ratio,
            "argmax_sqrt": rep.argmax_sqrt,
            "final_value": rep.final_value,
        }
        text = _report(ns, doc)
        if not rep.satisfied:
            _emit(text, ns)
            raise CheckFailure(f"Mertens envelope violated at {len(rep.violations)} points")
        return text
    if ns.envelope is not None:
        rep = mertens_envelope(ns.envelope)
        rows = [
            (int(x), int(m), float(er), float(sr))
            for x, m, er, sr in zip(rep.xs, rep.values, rep.envelope_ratios, rep.sqrt_ratios)
        ]
        return _table(ns, ("x", "m", "envelope_ratio", "sqrt_ratio"), rows)
    if ns.at is not None:
        vals = mertens_checkpoints(ns.at)
        return _table(ns, ("x", "m"), [(x, int(v)) for x, v in zip(ns.at, vals)])
    if ns.squarefree is not None:
        return _scalar(squarefree_count(ns.squarefree))
    if ns.inverse_zeta is not None:
        return _scalar(inverse_zeta_partial(ns.inverse_zeta, ns.s))
    if ns.x is None:
        raise ValueError("mertens requires --x, --at, --scan, --envelope, --squarefree, or --inverse-zeta")
    return _scalar(mertens(ns.x))


def _run_li(ns: argparse.Namespace) -> str:
    if ns.ei is not None:
        parts = ns.ei
        if len(parts) > 2:
            raise ValueError("--ei takes a real part and an optional imaginary part")
        z = complex(parts[0], parts[1] if len(parts) > 1 else 0.0)
        value = logint.ei(z)
        return f"{format_cell(value.real)} {format_cell(value.imag)}\n"
    if ns.x is None:
        raise ValueError("li requires --x or --ei")
    if ns.route == "series":
        return _scalar(logint.li_series(ns.x))
    if ns.route == "quadrature":
        return _scalar(logint.li_quadrature(ns.x))
    return _scalar(logint.li(ns.x))


def _identity_rows(ns: argparse.Namespace) -> list[tuple[str, float, float, float]]:
    rows = []

    def add(name: str, left: float, right: float) -> None:
        scale = max(abs(left), abs(right), 1e-300)
        rows.append((name, left, right, abs(left - right) / scale))

    checks = [ns.check] if ns.check != "all" else [
        "count-from-theta", "theta-from-count", "prime-power-count", "reciprocal-sum"
    ]
    for check in checks:
        if check == "count-from-theta":
            add(check, logint.pi_from_theta(ns.x, ns.mode), float(counting.pi(ns.x)))
        elif check == "theta-from-count":
            add(check, logint.theta_from_pi(ns.x), chebyshev.theta(ns.x))
        elif check == "prime-power-count":
            rep = logint.mangoldt_identity(ns.x)
            add(check, rep.left, rep.right)
        elif check == "reciprocal-sum":
            rep = logint.reciprocal_prime_identity(ns.x)
            add(check, rep.left, rep.right)
    return rows


def _run_convert(ns: argparse.Namespace) -> str:
    if ns.envelope is not None:
        nu, c, x = ns.envelope
        rep = logint.integral_envelope_check(nu, c, x)
        text = _table(
            ns,
            ("nu", "c", "x", "integral", "bound", "ratio"),
            [(rep.nu, rep.c, rep.x, rep.integral, rep.bound, rep.ratio)],
        )
        if nu < 1.0 and rep.ratio > ENVELOPE_RATIO_LIMIT:
            _emit(text, ns)
            raise CheckFailure(
                f"envelope integral ratio {rep.ratio:.4f} exceeds {ENVELOPE_RATIO_LIMIT}"
            )
        return text
    if ns.x is None:
        raise ValueError("convert requires --x")
    if ns.ap is not None:
        q, a = ns.ap
        rep = logint.ap_conversions(ns.x, q, a)
        rows = [
            (name, r.left, r.right, r.rel_discrepancy)
            for name, r in (
                ("count-from-logsum", rep.count_from_logsum),
                ("logsum-from-count", rep.logsum_from_count),
                ("reciprocal-sum", rep.reciprocal_sum),
            )
        ]
        text = _table(ns, ("identity", "left", "right", "rel_discrepancy"), rows)
        if rep.max_rel_discrepancy > IDENTITY_TOL:
            _emit(text, ns)
            raise CheckFailure(
                f"residue-class identities disagree by {rep.max_rel_discrepancy:.3e}"
            )
        return text
    rows = _identity_rows(ns)
    text = _table(ns, ("identity", "left", "right", "rel_discrepancy"), rows)
    worst = max(r[3] for r in rows)
    if worst > IDENTITY_TOL:
        _emit(text, ns)
        raise CheckFailure(f"identity discrepancy {worst:.3e} exceeds {IDENTITY_TOL}")
    return text


def _run_explicit(ns: argparse.Namespace) -> str:
    zeros = _zero_table(ns)
    k = len(zeros) if ns.k is None else ns.k
    if ns.formula == "psi":
        return _scalar(explicit.psi_landau(ns.x, zeros, k))
    return _scalar(
        explicit.pi_riemann(ns.x, ns.n, zeros, k, include_tail=not ns.no_tail)
    )


def _run_zeros(ns: argparse.Namespace) -> str:
    zeros = _zero_table(ns)
    if ns.t is not None:
        rep = explicit.zero_count_check(zeros, ns.t)
        return _table(
            ns,
            ("t", "counted", "main_term", "deviation"),
            [(rep.t, rep.counted, rep.main_term, rep.deviation)],
        )
    return _table(
        ns,
        ("count", "first", "last"),
        [(len(zeros), float(zeros.gammas[0]), zeros.max_ordinate)],
    )


def _run_scan_density(ns: argparse.Namespace) -> str:
    workers = _check_workers(ns)
    if ns.maier:
        if ns.delta is None:
            raise ValueError("--maier requires --delta")
        rep = shortint.maier_ratio_stats(ns.delta, ns.x_lo, ns.x_hi, ns.samples, workers)
        doc = {
            "delta": rep.delta,
            "min_ratio": rep.min_ratio,
            "max_ratio": rep.max_ratio,
            "bin_edges": list(rep.bin_edges),
            "bin_counts": list(rep.bin_counts),
            "overflow": rep.overflow,
            "samples": rep.samples,
            "skipped": list(rep.skipped),
        }
        return _report(ns, doc)
    rule = shortint.YRule(kind=ns.rule, value=ns.value)
    rep = shortint.density_scan(ns.x_lo, ns.x_hi, ns.samples, rule, workers)
    rows = [
        (s.x, s.y, s.count, s.density_ratio, s.theta_inc, s.psi_inc)
        for s in rep.stats
    ]
    extra = [
        f"mean_ratio={format_cell(rep.mean_ratio)} "
        f"min_ratio={format_cell(rep.min_ratio)} max_ratio={format_cell(rep.max_ratio)}"
    ]
    extra.extend(f"skipped: x={x} y={y}" for x, y in rep.skipped)
    text = _table(ns, ("x", "y", "count", "density_ratio", "theta_inc", "psi_inc"), rows, extra)
    if ns.plot:
        from . import plotting

        plotting.plot_density(rep, ns.plot)
    return text


def _run_scan_gap(ns: argparse.Namespace) -> str:
    workers = _check_workers(ns)
    grid = shortint.default_gap_grid(ns.points, ns.lo, ns.hi)
    rep = shortint.bhp_gap_check(grid, workers)
    if ns.format == "json":
        doc = {
            "points": len(rep.points),
            "violations": list(rep.violations),
            "sandwich_failures": list(rep.sandwich_failures),
            "min_count": min(p.count for p in rep.points),
        }
        text = render_json(doc, _config(ns), ns.stamp)
    else:
        rows = [
            (p.x, p.length, p.count, p.log_sum, p.lower_ok, p.upper_ok)
            for p in rep.points
        ]
        text = _table(
            ns,
            ("x", "length", "count", "log_sum", "lower_ok", "upper_ok"),
            rows,
            (f"violations={len(rep.violations)} sandwich_failures={len(rep.sandwich_failures)}",),
        )
    if not rep.satisfied:
        _emit(text, ns)
        raise CheckFailure(f"prime-free gap intervals at {list(rep.violations)[:5]}")
    return text


def _run_scan_variance(ns: argparse.Namespace) -> str:
    _check_workers(ns)  # accepted for interface uniformity; the scan is one pass
    if ns.increment is not None:
        if ns.x is None:
            raise ValueError("--increment requires --x")
        rep = shortint.increment_deviation(ns.x, ns.increment)
        doc = {
            "x": rep.x,
            "envelope": rep.envelope,
            "max_theta_dev": rep.max_theta_dev,
            "max_psi_dev": rep.max_psi_dev,
            "theta_ratio": rep.theta_ratio,
            "psi_ratio": rep.psi_ratio,
            "skipped": list(rep.skipped),
        }
        text = _report(ns, doc)
        if not rep.satisfied:
            _emit(text, ns)
            raise CheckFailure(
                f"increment deviation ratio exceeds 10: theta={rep.theta_ratio:.3f} "
                f"psi={rep.psi_ratio:.3f}"
            )
        return text
    if ns.n is None or ns.y is None:
        raise ValueError("scan-variance requires --n and --y (or --increment with --x)")
    rep = shortint.interval_variance(ns.n, ns.y, ns.stride)
    doc = {
        "n": rep.n,
        "y": rep.y,
        "stride": rep.stride,
        "sample_count": rep.sample_count,
        "empirical_mean": rep.empirical_mean,
        "empirical_variance": rep.empirical_variance,
        "predicted_variance": rep.predicted_variance,
        "ratio": rep.ratio,
    }
    return _report(ns, doc)


def _profile_grid(ns: argparse.Namespace) -> Sequence[int]:
    if ns.points is not None:
        return ns.points
    return errorfit.default_grid(ns.grid_lo, ns.grid_hi, ns.per_decade)


def _run_profile_error(ns: argparse.Namespace) -> str:
    workers = _check_workers(ns)
    profile = errorfit.build_profile(_profile_grid(ns), workers=workers)
    env = errorfit.envelope_report(profile, ns.c)
    if ns.format == "json":
        doc = {
            "rows": [
                {
                    "x": r.x, "pi": r.pi, "theta": r.theta, "psi": r.psi, "li": r.li,
                    "e_pi": r.e_pi, "e_theta": r.e_theta, "e_psi": r.e_psi,
                    "eps_eff_pi": r.eps_eff_pi, "eps_eff_theta": r.eps_eff_theta,
                }
                for r in profile
            ],
            "envelopes": [
                {
                    "name": f.name,
                    "max_ratio_pi": f.max_ratio_pi, "argmax_pi": f.argmax_pi,
                    "max_ratio_theta": f.max_ratio_theta, "argmax_theta": f.argmax_theta,
                    "max_ratio_psi": f.max_ratio_psi, "argmax_psi": f.argmax_psi,
                }
                for f in env.families
            ],
            "violations": [list(v) for v in env.violations],
        }
        text = render_json(doc, _config(ns), ns.stamp)
    else:
        rows = [
            (r.x, r.pi, r.theta, r.psi, r.li, r.e_pi, r.e_theta, r.e_psi,
             r.eps_eff_pi, r.eps_eff_theta)
            for r in profile
        ]
        extra = [
            f"envelope {f.name}: max_ratio_pi={format_cell(f.max_ratio_pi)} "
            f"max_ratio_theta={format_cell(f.max_ratio_theta)} "
            f"max_ratio_psi={format_cell(f.max_ratio_psi)}"
            for f in env.families
        ]
        extra.append(f"violations={len(env.violations)}")
        text = _table(
            ns,
            ("x", "pi", "theta", "psi", "li", "e_pi", "e_theta", "e_psi",
             "eps_eff_pi", "eps_eff_theta"),
            rows,
            extra,
        )
    if ns.plot:
        from . import plotting

        plotting.plot_profile(profile, ns.plot)
    return text


def _run_fit_epsilon(ns: argparse.Namespace) -> str:
    workers = _check_workers(ns)
    profile = errorfit.build_profile(_profile_grid(ns), workers=workers)
    fit = errorfit.epsilon_fit(profile)
    if ns.format == "json":
        doc = {
            "rows": [
                {"x": x, "implied_eps_pi": epi, "implied_eps_theta": eth}
                for x, epi, eth in fit.rows
            ],
            "slope_pi": fit.slope_pi,
            "intercept_pi": fit.intercept_pi,
            "slope_theta": fit.slope_theta,
            "intercept_theta": fit.intercept_theta,
            "all_positive_pi": fit.all_positive_pi,
            "all_positive_theta": fit.all_positive_theta,
        }
        text = render_json(doc, _config(ns), ns.stamp)
    else:
        extra = [
            f"slope_pi={format_cell(fit.slope_pi)} slope_theta={format_cell(fit.slope_theta)}",
            f"all_positive_pi={format_cell(fit.all_positive_pi)} "
            f"all_positive_theta={format_cell(fit.all_positive_theta)}",
        ]
        text = _table(
            ns,
            ("x", "implied_eps_pi", "implied_eps_theta"),
            fit.rows,
            extra,
        )
    if ns.plot:
        from . import plotting

        plotting.plot_epsilon(fit, ns.plot)
    return text


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> _Parser:
    parser = _Parser(prog="primelab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pi", help="prime counting")
    p.add_argument("--x", type=int)
    p.add_argument("--method", choices=("sieve", "legendre"), default="sieve")
    p.add_argument("--window", type=int, help="count primes in (x, x+window]")
    p.add_argument("--mod", type=int)
    p.add_argument("--residue", type=int)
    p.add_argument("--bt-window", type=int, dest="bt_window",
                   help="compare the window count against the sieve bound")
    p.add_argument("--at", type=_int_list, help="checkpoint list, e.g. 10,100,1000")
    _add_output_flags(p)
    p.set_defaults(handler=_run_pi)

    p = sub.add_parser("theta", help="Chebyshev theta")
    p.add_argument("--x", type=int)
    p.add_argument("--mod", type=int)
    p.add_argument("--residue", type=int)
    p.add_argument("--at", type=_int_list)
    _add_output_flags(p)
    p.set_defaults(handler=_run_theta)

    p = sub.add_parser("psi", help="Chebyshev psi")
    p.add_argument("--x", type=int)
    p.add_argument("--route", choices=("theta", "mangoldt"), default="theta")
    p.add_argument("--minus-theta", action="store_true", dest="minus_theta")
    p.add_argument("--at", type=_int_list)
    p.add_argument("--sign-scan", type=int, nargs=3, dest="sign_scan",
                   metavar=("LO", "HI", "STEP"))
    _add_output_flags(p)
    p.set_defaults(handler=_run_psi)

    p = sub.add_parser("mertens", help="Mertens function")
    p.add_argument("--x", type=int)
    p.add_argument("--at", type=_int_list)
    p.add_argument("--scan", type=int, help="check |M| <= x^(7/12) for all x <= scan")
    p.add_argument("--envelope", type=_int_list)
    p.add_argument("--squarefree", type=int)
    p.add_argument("--inverse-zeta", type=int, dest="inverse_zeta")
    p.add_argument("--s", type=float, default=2.0)
    _add_output_flags(p)
    p.set_defaults(handler=_run_mertens)

    p = sub.add_parser("li", help="logarithm and exponential integrals")
    p.add_argument("--x", type=float)
    p.add_argument("--route", choices=("checked", "series", "quadrature"), default="checked")
    p.add_argument("--ei", type=float, nargs="+", metavar="RE [IM]")
    _add_output_flags(p)
    p.set_defaults(handler=_run_li)

    p = sub.add_parser("convert", help="partial-summation identity checks")
    p.add_argument("--x", type=int)
    p.add_argument("--check",
                   choices=("count-from-theta", "theta-from-count",
                            "prime-power-count", "reciprocal-sum", "all"),
                   default="all")
    p.add_argument("--mode", choices=("exact-sum", "piecewise-integral"),
                   default="exact-sum")
    p.add_argument("--ap", type=int, nargs=2, metavar=("Q", "A"))
    p.add_argument("--envelope", type=float, nargs=3, metavar=("NU", "C", "X"))
    _add_output_flags(p)
    p.set_defaults(handler=_run_convert)

    p = sub.add_parser("explicit", help="explicit-formula reconstructions")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--formula", choices=("psi", "pi"), default="psi")
    p.add_argument("--k", type=int, help="zeros used (default: whole table)")
    p.add_argument("--n", type=int, default=6, help="Moebius terms for the pi formula")
    p.add_argument("--no-tail", action="store_true", dest="no_tail")
    p.add_argument("--zeros", help="zero table path")
    _add_output_flags(p)
    p.set_defaults(handler=_run_explicit)

    p = sub.add_parser("zeros", help="zero-table validation")
    p.add_argument("--file", dest="zeros", help="zero table path")
    p.add_argument("--t", type=float, help="count zeros up to this height")
    p.add_argument("--check", action="store_true", help="alias; --t already checks")
    _add_output_flags(p)
    p.set_defaults(handler=_run_zeros)

    p = sub.add_parser("scan-density", help="short-interval density scan")
    p.add_argument("--x-lo", type=int, required=True, dest="x_lo")
    p.add_argument("--x-hi", type=int, required=True, dest="x_hi")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--rule", choices=("fixed", "power", "log-power"), default="power")
    p.add_argument("--value", type=float, default=7.0 / 12.0)
    p.add_argument("--maier", action="store_true")
    p.add_argument("--delta", type=float)
    _add_output_flags(p, plot=True)
    p.set_defaults(handler=_run_scan_density)

    p = sub.add_parser("scan-gap", help="prime-free gap check")
    p.add_argument("--points", type=int, default=10_000)
    p.add_argument("--lo", type=int, default=10**3)
    p.add_argument("--hi", type=int, default=10**8)
    _add_output_flags(p)
    p.set_defaults(handler=_run_scan_gap)

    p = sub.add_parser("scan-variance", help="psi increment statistics")
    p.add_argument("--n", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--increment", type=_int_list, help="y samples for the deviation check")
    p.add_argument("--x", type=int, help="base point for --increment")
    _add_output_flags(p)
    p.set_defaults(handler=_run_scan_variance)

    p = sub.add_parser("profile-error", help="error-term profile")
    p.add_argument("--grid-lo", type=int, default=10, dest="grid_lo")
    p.add_argument("--grid-hi", type=int, default=10**8, dest="grid_hi")
    p.add_argument("--per-decade", type=int, default=8, dest="per_decade")
    p.add_argument("--points", type=_int_list, help="explicit grid instead")
    p.add_argument("--c", type=float, default=1.0, help="envelope constant")
    _add_output_flags(p, plot=True)
    p.set_defaults(handler=_run_profile_error)

    p = sub.add_parser("fit-epsilon", help="effective-exponent fit")
    p.add_argument("--grid-lo", type=int, default=10**3, dest="grid_lo")
    p.add_argument("--grid-hi", type=int, default=10**8, dest="grid_hi")
    p.add_argument("--per-decade", type=int, default=8, dest="per_decade")
    p.add_argument("--points", type=_int_list)
    _add_output_flags(p, plot=True)
    p.set_defaults(handler=_run_fit_epsilon)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        text = ns.handler(ns)
    except CheckFailure as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except ArithmeticError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        _emit(text, ns)
    except BrokenPipeError:  # downstream consumer (head, etc.) closed the pipe
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
