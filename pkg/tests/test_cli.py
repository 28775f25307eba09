"""CLI behavior: exit codes, artifact shape, and byte determinism."""

import json
import os

import pytest

from primelab import bundled_zeros_path

SMALL_RUNS = [
    ["pi", "--x", "1000"],
    ["pi", "--x", "10000", "--method", "legendre"],
    ["pi", "--at", "10,100,1000"],
    ["pi", "--x", "100000", "--bt-window", "500"],
    ["theta", "--x", "10000"],
    ["theta", "--at", "100,1000", "--format", "json"],
    ["psi", "--x", "10000", "--route", "mangoldt"],
    ["psi", "--x", "10000", "--minus-theta"],
    ["psi", "--sign-scan", "2", "2000", "1"],
    ["mertens", "--x", "10000"],
    ["mertens", "--scan", "20000"],
    ["mertens", "--envelope", "100,1000,10000"],
    ["mertens", "--squarefree", "100000"],
    ["mertens", "--inverse-zeta", "10000"],
    ["li", "--x", "1000"],
    ["li", "--x", "1000", "--route", "quadrature"],
    ["li", "--ei", "1.0"],
    ["li", "--ei", "0.5", "14.134725"],
    ["convert", "--x", "10000"],
    ["convert", "--x", "10000", "--check", "count-from-theta", "--mode", "piecewise-integral"],
    ["convert", "--x", "10000", "--ap", "4", "1"],
    ["convert", "--envelope", "0.4166666667", "2.0", "100000"],
    ["explicit", "--x", "1000", "--formula", "psi", "--k", "50"],
    ["explicit", "--x", "1000", "--formula", "pi", "--n", "6", "--k", "20"],
    ["zeros"],
    ["zeros", "--t", "100"],
    ["scan-density", "--x-lo", "100000", "--x-hi", "1000000", "--samples", "4"],
    ["scan-density", "--x-lo", "100000", "--x-hi", "1000000", "--samples", "30",
     "--maier", "--delta", "2.0"],
    ["scan-gap", "--points", "20", "--lo", "1000", "--hi", "100000"],
    ["scan-gap", "--points", "20", "--lo", "1000", "--hi", "100000", "--format", "json"],
    ["scan-variance", "--n", "20000", "--y", "50"],
    ["scan-variance", "--increment", "3000,10000", "--x", "100000"],
    ["profile-error", "--grid-lo", "100", "--grid-hi", "10000", "--per-decade", "2"],
    ["fit-epsilon", "--grid-lo", "1000", "--grid-hi", "1000000", "--per-decade", "3"],
]


def test_scalar_outputs(run_cli):
    assert run_cli(["pi", "--x", "100"]) == (0, "25\n", "")
    assert run_cli(["mertens", "--x", "10000"]) == (0, "-23\n", "")
    code, out, _ = run_cli(["theta", "--x", "100"])
    assert code == 0 and out == "83.72839039906393\n"


def test_unknown_flag_is_usage_error(run_cli):
    code, out, err = run_cli(["pi", "--bogus"])
    assert code == 1
    assert "usage error" in err


def test_missing_subcommand_is_usage_error(run_cli):
    code, _, _ = run_cli([])
    assert code == 1


def test_domain_error_exits_two(run_cli):
    code, _, err = run_cli(["li", "--x", "1"])
    assert code == 2
    assert "error" in err


def test_missing_zero_table_exits_two(run_cli):
    code, _, _ = run_cli(["zeros", "--file", "/nonexistent/z.txt"])
    assert code == 2


def test_failed_check_exits_three(run_cli):
    code, out, err = run_cli(["convert", "--envelope", "0.99", "0.0001", "1000000"])
    assert code == 3
    assert "check failed" in err
    assert out  # the artifact is still emitted before the failure signal


def test_conflicting_residue_flags_exit_two(run_cli):
    code, _, _ = run_cli(["pi", "--x", "100", "--mod", "4"])
    assert code == 2


@pytest.mark.parametrize("argv", SMALL_RUNS, ids=lambda a: " ".join(a))
def test_byte_identical_reruns(argv, run_cli):
    code1, out1, _ = run_cli(argv)
    code2, out2, _ = run_cli(argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "generated" not in out1


@pytest.mark.parametrize("argv", [
    ["scan-density", "--x-lo", "100000", "--x-hi", "1000000", "--samples", "5"],
    ["scan-gap", "--points", "15", "--lo", "1000", "--hi", "100000"],
    ["profile-error", "--grid-lo", "100", "--grid-hi", "10000", "--per-decade", "2"],
    ["fit-epsilon", "--grid-lo", "1000", "--grid-hi", "1000000", "--per-decade", "3"],
], ids=lambda a: a[0])
def test_byte_identical_across_worker_counts(argv, run_cli):
    _, out1, _ = run_cli(argv + ["--workers", "1"])
    _, out4, _ = run_cli(argv + ["--workers", "4"])
    assert out1 == out4


def test_out_flag_writes_file(tmp_path, run_cli):
    target = tmp_path / "out.csv"
    code, out, _ = run_cli(["pi", "--at", "10,100", "--out", str(target)])
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.endswith("10,4\n100,25\n")


def test_json_format_structure(run_cli):
    code, out, _ = run_cli(["zeros", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["artifact"] == "primelab"
    assert doc["report"][0]["count"] == 100


def test_stamp_flag_adds_comment(run_cli):
    _, plain, _ = run_cli(["pi", "--at", "10"])
    _, stamped, _ = run_cli(["pi", "--at", "10", "--stamp"])
    assert "# generated: " not in plain
    assert "# generated: " in stamped


def test_config_echo_is_sorted_and_omits_workers(run_cli):
    _, out, _ = run_cli(["scan-gap", "--points", "10", "--lo", "1000",
                         "--hi", "50000", "--workers", "2"])
    config_line = out.splitlines()[1]
    assert config_line.startswith("# config: ")
    assert "workers" not in config_line
    keys = [tok.split("=")[0] for tok in config_line[len("# config: "):].split()]
    assert keys == sorted(keys)


def test_zeros_env_var_overrides_bundle(tmp_path, run_cli, monkeypatch):
    short = tmp_path / "short.txt"
    lines = open(bundled_zeros_path(), encoding="ascii").read().splitlines()
    ordinates = [ln for ln in lines if ln and not ln.startswith("#")][:10]
    short.write_text("\n".join(ordinates) + "\n")
    monkeypatch.setenv("PRIMELAB_ZEROS", str(short))
    code, out, _ = run_cli(["zeros"])
    assert code == 0
    assert out.splitlines()[-1].startswith("10,")


def test_explicit_zeros_flag_beats_env(tmp_path, run_cli, monkeypatch):
    monkeypatch.setenv("PRIMELAB_ZEROS", "/nonexistent/z.txt")
    code, out, _ = run_cli(["zeros", "--file", str(bundled_zeros_path())])
    assert code == 0
    assert out.splitlines()[-1].startswith("100,")


def test_convert_identities_all_green(run_cli):
    code, out, _ = run_cli(["convert", "--x", "100000"])
    assert code == 0
    rows = [ln for ln in out.splitlines() if not ln.startswith("#")][1:]
    assert len(rows) == 4
    assert all(float(r.split(",")[-1]) < 1e-9 for r in rows)


def test_explicit_formula_values(run_cli):
    code, out, _ = run_cli(["explicit", "--x", "1000", "--formula", "psi", "--k", "100"])
    assert code == 0
    assert out == "995.8113385543912\n"
    code, out, _ = run_cli(
        ["explicit", "--x", "1000", "--formula", "pi", "--n", "9", "--k", "0", "--no-tail"])
    assert out == "168.33467149057532\n"


def test_plot_flag_renders_file(tmp_path, run_cli):
    png = tmp_path / "profile.png"
    code, out, _ = run_cli(["profile-error", "--grid-lo", "100", "--grid-hi", "10000",
                            "--per-decade", "2", "--plot", str(png)])
    assert code == 0
    assert png.stat().st_size > 1000
    assert out.startswith("# primelab")  # the delimited artifact is unchanged


def test_mertens_scan_reports_clean_envelope(run_cli):
    code, out, _ = run_cli(["mertens", "--scan", "50000", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["violations"] == []
    assert doc["report"]["max_envelope_ratio"] <= 1.0
