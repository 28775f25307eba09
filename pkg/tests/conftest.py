"""Shared fixtures: the bundled zero table and a CLI runner."""

import pytest

from primelab import ZeroList, bundled_zeros_path, load_zeros
from primelab import cli as cli_mod


@pytest.fixture(scope="session")
def zeros() -> ZeroList:
    return load_zeros(bundled_zeros_path())


@pytest.fixture()
def run_cli(capsys):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""

    def _run(argv):
        code = cli_mod.main(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
