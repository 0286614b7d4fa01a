"""Pytest fixtures for integration tests."""

import pytest

from src.cli.main import main


@pytest.fixture
def run_cli(capsys):
    """Run the command line and capture exit code, stdout and stderr."""

    def _run(*argv: str):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def algebra_file(tmp_path):
    """B^2 written as an algebra table file."""
    path = tmp_path / "b2.alg"
    path.write_text(
        "algebra B^2 size=4\n"
        "add\n0 1 2 3\n1 1 3 3\n2 3 2 3\n3 3 3 3\n"
        "mul\n0 0 0 0\n0 1 0 1\n0 0 2 2\n0 1 2 3\n"
        "zero=0\none=3\n",
        encoding="utf-8",
    )
    return str(path)
