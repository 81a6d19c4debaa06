import pytest
from typer.testing import CliRunner


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def isolated_project(tmp_path, monkeypatch):
    """Run every CLI test in an empty directory, away from pyproject defaults."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("SOLENDIM_VERBOSE", raising=False)
    return tmp_path
