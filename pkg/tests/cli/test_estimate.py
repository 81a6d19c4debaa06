"""
Solendim CLI Estimate Tests
"""

import json
import math

import pytest

from solendim.cli.main import app

# ---------------------------
# Unit tests
# ---------------------------


def test_estimate_list(runner):
    """
    Scenario:
        estimate list.

    Expected:
        The three estimators on stdout.
    """
    result = runner.invoke(app, ["estimate", "list"])

    assert result.exit_code == 0
    for name in ("box", "local", "lyapunov"):
        assert name in result.output


def test_estimate_lyapunov(runner, tmp_path):
    """
    Scenario:
        estimate lyapunov --v 0.3,0.4,0.1,0.2 --p 0.5.

    Expected:
        Three exponents with stderr, unstable = log 2.
    """
    out = tmp_path / "lyap.json"
    result = runner.invoke(
        app,
        [
            "estimate", "lyapunov", "--v", "0.3,0.4,0.1,0.2", "--p", "0.5",
            "--iterates", "2000", "--orbits", "8", "-w", "1", "-o", str(out),
        ],
    )

    assert result.exit_code == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    payload = data["result"]
    assert payload["unstable"] == pytest.approx(math.log(2))
    assert set(payload["stderr"]) == {"unstable", "beta", "tau"}
    assert payload["strong_stable"] < payload["weak_stable"] < 0.0
    assert data["config"]["n_orbits"] == 8
    assert "workers" not in data["config"]


def test_estimate_local_point_mass(runner):
    """
    Scenario:
        estimate local on b^1, a point mass.

    Expected:
        Exit code 1 naming AllQueriesDegenerate.
    """
    result = runner.invoke(
        app,
        [
            "estimate", "local", "--v", "0.3,0.3,0.2,0.2", "--p", "1",
            "-n", "500", "--queries", "5", "-w", "1",
        ],
    )

    assert result.exit_code == 1
    assert "AllQueriesDegenerate" in result.output


def test_estimate_box_degenerate_range(runner):
    """
    Scenario:
        --k 3:4 gives two scales.

    Expected:
        Exit code 1 naming DegenerateRange.
    """
    result = runner.invoke(
        app, ["estimate", "box", "--v", "0.3,0.3,0.2,0.2", "-n", "100", "--k", "3:4"]
    )

    assert result.exit_code == 1
    assert "DegenerateRange" in result.output


def test_estimate_box_project_burn_in(runner, isolated_project):
    """
    Scenario:
        A pyproject setting burn_in = 3, then estimate box with and without
        --burn-in.

    Expected:
        The project value is echoed; --burn-in wins over it.
    """
    (isolated_project / "pyproject.toml").write_text(
        "[tool.solendim]\nburn_in = 3\n", encoding="utf-8"
    )
    base = ["estimate", "box", "--v", "0.3,0.3,0.2,0.2", "-n", "2000", "--k", "2:5"]
    from_project, from_cli = isolated_project / "a.json", isolated_project / "b.json"

    result = runner.invoke(app, [*base, "-o", str(from_project)])
    assert result.exit_code == 0
    assert json.loads(from_project.read_text(encoding="utf-8"))["config"]["burn_in"] == 3

    result = runner.invoke(app, [*base, "--burn-in", "10", "-o", str(from_cli)])
    assert result.exit_code == 0
    assert json.loads(from_cli.read_text(encoding="utf-8"))["config"]["burn_in"] == 10


def test_estimate_local_project_tolerance(runner, isolated_project):
    """
    Scenario:
        A pyproject setting tolerance = 1e-6, then estimate local on a small
        cloud.

    Expected:
        The tolerance is echoed in the config.
    """
    (isolated_project / "pyproject.toml").write_text(
        "[tool.solendim]\ntolerance = 1e-6\n", encoding="utf-8"
    )
    out = isolated_project / "local.json"
    result = runner.invoke(
        app,
        [
            "estimate", "local", "--v", "0.4,0.4,0.2,0.2", "-n", "5000",
            "--queries", "10", "--k", "2:4", "-w", "1", "-o", str(out),
        ],
    )

    assert result.exit_code == 0
    assert json.loads(out.read_text(encoding="utf-8"))["config"]["tolerance"] == 1e-6


def test_estimate_box_bad_k(runner):
    """
    Scenario:
        --k without a colon.

    Expected:
        Exit code 2.
    """
    result = runner.invoke(app, ["estimate", "box", "--v", "0.3,0.3,0.2,0.2", "--k", "3-8"])
    assert result.exit_code == 2


# ---------------------------
# Integration tests
# ---------------------------


def test_estimate_box(runner, tmp_path):
    """
    Scenario:
        estimate box --v 0.3,0.3,0.2,0.2 -n 100000 --k 2:8.

    Expected:
        Slope within 0.1 of log 2 / -log 0.3.
    """
    out = tmp_path / "box.json"
    result = runner.invoke(
        app,
        ["estimate", "box", "--v", "0.3,0.3,0.2,0.2", "-n", "100000", "--k", "2:8", "-o", str(out)],
    )

    assert result.exit_code == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["result"]["slope"] == pytest.approx(math.log(2) / -math.log(0.3), abs=0.1)
    assert data["config"]["k"] == [2, 8]


def test_estimate_box_csv_is_reproducible(runner, tmp_path):
    """
    Scenario:
        The same CSV box run twice.

    Expected:
        Byte-identical files.
    """
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (first, second):
        result = runner.invoke(
            app,
            ["estimate", "box", "--v", "0.3,0.3,0.2,0.2", "-n", "5000", "--k", "2:5",
             "-f", "csv", "--seed", "3", "-o", str(out)],
        )
        assert result.exit_code == 0

    assert first.read_bytes() == second.read_bytes()
    assert first.read_text(encoding="utf-8").splitlines()[1].startswith("slope,")
