"""
Solendim IO Config Tests
"""

import pytest

from solendim.errors import ConfigError
from solendim.io import (
    SolendimDefaults,
    expand_grid,
    load_project_defaults,
    load_sweep_config,
    parse_grid_options,
    parse_grid_value,
)
from solendim.settings import OutputFormat

# ---------------------------
# Unit tests
# ---------------------------


def test_load_project_defaults_missing_file(tmp_path):
    """
    Scenario:
        No pyproject file.

    Expected:
        Built-in defaults.
    """
    assert load_project_defaults(tmp_path / "pyproject.toml") == SolendimDefaults()


def test_load_project_defaults_section(tmp_path):
    """
    Scenario:
        A [tool.solendim] section overriding seed, workers and format.

    Expected:
        The overrides merged over the built-in defaults.
    """
    path = tmp_path / "pyproject.toml"
    path.write_text(
        '[tool.solendim]\nseed = 7\nworkers = 2\nformat = "csv"\n', encoding="utf-8"
    )

    defaults = load_project_defaults(path)

    assert defaults.seed == 7
    assert defaults.workers == 2
    assert defaults.format is OutputFormat.CSV
    assert defaults.burn_in == SolendimDefaults().burn_in


def test_load_project_defaults_format_unset(tmp_path):
    """
    Scenario:
        A [tool.solendim] section with tolerance and burn_in but no format.

    Expected:
        Both values are read and the format stays None.
    """
    path = tmp_path / "pyproject.toml"
    path.write_text("[tool.solendim]\ntolerance = 1e-6\nburn_in = 8\n", encoding="utf-8")

    defaults = load_project_defaults(path)

    assert defaults.tolerance == 1e-6
    assert defaults.burn_in == 8
    assert defaults.format is None


@pytest.mark.parametrize(
    "section",
    [
        'colour = "red"\n',
        'format = "xml"\n',
        'seed = "many"\n',
        "tolerance = 0.0\n",
        "tolerance = 1.5\n",
    ],
)
def test_load_project_defaults_invalid(tmp_path, section):
    """
    Scenario:
        An unknown key, an unknown format, a non-integer seed and
        tolerances outside (0, 1).

    Expected:
        ConfigError is raised.
    """
    path = tmp_path / "pyproject.toml"
    path.write_text("[tool.solendim]\n" + section, encoding="utf-8")

    with pytest.raises(ConfigError):
        load_project_defaults(path)


@pytest.mark.parametrize(
    "raw, expected",
    [
        (0.3, 0.3),
        (1, 1.0),
        ([0.1, 0.2], [0.1, 0.2]),
        ("0.1:0.3:3", [0.1, 0.2, 0.3]),
        ("0.1,0.2", [0.1, 0.2]),
        ("0.25", 0.25),
    ],
)
def test_parse_grid_value(raw, expected):
    """
    Scenario:
        Each accepted grid value form.

    Expected:
        A float or a list of floats.
    """
    assert parse_grid_value(raw) == pytest.approx(expected)


def test_parse_grid_value_axis_name():
    """
    Scenario:
        The name of another axis.

    Expected:
        The name is kept as a tie.
    """
    assert parse_grid_value(" beta1 ") == "beta1"


@pytest.mark.parametrize("raw", [True, "abc", "", {"a": 1}, ["x"], "0:1:0"])
def test_parse_grid_value_rejected(raw):
    """
    Scenario:
        Booleans, text, empty values, mappings and empty ranges.

    Expected:
        ConfigError is raised.
    """
    with pytest.raises(ConfigError):
        parse_grid_value(raw)


def test_parse_grid_options():
    """
    Scenario:
        Repeated key=value options.

    Expected:
        A grid dict; an option without '=' is rejected.
    """
    grid = parse_grid_options(["beta1=0.3,0.4", "beta2 = beta1"])
    assert grid == {"beta1": [0.3, 0.4], "beta2": "beta1"}

    with pytest.raises(ConfigError):
        parse_grid_options(["beta1"])


def test_expand_grid_order_and_ties():
    """
    Scenario:
        Two beta1 values, beta2 tied to beta1, two tau1 values.

    Expected:
        Four points, tau1 varying fastest, p defaulted to 0.5.
    """
    grid = {"beta1": [0.3, 0.4], "beta2": "beta1", "tau1": [0.1, 0.2], "tau2": 0.1}
    points = expand_grid(grid)

    assert [(pt["beta1"], pt["tau1"]) for pt in points] == [
        (0.3, 0.1),
        (0.3, 0.2),
        (0.4, 0.1),
        (0.4, 0.2),
    ]
    assert all(pt["beta2"] == pt["beta1"] for pt in points)
    assert all(pt["p"] == 0.5 for pt in points)
    assert list(points[0]) == ["beta1", "beta2", "tau1", "tau2", "p"]


@pytest.mark.parametrize(
    "grid",
    [
        {"beta1": 0.3, "beta2": 0.3, "tau1": 0.1, "tau2": 0.1, "gamma": 0.1},
        {"beta1": 0.3, "beta2": 0.3, "tau1": 0.1},
        {"beta1": "beta2", "beta2": "beta1", "tau1": 0.1, "tau2": 0.1},
        {"beta1": "beta1", "beta2": 0.3, "tau1": 0.1, "tau2": 0.1},
    ],
)
def test_expand_grid_rejected(grid):
    """
    Scenario:
        Unknown, missing, circular and self-referencing axes.

    Expected:
        ConfigError is raised.
    """
    with pytest.raises(ConfigError):
        expand_grid(grid)


# ---------------------------
# Integration tests
# ---------------------------


def test_load_sweep_config_toml(tmp_path):
    """
    Scenario:
        A TOML grid file with a range and a tie.

    Expected:
        The normalized grid, ready to expand.
    """
    path = tmp_path / "grid.toml"
    path.write_text(
        '[sweep]\nbeta1 = "0.3:0.4:2"\nbeta2 = "beta1"\ntau1 = 0.2\ntau2 = 0.2\n',
        encoding="utf-8",
    )

    grid = load_sweep_config(path)

    assert grid["beta1"] == pytest.approx([0.3, 0.4])
    assert len(expand_grid(grid)) == 2


def test_load_sweep_config_without_table(tmp_path):
    """
    Scenario:
        A YAML file without a sweep table.

    Expected:
        ConfigError is raised.
    """
    path = tmp_path / "grid.yaml"
    path.write_text("beta1: 0.3\n", encoding="utf-8")

    with pytest.raises(ConfigError):
        load_sweep_config(path)
