"""
Project defaults and sweep grids.
"""

import itertools
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

from solendim.errors import ConfigError
from solendim.settings import (
    DEFAULT_BURN_IN,
    DEFAULT_TRUNCATION_TOLERANCE,
    PYPROJECT_FILE_PATH,
    OutputFormat,
)

from .loader import load_config_file, load_toml_file

SWEEP_AXES = ("beta1", "beta2", "tau1", "tau2", "p")
DEFAULT_P = 0.5

_RANGE_PATTERN = re.compile(r"^\s*([^:]+):([^:]+):(\d+)\s*$")

GridValue = Union[float, List[float], str]


@dataclass(frozen=True)
class SolendimDefaults:
    """
    Values of ``[tool.solendim]`` merged over the built-in defaults.

    ``format`` stays None unless the project sets it; each command then
    falls back to its own output format.
    """

    seed: int = 0
    workers: Optional[int] = None
    format: Optional[OutputFormat] = None
    tolerance: float = DEFAULT_TRUNCATION_TOLERANCE
    burn_in: int = DEFAULT_BURN_IN


def load_project_defaults(
    file_path: Union[str, Path] = PYPROJECT_FILE_PATH,
) -> SolendimDefaults:
    """
    Read ``[tool.solendim]`` from a pyproject file.

    A missing file or section gives the built-in defaults.

    Raises:
        ConfigError: On unknown keys or values of the wrong type.
    """
    file_path = Path(file_path)
    if not file_path.exists():
        return SolendimDefaults()

    section = load_toml_file(file_path).get("tool", {}).get("solendim", {})
    unknown = set(section) - set(SolendimDefaults.__dataclass_fields__)
    if unknown:
        raise ConfigError(f"Unknown keys in [tool.solendim]: {sorted(unknown)}")

    try:
        defaults = SolendimDefaults(
            seed=int(section.get("seed", 0)),
            workers=int(section["workers"]) if "workers" in section else None,
            format=OutputFormat.from_value(section["format"]) if "format" in section else None,
            tolerance=float(section.get("tolerance", DEFAULT_TRUNCATION_TOLERANCE)),
            burn_in=int(section.get("burn_in", DEFAULT_BURN_IN)),
        )
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Invalid value in [tool.solendim]: {e}")

    if not 0.0 < defaults.tolerance < 1.0:
        raise ConfigError(f"tolerance = {defaults.tolerance!r} in [tool.solendim] is not in (0, 1)")
    return defaults


def _parse_range(raw: str) -> Optional[List[float]]:
    match = _RANGE_PATTERN.match(raw)
    if not match:
        return None
    start, stop, num = float(match.group(1)), float(match.group(2)), int(match.group(3))
    if num < 1:
        raise ConfigError(f"range {raw!r} needs at least one point")
    return [float(x) for x in np.linspace(start, stop, num)]


def parse_grid_value(raw: Any) -> GridValue:
    """
    Normalize one grid axis value.

    Accepted: a number, a list of numbers, a ``"start:stop:num"`` range, a
    comma-separated list, or the name of another axis to mirror.
    """
    if isinstance(raw, bool):
        raise ConfigError(f"grid value {raw!r} is not a number")
    if isinstance(raw, (int, float)):
        return float(raw)
    if isinstance(raw, (list, tuple)):
        try:
            return [float(x) for x in raw]
        except (TypeError, ValueError):
            raise ConfigError(f"grid list {raw!r} must hold numbers")
    if isinstance(raw, str):
        text = raw.strip()
        if text in SWEEP_AXES:
            return text
        expanded = _parse_range(text)
        if expanded is not None:
            return expanded
        try:
            values = [float(part) for part in text.split(",") if part.strip()]
        except ValueError:
            raise ConfigError(f"cannot read grid value {raw!r}")
        if not values:
            raise ConfigError("empty grid value")
        return values[0] if len(values) == 1 else values
    raise ConfigError(f"unsupported grid value {raw!r}")


def parse_grid_options(options: Sequence[str]) -> Dict[str, GridValue]:
    """Parse repeated ``key=value`` grid options."""
    grid: Dict[str, GridValue] = {}
    for option in options:
        key, sep, value = option.partition("=")
        key = key.strip()
        if not sep:
            raise ConfigError(f"grid option {option!r} must look like key=value")
        grid[key] = parse_grid_value(value)
    return grid


def load_sweep_config(file_path: Union[str, Path]) -> Dict[str, GridValue]:
    """
    Read the ``[sweep]`` table of a TOML or YAML grid file.

    Raises:
        ConfigError: If the file has no sweep table.
    """
    data = load_config_file(file_path)
    sweep = data.get("sweep")
    if not isinstance(sweep, dict):
        raise ConfigError(f"{file_path} has no [sweep] table")
    return {str(key): parse_grid_value(value) for key, value in sweep.items()}


def expand_grid(grid: Dict[str, GridValue]) -> List[Dict[str, float]]:
    """
    Cartesian product of the free axes, ties filled in, in a fixed order.

    Axes vary in the order beta1, beta2, tau1, tau2, p with the last axis
    fastest. ``p`` defaults to 0.5; the other axes are required.

    Raises:
        ConfigError: On unknown, missing or circular axes.
    """
    unknown = set(grid) - set(SWEEP_AXES)
    if unknown:
        raise ConfigError(f"unknown sweep axes {sorted(unknown)}, use {list(SWEEP_AXES)}")

    grid = dict(grid)
    grid.setdefault("p", DEFAULT_P)
    missing = [axis for axis in SWEEP_AXES if axis not in grid]
    if missing:
        raise ConfigError(f"sweep grid is missing axes {missing}")

    ties = {axis: value for axis, value in grid.items() if isinstance(value, str)}
    for axis, target in ties.items():
        if target == axis or target in ties:
            raise ConfigError(f"axis {axis} mirrors {target!r}, which is not a free axis")

    free = [axis for axis in SWEEP_AXES if axis not in ties]
    values = [
        grid[axis] if isinstance(grid[axis], list) else [grid[axis]] for axis in free
    ]

    points = []
    for combo in itertools.product(*values):
        point = dict(zip(free, (float(x) for x in combo)))
        for axis, target in ties.items():
            point[axis] = point[target]
        points.append({axis: point[axis] for axis in SWEEP_AXES})
    return points
