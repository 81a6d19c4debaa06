"""
Deterministic JSON and CSV artifact writers.

Every artifact echoes the configuration that produced it: JSON files under
a ``config`` key, CSV files as a first ``# {json}`` comment line.
"""

import csv
import io
import json
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union

import numpy as np
import typer

from solendim.utils import ensure_parent_dir

FLOAT_FORMAT = ".17g"


def _to_builtin(value: Any) -> Any:
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if hasattr(value, "to_dict"):
        return value.to_dict()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def dumps_json(payload: Any) -> str:
    """Stable JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, default=_to_builtin) + "\n"


def format_cell(value: Any) -> str:
    """CSV cell text; floats use the round-trip ``.17g`` form."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (float, np.floating)):
        return format(float(value), FLOAT_FORMAT)
    return str(value)


def config_comment(config: dict) -> str:
    return "# " + json.dumps(config, sort_keys=True, default=_to_builtin) + "\n"


def render_json(config: dict, result: Any) -> str:
    return dumps_json({"config": config, "result": result})


def render_csv(config: dict, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    buffer.write(config_comment(config))
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(cell) for cell in row])
    return buffer.getvalue()


def emit(text: str, output: Optional[Union[str, Path]] = None) -> None:
    """
    Write ``text`` to ``output``, or to stdout when no path is given.

    Raises:
        OSError: If the path cannot be written.
    """
    if output is None:
        typer.echo(text, nl=False)
        return
    path = ensure_parent_dir(output)
    with path.open("w", encoding="utf-8", newline="") as f:
        f.write(text)


def write_cloud_csv(
    output: Union[str, Path], config: dict, columns: Sequence[str], points: np.ndarray
) -> None:
    """
    Write a point cloud as CSV with the config comment and a header row.

    Raises:
        OSError: If the path cannot be written.
    """
    path = ensure_parent_dir(output)
    with path.open("w", encoding="utf-8", newline="") as f:
        f.write(config_comment(config))
        f.write(",".join(columns) + "\n")
        np.savetxt(f, np.asarray(points, dtype=float), fmt="%.17g", delimiter=",")
