"""
Display module.
"""

from typing import Any, Dict, List

import typer
from rich.console import Console
from rich.table import Table

from solendim.runner.types import DisplayMode, SweepRow
from solendim.utils.printing import pretty_print

console = Console(stderr=True)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def status_color(row: SweepRow) -> str:
    return "red" if row.error else "green"


def display_table_full(rows: List[SweepRow]) -> None:
    """Display sweep rows as a Rich Table (full mode)."""
    table = Table(title="Solendim Sweep Summary", show_lines=True)
    table.add_column("#", style="bold cyan")
    table.add_column("v", style="white")
    table.add_column("p", style="white")
    table.add_column("Regime", style="magenta")
    table.add_column("Box", style="white")
    table.add_column("Hausdorff", style="white")
    table.add_column("Measure", style="white")
    table.add_column("Verdict", style="bold")
    table.add_column("Error", style="red")

    for row in rows:
        point = row.point
        table.add_row(
            str(row.index),
            ", ".join(_cell(point[k]) for k in ("beta1", "beta2", "tau1", "tau2")),
            _cell(point["p"]),
            _cell(row.regime),
            _cell(row.box_dim),
            _cell(row.hausdorff_dim),
            _cell(row.measure_dim),
            _cell(row.verdict),
            _cell(row.error),
        )
    console.print(table)


def display_table_minimal(rows: List[SweepRow]) -> None:
    """Display sweep rows as a Rich Table (minimal mode)."""
    table = Table(title="Solendim Sweep Summary", show_lines=False)
    table.add_column("#", style="bold cyan")
    table.add_column("Verdict", style="bold")
    table.add_column("Box", style="white")

    for row in rows:
        color = status_color(row)
        table.add_row(
            str(row.index),
            f"[{color}]{row.verdict or row.error}[/{color}]",
            _cell(row.box_dim),
        )
    console.print(table)


def display_text_summary(rows: List[SweepRow]) -> None:
    """One line per grid point."""
    for row in rows:
        color = status_color(row)
        pretty_print(
            f"{row.index}: {row.verdict or row.error} | box={_cell(row.box_dim)}",
            fg=getattr(typer.colors, color.upper()),
        )


def display_list(rows: List[SweepRow]) -> None:
    """Every field of every row."""
    for row in rows:
        color = status_color(row)
        pretty_print(f"{row.index}: {row.status}", fg=getattr(typer.colors, color.upper()))
        for key, value in row.to_dict().items():
            if key != "index" and value is not None:
                pretty_print(f"{key} = {_cell(value)}", fg=typer.colors.WHITE, padding=2)


def print_summary(rows: List[SweepRow], mode: DisplayMode) -> None:
    """Print a summary of sweep rows using different display modes."""
    failed = sum(1 for row in rows if row.error)

    if mode == DisplayMode.TABLE_FULL:
        display_table_full(rows)
    elif mode == DisplayMode.TABLE_MINIMAL:
        display_table_minimal(rows)
    elif mode == DisplayMode.TEXT:
        display_text_summary(rows)
    elif mode == DisplayMode.LIST:
        display_list(rows)
    else:
        raise ValueError(f"Unknown display mode: {mode}")

    console.print(f"\nSummary: ✅ {len(rows) - failed}  ❌ {failed}", style="bold")


def print_report(title: str, fields: Dict[str, Any]) -> None:
    """Two-column key/value table for a single report."""
    table = Table(title=title, show_lines=False)
    table.add_column("Quantity", style="bold cyan")
    table.add_column("Value", style="white")
    for key, value in fields.items():
        if isinstance(value, list):
            value = "; ".join(str(item) for item in value)
        table.add_row(key, _cell(value))
    console.print(table)
