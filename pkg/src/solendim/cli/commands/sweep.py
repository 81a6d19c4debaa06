"""
Parameter sweeps.
"""

from pathlib import Path
from typing import List, Optional

import typer

from solendim.io import emit, expand_grid, load_sweep_config, parse_grid_options, render_csv, render_json
from solendim.runner.display import print_summary
from solendim.runner.sweep import run_sweep
from solendim.runner.types import SWEEP_COLUMNS, DisplayMode, RunConfig
from solendim.settings import OutputFormat

from ..options import (
    error_boundary,
    format_option,
    output_option,
    override_option,
    start_run,
    verbose_option,
    workers_option,
)


def register_commands(app: typer.Typer) -> None:

    @app.command(name="sweep", help="Dimensions and verdicts over a parameter grid")
    def sweep(
        grid: Optional[List[str]] = typer.Option(
            None,
            "--grid",
            "-g",
            help="Axis spec key=value (scalar, list, start:stop:num or axis name)",
        ),
        config_file: Optional[Path] = typer.Option(
            None,
            "--config",
            "-c",
            exists=True,
            dir_okay=False,
            help="TOML or YAML file with a [sweep] table",
        ),
        override: Optional[float] = override_option(),
        workers: Optional[int] = workers_option(),
        output: Optional[Path] = output_option(),
        fmt: Optional[OutputFormat] = format_option(),
        mode: Optional[DisplayMode] = typer.Option(
            None,
            "--mode",
            "-m",
            help="Summary display mode (table_full, table_minimal, text, list)",
        ),
        verbose: bool = verbose_option(),
    ) -> None:
        """
        One row per grid point, ordered by grid index. Invalid points carry
        the error class name instead of stopping the sweep. --grid options
        override the axes of --config.
        """
        defaults = start_run(verbose)

        with error_boundary():
            spec = load_sweep_config(config_file) if config_file else {}
            spec.update(parse_grid_options(grid or []))
            points = expand_grid(spec)

            config = RunConfig(
                command="sweep",
                seed=defaults.seed,
                override=override,
                grid={key: spec[key] for key in sorted(spec)},
                format=fmt or defaults.format or OutputFormat.CSV,
                output=output,
                workers=workers or defaults.workers,
            )

            rows = run_sweep(points, override=override, workers=config.workers)

            if mode:
                print_summary(rows, mode)

            if config.format is OutputFormat.JSON:
                text = render_json(config.to_dict(), [row.to_dict() for row in rows])
            else:
                text = render_csv(config.to_dict(), SWEEP_COLUMNS, [row.to_row() for row in rows])
            emit(text, output)
