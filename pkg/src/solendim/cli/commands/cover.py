"""
Cylinder covers of the cross-section.
"""

from pathlib import Path
from typing import Optional

import typer

from solendim.core.ifs import cylinder_cover
from solendim.core.solenoid import validate_params
from solendim.io import emit, render_json
from solendim.runner.types import RunConfig

from ..options import error_boundary, output_option, start_run, v_option, verbose_option


def register_commands(app: typer.Typer) -> None:

    @app.command(name="cover", help="Write the depth-n cylinder cover as JSON")
    def cover(
        v: str = v_option(),
        depth: int = typer.Option(4, "--depth", "-d", min=0, help="Cylinder depth"),
        output: Optional[Path] = output_option(),
        verbose: bool = verbose_option(),
    ) -> None:
        start_run(verbose)
        config = RunConfig(command="cover", params=v, depth=depth, output=output)

        with error_boundary():
            rectangles = cylinder_cover(validate_params(config.params), depth)
            emit(render_json(config.to_dict(), rectangles.to_json()), output)
