"""
Closed-form dimensions of an attractor and of a Bernoulli measure on it.
"""

from pathlib import Path
from typing import Optional

import typer

from solendim.core.solenoid import validate_params
from solendim.core.symbolic import BernoulliSpec
from solendim.dimension import attractor_dimension, full_dimension_verdict, measure_dimension
from solendim.io import emit, render_csv, render_json
from solendim.runner.display import print_report
from solendim.runner.types import RunConfig
from solendim.settings import OutputFormat

from ..options import (
    error_boundary,
    format_option,
    output_option,
    override_option,
    p_option,
    start_run,
    v_option,
    verbose_option,
)

DIMS_COLUMNS = [
    "regime",
    "box_dim",
    "hausdorff_dim",
    "measure_dim",
    "unstable",
    "stable",
    "verdict",
    "gap_bound",
]


def register_commands(app: typer.Typer) -> None:

    @app.command(name="dims", help="Attractor and measure dimensions with the full-dimension verdict")
    def dims(
        v: str = v_option(),
        p: Optional[float] = p_option(default=None),
        override: Optional[float] = override_option(),
        output: Optional[Path] = output_option(),
        fmt: Optional[OutputFormat] = format_option(),
        quiet: bool = typer.Option(False, "--quiet", "-q", help="Skip the summary table"),
        verbose: bool = verbose_option(),
    ) -> None:
        """
        Print the attractor dimensions, the measure dimension of b^p when
        --p is given, and whether b^{0.5} has full dimension.
        """
        defaults = start_run(verbose)
        config = RunConfig(
            command="dims",
            params=v,
            p=0.5 if p is None else p,
            seed=defaults.seed,
            override=override,
            format=fmt or defaults.format or OutputFormat.JSON,
            output=output,
        )

        with error_boundary():
            params = validate_params(config.params)
            attractor = attractor_dimension(params)
            verdict = full_dimension_verdict(params)
            measure = (
                measure_dimension(params, BernoulliSpec(p), override)
                if p is not None
                else None
            )

            result = {
                "attractor": attractor.to_dict(),
                "measure": measure.to_dict() if measure else None,
                "verdict": verdict.to_dict(),
            }

            if not quiet:
                print_report(
                    "Solendim Dimensions",
                    {
                        "regime": attractor.regime.value,
                        "box_dim": attractor.box_dim,
                        "hausdorff_dim": result["attractor"]["hausdorff_dim"],
                        "measure_dim": measure.total if measure else None,
                        "verdict": verdict.verdict.value,
                        "caveats": attractor.caveats + (measure.caveats if measure else []),
                    },
                )

            if config.format is OutputFormat.CSV:
                row = [
                    attractor.regime.value,
                    attractor.box_dim,
                    result["attractor"]["hausdorff_dim"],
                    measure.total if measure else None,
                    measure.unstable if measure else None,
                    measure.stable if measure else None,
                    verdict.verdict.value,
                    verdict.gap_bound,
                ]
                text = render_csv(config.to_dict(), DIMS_COLUMNS, [row])
            else:
                text = render_json(config.to_dict(), result)

            emit(text, output)
