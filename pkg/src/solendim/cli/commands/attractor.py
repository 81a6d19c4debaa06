"""
Point clouds of the attractor and its cross-section.
"""

from pathlib import Path
from typing import Optional

import typer

from solendim.core.ifs import attractor_cloud_3d, bernoulli_cloud_3d, chaos_game
from solendim.core.solenoid import validate_params
from solendim.core.symbolic import BernoulliSpec
from solendim.io import write_cloud_csv
from solendim.runner.types import RunConfig
from solendim.settings import CloudMode, OutputFormat
from solendim.utils.printing import print_success

from ..options import (
    burn_in_option,
    error_boundary,
    p_option,
    seed_option,
    start_run,
    tolerance_option,
    v_option,
    verbose_option,
)


def register_commands(app: typer.Typer) -> None:

    @app.command(name="attractor", help="Write a chaos-game point cloud as CSV")
    def attractor(
        v: str = v_option(),
        n: int = typer.Option(10_000, "-n", min=1, help="Number of points"),
        mode: CloudMode = typer.Option(
            CloudMode.PLANAR, "--mode", "-m", help="2d cross-section or 3d attractor"
        ),
        p: Optional[float] = p_option(default=None),
        seed: Optional[int] = seed_option(),
        burn_in: Optional[int] = burn_in_option(),
        tolerance: Optional[float] = tolerance_option(),
        output: Path = typer.Option(..., "--output", "-o", help="CSV file to write"),
        verbose: bool = verbose_option(),
    ) -> None:
        """
        In 3d mode x is uniform unless --p is given, in which case the cloud
        samples b^p on the attractor.
        """
        defaults = start_run(verbose)
        samples_measure = mode is CloudMode.SPATIAL and p is not None
        if tolerance is None:
            tolerance = defaults.tolerance

        config = RunConfig(
            command="attractor",
            params=v,
            p=0.5 if p is None else p,
            seed=defaults.seed if seed is None else seed,
            n=n,
            burn_in=defaults.burn_in if burn_in is None else burn_in,
            mode=mode.value,
            tolerance=tolerance if samples_measure else None,
            format=OutputFormat.CSV,
            output=output,
        )

        with error_boundary():
            params = validate_params(config.params)

            if mode is CloudMode.PLANAR:
                cloud = chaos_game(
                    params, config.p, n, burn_in=config.burn_in, seed=config.seed
                )
                points, columns = cloud.points, ["y", "z"]
            elif not samples_measure:
                points = attractor_cloud_3d(params, n, config.seed, burn_in=config.burn_in)
                columns = ["x", "y", "z"]
            else:
                points = bernoulli_cloud_3d(
                    params,
                    BernoulliSpec(config.p),
                    n,
                    config.seed,
                    burn_in=config.burn_in,
                    tolerance=tolerance,
                )
                columns = ["x", "y", "z"]

            write_cloud_csv(output, config.to_dict(), columns, points)

        print_success(f"Wrote {n} points to {output}")
