"""
Solendim CLI main entry point.
"""

import typer

from solendim.cli.commands import attractor, cover, dims, estimate, sweep

app = typer.Typer(
    help="solendim - dimensions of linear solenoid attractors and of Bernoulli measures on them",
    no_args_is_help=True,
)

app.add_typer(estimate.app, name="estimate")

dims.register_commands(app)
attractor.register_commands(app)
sweep.register_commands(app)
cover.register_commands(app)


if __name__ == "__main__":
    app()
