"""
Numerical estimators, one command per registered estimator plugin.
"""

from pathlib import Path
from typing import Optional

import typer

from solendim.io import emit, render_csv, render_json
from solendim.runner.estimate import available_estimators, run_estimator
from solendim.runner.types import RunConfig
from solendim.settings import CloudMode, OutputFormat, PrettyHeaderStyle
from solendim.utils.printing import pretty_header, pretty_print, print_info

from ..options import (
    burn_in_option,
    error_boundary,
    format_option,
    k_option,
    output_option,
    p_option,
    seed_option,
    start_run,
    tolerance_option,
    v_option,
    verbose_option,
    workers_option,
)

app = typer.Typer(
    help="Estimate dimensions and Lyapunov exponents from samples",
    no_args_is_help=True,
)


def _run(
    name: str,
    config: RunConfig,
    verbose: bool,
    burn_in: Optional[int] = None,
    tolerance: Optional[float] = None,
    uses_tolerance: bool = False,
) -> None:
    defaults = start_run(verbose)
    config.seed = defaults.seed if config.seed is None else config.seed
    config.workers = config.workers or defaults.workers
    config.format = config.format or defaults.format or OutputFormat.JSON
    config.burn_in = defaults.burn_in if burn_in is None else burn_in
    if uses_tolerance:
        config.tolerance = defaults.tolerance if tolerance is None else tolerance

    if verbose:
        pretty_header("estimate", f"Running {name} estimator...", style=PrettyHeaderStyle.BANNER)

    with error_boundary():
        result = run_estimator(name, config)
        print_info(f"{name}: {result.summary}")

        if config.format is OutputFormat.CSV:
            text = render_csv(config.to_dict(), result.columns, result.rows)
        else:
            text = render_json(config.to_dict(), result.payload)
        emit(text, config.output)


@app.command(name="list", help="List the registered estimators")
def list_estimators() -> None:
    for plugin in available_estimators():
        pretty_print(f"{plugin.meta.name:10} {plugin.meta.description}", err=False)


@app.command(name="box", help="Box-counting dimension of a chaos-game cloud")
def estimate_box(
    v: str = v_option(),
    p: float = p_option(),
    n: Optional[int] = typer.Option(None, "-n", min=1, help="Number of points"),
    k: Optional[str] = k_option(),
    mode: CloudMode = typer.Option(CloudMode.PLANAR, "--mode", "-m", help="2d or 3d cloud"),
    seed: Optional[int] = seed_option(),
    burn_in: Optional[int] = burn_in_option(),
    output: Optional[Path] = output_option(),
    fmt: Optional[OutputFormat] = format_option(),
    verbose: bool = verbose_option(),
) -> None:
    config = RunConfig(
        command="estimate box",
        params=v,
        p=p,
        seed=seed,
        n=n,
        k_range=k,
        mode=mode.value,
        format=fmt,
        output=output,
    )
    _run("box", config, verbose, burn_in=burn_in)


@app.command(name="local", help="Local dimension of b^p on the attractor")
def estimate_local(
    v: str = v_option(),
    p: float = p_option(),
    n: Optional[int] = typer.Option(None, "-n", min=1, help="Number of samples"),
    queries: Optional[int] = typer.Option(None, "--queries", min=1, help="Number of query points"),
    k: Optional[str] = k_option(),
    seed: Optional[int] = seed_option(),
    burn_in: Optional[int] = burn_in_option(),
    tolerance: Optional[float] = tolerance_option(),
    workers: Optional[int] = workers_option(),
    output: Optional[Path] = output_option(),
    fmt: Optional[OutputFormat] = format_option(),
    verbose: bool = verbose_option(),
) -> None:
    config = RunConfig(
        command="estimate local",
        params=v,
        p=p,
        seed=seed,
        n=n,
        n_queries=queries,
        k_range=k,
        format=fmt,
        output=output,
        workers=workers,
    )
    _run("local", config, verbose, burn_in=burn_in, tolerance=tolerance, uses_tolerance=True)


@app.command(name="lyapunov", help="Lyapunov exponents from Birkhoff averages")
def estimate_lyapunov(
    v: str = v_option(),
    p: float = p_option(),
    iterates: Optional[int] = typer.Option(None, "--iterates", min=1, help="Orbit length"),
    orbits: Optional[int] = typer.Option(None, "--orbits", min=1, help="Number of orbits"),
    seed: Optional[int] = seed_option(),
    workers: Optional[int] = workers_option(),
    output: Optional[Path] = output_option(),
    fmt: Optional[OutputFormat] = format_option(),
    verbose: bool = verbose_option(),
) -> None:
    config = RunConfig(
        command="estimate lyapunov",
        params=v,
        p=p,
        seed=seed,
        n_iterates=iterates,
        n_orbits=orbits,
        format=fmt,
        output=output,
        workers=workers,
    )
    _run("lyapunov", config, verbose)
