"""
Shared CLI options, parsers and the error boundary.
"""

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional, Tuple

import typer

from solendim.errors import ConfigError, SolenoidError
from solendim.io import SolendimDefaults, load_project_defaults
from solendim.settings import VERBOSE_ENVVAR, OutputFormat
from solendim.utils import parse_float_list, parse_int_range
from solendim.utils.printing import print_error, set_verbose


def parse_v(raw: Optional[str]) -> Optional[Tuple[float, float, float, float]]:
    if raw is None:
        return None
    try:
        beta1, beta2, tau1, tau2 = parse_float_list(raw, expected=4)
    except ValueError as e:
        raise typer.BadParameter(f"--v expects 'b1,b2,t1,t2': {e}")
    return beta1, beta2, tau1, tau2


def parse_k(raw: Optional[str]) -> Optional[Tuple[int, int]]:
    if raw is None:
        return None
    try:
        return parse_int_range(raw)
    except ValueError as e:
        raise typer.BadParameter(str(e))


def v_option() -> str:
    return typer.Option(
        ..., "--v", help="Parameters beta1,beta2,tau1,tau2", callback=parse_v
    )


def p_option(default: Optional[float] = 0.5) -> Optional[float]:
    return typer.Option(
        default, "--p", min=0.0, max=1.0, help="Bernoulli weight of the symbol +1"
    )


def seed_option() -> Optional[int]:
    return typer.Option(None, "--seed", help="Base seed (CLI > pyproject > 0)")


def k_option() -> Optional[str]:
    return typer.Option(None, "--k", help="Dyadic range kmin:kmax", callback=parse_k)


def output_option() -> Optional[Path]:
    return typer.Option(None, "--output", "-o", help="Output file (default: stdout)")


def format_option() -> Optional[OutputFormat]:
    return typer.Option(None, "--format", "-f", help="Output format (json, csv)")


def workers_option() -> Optional[int]:
    return typer.Option(
        None, "--workers", "-w", min=1, help="Worker threads (default: all cores)"
    )


def override_option() -> Optional[float]:
    return typer.Option(
        None,
        "--override",
        min=0.0,
        max=1.0,
        help="Projected dimension to use where only generic values are known",
    )


def parse_tolerance(raw: Optional[float]) -> Optional[float]:
    if raw is not None and not 0.0 < raw < 1.0:
        raise typer.BadParameter(f"--tolerance must be in (0, 1), got {raw!r}")
    return raw


def burn_in_option() -> Optional[int]:
    return typer.Option(
        None, "--burn-in", min=0, help="Discarded iterates (CLI > pyproject > 64)"
    )


def tolerance_option() -> Optional[float]:
    return typer.Option(
        None,
        "--tolerance",
        help="Truncation tolerance of dyadic x-coordinates (CLI > pyproject > 1e-9)",
        callback=parse_tolerance,
    )


def verbose_option() -> bool:
    return typer.Option(
        False,
        "--verbose",
        envvar=VERBOSE_ENVVAR,
        help="Print progress notes to stderr",
    )


def project_defaults() -> SolendimDefaults:
    """``[tool.solendim]`` of the working directory, as usage errors on failure."""
    try:
        return load_project_defaults()
    except ConfigError as e:
        raise typer.BadParameter(str(e))


def start_run(verbose: bool) -> SolendimDefaults:
    set_verbose(verbose)
    return project_defaults()


@contextmanager
def error_boundary() -> Iterator[None]:
    """
    Map library failures to exit codes: domain errors and unwritable paths
    exit 1, configuration errors are usage errors (exit 2).
    """
    try:
        yield
    except ConfigError as e:
        raise typer.BadParameter(str(e))
    except SolenoidError as e:
        print_error(f"{type(e).__name__}: {e}")
        raise typer.Exit(code=1)
    except OSError as e:
        print_error(f"I/O error: {e}")
        raise typer.Exit(code=1)
