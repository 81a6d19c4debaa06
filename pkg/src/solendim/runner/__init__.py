"""
Runner module.
"""

from .executor import map_ordered, resolve_workers
from .types import SWEEP_COLUMNS, DisplayMode, RunConfig, RunResult, SweepRow

__all__ = [
    "SWEEP_COLUMNS",
    "DisplayMode",
    "RunConfig",
    "RunResult",
    "SweepRow",
    "map_ordered",
    "resolve_workers",
]
