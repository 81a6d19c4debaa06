"""
Types for the runner.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from solendim.settings import OutputFormat
from solendim.utils import BaseEnum

SWEEP_COLUMNS = [
    "index",
    "beta1",
    "beta2",
    "tau1",
    "tau2",
    "p",
    "regime",
    "box_dim",
    "hausdorff_dim",
    "measure_dim",
    "verdict",
    "error",
]


class DisplayMode(BaseEnum):
    """Summary display mode"""

    TABLE_FULL = "table_full"
    TABLE_MINIMAL = "table_minimal"
    TEXT = "text"
    LIST = "list"


@dataclass
class RunConfig:
    """
    Everything that determines a run's output.

    ``output`` and ``workers`` do not change results and stay out of the
    echo written into artifacts.
    """

    command: str
    params: Optional[Tuple[float, float, float, float]] = None
    p: float = 0.5
    seed: int = 0
    n: Optional[int] = None
    k_range: Optional[Tuple[int, int]] = None
    burn_in: int = 64
    mode: Optional[str] = None
    n_queries: Optional[int] = None
    n_iterates: Optional[int] = None
    n_orbits: Optional[int] = None
    depth: Optional[int] = None
    override: Optional[float] = None
    tolerance: Optional[float] = None
    grid: Optional[Dict[str, Any]] = None
    format: OutputFormat = OutputFormat.JSON
    output: Optional[Path] = None
    workers: Optional[int] = None

    def to_dict(self) -> dict:
        data: Dict[str, Any] = {
            "command": self.command,
            "p": self.p,
            "seed": self.seed,
            "burn_in": self.burn_in,
            "format": self.format.value,
        }
        if self.params is not None:
            data["v"] = list(self.params)
        if self.k_range is not None:
            data["k"] = list(self.k_range)
        optional = {
            "n": self.n,
            "mode": self.mode,
            "n_queries": self.n_queries,
            "n_iterates": self.n_iterates,
            "n_orbits": self.n_orbits,
            "depth": self.depth,
            "override": self.override,
            "tolerance": self.tolerance,
            "grid": self.grid,
        }
        data.update({key: value for key, value in optional.items() if value is not None})
        return data


@dataclass
class RunResult:
    """
    Output of one estimator or command run.

    ``payload`` is the full JSON result; ``columns``/``rows`` its flat CSV
    form.
    """

    name: str
    status: str
    summary: str = ""
    payload: Dict[str, Any] = field(default_factory=dict)
    columns: List[str] = field(default_factory=list)
    rows: List[List[Any]] = field(default_factory=list)


@dataclass
class SweepRow:
    """One evaluated grid point."""

    index: int
    point: Dict[str, float]
    regime: Optional[str] = None
    box_dim: Optional[float] = None
    hausdorff_dim: Optional[Any] = None
    measure_dim: Optional[float] = None
    verdict: Optional[str] = None
    error: Optional[str] = None

    @property
    def status(self) -> str:
        return "❌ Failed" if self.error else "✅ Passed"

    def to_row(self) -> List[Any]:
        return [
            self.index,
            self.point["beta1"],
            self.point["beta2"],
            self.point["tau1"],
            self.point["tau2"],
            self.point["p"],
            self.regime,
            self.box_dim,
            self.hausdorff_dim,
            self.measure_dim,
            self.verdict,
            self.error,
        ]

    def to_dict(self) -> dict:
        return dict(zip(SWEEP_COLUMNS, self.to_row()))
