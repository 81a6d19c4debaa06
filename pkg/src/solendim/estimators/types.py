"""
Result types of the numerical estimators.
"""

from dataclasses import dataclass, field
from typing import List, Tuple

SCALING_FIT_COLUMNS = ["slope", "intercept", "stderr", "k_min", "k_max", "n_scales"]
LYAPUNOV_COLUMNS = [
    "unstable",
    "weak_stable",
    "strong_stable",
    "weak_axis",
    "beta_exponent",
    "tau_exponent",
    "unstable_stderr",
    "beta_stderr",
    "tau_stderr",
    "n_iterates",
    "n_orbits",
]


@dataclass(frozen=True)
class ScalingFit:
    """
    Least-squares slope of a log-log scaling law over dyadic scales.

    ``scales`` holds (epsilon, count or mass) pairs, epsilon decreasing.
    """

    slope: float
    intercept: float
    stderr: float
    scales: List[Tuple[float, float]]
    k_range: Tuple[int, int]

    def to_dict(self) -> dict:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "stderr": self.stderr,
            "scales": [list(pair) for pair in self.scales],
            "k_range": list(self.k_range),
        }

    def to_row(self) -> list:
        return [
            self.slope,
            self.intercept,
            self.stderr,
            self.k_range[0],
            self.k_range[1],
            len(self.scales),
        ]


@dataclass(frozen=True)
class LocalDimensionResult:
    """Per-query fits plus their aggregate."""

    fits: List[ScalingFit]
    mean: float
    median: float
    n_queries: int
    dropped_empty: int = 0
    dropped_saturated: int = 0

    @property
    def slopes(self) -> List[float]:
        return [fit.slope for fit in self.fits]

    def to_dict(self, include_fits: bool = False) -> dict:
        data = {
            "mean": self.mean,
            "median": self.median,
            "n_queries": self.n_queries,
            "n_used": len(self.fits),
            "dropped_empty": self.dropped_empty,
            "dropped_saturated": self.dropped_saturated,
        }
        if include_fits:
            data["fits"] = [fit.to_dict() for fit in self.fits]
        return data


@dataclass(frozen=True)
class LyapunovEstimate:
    """
    Birkhoff averages of the log-derivative along sampled orbits.

    ``weak_stable >= strong_stable``; ``weak_axis`` says whether the weak
    exponent belongs to the beta (y) or tau (z) direction.
    """

    unstable: float
    weak_stable: float
    strong_stable: float
    weak_axis: str
    beta_exponent: float
    tau_exponent: float
    n_iterates: int
    n_orbits: int
    stderr: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "unstable": self.unstable,
            "weak_stable": self.weak_stable,
            "strong_stable": self.strong_stable,
            "weak_axis": self.weak_axis,
            "beta_exponent": self.beta_exponent,
            "tau_exponent": self.tau_exponent,
            "n_iterates": self.n_iterates,
            "n_orbits": self.n_orbits,
            "stderr": dict(self.stderr),
        }

    def to_row(self) -> list:
        return [
            self.unstable,
            self.weak_stable,
            self.strong_stable,
            self.weak_axis,
            self.beta_exponent,
            self.tau_exponent,
            self.stderr.get("unstable", 0.0),
            self.stderr.get("beta", 0.0),
            self.stderr.get("tau", 0.0),
            self.n_iterates,
            self.n_orbits,
        ]
