"""
Closed-form dimension theory of linear solenoids.
"""

from .attractor import attractor_dimension, regime_of
from .measure import entropy, measure_dimension, projected_measure_dimension, xi_exponent
from .moran import moran_root, solve_moran_beta, solve_moran_beta_tau
from .types import (
    DimensionReport,
    Formula,
    FullDimVerdict,
    HausdorffStatus,
    MeasureDimensionReport,
    MoranEquation,
    MoranRoot,
    ProjectedDimension,
    ProjectionSource,
    Regime,
    StableBranch,
    Verdict,
)
from .verdict import full_dimension_verdict, gap_bound

__all__ = [
    "DimensionReport",
    "Formula",
    "FullDimVerdict",
    "HausdorffStatus",
    "MeasureDimensionReport",
    "MoranEquation",
    "MoranRoot",
    "ProjectedDimension",
    "ProjectionSource",
    "Regime",
    "StableBranch",
    "Verdict",
    "attractor_dimension",
    "entropy",
    "full_dimension_verdict",
    "gap_bound",
    "measure_dimension",
    "moran_root",
    "projected_measure_dimension",
    "regime_of",
    "solve_moran_beta",
    "solve_moran_beta_tau",
    "xi_exponent",
]
