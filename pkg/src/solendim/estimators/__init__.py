"""
Numerical estimators: box counting, local dimension, Lyapunov exponents.
"""

from .box_counting import box_counting_dimension, occupied_boxes
from .local_dimension import local_dimension
from .lyapunov import lyapunov_birkhoff
from .regression import dyadic_scales, fit_scaling
from .types import (
    LYAPUNOV_COLUMNS,
    SCALING_FIT_COLUMNS,
    LocalDimensionResult,
    LyapunovEstimate,
    ScalingFit,
)

__all__ = [
    "LYAPUNOV_COLUMNS",
    "SCALING_FIT_COLUMNS",
    "LocalDimensionResult",
    "LyapunovEstimate",
    "ScalingFit",
    "box_counting_dimension",
    "dyadic_scales",
    "fit_scaling",
    "local_dimension",
    "lyapunov_birkhoff",
    "occupied_boxes",
]
