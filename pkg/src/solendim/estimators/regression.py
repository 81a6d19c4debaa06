"""
Shared log-log regression.
"""

from typing import Sequence, Tuple

import numpy as np
from scipy import stats

from solendim.errors import DegenerateRange
from solendim.settings import MIN_SCALES

from .types import ScalingFit


def dyadic_scales(k_min: int, k_max: int) -> np.ndarray:
    """
    Scales 2^-k for k = k_min ... k_max, decreasing.

    Raises:
        DegenerateRange: If fewer than three scales remain.
    """
    count = k_max - k_min + 1
    if count < MIN_SCALES:
        raise DegenerateRange(
            f"k range {k_min}:{k_max} gives {max(count, 0)} scales, need {MIN_SCALES}"
        )
    return 2.0 ** -np.arange(k_min, k_max + 1, dtype=float)


def fit_scaling(
    log_scales: Sequence[float],
    log_values: Sequence[float],
    scales: Sequence[Tuple[float, float]],
    k_range: Tuple[int, int],
) -> ScalingFit:
    """Least-squares line through (log_scales, log_values)."""
    if len(log_scales) < MIN_SCALES:
        raise DegenerateRange(f"{len(log_scales)} scales, need {MIN_SCALES}")

    result = stats.linregress(np.asarray(log_scales), np.asarray(log_values))
    stderr = float(result.stderr)
    return ScalingFit(
        slope=float(result.slope),
        intercept=float(result.intercept),
        stderr=stderr if np.isfinite(stderr) else 0.0,
        scales=[(float(eps), float(value)) for eps, value in scales],
        k_range=(int(k_range[0]), int(k_range[1])),
    )
