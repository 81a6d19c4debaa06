"""
Box-counting dimension of point clouds over dyadic grids.
"""

from typing import Union

import numpy as np

from solendim.core.ifs import PointCloud2

from .regression import dyadic_scales, fit_scaling
from .types import ScalingFit


def _as_points(cloud: Union[PointCloud2, np.ndarray]) -> np.ndarray:
    points = cloud.points if isinstance(cloud, PointCloud2) else cloud
    points = np.asarray(points, dtype=float)
    if points.ndim == 1:
        points = points[:, None]
    if points.shape[0] == 0:
        raise ValueError("cannot count boxes of an empty cloud")
    return points


def occupied_boxes(points: np.ndarray, epsilon: float) -> int:
    """Number of grid boxes of side ``epsilon`` holding at least one point."""
    cells = np.floor(points / epsilon).astype(np.int64)
    return int(np.unique(cells, axis=0).shape[0])


def box_counting_dimension(
    cloud: Union[PointCloud2, np.ndarray], k_min: int, k_max: int
) -> ScalingFit:
    """
    Slope of log N(eps) against -log eps for eps = 2^-k, k_min <= k <= k_max.

    Raises:
        DegenerateRange: If the k range has fewer than three scales.
    """
    scales = dyadic_scales(k_min, k_max)
    points = _as_points(cloud)

    counts = [occupied_boxes(points, eps) for eps in scales]

    return fit_scaling(
        -np.log(scales),
        np.log(counts),
        list(zip(scales, counts)),
        (k_min, k_max),
    )
