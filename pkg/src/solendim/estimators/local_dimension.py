"""
Local dimension of sampled measures from ball masses.
"""

from typing import Optional

import numpy as np
from scipy import spatial

from solendim.errors import AllQueriesDegenerate
from solendim.runner.executor import map_ordered

from .regression import dyadic_scales, fit_scaling
from .types import LocalDimensionResult


def _as_matrix(points: np.ndarray) -> np.ndarray:
    points = np.asarray(points, dtype=float)
    return points[:, None] if points.ndim == 1 else points


def local_dimension(
    samples: np.ndarray,
    queries: np.ndarray,
    k_min: int,
    k_max: int,
    drop_saturated: bool = False,
    workers: Optional[int] = 1,
) -> LocalDimensionResult:
    """
    Regress log mu(B(x, eps)) on log eps at each query x.

    mu is the empirical measure of ``samples``. Queries whose smallest ball
    is empty are dropped; with ``drop_saturated`` so are queries whose ball
    holds every sample at every scale.

    Raises:
        DegenerateRange: If the k range has fewer than three scales.
        AllQueriesDegenerate: If every query was dropped.
    """
    scales = dyadic_scales(k_min, k_max)
    samples = _as_matrix(samples)
    queries = _as_matrix(queries)
    if samples.shape[0] == 0 or queries.shape[0] == 0:
        raise ValueError("local dimension needs samples and queries")

    tree = spatial.cKDTree(samples)
    total = float(samples.shape[0])

    # (n_queries, n_scales) masses, one tree query per scale
    masses = np.column_stack(
        map_ordered(
            lambda eps: tree.query_ball_point(queries, r=eps, return_length=True)
            / total,
            scales,
            workers,
        )
    )

    empty = masses[:, -1] == 0.0
    saturated = np.all(masses == 1.0, axis=1) if drop_saturated else np.zeros_like(empty)
    keep = ~empty & ~saturated

    if not keep.any():
        raise AllQueriesDegenerate(
            f"all {queries.shape[0]} queries dropped "
            f"({int(empty.sum())} empty, {int(saturated.sum())} saturated)"
        )

    log_scales = np.log(scales)
    fits = [
        fit_scaling(log_scales, np.log(row), list(zip(scales, row)), (k_min, k_max))
        for row in masses[keep]
    ]
    slopes = np.array([fit.slope for fit in fits])

    return LocalDimensionResult(
        fits=fits,
        mean=float(slopes.mean()),
        median=float(np.median(slopes)),
        n_queries=int(queries.shape[0]),
        dropped_empty=int(empty.sum()),
        dropped_saturated=int((saturated & ~empty).sum()),
    )
