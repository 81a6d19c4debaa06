"""
Chaos-game sampling of the cross-section and of measures on the attractor.
"""

from typing import Tuple

import numpy as np

from solendim.core.solenoid import ParamVector
from solendim.core.symbolic import (
    BernoulliSpec,
    dyadic_values,
    sample_symbols,
    truncation_half_length,
)
from solendim.settings import DEFAULT_BURN_IN, DEFAULT_TRUNCATION_TOLERANCE
from solendim.utils import derive_seed

from .maps import planar_maps
from .types import PointCloud2


def chaos_game(
    v: ParamVector,
    p: float,
    n: int,
    burn_in: int = DEFAULT_BURN_IN,
    seed: int = 0,
    start: Tuple[float, float] = (0.0, 0.0),
) -> PointCloud2:
    """
    Random orbit of the planar IFS, choosing T1 with probability p.

    Args:
        v: Solenoid parameters.
        p: Probability of choosing T1, in [0, 1].
        n: Number of points kept.
        burn_in: Iterates discarded before recording.
        seed: Seed of the choice stream.
        start: Starting point (y, z).

    Returns:
        PointCloud2: The n recorded points.
    """
    if n < 1:
        raise ValueError(f"chaos game needs n >= 1, got {n}")
    if burn_in < 0:
        raise ValueError(f"burn-in must be >= 0, got {burn_in}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability p={p!r} is not in [0, 1]")

    maps = planar_maps(v)
    (ay1, by1), (az1, bz1) = maps.first
    (ay2, by2), (az2, bz2) = maps.second

    rng = np.random.default_rng(seed)
    choose_first = (rng.random(n + burn_in) < p).tolist()

    y, z = float(start[0]), float(start[1])
    points = np.empty((n, 2), dtype=float)

    for step, first in enumerate(choose_first):
        if first:
            y, z = ay1 * y + by1, az1 * z + bz1
        else:
            y, z = ay2 * y + by2, az2 * z + bz2
        if step >= burn_in:
            points[step - burn_in] = (y, z)

    return PointCloud2(points=points, seed=seed, n=n, burn_in=burn_in, p=float(p))


def attractor_cloud_3d(
    v: ParamVector, n: int, seed: int, burn_in: int = DEFAULT_BURN_IN
) -> np.ndarray:
    """
    Points on the attractor [-1, 1] x cross-section: uniform x paired with
    equal-weight chaos-game (y, z).
    """
    if n < 1:
        raise ValueError(f"cloud needs n >= 1, got {n}")
    rng = np.random.default_rng(derive_seed(seed, 0))
    x = rng.uniform(-1.0, 1.0, size=n)
    planar = chaos_game(v, 0.5, n, burn_in=burn_in, seed=derive_seed(seed, 1))
    return np.column_stack((x, planar.points))


def bernoulli_cloud_3d(
    v: ParamVector,
    spec: BernoulliSpec,
    n: int,
    seed: int,
    burn_in: int = DEFAULT_BURN_IN,
    tolerance: float = DEFAULT_TRUNCATION_TOLERANCE,
) -> np.ndarray:
    """
    Samples of the push-forward of b^p onto the attractor.

    The measure is the product of the dyadic image of b^p on the x-axis with
    the chaos-game measure driven by p on the cross-section. Each x is the
    dyadic value of hi + 1 past symbols, hi = truncation_half_length(1/2,
    tolerance), so it lies within ``tolerance`` of an exact sample.
    """
    if n < 1:
        raise ValueError(f"cloud needs n >= 1, got {n}")
    rng = np.random.default_rng(derive_seed(seed, 0))
    depth = truncation_half_length(0.5, tolerance) + 1
    x = dyadic_values(sample_symbols(spec, (n, depth), rng))
    planar = chaos_game(v, spec.p, n, burn_in=burn_in, seed=derive_seed(seed, 1))
    return np.column_stack((x, planar.points))
