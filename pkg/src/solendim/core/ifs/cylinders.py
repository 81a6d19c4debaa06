"""
Exact cylinder covers of the cross-section.
"""

import numpy as np

from solendim.core.solenoid import ParamVector
from solendim.errors import DepthTooLarge
from solendim.settings import MAX_CYLINDER_DEPTH

from .maps import planar_maps
from .types import CylinderCover


def cylinder_cover(v: ParamVector, n: int) -> CylinderCover:
    """
    All depth-n images of the square [-1, 1]^2 under words of T1, T2.

    Raises:
        DepthTooLarge: If n exceeds the supported depth.
    """
    if n < 0:
        raise ValueError(f"depth must be >= 0, got {n}")
    if n > MAX_CYLINDER_DEPTH:
        raise DepthTooLarge(f"depth {n} > {MAX_CYLINDER_DEPTH} would need 2^{n} rectangles")

    maps = planar_maps(v)
    centers = np.zeros((1, 2))
    halves = np.ones((1, 2))

    for _ in range(n):
        # prepend the outermost map: T_i(R) for every rectangle R
        layers_c, layers_h = [], []
        for index in (1, 2):
            (ay, _), (az, _) = maps.coefficients(index)
            layers_c.append(maps.apply(index, centers))
            layers_h.append(halves * np.array([ay, az]))
        centers = np.vstack(layers_c)
        halves = np.vstack(layers_h)

    return CylinderCover(depth=n, centers=centers, half_widths=halves)
