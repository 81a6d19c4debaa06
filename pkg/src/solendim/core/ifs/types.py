"""
Types for the cross-section iterated function system.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

Affine1D = Tuple[float, float]


@dataclass(frozen=True)
class PlanarMapPair:
    """
    The two planar contractions whose attractor is the cross-section.

    Each map is stored as ((ay, by), (az, bz)) with
    T(y, z) = (ay * y + by, az * z + bz). T1 fixes (1, 1), T2 fixes (-1, -1).
    """

    first: Tuple[Affine1D, Affine1D]
    second: Tuple[Affine1D, Affine1D]

    def coefficients(self, index: int) -> Tuple[Affine1D, Affine1D]:
        if index == 1:
            return self.first
        if index == 2:
            return self.second
        raise ValueError(f"map index must be 1 or 2, got {index}")

    def apply(self, index: int, points: np.ndarray) -> np.ndarray:
        """Apply T_index to an (n, 2) array of points."""
        (ay, by), (az, bz) = self.coefficients(index)
        points = np.atleast_2d(np.asarray(points, dtype=float))
        return np.column_stack((ay * points[:, 0] + by, az * points[:, 1] + bz))

    def images(self, points: np.ndarray) -> np.ndarray:
        """Union T1(points) u T2(points), stacked."""
        return np.vstack((self.apply(1, points), self.apply(2, points)))


@dataclass(frozen=True)
class PointCloud2:
    """
    Chaos-game samples (y, z) of the cross-section plus generation metadata.
    """

    points: np.ndarray
    seed: int
    n: int
    burn_in: int
    p: float

    def metadata(self) -> dict:
        return {"seed": self.seed, "n": self.n, "burn_in": self.burn_in, "p": self.p}


@dataclass(frozen=True)
class CylinderCover:
    """
    The 2^depth rectangles T_{s1} o ... o T_{s_depth}([-1, 1]^2).

    Row i of ``centers``/``half_widths`` belongs to the word whose binary
    digits (most significant first, 0 for T1 and 1 for T2) spell i.
    """

    depth: int
    centers: np.ndarray
    half_widths: np.ndarray

    def __len__(self) -> int:
        return int(self.centers.shape[0])

    def contains(
        self, points: np.ndarray, tolerance: float = 1e-12, chunk: int = 4096
    ) -> np.ndarray:
        """Boolean mask: which points lie in the union of the rectangles."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        inside = np.zeros(points.shape[0], dtype=bool)

        for start in range(0, points.shape[0], chunk):
            block = points[start : start + chunk]
            offsets = np.abs(block[:, None, :] - self.centers[None, :, :])
            hit = np.all(offsets <= self.half_widths[None, :, :] + tolerance, axis=2)
            inside[start : start + chunk] = hit.any(axis=1)
        return inside

    def to_json(self) -> List[dict]:
        return [
            {"center": center.tolist(), "half_widths": half.tolist()}
            for center, half in zip(self.centers, self.half_widths)
        ]
