"""
Cross-section IFS: planar maps, chaos game, cylinder covers.
"""

from .chaos import attractor_cloud_3d, bernoulli_cloud_3d, chaos_game
from .cylinders import cylinder_cover
from .maps import planar_maps
from .types import CylinderCover, PlanarMapPair, PointCloud2

__all__ = [
    "CylinderCover",
    "PlanarMapPair",
    "PointCloud2",
    "attractor_cloud_3d",
    "bernoulli_cloud_3d",
    "chaos_game",
    "cylinder_cover",
    "planar_maps",
]
