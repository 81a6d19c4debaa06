"""
Solendim settings.
"""

import sys
from pathlib import Path

from solendim.utils.base_enum import BaseEnum

PYPROJECT_FILE_PATH = Path("pyproject.toml")
VERBOSE_ENVVAR = "SOLENDIM_VERBOSE"

# Containment slack for points that must stay in the cube [-1, 1]^3
CUBE_TOLERANCE = 1e-14
# Slack used when deciding which branch image a point belongs to
BRANCH_IMAGE_TOLERANCE = 1e-12

MORAN_RESIDUAL_TOLERANCE = 1e-12
MORAN_MAX_DOUBLINGS = 64
# Genericity bound on the contraction ratios for the Hausdorff statements
GENERIC_BETA_BOUND = 0.649
EQUALITY_TOLERANCE = 1e-12
# Round-off allowance per summed or composed term in truncated expansions
ROUNDOFF_PER_TERM = 2.0 * sys.float_info.epsilon

DEFAULT_TRUNCATION_TOLERANCE = 1e-9
DEFAULT_BURN_IN = 64
MAX_CYLINDER_DEPTH = 24
MIN_SCALES = 3


class PrettyHeaderStyle(BaseEnum):
    """Pretty header style"""

    BOX = "box"
    FIGLET = "figlet"
    BANNER = "banner"
    ALERT = "alert"


class OutputFormat(BaseEnum):
    """Artifact formats written by the CLI"""

    JSON = "json"
    CSV = "csv"


class CloudMode(BaseEnum):
    """Which point cloud the attractor command writes"""

    PLANAR = "2d"
    SPATIAL = "3d"
