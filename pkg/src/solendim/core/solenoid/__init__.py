"""
Solenoid dynamics: parameters, the map f_v, inverse branches, derivatives.
"""

from .dynamics import (
    apply_inverse,
    apply_map,
    apply_map_array,
    branch_derivative,
    branch_of,
    derivative_at,
    orbit,
    singularity_distance,
)
from .types import Branch, DerivativeMatrix, ParamVector, Point3, validate_params

__all__ = [
    "Branch",
    "DerivativeMatrix",
    "ParamVector",
    "Point3",
    "validate_params",
    "apply_map",
    "apply_map_array",
    "apply_inverse",
    "branch_of",
    "branch_derivative",
    "derivative_at",
    "orbit",
    "singularity_distance",
]
