"""
Solendim utility functions and classes.

Printing helpers live in ``solendim.utils.printing``; they depend on
``solendim.settings`` and are imported from there directly.
"""

from .base_enum import BaseEnum
from .helpers import derive_seed, ensure_parent_dir, parse_float_list, parse_int_range

__all__ = [
    "BaseEnum",
    "derive_seed",
    "ensure_parent_dir",
    "parse_float_list",
    "parse_int_range",
]
