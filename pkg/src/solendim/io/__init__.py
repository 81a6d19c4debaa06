"""
Config files and artifact writers.
"""

from .config import (
    SWEEP_AXES,
    SolendimDefaults,
    expand_grid,
    load_project_defaults,
    load_sweep_config,
    parse_grid_options,
    parse_grid_value,
)
from .loader import load_config_file, load_toml_file, load_yaml_file
from .writers import (
    dumps_json,
    emit,
    format_cell,
    render_csv,
    render_json,
    write_cloud_csv,
)

__all__ = [
    "SWEEP_AXES",
    "SolendimDefaults",
    "dumps_json",
    "emit",
    "expand_grid",
    "format_cell",
    "load_config_file",
    "load_project_defaults",
    "load_sweep_config",
    "load_toml_file",
    "load_yaml_file",
    "parse_grid_options",
    "parse_grid_value",
    "render_csv",
    "render_json",
    "write_cloud_csv",
]
