"""
TOML and YAML file loaders.
"""

from pathlib import Path
from typing import Any, Dict, Union

from tomlkit import parse as toml_parse
from tomlkit.exceptions import TOMLKitError
from yaml import YAMLError
from yaml import safe_load as yaml_safe_load

from solendim.errors import ConfigError


def load_toml_file(file_path: Union[str, Path]) -> Dict[str, Any]:
    """
    Load a TOML file into plain Python containers.

    Raises:
        FileNotFoundError: If the file does not exist.
        ConfigError: If the file is not valid TOML.
    """
    file_path = Path(file_path)

    try:
        with file_path.open("r", encoding="utf-8") as f:
            return toml_parse(f.read()).unwrap()
    except FileNotFoundError:
        raise FileNotFoundError(f"File not found: {file_path}")
    except TOMLKitError as e:
        raise ConfigError(f"Invalid TOML in {file_path}: {e}")


def load_yaml_file(file_path: Union[str, Path]) -> Dict[str, Any]:
    """
    Load a YAML file with ``safe_load``; an empty file gives an empty dict.

    Raises:
        FileNotFoundError: If the file does not exist.
        ConfigError: If the file is not valid YAML or not a mapping.
    """
    file_path = Path(file_path)

    try:
        with file_path.open("r", encoding="utf-8") as f:
            data = yaml_safe_load(f)
    except FileNotFoundError:
        raise FileNotFoundError(f"File not found: {file_path}")
    except YAMLError as e:
        raise ConfigError(f"Invalid YAML in {file_path}: {e}")

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"{file_path} must hold a mapping at top level")
    return data


def load_config_file(file_path: Union[str, Path]) -> Dict[str, Any]:
    """Dispatch on the suffix: .toml, .yaml or .yml."""
    file_path = Path(file_path)
    suffix = file_path.suffix.lower()

    if suffix == ".toml":
        return load_toml_file(file_path)
    if suffix in (".yaml", ".yml"):
        return load_yaml_file(file_path)
    raise ConfigError(f"Unsupported config file type {suffix!r}: use .toml or .yaml")
