"""
Estimator plugin runner.
"""

from typing import List

from solendim.plugins import load_plugins_from, registry
from solendim.plugins.base import BasePlugin
from solendim.plugins.estimator import BaseEstimator

from .types import RunConfig, RunResult

ESTIMATOR_PACKAGE = "solendim.modules.estimate"


def available_estimators() -> List[BasePlugin]:
    """Registered estimator plugins, sorted by name."""
    load_plugins_from(ESTIMATOR_PACKAGE)
    plugins = registry.filter(type="estimator", category="estimate")
    return sorted(plugins, key=lambda p: p.meta.name)


def run_estimator(name: str, config: RunConfig) -> RunResult:
    """
    Run the estimator plugin called ``name``.

    Raises:
        KeyError: If no estimator has that name.
    """
    plugin = next((p for p in available_estimators() if p.meta.name == name), None)
    if plugin is None or not isinstance(plugin, BaseEstimator):
        raise KeyError(f"Estimator {name} not found")
    return plugin.run(config)
