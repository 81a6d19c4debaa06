"""
Base class for estimators.
"""

from abc import abstractmethod

from solendim.core.solenoid import ParamVector, validate_params
from solendim.core.symbolic import BernoulliSpec
from solendim.plugins.base import BasePlugin
from solendim.runner.types import RunConfig, RunResult
from solendim.utils.printing import print_debug


class BaseEstimator(BasePlugin):
    """
    An estimator runs generate -> estimate -> report for one RunConfig.
    """

    #: Defaults applied to RunConfig fields left unset
    defaults: dict = {}

    @abstractmethod
    def estimate(self, config: RunConfig, v: ParamVector, spec: BernoulliSpec) -> RunResult:
        """
        Produce the result for a validated configuration.
        """
        pass

    def resolve(self, config: RunConfig) -> RunConfig:
        """Fill unset fields from ``defaults``."""
        for key, value in self.defaults.items():
            if getattr(config, key) is None:
                setattr(config, key, value)
        return config

    def run(self, config: RunConfig) -> RunResult:
        """
        Validate the configuration and run the estimator.

        Raises:
            SolenoidError: Domain failures propagate to the caller.
        """
        if config.params is None:
            raise ValueError(f"{self.meta.name} estimator needs a parameter vector")

        config = self.resolve(config)
        v = validate_params(config.params)
        spec = BernoulliSpec(config.p)

        print_debug(f"running {self.meta.name} estimator with {config.to_dict()}")
        return self.estimate(config, v, spec)
