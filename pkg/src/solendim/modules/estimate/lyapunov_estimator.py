"""
Lyapunov exponent estimator.
"""

from solendim.core.solenoid import ParamVector
from solendim.core.symbolic import BernoulliSpec
from solendim.estimators import LYAPUNOV_COLUMNS, lyapunov_birkhoff
from solendim.plugins import register_plugin
from solendim.plugins.estimator import BaseEstimator
from solendim.runner.types import RunConfig, RunResult


@register_plugin(
    name="lyapunov",
    description="Birkhoff averages of the Lyapunov exponents.",
    type="estimator",
    category="estimate",
    scope="orbit",
)
class LyapunovEstimator(BaseEstimator):

    defaults = {"n_iterates": 10_000, "n_orbits": 32}

    def estimate(self, config: RunConfig, v: ParamVector, spec: BernoulliSpec) -> RunResult:
        estimate = lyapunov_birkhoff(
            v,
            spec,
            config.n_iterates,
            config.n_orbits,
            config.seed,
            workers=config.workers,
        )

        return RunResult(
            name=self.meta.name,
            status="✅ Passed",
            summary=(
                f"unstable {estimate.unstable:.6f}, weak {estimate.weak_stable:.6f}, "
                f"strong {estimate.strong_stable:.6f}"
            ),
            payload=estimate.to_dict(),
            columns=list(LYAPUNOV_COLUMNS),
            rows=[estimate.to_row()],
        )
