"""
Box-counting estimator.
"""

from solendim.core.ifs import attractor_cloud_3d, chaos_game
from solendim.core.solenoid import ParamVector
from solendim.core.symbolic import BernoulliSpec
from solendim.estimators import SCALING_FIT_COLUMNS, box_counting_dimension
from solendim.plugins import register_plugin
from solendim.plugins.estimator import BaseEstimator
from solendim.runner.types import RunConfig, RunResult
from solendim.settings import CloudMode
from solendim.utils.printing import print_debug


@register_plugin(
    name="box",
    description="Box-counting dimension of a chaos-game cloud.",
    type="estimator",
    category="estimate",
    scope="cloud",
)
class BoxEstimator(BaseEstimator):
    """
    Box-counting on the cross-section (2d) or on the attractor (3d).
    """

    defaults = {"n": 100_000, "k_range": (2, 8), "mode": CloudMode.PLANAR.value}

    def estimate(self, config: RunConfig, v: ParamVector, spec: BernoulliSpec) -> RunResult:
        if CloudMode.from_value(config.mode) is CloudMode.SPATIAL:
            cloud = attractor_cloud_3d(v, config.n, config.seed, burn_in=config.burn_in)
        else:
            cloud = chaos_game(
                v, spec.p, config.n, burn_in=config.burn_in, seed=config.seed
            ).points

        k_min, k_max = config.k_range
        fit = box_counting_dimension(cloud, k_min, k_max)
        print_debug(f"box counts over k={k_min}..{k_max}: {[int(c) for _, c in fit.scales]}")

        return RunResult(
            name=self.meta.name,
            status="✅ Passed",
            summary=f"slope {fit.slope:.6f} ± {fit.stderr:.6f}",
            payload=fit.to_dict(),
            columns=list(SCALING_FIT_COLUMNS),
            rows=[fit.to_row()],
        )
