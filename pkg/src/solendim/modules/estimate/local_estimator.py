"""
Local-dimension estimator.
"""

from solendim.core.ifs import bernoulli_cloud_3d
from solendim.core.solenoid import ParamVector
from solendim.core.symbolic import BernoulliSpec
from solendim.estimators import local_dimension
from solendim.plugins import register_plugin
from solendim.plugins.estimator import BaseEstimator
from solendim.runner.types import RunConfig, RunResult
from solendim.settings import DEFAULT_TRUNCATION_TOLERANCE
from solendim.utils import derive_seed
from solendim.utils.printing import print_debug

LOCAL_COLUMNS = [
    "mean",
    "median",
    "n_queries",
    "n_used",
    "dropped_empty",
    "dropped_saturated",
]


@register_plugin(
    name="local",
    description="Local dimension of b^p pushed onto the attractor.",
    type="estimator",
    category="estimate",
    scope="measure",
)
class LocalEstimator(BaseEstimator):
    """
    Samples and queries are independent draws of the same measure.

    Queries whose ball holds every sample at every scale are dropped, so a
    point mass ends in AllQueriesDegenerate.
    """

    defaults = {"n": 200_000, "n_queries": 200, "k_range": (3, 7)}

    def estimate(self, config: RunConfig, v: ParamVector, spec: BernoulliSpec) -> RunResult:
        tolerance = config.tolerance or DEFAULT_TRUNCATION_TOLERANCE
        samples = bernoulli_cloud_3d(
            v,
            spec,
            config.n,
            derive_seed(config.seed, 0),
            burn_in=config.burn_in,
            tolerance=tolerance,
        )
        queries = bernoulli_cloud_3d(
            v,
            spec,
            config.n_queries,
            derive_seed(config.seed, 1),
            burn_in=config.burn_in,
            tolerance=tolerance,
        )

        k_min, k_max = config.k_range
        result = local_dimension(
            samples,
            queries,
            k_min,
            k_max,
            drop_saturated=True,
            workers=config.workers,
        )
        print_debug(
            f"local dimension: {result.dropped_empty} empty and "
            f"{result.dropped_saturated} saturated of {result.n_queries} queries dropped"
        )
        payload = result.to_dict()

        return RunResult(
            name=self.meta.name,
            status="✅ Passed",
            summary=f"median {result.median:.6f}, mean {result.mean:.6f}",
            payload=payload,
            columns=list(LOCAL_COLUMNS),
            rows=[[payload[column] for column in LOCAL_COLUMNS]],
        )
