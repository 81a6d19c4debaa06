"""
Solendim Estimate Modules Tests
"""

import math

import pytest

from solendim.errors import AllQueriesDegenerate, DegenerateRange
from solendim.modules.estimate.box_estimator import BoxEstimator
from solendim.modules.estimate.local_estimator import LOCAL_COLUMNS, LocalEstimator
from solendim.modules.estimate.lyapunov_estimator import LyapunovEstimator
from solendim.runner.types import RunConfig

# ---------------------------
# Unit tests
# ---------------------------


@pytest.mark.parametrize(
    "plugin_cls, name, scope",
    [
        (BoxEstimator, "box", "cloud"),
        (LocalEstimator, "local", "measure"),
        (LyapunovEstimator, "lyapunov", "orbit"),
    ],
)
def test_estimator_meta(plugin_cls, name, scope):
    """
    Scenario:
        Inspect the metadata of each estimator plugin.

    Expected:
        Name, scope, type and category match.
    """
    assert plugin_cls.meta.name == name
    assert plugin_cls.meta.scope == scope
    assert plugin_cls.meta.type == "estimator"
    assert plugin_cls.meta.category == "estimate"


def test_box_estimator_defaults():
    """
    Scenario:
        Resolve an empty box configuration.

    Expected:
        10^5 points, k from 2 to 8, planar mode.
    """
    config = BoxEstimator().resolve(RunConfig(command="estimate box"))

    assert config.n == 100_000
    assert config.k_range == (2, 8)
    assert config.mode == "2d"


def test_box_estimator_degenerate_range():
    """
    Scenario:
        k from 3 to 4.

    Expected:
        DegenerateRange is raised.
    """
    config = RunConfig(
        command="estimate box", params=(0.3, 0.3, 0.2, 0.2), n=1_000, k_range=(3, 4)
    )
    with pytest.raises(DegenerateRange):
        BoxEstimator().run(config)


def test_local_estimator_point_mass():
    """
    Scenario:
        p = 1, the measure is a point mass.

    Expected:
        AllQueriesDegenerate is raised.
    """
    config = RunConfig(
        command="estimate local",
        params=(0.3, 0.3, 0.2, 0.2),
        p=1.0,
        n=1_000,
        n_queries=10,
        workers=1,
    )
    with pytest.raises(AllQueriesDegenerate):
        LocalEstimator().run(config)


# ---------------------------
# Integration tests
# ---------------------------


def test_box_estimator_run():
    """
    Scenario:
        Box counting on the cross-section of v = (0.3, 0.3, 0.2, 0.2).

    Expected:
        One CSV row and a slope near log 2 / -log 0.3.
    """
    config = RunConfig(command="estimate box", params=(0.3, 0.3, 0.2, 0.2), n=50_000)
    result = BoxEstimator().run(config)

    assert result.name == "box"
    assert len(result.rows) == 1
    assert result.payload["k_range"] == [2, 8]
    assert result.payload["slope"] == pytest.approx(math.log(2) / -math.log(0.3), abs=0.1)


def test_box_estimator_spatial_mode():
    """
    Scenario:
        Box counting on the 3d attractor cloud.

    Expected:
        The slope exceeds the cross-section slope by roughly one.
    """
    config = RunConfig(
        command="estimate box",
        params=(0.3, 0.3, 0.2, 0.2),
        n=100_000,
        k_range=(2, 6),
        mode="3d",
    )
    result = BoxEstimator().run(config)

    assert result.payload["slope"] == pytest.approx(1.5757, abs=0.2)


def test_local_estimator_run():
    """
    Scenario:
        A small local-dimension run.

    Expected:
        One row in LOCAL_COLUMNS order with all queries accounted for.
    """
    config = RunConfig(
        command="estimate local",
        params=(0.4, 0.4, 0.2, 0.2),
        n=20_000,
        n_queries=20,
        k_range=(2, 5),
        workers=1,
    )
    result = LocalEstimator().run(config)
    payload = result.payload

    assert result.columns == LOCAL_COLUMNS
    assert payload["n_queries"] == 20
    assert payload["n_used"] + payload["dropped_empty"] + payload["dropped_saturated"] == 20


def test_lyapunov_estimator_run():
    """
    Scenario:
        A Lyapunov run with p = 1.

    Expected:
        Exact exponents log 2, log beta1 and log tau1.
    """
    config = RunConfig(
        command="estimate lyapunov",
        params=(0.3, 0.4, 0.1, 0.2),
        p=1.0,
        n_iterates=100,
        n_orbits=4,
        workers=1,
    )
    result = LyapunovEstimator().run(config)

    assert result.payload["unstable"] == pytest.approx(math.log(2))
    assert result.payload["beta_exponent"] == pytest.approx(math.log(0.3))
    assert result.payload["tau_exponent"] == pytest.approx(math.log(0.1))
