"""
Solendim Regression Tests
"""

import numpy as np
import pytest

from solendim.errors import DegenerateRange
from solendim.estimators import dyadic_scales, fit_scaling

# ---------------------------
# Unit tests
# ---------------------------


def test_dyadic_scales():
    """
    Scenario:
        k from 2 to 4.

    Expected:
        Scales 1/4, 1/8, 1/16 in decreasing order.
    """
    assert dyadic_scales(2, 4).tolist() == [0.25, 0.125, 0.0625]


@pytest.mark.parametrize("k_min, k_max", [(3, 4), (5, 5), (6, 2)])
def test_dyadic_scales_degenerate(k_min, k_max):
    """
    Scenario:
        Ranges with fewer than three scales.

    Expected:
        DegenerateRange is raised.
    """
    with pytest.raises(DegenerateRange):
        dyadic_scales(k_min, k_max)


def test_fit_scaling_exact_line():
    """
    Scenario:
        Points on the line y = 1.5 x + 0.2.

    Expected:
        Slope 1.5, intercept 0.2 and zero stderr.
    """
    x = np.array([1.0, 2.0, 3.0, 4.0])
    fit = fit_scaling(x, 1.5 * x + 0.2, [(0.5, 1.0)] * 4, (1, 4))

    assert fit.slope == pytest.approx(1.5)
    assert fit.intercept == pytest.approx(0.2)
    assert fit.stderr == pytest.approx(0.0, abs=1e-12)
    assert fit.to_row()[:2] == [fit.slope, fit.intercept]


def test_fit_scaling_too_few_points():
    """
    Scenario:
        Two points only.

    Expected:
        DegenerateRange is raised.
    """
    with pytest.raises(DegenerateRange):
        fit_scaling([1.0, 2.0], [1.0, 2.0], [], (1, 2))
