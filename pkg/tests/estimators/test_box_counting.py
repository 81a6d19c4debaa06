"""
Solendim Box-Counting Tests
"""

import math
from unittest import mock

import numpy as np
import pytest

from solendim.core.ifs import chaos_game
from solendim.core.solenoid import ParamVector
from solendim.errors import DegenerateRange
from solendim.estimators import box_counting_dimension, occupied_boxes
from solendim.utils import printing


def _cantor_points(n: int, seed: int) -> np.ndarray:
    digits = np.random.default_rng(seed).integers(0, 2, size=(n, 30))
    weights = 2.0 * 3.0 ** -np.arange(1, 31)
    return digits @ weights


# ---------------------------
# Unit tests
# ---------------------------


def test_occupied_boxes():
    """
    Scenario:
        Three points, two in the same half-unit box.

    Expected:
        Two occupied boxes, negative coordinates included.
    """
    points = np.array([[0.1, 0.1], [0.2, 0.3], [-0.1, 0.1]])
    assert occupied_boxes(points, 0.5) == 2


def test_box_counting_uniform_square():
    """
    Scenario:
        10^5 uniform points in the unit square, k from 2 to 6.

    Expected:
        Slope 2 within 0.1.
    """
    points = np.random.default_rng(0).uniform(size=(100_000, 2))
    fit = box_counting_dimension(points, 2, 6)

    assert fit.slope == pytest.approx(2.0, abs=0.1)
    assert fit.k_range == (2, 6)
    assert len(fit.scales) == 5


def test_box_counting_cantor_set():
    """
    Scenario:
        Middle-thirds Cantor set, one-dimensional input.

    Expected:
        Slope log 2 / log 3 within 0.05.
    """
    fit = box_counting_dimension(_cantor_points(100_000, 1), 3, 12)
    assert fit.slope == pytest.approx(math.log(2) / math.log(3), abs=0.05)


def test_box_counting_degenerate_range():
    """
    Scenario:
        k from 4 to 5.

    Expected:
        DegenerateRange is raised.
    """
    with pytest.raises(DegenerateRange):
        box_counting_dimension(np.zeros((10, 2)), 4, 5)


def test_box_counting_empty_cloud():
    """
    Scenario:
        A cloud without points.

    Expected:
        ValueError is raised.
    """
    with pytest.raises(ValueError):
        box_counting_dimension(np.zeros((0, 2)), 2, 6)


def test_box_counting_is_silent_when_verbose():
    """
    Scenario:
        Box counting with verbose progress notes switched on.

    Expected:
        Nothing is printed; the notes belong to the estimate plugin.
    """
    points = np.random.default_rng(0).uniform(size=(1_000, 2))
    printing.set_verbose(True)
    try:
        with mock.patch("solendim.utils.printing.typer.secho") as mock_secho:
            box_counting_dimension(points, 2, 6)
            mock_secho.assert_not_called()
    finally:
        printing.set_verbose(False)


# ---------------------------
# Integration tests
# ---------------------------


def test_box_counting_cross_section():
    """
    Scenario:
        Chaos game cloud of 10^5 points for v = (0.3, 0.3, 0.2, 0.2), k 2..8.

    Expected:
        Slope within 0.1 of log 2 / -log 0.3 = 0.5757.
    """
    cloud = chaos_game(ParamVector(0.3, 0.3, 0.2, 0.2), 0.5, 100_000, seed=0)
    fit = box_counting_dimension(cloud, 2, 8)

    assert fit.slope == pytest.approx(math.log(2) / -math.log(0.3), abs=0.1)
