"""
Solendim Planar Maps Tests
"""

import numpy as np
import pytest

from solendim.core.ifs import planar_maps
from solendim.core.solenoid import ParamVector, Point3, apply_map

V = ParamVector(0.3, 0.4, 0.1, 0.2)

# ---------------------------
# Unit tests
# ---------------------------


def test_planar_maps_fixed_points():
    """
    Scenario:
        Apply T1 at (1, 1) and T2 at (-1, -1).

    Expected:
        Both points are fixed.
    """
    maps = planar_maps(V)
    assert maps.apply(1, np.array([[1.0, 1.0]]))[0] == pytest.approx([1.0, 1.0])
    assert maps.apply(2, np.array([[-1.0, -1.0]]))[0] == pytest.approx([-1.0, -1.0])


def test_planar_maps_coefficients():
    """
    Scenario:
        Read the stored affine coefficients.

    Expected:
        Ratios equal the parameter vector; T2 has negative offsets.
    """
    maps = planar_maps(V)
    assert maps.coefficients(1) == ((0.3, pytest.approx(0.7)), (0.1, pytest.approx(0.9)))
    assert maps.coefficients(2) == ((0.4, pytest.approx(-0.6)), (0.2, pytest.approx(-0.8)))
    with pytest.raises(ValueError):
        maps.coefficients(3)


def test_planar_maps_match_solenoid_branches():
    """
    Scenario:
        Compare T_i with the (y, z) part of the map on each half-cube.

    Expected:
        They coincide.
    """
    maps = planar_maps(V)
    y, z = 0.25, -0.75

    first = apply_map(V, Point3(0.5, y, z))
    second = apply_map(V, Point3(-0.5, y, z))

    assert maps.apply(1, np.array([[y, z]]))[0] == pytest.approx([first.y, first.z])
    assert maps.apply(2, np.array([[y, z]]))[0] == pytest.approx([second.y, second.z])


def test_images_stack_both_maps():
    """
    Scenario:
        Take the union of images of three points.

    Expected:
        Six points: the T1 images first.
    """
    maps = planar_maps(V)
    points = np.zeros((3, 2))
    images = maps.images(points)

    assert images.shape == (6, 2)
    assert images[0].tolist() == pytest.approx([0.7, 0.9])
    assert images[3].tolist() == pytest.approx([-0.6, -0.8])
