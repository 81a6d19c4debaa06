"""
The piecewise-affine solenoid map, its inverse branches and derivatives.
"""

from typing import List

import numpy as np

from solendim.errors import ContainmentError, NotInBranchImage, OnSingularity
from solendim.settings import BRANCH_IMAGE_TOLERANCE, CUBE_TOLERANCE

from .types import Branch, DerivativeMatrix, ParamVector, Point3


def _require_in_cube(p: Point3, what: str) -> None:
    if not p.in_cube(CUBE_TOLERANCE):
        raise ContainmentError(f"{what} {p} left the cube [-1, 1]^3")


def branch_of(p: Point3) -> Branch:
    """Branch used by the map at ``p``; x = 0 belongs to the first branch."""
    return Branch.FIRST if p.x >= 0.0 else Branch.SECOND


def singularity_distance(p: Point3) -> float:
    """Distance from ``p`` to the singular plane S = {0} x [-1, 1]^2."""
    return abs(p.x)


def apply_map(v: ParamVector, p: Point3) -> Point3:
    """
    Evaluate f_v at ``p``.

    Args:
        v: Solenoid parameters.
        p: Point of the cube.

    Returns:
        Point3: f_v(p), checked to lie in the cube.

    Raises:
        ContainmentError: If ``p`` or its image leaves the cube.
    """
    _require_in_cube(p, "input point")

    if p.x >= 0.0:
        image = Point3(
            2.0 * p.x - 1.0,
            v.beta1 * p.y + (1.0 - v.beta1),
            v.tau1 * p.z + (1.0 - v.tau1),
        )
    else:
        image = Point3(
            2.0 * p.x + 1.0,
            v.beta2 * p.y - (1.0 - v.beta2),
            v.tau2 * p.z - (1.0 - v.tau2),
        )

    _require_in_cube(image, "image point")
    return image


def apply_map_array(v: ParamVector, points: np.ndarray) -> np.ndarray:
    """
    Vectorized f_v on an (n, 3) array of points, same branch convention.
    """
    points = np.asarray(points, dtype=float)
    first = points[:, 0] >= 0.0

    beta = np.where(first, v.beta1, v.beta2)
    tau = np.where(first, v.tau1, v.tau2)
    sign = np.where(first, 1.0, -1.0)

    image = np.empty_like(points)
    image[:, 0] = 2.0 * points[:, 0] - sign
    image[:, 1] = beta * points[:, 1] + sign * (1.0 - beta)
    image[:, 2] = tau * points[:, 2] + sign * (1.0 - tau)

    if np.any(np.abs(image) > 1.0 + CUBE_TOLERANCE):
        raise ContainmentError("vectorized image left the cube [-1, 1]^3")
    return image


def _check_image(value: float, low: float, high: float, label: str) -> None:
    if not low - BRANCH_IMAGE_TOLERANCE <= value <= high + BRANCH_IMAGE_TOLERANCE:
        raise NotInBranchImage(
            f"{label}={value!r} is outside the branch image [{low!r}, {high!r}]"
        )


def apply_inverse(v: ParamVector, p: Point3, branch: int) -> Point3:
    """
    Invert the branch ``branch`` of f_v at ``p``.

    Branch 1 maps onto [-1, 1] x [1 - 2 beta1, 1] x [1 - 2 tau1, 1];
    branch 2 maps onto [-1, 1) x [-1, 2 beta2 - 1] x [-1, 2 tau2 - 1].

    Raises:
        NotInBranchImage: If ``p`` is outside the image of that branch.
    """
    selected = Branch(branch)

    if selected is Branch.FIRST:
        _check_image(p.x, -1.0, 1.0, "x")
        _check_image(p.y, 1.0 - 2.0 * v.beta1, 1.0, "y")
        _check_image(p.z, 1.0 - 2.0 * v.tau1, 1.0, "z")
        return Point3(
            (p.x + 1.0) / 2.0,
            (p.y - (1.0 - v.beta1)) / v.beta1,
            (p.z - (1.0 - v.tau1)) / v.tau1,
        )

    # x = 1 would need the preimage x = 0, which belongs to branch 1
    if p.x >= 1.0:
        raise NotInBranchImage(f"x={p.x!r} is outside the branch image [-1, 1)")
    _check_image(p.x, -1.0, 1.0, "x")
    _check_image(p.y, -1.0, 2.0 * v.beta2 - 1.0, "y")
    _check_image(p.z, -1.0, 2.0 * v.tau2 - 1.0, "z")
    return Point3(
        (p.x - 1.0) / 2.0,
        (p.y + (1.0 - v.beta2)) / v.beta2,
        (p.z + (1.0 - v.tau2)) / v.tau2,
    )


def branch_derivative(v: ParamVector, branch: int) -> DerivativeMatrix:
    """Derivative diag(2, beta_i, tau_i) of a branch, independent of the point."""
    selected = Branch(branch)
    if selected is Branch.FIRST:
        return DerivativeMatrix(diag=(2.0, v.beta1, v.tau1), branch=selected)
    return DerivativeMatrix(diag=(2.0, v.beta2, v.tau2), branch=selected)


def derivative_at(v: ParamVector, p: Point3) -> DerivativeMatrix:
    """
    Jacobian of f_v at ``p``.

    Raises:
        OnSingularity: If p lies on x = 0, where f_v is not differentiable.
    """
    if p.x == 0.0:
        raise OnSingularity(f"derivative undefined on the singular plane x = 0 at {p}")
    return branch_derivative(v, branch_of(p))


def orbit(v: ParamVector, p0: Point3, n: int) -> List[Point3]:
    """
    Forward orbit (p0, f(p0), ..., f^n(p0)).
    """
    if n < 0:
        raise ValueError(f"orbit length must be >= 0, got {n}")

    points = [p0]
    current = p0
    for _ in range(n):
        current = apply_map(v, current)
        points.append(current)
    return points
