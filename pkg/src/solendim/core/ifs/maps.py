"""
Planar maps of the cross-section.
"""

from solendim.core.solenoid import ParamVector

from .types import PlanarMapPair


def planar_maps(v: ParamVector) -> PlanarMapPair:
    """
    T1(y, z) = (beta1 y + (1 - beta1), tau1 z + (1 - tau1)),
    T2(y, z) = (beta2 y - (1 - beta2), tau2 z - (1 - tau2)).

    T2 carries negative offsets, matching the second branch of f_v.
    """
    return PlanarMapPair(
        first=((v.beta1, 1.0 - v.beta1), (v.tau1, 1.0 - v.tau1)),
        second=((v.beta2, -(1.0 - v.beta2)), (v.tau2, -(1.0 - v.tau2))),
    )
