"""
Parameter sweeps over the closed-form dimension theory.
"""

from typing import Dict, List, Optional

from solendim.core.solenoid import ParamVector
from solendim.core.symbolic import BernoulliSpec
from solendim.dimension import (
    attractor_dimension,
    full_dimension_verdict,
    measure_dimension,
    regime_of,
)
from solendim.errors import SolenoidError
from solendim.utils.printing import print_debug

from .executor import map_ordered
from .types import SweepRow


def evaluate_point(
    index: int, point: Dict[str, float], override: Optional[float] = None
) -> SweepRow:
    """
    Dimensions and verdict at one grid point.

    Domain errors are recorded by class name in the row instead of raised;
    fields computed before the failure are kept.
    """
    row = SweepRow(index=index, point=point)

    try:
        v = ParamVector(point["beta1"], point["beta2"], point["tau1"], point["tau2"])
        row.regime = regime_of(v).value
        spec = BernoulliSpec(point["p"])
        row.measure_dim = measure_dimension(v, spec, override).total

        report = attractor_dimension(v)
        row.box_dim = report.box_dim
        row.hausdorff_dim = report.to_dict()["hausdorff_dim"]
        row.verdict = full_dimension_verdict(v).verdict.value
    except (SolenoidError, ValueError) as e:
        row.error = type(e).__name__

    return row


def run_sweep(
    points: List[Dict[str, float]],
    override: Optional[float] = None,
    workers: Optional[int] = None,
) -> List[SweepRow]:
    """
    Evaluate every grid point; rows come back in grid order.
    """
    print_debug(f"sweeping {len(points)} grid points")
    return map_ordered(
        lambda item: evaluate_point(item[0], item[1], override),
        list(enumerate(points)),
        workers,
    )
