"""
Solendim exceptions.

Every domain failure derives from ``SolenoidError`` so the CLI can map it to
exit code 1; ``ConfigError`` marks usage problems (exit code 2).
"""


class SolenoidError(Exception):
    """Root of all domain errors."""


class ConfigError(ValueError):
    """Malformed command-line or grid-file configuration."""


# ---------------------------
# Parameters
# ---------------------------


class ParameterError(SolenoidError, ValueError):
    """Invalid solenoid parameter vector."""


class OutOfRange(ParameterError):
    """A contraction ratio lies outside the open interval (0, 1)."""


class TauSumTooLarge(ParameterError):
    """tau1 + tau2 >= 1."""


# ---------------------------
# Dynamics
# ---------------------------


class DynamicsError(SolenoidError):
    """Failure evaluating the solenoid map."""


class NotInBranchImage(DynamicsError, ValueError):
    """A point is outside the image of the requested inverse branch."""


class OnSingularity(DynamicsError, ValueError):
    """The derivative was requested on the plane x = 0."""


class ContainmentError(DynamicsError):
    """A computed point left the cube [-1, 1]^3."""


# ---------------------------
# Symbolic coding
# ---------------------------


class SymbolicError(SolenoidError, ValueError):
    """Invalid symbol window or coding request."""


class MalformedWindow(SymbolicError):
    """Symbols outside {-1, +1}, inconsistent bounds or bad text form."""


class WindowExhausted(SymbolicError):
    """A shift left a window that no longer covers index 0."""


class InsufficientWindow(SymbolicError):
    """The window lacks the past or future symbols a coding map needs."""


# ---------------------------
# Iterated function system
# ---------------------------


class IfsError(SolenoidError, ValueError):
    """Invalid request on the cross-section IFS."""


class DepthTooLarge(IfsError):
    """Cylinder enumeration beyond the supported depth."""


# ---------------------------
# Dimension theory
# ---------------------------


class DimensionError(SolenoidError):
    """Closed-form dimension computation failed."""


class WrongRegime(DimensionError, ValueError):
    """The formula does not apply for beta1 + beta2 on this side of 1."""


class HypothesisViolated(DimensionError, ValueError):
    """beta1 + beta2 <= tau1 + tau2, no closed form is available."""


class MoranBracketError(DimensionError):
    """No bracket for the Moran root could be found."""


# ---------------------------
# Estimators
# ---------------------------


class EstimatorError(SolenoidError, ValueError):
    """Numerical estimator failure."""


class DegenerateRange(EstimatorError):
    """Fewer than three scales to regress on."""


class AllQueriesDegenerate(EstimatorError):
    """Every local-dimension query was dropped."""
