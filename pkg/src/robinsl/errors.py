"""Exception types raised by the robinsl solvers."""


class RobinSLError(Exception):
    """Base class for all robinsl errors."""


class ZeroMass(RobinSLError):
    """Potential has zero total integral and cannot be normalized."""


class MixedSign(RobinSLError):
    """Potential mixes positive and negative parts where a constant sign is required."""


class NonFiniteState(RobinSLError):
    """Shooting state overflowed or degenerated to (0, 0)."""


class ToleranceNotReached(RobinSLError):
    """Bisection could not shrink the bracket to the requested tolerance."""


class GridTooCoarse(RobinSLError):
    """Sampled function has too few points for the quadrature."""


class NoConvergence(RobinSLError):
    """Inverse iteration did not converge within the iteration budget."""


class BranchUndefined(RobinSLError):
    """Logarithmic phase offset undefined because sqrt(|mu|) equals a boundary coefficient."""


class PolePoint(RobinSLError):
    """Argument sits on a pole of the cotangent secular function."""


class NoCrossing(RobinSLError):
    """Half-interval eigenvalue curves show no sign change on the search bracket."""
