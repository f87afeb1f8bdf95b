"""Exception types raised across the package."""


class DomainError(ValueError):
    """Argument outside the supported domain of a special function."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature did not reach the requested tolerance."""


class ShootingError(RuntimeError):
    """Base class for failures of the Riccati shooting solver."""


class SignChangeEvent(ShootingError):
    """Im s(x; E) became non-negative during backward integration.

    Such an energy cannot be an eigenvalue: the logarithmic derivative of an
    eigenfunction keeps a strictly negative imaginary part on the real axis.
    """

    def __init__(self, x, s, energy):
        super().__init__(f"Im s changed sign at x={x:.6g} for E={energy!r}")
        self.x = x
        self.s = s
        self.energy = energy


class StepUnderflowError(ShootingError):
    """The adaptive step size collapsed below the representable resolution."""


class ConvergenceError(ShootingError):
    """Newton iteration exhausted its budget without meeting the tolerance."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class BracketError(ShootingError):
    """The safeguard interval holds no sign change of Re s(0; E)."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index
