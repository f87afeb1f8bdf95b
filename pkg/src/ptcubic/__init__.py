"""Spectral zeta value, resolvent kernel and eigenvalues of H = -d^2/dx^2 + i x^3."""

__version__ = "0.1.0"

from . import audit, closedform, greens, shooting, specfun  # noqa: E402
from .closedform import wkb_energy, wkb_zeta1, zeta1_exact  # noqa: E402
from .shooting import ShootingConfig, find_eigenvalue, spectrum  # noqa: E402

__all__ = [
    "__version__",
    "audit",
    "closedform",
    "greens",
    "shooting",
    "specfun",
    "wkb_energy",
    "wkb_zeta1",
    "zeta1_exact",
    "ShootingConfig",
    "find_eigenvalue",
    "spectrum",
]
