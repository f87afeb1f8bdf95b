"""Exact and leading-order WKB quantities for H = -d^2/dx^2 + i x^3.

The WKB estimate of the j-th eigenvalue is ``(C (j + 1/2))**(6/5)`` with
``C = 5 sqrt(pi/3) Gamma(5/6) / Gamma(1/3)``. Its inverse-eigenvalue sum is
``C**(-6/5) (2**(6/5) - 1) zeta(6/5)``. The exponent on ``C`` is negative:
the sum runs over inverse energies.
"""

import math
from dataclasses import dataclass

from .specfun import gamma, riemann_zeta

__all__ = [
    "WkbConfig",
    "wkb_constant",
    "zeta1_exact",
    "wronskian0",
    "wkb_energy",
    "wkb_zeta1",
    "wkb_partial_sum",
]


@dataclass(frozen=True)
class WkbConfig:
    n_max: int = 1

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")


def wkb_constant():
    """C = 5 sqrt(pi/3) Gamma(5/6) / Gamma(1/3)."""
    return 5.0 * math.sqrt(math.pi / 3.0) * gamma(5.0 / 6.0) / gamma(1.0 / 3.0)


def zeta1_exact():
    """Sum of inverse eigenvalues, Gamma(1/5)^2 (3 - 2 cos(pi/5)) / (5^(6/5) Gamma(3/5))."""
    g = gamma(0.2)
    return g * g * (3.0 - 2.0 * math.cos(math.pi / 5.0)) / (5.0 ** 1.2 * gamma(0.6))


def wronskian0():
    """W[f+, f-] at z = 0, equal to -5 pi / (4 sin(pi/10))."""
    return -5.0 * math.pi / (4.0 * math.sin(math.pi / 10.0))


def wkb_energy(j):
    if j < 0:
        raise ValueError(f"eigenvalue index must be >= 0, got {j}")
    return (wkb_constant() * (j + 0.5)) ** 1.2


def wkb_zeta1():
    return wkb_constant() ** -1.2 * (2.0 ** 1.2 - 1.0) * riemann_zeta(1.2)


def wkb_partial_sum(n):
    """Sum of 1 / wkb_energy(j) for j < n."""
    c = wkb_constant() ** -1.2
    return math.fsum(c * (j + 0.5) ** -1.2 for j in range(n))
