"""Hybrid inverse-eigenvalue sum compared with the exact value of Z_H(1).

The hybrid sum is the WKB series with its first ``n_numeric`` terms replaced
by inverse shooting eigenvalues:

    hybrid = sum_{j<n} 1/E_j + (wkb_zeta1() - sum_{j<n} 1/wkb_energy(j))

Any pair of complex eigenvalues {E, conj(E)} would add 2 Re(E)/|E|^2 to the
exact sum without appearing in the hybrid one. With Re(E) > 0 these
contributions cannot cancel, so |discrepancy| bounds their total and
|discrepancy|/2 bounds Re(E)/|E|^2 for any single member. Note that
|Re(E)/E^2| = Re(E)/|E|^2 for Re(E) > 0, so the two ways of writing the
per-member quantity give one and the same budget.
"""

import math
from dataclasses import dataclass

from .closedform import wkb_partial_sum, wkb_zeta1, zeta1_exact
from .greens import trace_quadrature
from .shooting import ShootingConfig, spectrum

__all__ = ["ZetaAudit", "round_significant", "hybrid_sum", "run_audit"]


@dataclass(frozen=True)
class ZetaAudit:
    closed_form: float
    quadrature_value: float
    wkb_sum: float
    hybrid_sum: float
    n_numeric: int
    discrepancy: float
    # conservative: bound on the summed contribution of all complex pairs
    pair_bound: float
    # max admissible Re(E)/|E|^2 (= |Re(E)/E^2|) for one member of a pair
    pair_bound_per_member: float
    energies: tuple
    digits: int | None = None


def round_significant(value, digits):
    """Round ``value`` to ``digits`` significant decimal digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    return float(f"{value:.{digits}g}")


def hybrid_sum(energies):
    """WKB inverse-eigenvalue sum with its leading terms replaced by 1/energies."""
    n = len(energies)
    head = math.fsum(1.0 / e for e in energies)
    return head + (wkb_zeta1() - wkb_partial_sum(n))


def run_audit(n_numeric, config=ShootingConfig(), digits=None, quadrature=True):
    """Compute shooting eigenvalues, the hybrid sum and the implied pair bounds.

    ``digits`` rounds each eigenvalue to that many significant digits before
    summing. ``quadrature=False`` skips the independent quadrature value
    (reported as nan).
    """
    if n_numeric < 1:
        raise ValueError("n_numeric must be >= 1")
    energies = [est.energy.real for est in spectrum(n_numeric, config)]
    if digits is not None:
        energies = [round_significant(e, digits) for e in energies]
    exact = zeta1_exact()
    hybrid = hybrid_sum(energies)
    discrepancy = hybrid - exact
    return ZetaAudit(
        closed_form=exact,
        quadrature_value=trace_quadrature() if quadrature else math.nan,
        wkb_sum=wkb_zeta1(),
        hybrid_sum=hybrid,
        n_numeric=n_numeric,
        discrepancy=discrepancy,
        pair_bound=abs(discrepancy),
        pair_bound_per_member=abs(discrepancy) / 2.0,
        energies=tuple(energies),
        digits=digits,
    )
