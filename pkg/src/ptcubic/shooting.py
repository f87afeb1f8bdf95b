"""Eigenvalues of H = -d^2/dx^2 + i x^3 by Riccati shooting on the real axis.

The logarithmic derivative s = f'/f of the solution decaying at +inf obeys

    s' + s^2 + E - i x^3 = 0,

and is started at x = X from its large-x expansion and integrated back to
the origin. For real E, E is an eigenvalue exactly when Re s(0; E) = 0 (the
eigenfunction is PT-symmetric, so s(-x) = -conj(s(x))). Newton's method on
that condition uses u = ds/dE, which is co-integrated.

Conditioning. On the real axis the decaying solution is dominated by a
single WKB wave, and the eigenvalue information sits in an exponentially
small admixture. |Re u(0; E_j)| falls roughly six-fold per level, to about
1e-14 near j = 19. ``find_eigenvalue`` therefore falls back to a
Taylor-series integrator in extended precision whenever the propagated
double-precision error cannot pin the root.
"""

import cmath
import math
from dataclasses import dataclass, field, replace
from enum import Enum

from . import _integrators
from .closedform import wkb_constant, wkb_energy
from .errors import BracketError, ConvergenceError, ShootingError

__all__ = [
    "ShootingConfig",
    "ShootingState",
    "EigenvalueEstimate",
    "EigenfunctionSample",
    "Method",
    "riccati_rhs",
    "s_asymptotic",
    "integrate_back",
    "trajectory",
    "find_eigenvalue",
    "refine_complex",
    "eigenfunction",
    "spectrum",
    "wkb_index",
]

_ALPHA = (1 + 1j) / math.sqrt(2.0)
_BETA = (1 - 1j) / (2.0 * math.sqrt(2.0))
# damping exponent of the backward flow per unit of x**2.5
_DAMPING = 2.0 * math.sqrt(2.0) / 5.0
_DOUBLE_FLOOR = 1e-13
_EXTENDED_DIGITS = (32, 48, 64)


class Method(str, Enum):
    WKB = "wkb"
    SHOOTING = "shooting"
    ORACLE = "oracle"


@dataclass(frozen=True)
class ShootingConfig:
    """Solver settings.

    ``step_tolerance`` bounds the local error per unit step of the double
    precision integrator. ``precision_digits`` selects the extended-precision
    Taylor integrator when set (``None`` means double precision).
    """

    x_cutoff: float = 15.0
    step_tolerance: float = 1e-10
    newton_tolerance: float = 1e-10
    max_newton_iterations: int = 50
    precision_digits: int | None = None

    def __post_init__(self):
        if not self.x_cutoff >= 5.0:
            raise ValueError("x_cutoff must be >= 5 (asymptotic start condition)")
        if not self.step_tolerance > 0.0 or not self.newton_tolerance > 0.0:
            raise ValueError("tolerances must be positive")
        if self.max_newton_iterations < 1:
            raise ValueError("max_newton_iterations must be >= 1")
        if self.precision_digits is not None and self.precision_digits < 16:
            raise ValueError("precision_digits must be >= 16")
        if self.boundary_error(0.0) > self.step_tolerance:
            raise ValueError(f"x_cutoff={self.x_cutoff} too small for the tolerance")

    def boundary_error(self, energy):
        """Error in s(0) caused by truncating the start condition at x_cutoff.

        The omitted terms of the expansion are of size (1 + |E|)^2 X^(-7/2).
        The backward flow damps them by exp(-(2 sqrt 2 / 5)(X^(5/2) - x_t^(5/2)))
        on the way to the origin, with x_t = |E|^(1/3) the turning point.
        """
        x = self.x_cutoff
        mag = abs(energy)
        turning = min(mag ** (1.0 / 3.0), x)
        exponent = -_DAMPING * (x ** 2.5 - turning ** 2.5)
        return (1.0 + mag) ** 2 * x ** -3.5 * math.exp(max(exponent, -700.0))


@dataclass(frozen=True)
class ShootingState:
    x: float
    s: complex
    u: complex


@dataclass(frozen=True)
class EigenvalueEstimate:
    index: int
    energy: complex
    residual: float
    method: Method
    config: ShootingConfig | None = None
    uncertainty: float = math.nan
    wkb_seed: float = math.nan


@dataclass(frozen=True)
class EigenfunctionSample:
    x: float
    phi: complex
    current: float
    s: complex = field(default=0j, repr=False)


def riccati_rhs(x, s, energy):
    """Right-hand side of the Riccati equation: -s^2 - E + i x^3."""
    return -s * s - energy + 1j * x ** 3


def s_asymptotic(x, energy):
    """Large-x expansion of the decaying logarithmic derivative and its E-derivative.

    s = -((1+i)/sqrt 2) x^(3/2) - 3/(4x) + ((1-i)/(2 sqrt 2)) E x^(-3/2)
    """
    x = float(x)
    if x < 5.0:
        raise ValueError("asymptotic start condition requires x >= 5")
    u = _BETA * x ** -1.5
    s = -_ALPHA * x ** 1.5 - 0.75 / x + u * energy
    return s, u


def _start_point(energy, config, digits=None):
    x = config.x_cutoff
    if config.boundary_error(energy) > config.step_tolerance:
        raise ValueError(
            f"x_cutoff={x} too small for E={energy!r} at step_tolerance={config.step_tolerance}"
        )
    if digits is None:
        return x
    # extended precision: start where the backward damping already exceeds the
    # working precision; beyond that point the start condition is irrelevant
    need = digits * math.log(10.0) + 40.0
    turning = abs(energy) ** (1.0 / 3.0)
    start = (turning ** 2.5 + need / _DAMPING) ** 0.4
    return min(x, max(start, 5.0))


def _run(energy, config, outputs=(), record=False, guard=True):
    digits = config.precision_digits
    x0 = _start_point(energy, config, digits)
    s0, u0 = s_asymptotic(x0, energy)
    if digits is None:
        return _integrators.dormand_prince(
            energy, x0, s0, u0, config.step_tolerance, outputs=outputs, record=record, guard=guard
        )
    if outputs or record:
        raise ValueError("sampled output is only available in double precision")
    return _integrators.taylor(energy, x0, s0, u0, digits, guard=guard)


def integrate_back(energy, config=ShootingConfig(), guard=True):
    """Integrate the Riccati system from x_cutoff back to 0.

    Returns the state at x = 0. Raises ``SignChangeEvent`` when Im s becomes
    non-negative on the way (unless ``guard`` is off).
    """
    run = _run(complex(energy), config, guard=guard)
    return ShootingState(0.0, run.s, run.u)


def trajectory(energy, config=ShootingConfig(), guard=True):
    """All accepted integration steps from x_cutoff down to 0, as ShootingStates."""
    run = _run(complex(energy), config, record=True, guard=guard)
    x0 = config.x_cutoff
    s0, u0 = s_asymptotic(x0, energy)
    return [ShootingState(x0, s0, u0)] + [ShootingState(x, s, u) for x, s, u, _ in run.samples]


def wkb_index(energy):
    """Index j whose WKB energy lies closest to ``energy``."""
    return max(0, round(abs(energy) ** (5.0 / 6.0) / wkb_constant() - 0.5))


def _bracket(j):
    lo = 0.5 * wkb_energy(0) if j == 0 else 0.5 * (wkb_energy(j - 1) + wkb_energy(j))
    hi = 0.5 * (wkb_energy(j) + wkb_energy(j + 1))
    return lo, hi


def _levels(config):
    yield replace(config, precision_digits=None)
    for digits in _EXTENDED_DIGITS:
        yield replace(config, precision_digits=digits)


def _safeguarded_newton(evaluate, lo, hi, f_lo, start, tol_energy, config):
    energy = min(max(start, lo), hi)
    last_step = None
    for _ in range(config.max_newton_iterations):
        run = evaluate(energy)
        f = run.s.real
        df = run.u.real
        noise = run.error_s
        if abs(f) <= config.newton_tolerance and (
            (last_step is not None and abs(last_step) <= tol_energy) or abs(f) <= noise
        ):
            return energy, run
        if (f > 0) == (f_lo > 0):
            lo, f_lo = energy, f
        else:
            hi = energy
        if hi - lo <= tol_energy:
            return energy, run
        candidate = energy - f / df if df != 0.0 else math.nan
        if not lo < candidate < hi:
            candidate = 0.5 * (lo + hi)
        last_step = candidate - energy
        energy = candidate
    raise ConvergenceError(
        f"Newton iteration did not converge within {config.max_newton_iterations} steps"
    )


def find_eigenvalue(seed, config=ShootingConfig(), index=None):
    """Real eigenvalue near ``seed`` from Newton's method on Re s(0; E) = 0.

    The iteration is safeguarded by bisection over the interval between the
    neighbouring WKB midpoints. Integration precision is raised until the
    propagated integration error pins the root to within
    newton_tolerance * max(1, E).
    """
    seed = float(seed)
    if not seed > 0.0:
        raise ValueError("seed must be positive")
    j = wkb_index(seed) if index is None else index
    lo, hi = _bracket(j)
    start = min(max(seed, lo), hi)
    noisy = False
    for level in _levels(config):
        def evaluate(energy, level=level):
            return _run(energy, level)

        run_lo, run_hi = evaluate(lo), evaluate(hi)
        f_lo, f_hi = run_lo.s.real, run_hi.s.real
        if abs(f_lo) <= run_lo.error_s or abs(f_hi) <= run_hi.error_s:
            noisy = True
            continue
        if (f_lo > 0) == (f_hi > 0):
            raise BracketError(f"no sign change of Re s(0;E) on [{lo:.6g}, {hi:.6g}]", index=j)
        target = config.newton_tolerance * max(1.0, start)
        try:
            energy, run = _safeguarded_newton(evaluate, lo, hi, f_lo, start, 0.1 * target, level)
        except ConvergenceError as exc:
            exc.index = j
            raise
        slope = abs(run.u.real)
        uncertainty = run.error_s / slope if slope > run.error_u else math.inf
        if uncertainty <= target and abs(run.s.real) <= config.newton_tolerance:
            return EigenvalueEstimate(
                index=j,
                energy=complex(energy, 0.0),
                residual=abs(run.s.real),
                method=Method.SHOOTING,
                config=level,
                uncertainty=uncertainty,
                wkb_seed=wkb_energy(j),
            )
        start = energy
    reason = "integration noise" if noisy else "tolerance"
    raise ConvergenceError(f"eigenvalue {j} not resolved at any precision ({reason})", index=j)


def refine_complex(seed, config=ShootingConfig(), index=None):
    """Newton's method for the eigenvalue condition in the complex E plane.

    For complex E, f+ and its PT image f-(x) = conj(f+(-x; conj E)) match at
    the origin when F(E) = s(0; E) + conj(s(0; conj E)) vanishes. F is
    analytic and reduces to 2 Re s(0; E) on the real axis.
    """
    energy = complex(seed)
    level = replace(config, step_tolerance=min(config.step_tolerance, _DOUBLE_FLOOR))
    j = wkb_index(energy.real) if index is None else index
    for _ in range(config.max_newton_iterations):
        a = _run(energy, level, guard=False)
        b = _run(energy.conjugate(), level, guard=False)
        f = a.s + b.s.conjugate()
        df = a.u + b.u.conjugate()
        step = f / df
        energy -= step
        if abs(step) <= 0.1 * config.newton_tolerance * max(1.0, abs(energy)):
            return EigenvalueEstimate(
                index=j,
                energy=energy,
                residual=abs(f),
                method=Method.SHOOTING,
                config=level,
                uncertainty=(a.error_s + b.error_s) / abs(df),
                wkb_seed=wkb_energy(j),
            )
    raise ConvergenceError("complex Newton iteration did not converge", index=j)


def eigenfunction(energy, grid, config=ShootingConfig()):
    """Eigenfunction phi with phi(0) = 1 and current j = Im(s) |phi|^2 on ``grid``.

    Values for x < 0 come from the PT relation s(-x) = -conj(s(x)), i.e.
    phi(-x) = conj(phi(x)), which holds for real eigenvalues only.
    """
    energy = complex(energy)
    if abs(energy.imag) > 1e-12 * max(1.0, abs(energy)):
        raise ValueError("eigenfunction reconstruction needs a real eigenvalue")
    energy = energy.real
    xs = [float(x) for x in grid]
    if any(b < a for a, b in zip(xs, xs[1:])):
        raise ValueError("grid must be sorted")
    if xs and max(abs(xs[0]), abs(xs[-1])) > config.x_cutoff:
        raise ValueError("grid must lie within [-x_cutoff, x_cutoff]")
    level = replace(config, precision_digits=None)
    points = sorted({abs(x) for x in xs if x != 0.0}, reverse=True)
    run = _run(energy, level, outputs=points)
    table = {x: (s, big_l) for x, s, _, big_l in run.samples}
    table[0.0] = (run.s, run.log_phi)
    l0 = run.log_phi
    out = []
    for x in xs:
        s, big_l = table[abs(x)]
        phi = _exp(big_l - l0)
        if x < 0.0:
            s = -s.conjugate()
            phi = phi.conjugate()
        out.append(EigenfunctionSample(x, phi, s.imag * abs(phi) ** 2, s))
    return out


def _exp(z):
    return cmath.exp(z) if z.real > -745.0 else 0j


def spectrum(n, config=ShootingConfig()):
    """The n lowest eigenvalues, each seeded from its WKB estimate."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for j in range(n):
        try:
            out.append(find_eigenvalue(wkb_energy(j), config, index=j))
        except ShootingError as exc:
            exc.index = j
            raise
    return out
