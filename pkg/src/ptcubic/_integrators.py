"""Backward integrators for the Riccati system of the cubic oscillator.

State: s = f'/f, u = ds/dE and L = integral of s (so that f = exp(L) up to a
constant). Equations:

    s' = -s^2 - E + i x^3
    u' = -2 s u - 1
    L' = s

Both integrators run from ``x_start`` down to 0 and return, besides the final
state, a bound on the error of s(0) and u(0). A perturbation of s at x reaches
the origin multiplied by exp(2 (L(x) - L(0))), which is tiny wherever the
solution is decaying. Every local error estimate is weighted by that factor.
"""

import math

from .errors import SignChangeEvent, StepUnderflowError

_EPS = 2.0 ** -53

# Dormand-Prince 5(4)
_C2, _C3, _C4, _C5 = 1 / 5, 3 / 10, 4 / 5, 8 / 9
_A21 = 1 / 5
_A31, _A32 = 3 / 40, 9 / 40
_A41, _A42, _A43 = 44 / 45, -56 / 15, 32 / 9
_A51, _A52, _A53, _A54 = 19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729
_A61, _A62, _A63, _A64, _A65 = 9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656
_B1, _B3, _B4, _B5, _B6 = 35 / 384, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84
_E1, _E3, _E4, _E5, _E6, _E7 = (
    71 / 57600,
    -71 / 16695,
    71 / 1920,
    -17253 / 339200,
    22 / 525,
    -1 / 40,
)

_SAFETY = 0.9
_ALPHA = 0.14
_BETA = 0.08


class Run:
    """Result of one backward integration."""

    __slots__ = ("s", "u", "log_phi", "error_s", "error_u", "steps", "samples")

    def __init__(self, s, u, log_phi, error_s, error_u, steps, samples):
        self.s = s
        self.u = u
        self.log_phi = log_phi
        self.error_s = error_s
        self.error_u = error_u
        self.steps = steps
        self.samples = samples


def _rhs(x, s, u, energy):
    return -s * s - energy + 1j * x * x * x, -2.0 * s * u - 1.0


def dormand_prince(energy, x_start, s0, u0, tol, outputs=(), record=False, guard=True):
    """Adaptive DP5(4) integration with PI step control, from x_start to 0.

    ``tol`` bounds the local error per unit step, relative to 1 + |y| for each
    component. ``outputs`` lists positions (descending, within (0, x_start])
    at which (x, s, u, L) is stored exactly; ``record`` stores every
    accepted step instead.
    """
    x = float(x_start)
    s, u, big_l = complex(s0), complex(u0), 0j
    targets = sorted((float(t) for t in outputs), reverse=True)
    targets = [t for t in targets if 0.0 < t <= x]
    samples = []
    if targets and targets[0] == x:
        samples.append((x, s, u, big_l))
        targets.pop(0)
    targets.append(0.0)
    ti = 0

    ks, ku = _rhs(x, s, u, energy)
    h = -min(0.05, 0.2 / (1.0 + 2.0 * abs(s)))
    acc_s = acc_u = 0.0
    ratio_prev = 1.0
    steps = 0
    while True:
        target = targets[ti]
        if target != 0.0 and abs(x - target) <= 1e-12 * max(1.0, abs(x)):
            # output point coincides with the current position
            samples.append((target, s, u, big_l))
            ti += 1
            continue
        if x + h <= target:
            h = target - x
            landing = True
        else:
            landing = False
        if abs(h) < 1e-13 * max(1.0, abs(x)):
            raise StepUnderflowError(f"step size underflow at x={x:.6g}")

        s2 = s + h * _A21 * ks
        u2 = u + h * _A21 * ku
        k2s, k2u = _rhs(x + _C2 * h, s2, u2, energy)
        s3 = s + h * (_A31 * ks + _A32 * k2s)
        u3 = u + h * (_A31 * ku + _A32 * k2u)
        k3s, k3u = _rhs(x + _C3 * h, s3, u3, energy)
        s4 = s + h * (_A41 * ks + _A42 * k2s + _A43 * k3s)
        u4 = u + h * (_A41 * ku + _A42 * k2u + _A43 * k3u)
        k4s, k4u = _rhs(x + _C4 * h, s4, u4, energy)
        s5 = s + h * (_A51 * ks + _A52 * k2s + _A53 * k3s + _A54 * k4s)
        u5 = u + h * (_A51 * ku + _A52 * k2u + _A53 * k3u + _A54 * k4u)
        k5s, k5u = _rhs(x + _C5 * h, s5, u5, energy)
        s6 = s + h * (_A61 * ks + _A62 * k2s + _A63 * k3s + _A64 * k4s + _A65 * k5s)
        u6 = u + h * (_A61 * ku + _A62 * k2u + _A63 * k3u + _A64 * k4u + _A65 * k5u)
        k6s, k6u = _rhs(x + h, s6, u6, energy)
        s_new = s + h * (_B1 * ks + _B3 * k3s + _B4 * k4s + _B5 * k5s + _B6 * k6s)
        u_new = u + h * (_B1 * ku + _B3 * k3u + _B4 * k4u + _B5 * k5u + _B6 * k6u)
        # L' = s: integrate with the same weights applied to the stage values
        dl = h * (_B1 * s + _B3 * s3 + _B4 * s4 + _B5 * s5 + _B6 * s6)
        k7s, k7u = _rhs(x + h, s_new, u_new, energy)

        es = h * (_E1 * ks + _E3 * k3s + _E4 * k4s + _E5 * k5s + _E6 * k6s + _E7 * k7s)
        eu = h * (_E1 * ku + _E3 * k3u + _E4 * k4u + _E5 * k5u + _E6 * k6u + _E7 * k7u)
        err = max(abs(es) / (1.0 + abs(s_new)), abs(eu) / (1.0 + abs(u_new)))
        ratio = err / (tol * abs(h)) if err > 0.0 else 1e-10

        if ratio <= 1.0:
            steps += 1
            x_new = target if landing else x + h
            l_new = big_l + dl
            # rescale accumulated errors to the new reference point
            shrink = math.exp(2.0 * (big_l.real - l_new.real))
            rnd = 4.0 * _EPS * abs(s_new)
            acc_s = acc_s * shrink + abs(es) + rnd
            acc_u = acc_u * shrink + abs(eu) + 4.0 * _EPS * abs(u_new) + 2.0 * abs(u_new) * acc_s * abs(h)
            x, s, u, big_l = x_new, s_new, u_new, l_new
            ks, ku = k7s, k7u
            if guard and s.imag >= 0.0:
                raise SignChangeEvent(x, s, energy)
            if record:
                samples.append((x, s, u, big_l))
            if landing:
                if x == 0.0:
                    break
                if not record:
                    samples.append((x, s, u, big_l))
                ti += 1
            factor = _SAFETY * ratio ** -_ALPHA * ratio_prev ** _BETA
            ratio_prev = max(ratio, 1e-4)
            h *= min(5.0, max(0.2, factor))
        else:
            h *= max(0.2, _SAFETY * ratio ** -0.2)
        if steps > 10 ** 6:
            raise StepUnderflowError("step budget exhausted")
    return Run(s, u, big_l, acc_s, acc_u, steps, samples)


def taylor(energy, x_start, s0, u0, digits, guard=True):
    """Taylor-series integration in extended precision (gmpy2), from x_start to 0.

    The right-hand side is polynomial, so Taylor coefficients follow from
    Cauchy products. Order and step are chosen so that the truncated tail stays
    below 10**-digits relative to max(1, |s|).
    """
    import gmpy2
    from gmpy2 import mpc, mpfr

    bits = int(digits * 3.33) + 24
    with gmpy2.context(gmpy2.get_context(), precision=bits):
        order = int(1.15 * digits) + 2
        eps = mpfr(10) ** (-digits)
        e = mpc(energy)
        s = mpc(s0)
        u = mpc(u0)
        big_l = mpfr(0)  # only Re L is needed for error propagation
        x = mpfr(x_start)
        one_i = mpc(0, 1)
        acc_s = acc_u = 0.0
        unit = 2.0 ** -bits
        steps = 0
        while x > 0:
            x2 = x * x
            poly = (x2 * x, 3 * x2, 3 * x, mpfr(1))
            a = [s]
            b = [u]
            for k in range(order):
                conv = 0
                for m in range(k + 1):
                    conv += a[m] * a[k - m]
                cu = 0
                for m in range(k + 1):
                    cu += a[m] * b[k - m]
                num_s = -conv
                num_u = -2 * cu
                if k == 0:
                    num_s -= e
                    num_u -= 1
                if k < 4:
                    num_s += one_i * poly[k]
                a.append(num_s / (k + 1))
                b.append(num_u / (k + 1))
            scale_s = max(1.0, float(abs(s)))
            scale_u = max(1e-300, float(abs(u)))
            h = 1.0
            for coeffs, scale in ((a, scale_s), (b, scale_u)):
                for k in (order - 1, order):
                    mag = float(abs(coeffs[k]))
                    if mag > 0.0:
                        h = min(h, 0.5 * (float(eps) * scale / mag) ** (1.0 / k))
            if h < 1e-12:
                raise StepUnderflowError(f"Taylor step underflow at x={float(x):.6g}")
            h = x if h >= float(x) * (1.0 - 1e-9) else mpfr(h)
            step = -h
            s_new = a[order]
            u_new = b[order]
            l_inc = a[order] / (order + 1)
            for k in range(order - 1, -1, -1):
                s_new = s_new * step + a[k]
                u_new = u_new * step + b[k]
                l_inc = l_inc * step + a[k] / (k + 1)
            l_inc = (l_inc * step).real
            tail_s = float(abs(a[order])) * float(h) ** order
            tail_u = float(abs(b[order])) * float(h) ** order
            shrink = math.exp(2.0 * float(-l_inc))
            acc_s = acc_s * shrink + tail_s + 4 * unit * float(abs(s_new))
            acc_u = acc_u * shrink + tail_u + 4 * unit * float(abs(u_new))
            x = x - h
            s, u = s_new, u_new
            big_l += l_inc
            steps += 1
            if guard and s.imag >= 0:
                raise SignChangeEvent(float(x), complex(s), energy)
        return Run(complex(s), complex(u), complex(float(big_l)), acc_s, acc_u, steps, [])
