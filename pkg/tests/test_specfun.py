import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bessel_i_series, bessel_k_series, gamma_series, zeta_brute
from ptcubic.errors import DomainError
from ptcubic.specfun import BESSEL_CROSSOVER, K_SERIES_RADIUS, bessel_i, bessel_k, gamma, rgamma, riemann_zeta


def rel(a, b):
    return abs(a - b) / abs(b)


def random_z(rng, r_min, r_max):
    r = rng.uniform(r_min, r_max)
    theta = rng.uniform(-math.pi / 4, math.pi / 4)
    return cmath.rect(r, theta)


# gamma

def test_gamma_small_values():
    assert gamma(1.0) == pytest.approx(1.0, rel=1e-15)
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert gamma(0.2) == pytest.approx(4.5908437, abs=1e-7)


@pytest.mark.parametrize("x", [0.1, 0.2, 0.6, 0.8, 1.2, 2.5, 5.0 / 6.0, 1.0 / 3.0, 7.3, 10.0])
def test_gamma_against_extended_precision(x):
    assert rel(gamma(x), float(gamma_series(x))) <= 1e-13


def test_gamma_recurrence():
    rng = random.Random(11)
    for _ in range(100):
        x = rng.uniform(0.1, 5.0)
        assert abs(gamma(x + 1) - x * gamma(x)) <= 1e-12 * gamma(x + 1)


@pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
def test_gamma_domain(x):
    with pytest.raises(DomainError):
        gamma(x)


def test_rgamma_poles_and_negative_arguments():
    assert rgamma(-2.0) == 0.0
    assert rgamma(0.0) == 0.0
    # Gamma(-1/5) = -5 Gamma(4/5)
    assert rgamma(-0.2) == pytest.approx(-1.0 / (5.0 * gamma(0.8)), rel=1e-14)


# zeta

def test_zeta_closed_forms():
    assert riemann_zeta(2.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-13)
    assert riemann_zeta(4.0) == pytest.approx(math.pi ** 4 / 90, rel=1e-13)


def test_zeta_near_one_against_brute_force():
    value = riemann_zeta(1.2)
    assert value == pytest.approx(5.59158, abs=1e-5)
    assert rel(value, zeta_brute(1.2)) <= 1e-12


def test_zeta_truncation_is_configurable():
    coarse = riemann_zeta(1.2, terms=5, corrections=2)
    assert abs(coarse - riemann_zeta(1.2)) > 1e-12
    assert abs(coarse - riemann_zeta(1.2)) < 1e-4


def test_zeta_domain():
    with pytest.raises(DomainError):
        riemann_zeta(1.0)


# Bessel I

def test_bessel_i_examples():
    assert bessel_i(0.2, 0) == 0
    expected = math.sqrt(2 / math.pi) * math.sinh(1.0)
    assert bessel_i(0.5, 1.0) == pytest.approx(expected, rel=1e-14)
    assert rel(bessel_i(-0.2, 1 + 0j), bessel_i_series(-0.2, 1)) <= 1e-14


def test_bessel_i_pole_at_origin():
    with pytest.raises(DomainError):
        bessel_i(-0.2, 0)


@pytest.mark.parametrize("nu", [0.2, -0.2, 0.5, 1.0 / 3.0])
def test_bessel_i_against_series_oracle(nu):
    rng = random.Random(3)
    for _ in range(15):
        z = random_z(rng, 0.1, 50.0)
        assert rel(bessel_i(nu, z), bessel_i_series(nu, z)) <= 1e-11


def test_bessel_i_scaled():
    z = 40 * cmath.exp(0.3j)
    assert bessel_i(0.2, z, scaled=True) == pytest.approx(
        bessel_i(0.2, z) * math.exp(-z.real), rel=1e-14
    )


def test_bessel_i_overflow_signal():
    with pytest.raises(OverflowError):
        bessel_i(0.2, 800.0)
    # the scaled form stays finite
    assert math.isfinite(abs(bessel_i(0.2, 800.0, scaled=True)))


def test_bessel_i_crossover_continuity():
    for theta in (-0.7, -0.2, 0.0, 0.4, 0.78):
        below = bessel_i(0.2, cmath.rect(BESSEL_CROSSOVER * (1 - 1e-12), theta))
        above = bessel_i(0.2, cmath.rect(BESSEL_CROSSOVER, theta))
        assert rel(below, above) <= 1e-10


# Bessel K

def test_bessel_k_examples():
    expected = math.sqrt(math.pi / 2) * math.exp(-1.0)
    assert bessel_k(0.5, 1.0) == pytest.approx(expected, rel=1e-13)
    reflection = math.pi * (bessel_i(-0.2, 1.0) - bessel_i(0.2, 1.0)) / (2 * math.sin(math.pi / 5))
    assert bessel_k(0.2, 1.0) == pytest.approx(reflection, rel=1e-15)


def test_bessel_k_large_argument_leading_term():
    value = bessel_k(0.2, 10.0)
    leading = math.sqrt(math.pi / 20) * math.exp(-10.0)
    # first correction (4 nu^2 - 1) / (8 z)
    assert value == pytest.approx(leading * (1 + (0.16 - 1) / 80), rel=1e-3)
    assert rel(value, bessel_k_series(0.2, 10.0)) <= 1e-12


@pytest.mark.parametrize("nu", [0.2, 0.5, 1.0 / 3.0, 1.2])
def test_bessel_k_against_series_oracle(nu):
    rng = random.Random(5)
    for _ in range(12):
        z = random_z(rng, 0.1, 30.0)
        assert rel(bessel_k(nu, z), bessel_k_series(nu, z)) <= 1e-10


def test_bessel_k_branches_agree_in_crossover_annuli():
    # reflection formula vs. continued fraction just beyond K_SERIES_RADIUS
    for r in (K_SERIES_RADIUS * (1 + 1e-12), 2.5, 3.0):
        for theta in (-0.7, 0.0, 0.5):
            z = cmath.rect(r, theta)
            reflection = math.pi * (bessel_i(-0.2, z) - bessel_i(0.2, z)) / (2 * math.sin(math.pi / 5))
            assert rel(bessel_k(0.2, z), reflection) <= 1e-8
    # continued fraction vs. asymptotic expansion across BESSEL_CROSSOVER
    for theta in (-0.7, 0.0, 0.5):
        below = bessel_k(0.2, cmath.rect(BESSEL_CROSSOVER * (1 - 1e-12), theta))
        above = bessel_k(0.2, cmath.rect(BESSEL_CROSSOVER, theta))
        assert rel(below, above) <= 1e-10


def test_bessel_k_domain():
    with pytest.raises(DomainError):
        bessel_k(1.0, 1.0)
    with pytest.raises(DomainError):
        bessel_k(0.2, 0)


@pytest.mark.parametrize("nu", [0.2, 1.0 / 3.0, 0.5])
def test_bessel_wronskian_identity(nu):
    rng = random.Random(int(nu * 1000))
    for _ in range(50):
        z = random_z(rng, 0.1, 30.0)
        lhs = bessel_i(nu, z) * bessel_k(nu + 1, z) + bessel_i(nu + 1, z) * bessel_k(nu, z)
        assert abs(lhs - 1 / z) <= 1e-9 * abs(1 / z)


@settings(max_examples=60, deadline=None)
@given(
    r=st.floats(min_value=0.1, max_value=50.0),
    theta=st.floats(min_value=-math.pi / 4, max_value=math.pi / 4),
)
def test_returned_values_are_finite(r, theta):
    z = cmath.rect(r, theta)
    for value in (bessel_i(0.2, z), bessel_i(-0.2, z), bessel_k(0.2, z)):
        assert math.isfinite(value.real) and math.isfinite(value.imag)
