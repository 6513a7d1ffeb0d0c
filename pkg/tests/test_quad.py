"""Quadrature layer: closed forms, singular endpoints, tail models,
error-estimate honesty."""

import math

import numpy as np
import pytest

from koshliakov.errors import ConvergenceError, DecayError, DomainError
from koshliakov.quadrature import (ExpDecay, ExplicitCutoff, PowerDecay,
                                   QuadratureSpec, integrate_finite,
                                   integrate_semi_infinite, tanh_sinh)
from koshliakov.specfun import bessel_k

from conftest import rel_err


def test_finite_smooth():
    r = integrate_finite(lambda x: 1.0 / (1.0 + x * x), 0.0, 1.0)
    assert rel_err(r.value, math.pi / 4.0) < 1e-13
    assert abs(complex(r.value) - math.pi / 4.0) <= max(r.total_error, 1e-15)


def test_finite_oscillatory():
    r = integrate_finite(lambda x: np.cos(7.0 * x), 0.0, 10.0)
    assert rel_err(r.value, math.sin(70.0) / 7.0) < 1e-12


def test_tanh_sinh_sqrt_singularity():
    r = tanh_sinh(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0)
    assert rel_err(r.value, 2.0) < 1e-13


def test_tanh_sinh_strong_power_singularity():
    # x^{-0.85}: integrable but close to the supported x^{-0.9} edge.
    r = tanh_sinh(lambda x: x ** (-0.85), 0.0, 1.0)
    assert rel_err(r.value, 1.0 / 0.15) < 1e-12


def test_tanh_sinh_log_endpoint():
    r = tanh_sinh(lambda x: np.log(x), 0.0, 1.0)
    assert rel_err(r.value, -1.0) < 1e-13


def test_tanh_sinh_divergent_raises():
    with pytest.raises(ConvergenceError):
        tanh_sinh(lambda x: 1.0 / x, 0.0, 1.0)


def test_finite_singular_routing():
    # integrate_finite hands singular endpoints to tanh_sinh.
    r = integrate_finite(lambda x: 1.0 / np.sqrt(x), 0.0, 4.0,
                         singular_left=True)
    assert rel_err(r.value, 4.0) < 1e-12


def test_semi_infinite_exponential():
    r = integrate_semi_infinite(lambda x: np.exp(-x), 0.0,
                                decay=ExpDecay(coeff=1.0, rate=1.0))
    # The tail is cut where the certificate meets the budget, so the
    # defect must sit inside the reported total_error, not at 1e-16.
    assert abs(r.value - 1.0) <= r.total_error + 1e-14
    assert rel_err(r.value, 1.0) < 1e-9
    assert 0.0 < r.truncation_bound < 1e-10


def test_semi_infinite_gaussian_moment():
    r = integrate_semi_infinite(lambda x: x * np.exp(-x * x), 0.0,
                                decay=ExpDecay(coeff=5.0, rate=1.5))
    assert rel_err(r.value, 0.5) < 1e-12


def test_semi_infinite_power_tail():
    r = integrate_semi_infinite(lambda x: 1.0 / (1.0 + x) ** 3, 0.0,
                                decay=PowerDecay(coeff=2.0, power=3.0))
    assert rel_err(r.value, 0.5) < 1e-10


def test_semi_infinite_bessel_k_moment():
    # int_0^inf x K_0(x) dx = 1, singular log endpoint plus exp tail.
    r = integrate_semi_infinite(
        lambda x: x * np.real(bessel_k(0.0, x)), 0.0,
        decay=ExpDecay(coeff=10.0, rate=0.9), singular_left=True)
    assert rel_err(r.value, 1.0) < 1e-12


def test_explicit_cutoff_truncation_recorded():
    # Cutoff far enough out that the discarded tail fits the default
    # budget; the empirical bound must still be recorded as nonzero.
    r = integrate_semi_infinite(lambda x: np.exp(-x), 0.0,
                                decay=ExplicitCutoff(cutoff=40.0,
                                                     rate_hint=1.0))
    assert rel_err(r.value, 1.0) < 1e-10
    assert 0.0 < r.truncation_bound < 1e-12


def test_power_decay_needs_integrability():
    with pytest.raises(DecayError):
        PowerDecay(coeff=1.0, power=1.0)


def test_spec_budget_positive():
    spec = QuadratureSpec(abs_tol=1e-9, rel_tol=1e-9)
    assert spec.budget(1.0) >= 1e-9
    with pytest.raises(DomainError):
        QuadratureSpec(abs_tol=0.0, rel_tol=1e-9)


def test_error_estimates_are_bounds():
    # On analytically known integrals the reported error dominates the
    # true error (with a tiny float floor).
    cases = [
        (lambda x: np.exp(x), 0.0, 1.0, math.e - 1.0),
        (lambda x: np.sin(x), 0.0, math.pi, 2.0),
        (lambda x: x ** 3 - 2.0 * x, -1.0, 2.0, 0.75),
    ]
    for f, a, b, truth in cases:
        r = integrate_finite(f, a, b)
        assert abs(complex(r.value) - truth) <= r.total_error + 1e-14
