"""Kink layer: potential, profile, action, zero mode, fluctuation potential."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from dwtunnel import instanton
from dwtunnel.instanton import (
    DoubleWellParams,
    InstantonConfig,
    classical_action,
    classical_action_quadrature,
    curvature,
    eom_residual,
    potential,
    profile,
    profile_velocity,
    stability_potential,
    stability_residual,
    zero_mode,
)


def cfg(omega, tau_c=0.0):
    return InstantonConfig(DoubleWellParams(omega), tau_c)


class TestPotential:
    def test_minimum(self):
        assert potential(DoubleWellParams(2.0), 1.0) == 0.0

    def test_barrier_top(self):
        assert potential(DoubleWellParams(2.0), 0.0) == pytest.approx(0.5)

    def test_generic_point(self):
        # (omega^2/8)(x^2-1)^2 at omega=2, x=2: (4/8)*9
        assert potential(DoubleWellParams(2.0), 2.0) == pytest.approx(4.5)

    @settings(max_examples=50, deadline=None)
    @given(st.floats(min_value=-10, max_value=10))
    def test_reflection_symmetry(self, x):
        p = DoubleWellParams(1.7)
        assert potential(p, x) == potential(p, -x)

    def test_invalid_omega(self):
        with pytest.raises(ValueError):
            DoubleWellParams(0.0)
        with pytest.raises(ValueError):
            DoubleWellParams(-1.0)


class TestCurvature:
    @pytest.mark.parametrize("x", [1.0, -1.0])
    def test_at_minima(self, x):
        assert curvature(DoubleWellParams(3.0), x) == pytest.approx(9.0)

    def test_at_barrier(self):
        assert curvature(DoubleWellParams(2.0), 0.0) == pytest.approx(-2.0)


class TestProfile:
    def test_center(self):
        assert profile(cfg(2.0), 0.0) == 0.0

    def test_boundary_values(self):
        assert profile(cfg(1.3), 1e4) == pytest.approx(1.0, abs=1e-14)
        assert profile(cfg(1.3), -1e4) == pytest.approx(-1.0, abs=1e-14)

    def test_unit_time_value(self):
        # tanh(1) through the exponential definition, independent of np.tanh
        expected = (math.e ** 2 - 1.0) / (math.e ** 2 + 1.0)
        assert profile(cfg(2.0), 1.0) == pytest.approx(expected, abs=1e-12)

    @settings(max_examples=50, deadline=None)
    @given(st.floats(min_value=-8, max_value=8))
    def test_odd_about_center(self, delta):
        c = cfg(1.9, tau_c=0.4)
        assert profile(c, c.tau_c + delta) == pytest.approx(
            -profile(c, c.tau_c - delta), abs=1e-14)


class TestClassicalAction:
    def test_unit_omega(self):
        assert classical_action(DoubleWellParams(1.0)) == pytest.approx(2 / 3)

    def test_linear_in_omega(self):
        assert classical_action(DoubleWellParams(3.0)) == pytest.approx(2.0)

    @pytest.mark.parametrize("omega", [0.5, 1.0, 2.0, 5.0, 10.0])
    def test_quadrature_path_agrees(self, omega):
        p = DoubleWellParams(omega)
        assert classical_action_quadrature(p) == pytest.approx(
            classical_action(p), rel=1e-8)


class TestZeroMode:
    def test_unit_norm_by_quadrature(self):
        c = cfg(2.0)
        norm, _ = quad(lambda t: zero_mode(c, t) ** 2, -40, 40,
                       epsabs=1e-12, epsrel=1e-12)
        assert norm == pytest.approx(1.0, abs=1e-8)

    def test_center_value(self):
        # (1/sqrt(S_e0)) * (omega/2) at omega=2: 1/sqrt(4/3)
        assert zero_mode(cfg(2.0), 0.0) == pytest.approx(
            1.0 / math.sqrt(4.0 / 3.0), rel=1e-12)

    def test_decay(self):
        assert zero_mode(cfg(2.0), 50.0) == pytest.approx(0.0, abs=1e-30)

    def test_proportional_to_profile_velocity(self):
        c = cfg(1.4, tau_c=-0.3)
        ratio = 1.0 / math.sqrt(c.params.action)
        for tau in np.linspace(-6, 6, 25):
            assert zero_mode(c, tau) == pytest.approx(
                ratio * profile_velocity(c, tau), rel=1e-13)

    def test_solves_stability_equation(self):
        assert stability_residual(cfg(2.0), np.linspace(-8, 8, 200)) <= 1e-10


class TestStabilityPotential:
    def test_well_bottom(self):
        assert stability_potential(DoubleWellParams(2.0), 0.0) == \
            pytest.approx(-2.0)

    def test_asymptotic_curvature(self):
        assert stability_potential(DoubleWellParams(1.5), 80.0) == \
            pytest.approx(1.5 ** 2, abs=1e-12)

    def test_matches_curvature_along_profile(self):
        p = DoubleWellParams(2.3)
        c = InstantonConfig(p)
        for tau in np.linspace(-7, 7, 100):
            assert curvature(p, profile(c, tau)) == pytest.approx(
                stability_potential(p, tau), rel=1e-12, abs=1e-12)


class TestEquationOfMotion:
    def test_first_order_residual(self):
        assert eom_residual(cfg(2.0), np.linspace(-5, 5, 50)) <= 1e-12

    def test_second_order_residual(self):
        assert eom_residual(cfg(2.0), np.linspace(-5, 5, 50), order=2) <= 1e-10

    def test_wrong_profile_fails(self):
        # squeezed kink tanh(0.9 * omega tau / 2) is not a solution
        p = DoubleWellParams(2.0)
        tau = np.linspace(-5, 5, 50)
        x = np.tanh(0.9 * p.omega * tau / 2.0)
        dx = 0.9 * p.omega / 2.0 / np.cosh(0.9 * p.omega * tau / 2.0) ** 2
        residual = np.max(np.abs(dx - np.sqrt(2.0 * potential(p, x))))
        assert residual > 0.01

    def test_empty_samples_rejected(self):
        with pytest.raises(ValueError):
            eom_residual(cfg(1.0), [])
