"""Ladder algebra: partner potentials, exact spectra, spectral density."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from dwtunnel import susyqm
from dwtunnel.susyqm import (
    SpectralDensity,
    SusyLevel,
    SusyState,
    apply_hamiltonian,
    apply_ladder,
    bound_energy,
    bound_state,
    box_overlap,
    eigen_residual,
    ground_state,
    inner_product,
    partner_potentials,
    plane_wave,
    scattering_state,
    shape_invariance_residual,
    spectral_density,
)

Z_SAMPLES = np.linspace(-5.0, 5.0, 101)


class TestPartnerPotentials:
    def test_level_one_origin(self):
        v_minus, v_plus = partner_potentials(SusyLevel(1), 0.0)
        assert v_minus == pytest.approx(-1.0)
        assert v_plus == pytest.approx(1.0)

    def test_asymptotics(self):
        v_minus, v_plus = partner_potentials(SusyLevel(2), 40.0)
        assert v_minus == pytest.approx(4.0, abs=1e-12)
        assert v_plus == pytest.approx(4.0, abs=1e-12)

    def test_partner_is_shifted_lower_level(self):
        # V+(z, 2) - V-(z, 1) is the constant 2l - 1 = 3
        _, v_plus = partner_potentials(SusyLevel(2), Z_SAMPLES)
        v_minus_lower, _ = partner_potentials(SusyLevel(1), Z_SAMPLES)
        assert np.allclose(v_plus - v_minus_lower, 3.0, atol=1e-12)

    def test_matches_hamiltonian_well(self):
        lv = SusyLevel(3)
        v_minus, _ = partner_potentials(lv, Z_SAMPLES)
        assert np.allclose(v_minus, lv.potential(Z_SAMPLES), atol=1e-12)


class TestShapeInvariance:
    @pytest.mark.parametrize("ell,constant", [(2, 3.0), (3, 5.0)])
    def test_residual_and_constant(self, ell, constant):
        assert shape_invariance_residual(SusyLevel(ell), Z_SAMPLES) <= 1e-12
        _, v_plus = partner_potentials(SusyLevel(ell), Z_SAMPLES)
        lower, _ = partner_potentials(SusyLevel(ell - 1), Z_SAMPLES)
        assert np.mean(v_plus - lower) == pytest.approx(constant, abs=1e-12)

    def test_level_one_against_free_particle(self):
        assert shape_invariance_residual(SusyLevel(1), Z_SAMPLES) <= 1e-12
        _, v_plus = partner_potentials(SusyLevel(1), Z_SAMPLES)
        assert np.allclose(v_plus, 1.0, atol=1e-12)

    def test_invalid_level(self):
        with pytest.raises(ValueError):
            SusyLevel(0)


class TestBoundSpectrum:
    def test_zero_mode_energy(self):
        assert bound_energy(SusyLevel(2), 0) == 0.0

    def test_first_excited(self):
        assert bound_energy(SusyLevel(2), 1) == 3.0

    def test_level_three(self):
        assert bound_energy(SusyLevel(3), 2) == 8.0

    @pytest.mark.parametrize("m", [2, 5, -1])
    def test_out_of_range(self, m):
        with pytest.raises(ValueError):
            bound_energy(SusyLevel(2), m)


class TestBoundStates:
    def test_ground_level_one_at_origin(self):
        assert bound_state(SusyLevel(1), 0)(0.0) == pytest.approx(
            1.0 / math.sqrt(2.0), rel=1e-12)

    def test_ground_level_two_at_origin(self):
        assert bound_state(SusyLevel(2), 0)(0.0) == pytest.approx(
            math.sqrt(3.0) / 2.0, rel=1e-12)

    def test_norm_by_quadrature(self):
        state = bound_state(SusyLevel(3), 1)
        norm, _ = quad(lambda z: state(z) ** 2, -40.0, 40.0,
                       epsabs=1e-12, epsrel=1e-12)
        assert norm == pytest.approx(1.0, abs=1e-8)

    def test_orthonormality_up_to_level_four(self):
        for ell in range(1, 5):
            states = [bound_state(SusyLevel(ell), m) for m in range(ell)]
            for i, left in enumerate(states):
                for j, right in enumerate(states):
                    overlap = inner_product(left, right).real
                    assert overlap == pytest.approx(float(i == j), abs=1e-8)

    def test_eigen_residuals(self):
        for ell in range(1, 5):
            for m in range(ell):
                state = bound_state(SusyLevel(ell), m)
                assert eigen_residual(SusyLevel(ell), state, Z_SAMPLES) <= 1e-10
                assert state.energy == bound_energy(SusyLevel(ell), m)


class TestLadderOperators:
    def test_raising_on_plane_wave(self):
        k = 0.8
        raised = apply_ladder(SusyLevel(1), plane_wave(k))
        c = 1.0 / math.sqrt(2.0 * math.pi)
        assert raised.terms[(0, 0)] == pytest.approx(-1j * k * c)
        assert raised.terms[(1, 0)] == pytest.approx(c)

    def test_raising_on_sech(self):
        # A_1^+ sech z = 2 tanh z sech z
        state = SusyState.make({(0, 1): 1.0})
        raised = apply_ladder(SusyLevel(1), state)
        assert set(raised.terms) == {(1, 1)}
        assert raised.terms[(1, 1)] == pytest.approx(2.0)

    def test_annihilates_ground_state(self):
        for ell in (1, 2, 3):
            lowered = apply_ladder(SusyLevel(ell), ground_state(SusyLevel(ell)),
                                   dagger=False)
            assert lowered.is_zero()

    def test_factorized_hamiltonian(self):
        # O_l = A_l^+ A_l on a generic state in the algebra
        lv = SusyLevel(2)
        state = SusyState.make({(0, 1): 0.7, (1, 2): -0.4}, None, 0.0)
        direct = apply_hamiltonian(lv, state)
        chained = apply_ladder(lv, apply_ladder(lv, state, dagger=False))
        diff = direct.plus(chained.scaled(-1.0))
        assert diff.max_coefficient() <= 1e-14


class TestScatteringStates:
    def test_level_two_origin_value(self):
        k = 1.0
        value = scattering_state(SusyLevel(2), k)(0.0)
        expected = (-k * k + 2.0 - 3.0) / (
            math.sqrt(2.0 * math.pi) * math.sqrt(k * k + 4.0)
            * math.sqrt(k * k + 1.0))
        assert value.real == pytest.approx(expected, rel=1e-12)
        assert value.imag == pytest.approx(0.0, abs=1e-14)

    @pytest.mark.parametrize("k", [0.5, 1.0, 3.0])
    def test_level_two_closed_form_coefficients(self, k):
        state = scattering_state(SusyLevel(2), k)
        norm = math.sqrt(2.0 * math.pi) * math.sqrt(k * k + 4.0) \
            * math.sqrt(k * k + 1.0)
        expected = {(0, 0): (-k * k + 2.0) / norm,
                    (0, 2): -3.0 / norm,
                    (1, 0): -3.0j * k / norm}
        assert set(state.terms) == set(expected)
        for key, value in expected.items():
            assert state.terms[key] == pytest.approx(value, abs=1e-14)

    def test_energy_dispersion(self):
        state = scattering_state(SusyLevel(3), 0.7)
        assert state.energy == pytest.approx(0.7 ** 2 + 9.0)

    def test_level_one_eigen_residual(self):
        state = scattering_state(SusyLevel(1), 0.5)
        assert eigen_residual(SusyLevel(1), state, Z_SAMPLES) <= 1e-10

    @pytest.mark.parametrize("ell", [1, 2, 3, 4])
    @pytest.mark.parametrize("k", [0.3, 1.0, 2.7])
    def test_eigen_residuals_across_levels(self, ell, k):
        state = scattering_state(SusyLevel(ell), k)
        assert eigen_residual(SusyLevel(ell), state, Z_SAMPLES) <= 1e-10


class TestSpectralDensity:
    def test_level_two_threshold(self):
        assert spectral_density(SusyLevel(2), 0.0) == pytest.approx(
            -3.0 / (2.0 * math.pi), rel=1e-12)

    def test_level_two_unit_k(self):
        assert spectral_density(SusyLevel(2), 1.0) == pytest.approx(
            -9.0 / (10.0 * math.pi), rel=1e-12)

    def test_even_in_k(self):
        rho = SpectralDensity(2)
        for k in (0.3, 1.1, 4.0):
            assert rho(k) == rho(-k)

    @pytest.mark.parametrize("ell", [1, 2, 3])
    def test_sum_rule(self, ell):
        rho = SpectralDensity(ell)
        total, _ = quad(rho, -np.inf, np.inf, epsabs=1e-12, epsrel=1e-12,
                        limit=400)
        assert total == pytest.approx(-float(ell), abs=1e-8)

    @pytest.mark.parametrize("ell", [1, 2])
    @pytest.mark.parametrize("k", [0.5, 1.0, 2.0])
    def test_closed_vs_integrated(self, ell, k):
        closed = spectral_density(SusyLevel(ell), k, "closed")
        integrated = spectral_density(SusyLevel(ell), k, "integrated")
        assert integrated == pytest.approx(closed, abs=1e-6)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            SpectralDensity(2, "grid")


class TestBoxNormalizationProxy:
    """Delta normalization probed on a finite interval.

    The diagonal overlap grows like the box size (the delta's volume
    factor) while the off-diagonal interacting-minus-free mismatch stays
    bounded, so relative to the diagonal it falls off like 1/L.
    """

    @pytest.mark.parametrize("ell", [1, 2])
    def test_off_diagonal_mismatch_relative_to_diagonal(self, ell):
        k1, k2 = 0.7, 1.9
        left = scattering_state(SusyLevel(ell), k1)
        right = scattering_state(SusyLevel(ell), k2)
        # the bounded mismatch scale grows with the level (one term per
        # removed state), hence the l-dependent constant
        for L in (5.0, 10.0, 20.0):
            mixed = box_overlap(left, right, L)
            free = math.sin((k2 - k1) * L) / (math.pi * (k2 - k1))
            diagonal = box_overlap(left, left, L).real
            assert abs(mixed - free) / diagonal <= 0.5 * ell / L

    def test_diagonal_grows_linearly(self):
        state = scattering_state(SusyLevel(2), 1.3)
        small = box_overlap(state, state, 10.0).real
        large = box_overlap(state, state, 20.0).real
        assert large / small == pytest.approx(2.0, rel=0.1)
