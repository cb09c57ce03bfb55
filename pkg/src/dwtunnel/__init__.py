"""Semiclassical tunneling toolkit for the 1D double well.

Closed-form kink quantities (action, fluctuation determinants via zeta
regularization, exact ladder spectra, dilute-gas level splittings) next to
independent numerical oracles (grid diagonalization, initial-value
determinants, finite-box reduced determinants) that cross-validate every
result.
"""

from .instanton import (
    DoubleWellParams,
    InstantonConfig,
    classical_action,
    classical_action_quadrature,
    curvature,
    eom_residual,
    potential,
    profile,
    stability_potential,
    zero_mode,
)
from .specfun import (
    QuadratureError,
    QuadratureSpec,
    SeriesConvergenceError,
    digamma,
    f_param_derivative_at_zero,
    gamma,
    gauss2f1,
    integrate,
)
from .susyqm import (
    SpectralDensity,
    SusyLevel,
    SusyState,
    apply_hamiltonian,
    apply_ladder,
    bound_energy,
    bound_state,
    ground_state,
    partner_potentials,
    scattering_state,
    shape_invariance_residual,
    spectral_density,
)
from .zetadet import (
    DeterminantRatio,
    ZetaEvaluation,
    det_from_zeta,
    harmonic_amplitude,
    heat_kernel_zeta_check,
    reduced_ratio_R,
    scale_determinant,
    truncated_mode_product,
    zeta_r,
    zeta_r_prime0,
)
from .oracle import (
    GridEigenSystem,
    GridResolutionError,
    GridSpec,
    box_reduced_ratio,
    discretize,
    gelfand_yaglom_ratio,
    grid_eigensystem,
    lowest_eigenvalues,
    physical_splitting,
)
from .dilutegas import (
    SplittingReport,
    collective_volume,
    compare_with_oracle,
    instanton_density,
    level_energies,
    transition_amplitude,
    validity_diagnostic,
)

__version__ = "0.1.0"
