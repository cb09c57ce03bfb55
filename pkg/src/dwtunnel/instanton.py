"""Classical layer of the double-well tunneling problem.

The double well V(x) = (w^2/8)(x^2 - 1)^2 (units m = hbar = 1) has, in
imaginary time, a kink solution x_c(tau) = tanh(w(tau - tau_c)/2) joining
the two minima.  This module holds the potential, the kink profile, its
euclidean action S_e0 = 2w/3, the translation zero mode, and the
Schroedinger-like potential governing quadratic fluctuations around the
kink.

All derivatives of the closed forms are analytic, never finite-difference,
so residual checks probe the formulas themselves rather than differencing
error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import QuadratureSpec, integrate


@dataclass(frozen=True)
class DoubleWellParams:
    """Double-well parameters: the single frequency w > 0.

    Derived constants: classical kink action 2w/3, curvature w^2 at the
    minima, and the scaling factor beta = w^2/4 that relates the
    fluctuation operator to its dimensionless form.
    """

    omega: float

    def __post_init__(self):
        if not self.omega > 0:
            raise ValueError(f"omega must be positive, got {self.omega!r}")

    @property
    def action(self) -> float:
        """Euclidean action of one kink, S_e0 = 2 omega / 3."""
        return 2.0 * self.omega / 3.0

    @property
    def well_curvature(self) -> float:
        """V''(+-1) = omega^2, the reference oscillator frequency squared."""
        return self.omega ** 2

    @property
    def beta(self) -> float:
        """Scale factor omega^2/4 from tau -> z = omega tau / 2."""
        return 0.25 * self.omega ** 2


@dataclass(frozen=True)
class InstantonConfig:
    """A kink with its jump center tau_c (default 0, the usual convention)."""

    params: DoubleWellParams
    tau_c: float = 0.0


def potential(p: DoubleWellParams, x):
    """V(x) = (omega^2 / 8)(x^2 - 1)^2; symmetric under x -> -x."""
    x = np.asarray(x, dtype=float)
    v = p.omega ** 2 / 8.0 * (x * x - 1.0) ** 2
    return float(v) if v.ndim == 0 else v


def potential_gradient(p: DoubleWellParams, x):
    """V'(x) = (omega^2 / 2) x (x^2 - 1)."""
    x = np.asarray(x, dtype=float)
    g = p.omega ** 2 / 2.0 * x * (x * x - 1.0)
    return float(g) if g.ndim == 0 else g


def curvature(p: DoubleWellParams, x):
    """V''(x) = (omega^2 / 2)(3 x^2 - 1); equals omega^2 at x = +-1."""
    x = np.asarray(x, dtype=float)
    c = p.omega ** 2 / 2.0 * (3.0 * x * x - 1.0)
    return float(c) if c.ndim == 0 else c


def profile(c: InstantonConfig, tau):
    """Kink profile x_c(tau) = tanh(omega (tau - tau_c) / 2)."""
    tau = np.asarray(tau, dtype=float)
    x = np.tanh(0.5 * c.params.omega * (tau - c.tau_c))
    return float(x) if x.ndim == 0 else x


def profile_velocity(c: InstantonConfig, tau):
    """Analytic dx_c/dtau = (omega/2) sech^2(omega (tau - tau_c) / 2)."""
    tau = np.asarray(tau, dtype=float)
    v = 0.5 * c.params.omega / np.cosh(0.5 * c.params.omega * (tau - c.tau_c)) ** 2
    return float(v) if v.ndim == 0 else v


def profile_acceleration(c: InstantonConfig, tau):
    """Analytic d^2 x_c / dtau^2 = -(omega^2/2) sech^2(u) tanh(u), u = omega(tau-tau_c)/2."""
    tau = np.asarray(tau, dtype=float)
    u = 0.5 * c.params.omega * (tau - c.tau_c)
    a = -0.5 * c.params.omega ** 2 * np.tanh(u) / np.cosh(u) ** 2
    return float(a) if a.ndim == 0 else a


def classical_action(p: DoubleWellParams) -> float:
    """Kink action S_e0 = 2 omega / 3."""
    return p.action


def classical_action_quadrature(p: DoubleWellParams, tau_c: float = 0.0,
                                spec: QuadratureSpec | None = None) -> float:
    """Numeric companion to classical_action: integrate (x'^2/2 + V) along the kink.

    The integrand decays like exp(-2 omega |tau - tau_c|), so a window of
    +-40/omega truncates below 1e-30.
    """
    cfg = InstantonConfig(p, tau_c)

    def integrand(tau):
        v = profile_velocity(cfg, tau)
        return 0.5 * v * v + potential(p, profile(cfg, tau))

    window = 40.0 / p.omega
    return integrate(integrand, tau_c - window, tau_c + window,
                     spec or QuadratureSpec())


def zero_mode(c: InstantonConfig, tau):
    """Normalized translation zero mode, (1/sqrt(S_e0)) dx_c/dtau.

    Unit L2 norm follows from the vanishing euclidean energy of the kink:
    int (dx_c/dtau)^2 dtau = S_e0.
    """
    return profile_velocity(c, tau) / math.sqrt(c.params.action)


def stability_potential(p: DoubleWellParams, tau):
    """Fluctuation potential V''(x_c(tau)) = omega^2 - (3 omega^2 / 2) sech^2(omega tau / 2).

    This is the potential of the eigenproblem -v'' + V''(x_c) v = eps v
    governing quadratic fluctuations about a kink centered at tau_c = 0; a
    reflectionless hyperbolic well with asymptotic value omega^2.
    """
    tau = np.asarray(tau, dtype=float)
    w2 = p.omega ** 2
    s = w2 - 1.5 * w2 / np.cosh(0.5 * p.omega * tau) ** 2
    return float(s) if s.ndim == 0 else s


def eom_residual(c: InstantonConfig, tau_samples, order: int = 1) -> float:
    """Max residual of the kink in the euclidean equation of motion.

    order=1 checks the zero-energy first-order form |dx/dtau - sqrt(2 V(x))|,
    order=2 the second-order equation |x'' - V'(x)|.  Both vanish identically
    for the exact kink; a distorted profile fails visibly.
    """
    tau = np.asarray(tau_samples, dtype=float)
    if tau.size == 0:
        raise ValueError("tau_samples must be non-empty")
    x = profile(c, tau)
    if order == 1:
        res = profile_velocity(c, tau) - np.sqrt(2.0 * potential(c.params, x))
    elif order == 2:
        res = profile_acceleration(c, tau) - potential_gradient(c.params, x)
    else:
        raise ValueError(f"order must be 1 or 2, got {order!r}")
    return float(np.max(np.abs(res)))


def stability_residual(c: InstantonConfig, tau_samples) -> float:
    """Max residual of the zero mode in -v'' + V''(x_c) v = 0, analytically.

    With u = omega (tau - tau_c)/2 and v = sech^2(u) (up to normalization),
    v'' = omega^2 sech^2 u - (3 omega^2 / 2) sech^4 u, which V''(x_c) v
    reproduces exactly.
    """
    tau = np.asarray(tau_samples, dtype=float)
    w = c.params.omega
    u = 0.5 * w * (tau - c.tau_c)
    sech2 = 1.0 / np.cosh(u) ** 2
    norm = 0.5 * w / math.sqrt(c.params.action)
    v = norm * sech2
    v_dd = norm * (0.25 * w * w) * (4.0 * sech2 - 6.0 * sech2 ** 2)
    res = -v_dd + stability_potential(c.params, tau - c.tau_c) * v
    return float(np.max(np.abs(res)))
