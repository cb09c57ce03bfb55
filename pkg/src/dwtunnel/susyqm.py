"""Supersymmetric ladder algebra for the reflectionless hyperbolic wells.

The operator family

    O_l = -d^2/dz^2 - l(l+1) sech^2 z + l^2,      l = 1, 2, ...

factorizes as O_l = A_l^+ A_l with superpotential W = l tanh z, where
A_l = d/dz + l tanh z and A_l^+ = -d/dz + l tanh z.  The partner chain is
shape invariant (the partner of level l is level l-1 plus the constant
2l - 1, terminating at the free particle), which yields every bound and
scattering state in closed form by repeated application of A^+.

Eigenfunctions live in the finite algebra spanned by

    tanh^a(z) sech^b(z) e^{ikz}

which is closed under differentiation and multiplication by tanh or
sech^2; ladder application is therefore exact, and eigen-residual tests
probe the formulas, not a discretization.  States are kept in the
canonical form a in {0, 1} via tanh^2 = 1 - sech^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np

from .specfun import QuadratureSpec, integrate

_DEFAULT_SPEC = QuadratureSpec(abs_tol=1e-11, rel_tol=1e-11)


def _sech(z):
    # overflow-safe sech: 2 e^-|z| / (1 + e^-2|z|)
    e = np.exp(-np.abs(z))
    return 2.0 * e / (1.0 + e * e)


@dataclass(frozen=True)
class SusyLevel:
    """One rung of the hyperbolic hierarchy, labelled by l >= 1."""

    ell: int

    def __post_init__(self):
        if not (isinstance(self.ell, int) and self.ell >= 1):
            raise ValueError(f"ell must be an integer >= 1, got {self.ell!r}")

    def superpotential(self, z):
        """W(z) = l tanh z."""
        return self.ell * np.tanh(z)

    def potential(self, z):
        """The well of O_l: l^2 - l(l+1) sech^2 z."""
        z = np.asarray(z, dtype=float)
        v = self.ell ** 2 - self.ell * (self.ell + 1) * _sech(z) ** 2
        return float(v) if v.ndim == 0 else v


def _canonical(terms):
    """Reduce tanh powers to a in {0,1} using tanh^2 = 1 - sech^2."""
    work = dict(terms)
    out = {}
    while work:
        (a, b), coeff = work.popitem()
        if coeff == 0:
            continue
        if a >= 2:
            work[(a - 2, b)] = work.get((a - 2, b), 0j) + coeff
            work[(a - 2, b + 2)] = work.get((a - 2, b + 2), 0j) - coeff
        else:
            out[(a, b)] = out.get((a, b), 0j) + coeff
    return {key: c for key, c in out.items() if c != 0}


@dataclass(frozen=True)
class SusyState:
    """Finite expansion sum_{a,b} c_ab tanh^a z sech^b z e^{ikz}.

    wavenumber is None for bound states (no plane-wave factor); energy is
    the eigenvalue under the O_l that produced the state.  Instances are
    immutable; algebra helpers return new states.
    """

    terms: Mapping[tuple, complex]
    wavenumber: Optional[float] = None
    energy: float = 0.0

    @staticmethod
    def make(terms, wavenumber=None, energy=0.0):
        return SusyState(_canonical(terms), wavenumber, energy)

    @property
    def k(self) -> float:
        return 0.0 if self.wavenumber is None else self.wavenumber

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        th, sh = np.tanh(z), _sech(z)
        total = np.zeros(z.shape, dtype=complex)
        for (a, b), c in self.terms.items():
            total += c * th ** a * sh ** b
        if self.wavenumber is not None:
            total = total * np.exp(1j * self.wavenumber * z)
        if z.ndim == 0:
            val = complex(total)
            return val.real if self.wavenumber is None else val
        return total.real if self.wavenumber is None else total

    def derivative(self) -> "SusyState":
        """Exact d/dz within the algebra.

        d/dz [tanh^a sech^b e^{ikz}] = a tanh^{a-1} sech^{b+2}
                                       - b tanh^{a+1} sech^b
                                       + ik tanh^a sech^b,  all times e^{ikz}.
        """
        out = {}

        def add(key, c):
            out[key] = out.get(key, 0j) + c

        for (a, b), c in self.terms.items():
            if a > 0:
                add((a - 1, b + 2), a * c)
            if b > 0:
                add((a + 1, b), -b * c)
            if self.wavenumber is not None:
                add((a, b), 1j * self.wavenumber * c)
        return SusyState.make(out, self.wavenumber, self.energy)

    def times_tanh(self) -> "SusyState":
        return SusyState.make({(a + 1, b): c for (a, b), c in self.terms.items()},
                              self.wavenumber, self.energy)

    def times_sech2(self) -> "SusyState":
        return SusyState.make({(a, b + 2): c for (a, b), c in self.terms.items()},
                              self.wavenumber, self.energy)

    def scaled(self, factor) -> "SusyState":
        return SusyState.make({key: factor * c for key, c in self.terms.items()},
                              self.wavenumber, self.energy)

    def plus(self, other: "SusyState", energy=None) -> "SusyState":
        if (self.wavenumber is None) != (other.wavenumber is None) or (
                self.wavenumber is not None
                and self.wavenumber != other.wavenumber):
            raise ValueError("cannot add states with different plane-wave factors")
        merged = dict(self.terms)
        for key, c in other.terms.items():
            merged[key] = merged.get(key, 0j) + c
        return SusyState.make(merged, self.wavenumber,
                              self.energy if energy is None else energy)

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(abs(c) <= tol for c in self.terms.values())

    def max_coefficient(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)


def plane_wave(k: float) -> SusyState:
    """Delta-normalized free wave e^{ikz} / sqrt(2 pi)."""
    return SusyState.make({(0, 0): 1.0 / math.sqrt(2.0 * math.pi)},
                          wavenumber=k, energy=k * k)


def partner_potentials(lv: SusyLevel, z):
    """Partner pair (V-, V+) = (W^2 - W', W^2 + W') for W = l tanh z.

    V- coincides with the potential of O_l: l^2 - l(l+1) sech^2 z; V+ is
    the level-(l-1) well shifted by the constant 2l - 1.
    """
    z = np.asarray(z, dtype=float)
    ell = lv.ell
    sech2 = _sech(z) ** 2
    w2 = ell ** 2 * (1.0 - sech2)
    wp = ell * sech2
    v_minus, v_plus = w2 - wp, w2 + wp
    if z.ndim == 0:
        return float(v_minus), float(v_plus)
    return v_minus, v_plus


def shape_invariance_residual(lv: SusyLevel, z_samples) -> float:
    """Max deviation of V+(z, l) - V-(z, l-1) from its sample mean.

    The difference is the constant 2l - 1 for all z; l = 1 is checked
    against the free particle V-(z, 0) = 0.
    """
    z = np.asarray(z_samples, dtype=float)
    _, v_plus = partner_potentials(lv, z)
    if lv.ell == 1:
        lower = np.zeros_like(z)
    else:
        lower, _ = partner_potentials(SusyLevel(lv.ell - 1), z)
    diff = v_plus - lower
    return float(np.max(np.abs(diff - np.mean(diff))))


def bound_energy(lv: SusyLevel, m: int) -> float:
    """Bound-state energy E_m = l^2 - (l - m)^2 for 0 <= m <= l-1."""
    if not (isinstance(m, int) and 0 <= m <= lv.ell - 1):
        raise ValueError(
            f"level l={lv.ell} has bound states m = 0..{lv.ell - 1}, got m={m!r}")
    return float(lv.ell ** 2 - (lv.ell - m) ** 2)


def ground_state(lv: SusyLevel) -> SusyState:
    """Normalized zero mode sqrt(2(2l-1)!)/(2^l (l-1)!) sech^l z.

    The prefactor is evaluated through log-factorials to stay finite for
    large l.
    """
    ell = lv.ell
    log_norm = 0.5 * (math.log(2.0) + math.lgamma(2 * ell)) \
        - ell * math.log(2.0) - math.lgamma(ell)
    return SusyState.make({(0, ell): math.exp(log_norm)}, None, 0.0)


def apply_ladder(lv: SusyLevel, state: SusyState, dagger: bool = True) -> SusyState:
    """Apply A_l^+ = -d/dz + l tanh z (or A_l = d/dz + l tanh z) exactly."""
    d = state.derivative()
    t = state.times_tanh().scaled(float(lv.ell))
    return t.plus(d.scaled(-1.0) if dagger else d)


def bound_state(lv: SusyLevel, m: int) -> SusyState:
    """Normalized m-th bound state of O_l, built by the ladder chain.

    Starts from the level-(l-m) zero mode and climbs with
    A_l^+ ... A_{l-m+1}^+, dividing by sqrt(prod_{j<m} (E_m - E_j)) so the
    result has unit L2 norm.
    """
    energy = bound_energy(lv, m)  # validates m
    state = ground_state(SusyLevel(lv.ell - m))
    for step in range(1, m + 1):
        state = apply_ladder(SusyLevel(lv.ell - m + step), state)
    log_prod = sum(math.log(energy - bound_energy(lv, j)) for j in range(m))
    return SusyState(state.terms, None, energy).scaled(math.exp(-0.5 * log_prod))


def scattering_state(lv: SusyLevel, k: float) -> SusyState:
    """Continuum state at wavenumber k, energy k^2 + l^2.

    The full ladder chain acting on the free wave:
    prod_{n=1..l} [A_n^+ / sqrt(k^2 + n^2)] e^{ikz} / sqrt(2 pi).
    """
    state = plane_wave(k)
    for n in range(1, lv.ell + 1):
        state = apply_ladder(SusyLevel(n), state).scaled(
            1.0 / math.sqrt(k * k + n * n))
    return SusyState(state.terms, k, k * k + lv.ell ** 2)


def apply_hamiltonian(lv: SusyLevel, state: SusyState) -> SusyState:
    """O_l acting in the algebra: -psi'' - l(l+1) sech^2 psi + l^2 psi."""
    second = state.derivative().derivative()
    well = state.times_sech2().scaled(-float(lv.ell * (lv.ell + 1)))
    shift = state.scaled(float(lv.ell ** 2))
    return second.scaled(-1.0).plus(well).plus(shift)


def eigen_residual(lv: SusyLevel, state: SusyState, z_samples) -> float:
    """Pointwise max of |O_l psi - E psi| on the samples, all analytic."""
    res = apply_hamiltonian(lv, state).plus(state.scaled(-state.energy))
    values = res(np.asarray(z_samples, dtype=float))
    return float(np.max(np.abs(values)))


def inner_product(left: SusyState, right: SusyState,
                  spec: QuadratureSpec = _DEFAULT_SPEC) -> complex:
    """Quadrature overlap <left|right> over the whole line."""
    real = integrate(lambda z: (np.conj(left(z)) * right(z)).real,
                     -math.inf, math.inf, spec)
    if left.wavenumber is None and right.wavenumber is None:
        return complex(real, 0.0)
    imag = integrate(lambda z: (np.conj(left(z)) * right(z)).imag,
                     -math.inf, math.inf, spec)
    return complex(real, imag)


def box_overlap(left: SusyState, right: SusyState, half_width: float,
                spec: QuadratureSpec = _DEFAULT_SPEC) -> complex:
    """Overlap <left|right> truncated to [-L, L], for normalization probes."""
    real = integrate(lambda z: (np.conj(left(z)) * right(z)).real,
                     -half_width, half_width, spec)
    imag = integrate(lambda z: (np.conj(left(z)) * right(z)).imag,
                     -half_width, half_width, spec)
    return complex(real, imag)


@dataclass(frozen=True)
class SpectralDensity:
    """Regularized continuum density of O_l relative to the free particle.

    Closed form: rho_r(k) = -(1/pi) sum_{n=1..l} n / (k^2 + n^2), even in k
    and integrating to -l (one unit per bound state plus the zero mode, a
    Levinson-type sum rule).  The "integrated" method instead integrates
    |phi_{l,k}(z)|^2 - 1/(2 pi) over z, which is the subtracted density
    matrix definition; both agree.
    """

    ell: int
    method: str = "closed"

    def __post_init__(self):
        if self.method not in ("closed", "integrated"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.ell < 1:
            raise ValueError("ell must be >= 1")

    def __call__(self, k, spec: QuadratureSpec = _DEFAULT_SPEC):
        if self.method == "closed":
            k = np.asarray(k, dtype=float)
            total = np.zeros_like(k)
            for n in range(1, self.ell + 1):
                total += n / (k * k + n * n)
            out = -total / math.pi
            return float(out) if out.ndim == 0 else out
        state = scattering_state(SusyLevel(self.ell), float(k))
        one_over_2pi = 1.0 / (2.0 * math.pi)
        return integrate(lambda z: np.abs(state(z)) ** 2 - one_over_2pi,
                         -math.inf, math.inf, spec)


def spectral_density(lv: SusyLevel, k, method: str = "closed",
                     spec: QuadratureSpec = _DEFAULT_SPEC):
    """rho_r(k) for level l; see SpectralDensity."""
    return SpectralDensity(lv.ell, method)(k, spec)
