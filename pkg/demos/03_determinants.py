"""Functional determinants three ways: zeta function, mode products,
initial-value problems, and the finite-box oracle.

Run:  python demos/03_determinants.py
"""

import math

from dwtunnel import (
    DoubleWellParams,
    box_reduced_ratio,
    det_from_zeta,
    gelfand_yaglom_ratio,
    harmonic_amplitude,
    heat_kernel_zeta_check,
    reduced_ratio_R,
    truncated_mode_product,
    zeta_r,
    zeta_r_prime0,
)

print("Subtracted zeta function of (O_2, P_2), three evaluation routes:")
print(f"  {'s':>4} {'k-integral':>14} {'closed form':>14} {'heat kernel':>14}")
for s in (0.5, 1.0, 2.0):
    k_int = zeta_r(2, s, "k_integral").value
    closed = zeta_r(2, s, "closed_form").value
    mellin = heat_kernel_zeta_check(2, s)
    print(f"  {s:4.1f} {k_int:14.10f} {closed:14.10f} {mellin:14.10f}")
print(f"  at s=0: {zeta_r(2, 0.0).value:+.12f} (counts bound states minus "
      "the Levinson deficit)")

zp = zeta_r_prime0(2)
print(f"\nzeta_r'(0) = {zp:.10f}  (4 ln 2 + ln 3 = "
      f"{4 * math.log(2) + math.log(3):.10f})")
print(f"dimensionless reduced ratio Q2 = exp(-zeta') = {det_from_zeta(zp):.10f}"
      f"  (1/48 = {1 / 48:.10f})")

print("\nScaling back to physical units, R = Q2 * beta^zeta(0), beta = w^2/4:")
for omega in (1.0, 2.0, 5.0):
    ratio = reduced_ratio_R(DoubleWellParams(omega))
    print(f"  w={omega:.0f}: R = {ratio.r_value:.10f}   "
          f"(1/(12 w^2) = {1 / (12 * omega ** 2):.10f})")

print("\nFinite-box oracle (no zeta functions involved) converging to Q:")
for ell, target in ((1, 0.25), (2, 1 / 48)):
    print(f"  l={ell}:")
    for L in (6.0, 8.0, 10.0):
        value = box_reduced_ratio(ell, L)
        print(f"    L={L:4.1f}: {value:.12f}   error {value - target:+.2e}")

print("\nHarmonic oscillator, where the semiclassical amplitude is exact:")
nu, T = 1.0, 1.0
exact = harmonic_amplitude(nu, T)
gy = gelfand_yaglom_ratio(lambda t: nu * nu, lambda t: 0.0, T)
from_ode = gy ** -0.5 / math.sqrt(2.0 * math.pi * T)
print(f"  closed form:          {exact:.12f}")
print(f"  via initial-value ODE: {from_ode:.12f}")
for n in (10, 100, 10_000):
    print(f"  first {n:>6} modes:    {truncated_mode_product(nu, T, n):.12f}")
