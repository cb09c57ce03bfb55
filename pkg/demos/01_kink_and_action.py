"""Walk through the classical layer: double well, kink, action, zero mode.

Run:  python demos/01_kink_and_action.py
"""

import numpy as np

from dwtunnel import (
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

p = DoubleWellParams(omega=2.0)
cfg = InstantonConfig(p)

print("Double well V(x) = (w^2/8)(x^2 - 1)^2 at w =", p.omega)
print(f"  barrier height V(0)      = {potential(p, 0.0):.6f}")
print(f"  well curvature V''(+-1)  = {curvature(p, 1.0):.6f}  (= w^2)")
print(f"  barrier curvature V''(0) = {curvature(p, 0.0):.6f}  (= -w^2/2)")

print("\nKink profile x_c(tau) = tanh(w tau / 2):")
for tau in (-3.0, -1.0, 0.0, 1.0, 3.0):
    print(f"  x_c({tau:+.1f}) = {profile(cfg, tau):+.6f}")

closed = classical_action(p)
numeric = classical_action_quadrature(p)
print(f"\nEuclidean action: closed form 2w/3 = {closed:.12f}")
print(f"                  quadrature along the kink = {numeric:.12f}")
print(f"                  difference = {abs(closed - numeric):.2e}")

tau = np.linspace(-5.0, 5.0, 50)
print(f"\nEquation-of-motion residuals on 50 sample times:")
print(f"  first-order (zero euclidean energy): {eom_residual(cfg, tau):.2e}")
print(f"  second-order (Newton in the flipped well): "
      f"{eom_residual(cfg, tau, order=2):.2e}")

grid = np.linspace(-40.0, 40.0, 200_001)
norm = np.trapezoid(zero_mode(cfg, grid) ** 2, grid)
print(f"\nTranslation zero mode: L2 norm = {norm:.10f} (exact 1)")
print("Fluctuation potential about the kink (reflectionless well):")
for tau in (0.0, 2.0, 8.0):
    print(f"  V''(x_c({tau:.0f})) = {stability_potential(p, tau):+.6f}"
          + ("   -> w^2 far from the kink" if tau == 8.0 else ""))
