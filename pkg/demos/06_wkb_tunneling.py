"""Barrier-penetration actions for model one-dimensional barriers.

At zero friction and energies below the top, the WKB action S(E) fixes
the transmission probability exp(-2 S/hbar). For an inverted parabola
the action is exactly pi*(E_b - E)/(hbar*omega_b), which is the quantity
behind the crossover temperature; broader barrier shapes tunnel less at
the same height and curvature.
"""

import numpy as np

from qtst import (
    CubicBarrier,
    EckartBarrier,
    ParabolicBarrier,
    TabulatedPotential,
    transmission,
    turning_points,
    wkb_action,
)

E_B = 40.0  # kJ/mol
pots = {
    "parabolic (omega_b = 1000)": ParabolicBarrier(E_b=E_B, omega_b=1000.0),
    "Eckart (width 0.45 A)": EckartBarrier(V0=E_B, width=0.45),
    "cubic (omega_0 = 1000)": CubicBarrier(omega_0=1000.0, E_b=E_B),
}

print(f"Action S/hbar and transmission at E/E_b for a {E_B:.0f} kJ/mol barrier:")
print(f"  {'shape':<28} {'E/E_b':>6} {'x1 (A)':>8} {'x2 (A)':>8} {'S/hbar':>8} {'T(E)':>10}")
for name, pot in pots.items():
    for frac in (0.25, 0.5, 0.75):
        E = frac * E_B
        x1, x2 = turning_points(pot, E)
        s = wkb_action(pot, E)
        print(f"  {name:<28} {frac:>6.2f} {x1:>8.3f} {x2:>8.3f} {s:>8.3f} {transmission(pot, E):>10.3e}")

print()
print("Isotope scaling: with the potential-energy curve held fixed, the")
print("action scales as sqrt(mass), so deuterium tunnels much less:")
light = ParabolicBarrier(E_b=E_B, omega_b=1000.0, mass=1.0)
heavy = ParabolicBarrier(E_b=E_B, omega_b=1000.0 / np.sqrt(2.0), mass=2.0)
for E in (10.0, 20.0):
    print(f"  E = {E:4.0f} kJ/mol: T_H = {transmission(light, E):.3e}, "
          f"T_D = {transmission(heavy, E):.3e}")

print()
print("Tabulated potentials interpolate two-column (x, U) samples:")
xs = np.linspace(-1.3, 1.3, 401)
tab = TabulatedPotential(xs, [light.energy(float(x)) for x in xs])
print(f"  401-point sampled parabola: S(20)/hbar = {wkb_action(tab, 20.0):.6f} "
      f"vs analytic {wkb_action(light, 20.0):.6f}")
