"""Fitting measured KIE temperature series with two parameters.

The fit is a deterministic multi-start damped least squares over
(omega_0, omega_b), with box constraints and a smooth penalty keeping
trial crossover temperatures below the data. Bundled with the package is
a reconstruction of an H/T dataset for a flavoenzyme amine oxidase; its
fit lands at omega_0 ~ 2100 cm^-1 with a crossover near 240 K, squarely
below the measurement window, so the description is self-consistent.
"""

import numpy as np

from qtst import Isotope, KIEDataset, fit_kie, kie_qtst
from qtst.kie import load_dataset_csv

print("Bundled amine-oxidase H/T dataset:")
data = KIEDataset.from_csv_text(load_dataset_csv("fig4_mao.csv"), pair="H:T")
for T, y in zip(data.T_K, data.kie):
    print(f"  {T:6.1f} K   k_H/k_T = {y:6.2f}")

res = fit_kie(data)
print()
print(f"fit: omega_0 = {res.omega0:.0f} cm^-1, omega_b = {res.omegab:.0f} cm^-1")
print(f"     implied crossover T0 = {res.implied_T0:.0f} K, valid = {res.valid}")
print(f"     residual norm {res.residual_norm:.3f}, "
      f"{res.n_starts_converged} of 72 starts converged")
sd = np.sqrt(np.diag(np.array(res.covariance)))
print(f"     1-sigma: omega_0 +/- {sd[0]:.0f}, omega_b +/- {sd[1]:.0f} cm^-1")
print()

print("Round-trip sanity on synthetic data (2% noise, seed 1234):")
T = np.linspace(275.0, 320.0, 10)
exact = np.array([kie_qtst(3000.0, 1000.0, float(t), Isotope.H, Isotope.D).ratio for t in T])
rng = np.random.default_rng(1234)
noisy = exact * (1.0 + 0.02 * rng.standard_normal(T.size))
res2 = fit_kie(KIEDataset(tuple(T), tuple(noisy)))
print(f"  generated at (3000, 1000), recovered ({res2.omega0:.0f}, {res2.omegab:.0f})")
print()
print("From the command line:  qtst fit --input fig4 --curve model.csv")
